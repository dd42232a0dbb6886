//! Coxeter combinatorics for `S_n` (type `A_{n-1}`) and `B_n`.
//!
//! Generators are named by their Coxeter label: `s_1..s_{n-1}` for `S_n`,
//! `s_0..s_{n-1}` for `B_n`, with `s_0` the sign change of the first entry.

mod permutation;
mod signed;

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

pub use permutation::{Permutation, Reflection};
pub use signed::SignedPermutation;

use crate::cells::Functional;
use crate::error::{Error, Result};

/// Environment variable overriding every group-size cap.
pub const MAX_N_ENV: &str = "AYREP_MAX_N";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupType {
    A,
    B,
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupType::A => write!(f, "A"),
            GroupType::B => write!(f, "B"),
        }
    }
}

impl GroupType {
    /// Coxeter labels of the simple generators of the full group on `n` letters.
    pub fn labels(self, n: usize) -> Vec<usize> {
        match self {
            GroupType::A => (1..n).collect(),
            GroupType::B => (0..n).collect(),
        }
    }

    pub fn order(self, n: usize) -> usize {
        let fact: usize = (1..=n).product();
        match self {
            GroupType::A => fact,
            GroupType::B => fact << n,
        }
    }

    /// Coxeter matrix entry `m(s, t)` for generator labels.
    pub fn coxeter_m(self, s: usize, t: usize) -> usize {
        if s == t {
            1
        } else if s.abs_diff(t) == 1 {
            if self == GroupType::B && s.min(t) == 0 {
                4
            } else {
                3
            }
        } else {
            2
        }
    }
}

/// Limits on the degree of groups that are enumerated in full.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub max_a: usize,
    pub max_b: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self { max_a: 7, max_b: 5 }
    }
}

impl Caps {
    /// Defaults, with both caps replaced by `AYREP_MAX_N` when it is set.
    pub fn from_env() -> Self {
        match std::env::var(MAX_N_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            Some(cap) if cap >= 1 => Self {
                max_a: cap,
                max_b: cap,
            },
            _ => Self::default(),
        }
    }

    pub fn check(&self, ty: GroupType, n: usize) -> Result<()> {
        let cap = match ty {
            GroupType::A => self.max_a,
            GroupType::B => self.max_b,
        };
        if n > cap {
            let ty = match ty {
                GroupType::A => 'A',
                GroupType::B => 'B',
            };
            return Err(Error::SizeLimit { ty, n, cap });
        }
        Ok(())
    }
}

/// A finite Coxeter group (or standard parabolic subgroup of one), listed in
/// breadth-first order from the identity with one reduced word per element.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    pub ty: GroupType,
    pub n: usize,
    pub labels: Vec<usize>,
    pub elements: Vec<SignedPermutation>,
    pub words: Vec<Vec<usize>>,
    index: HashMap<SignedPermutation, usize>,
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, w: &SignedPermutation) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn contains(&self, w: &SignedPermutation) -> bool {
        self.index.contains_key(w)
    }
}

/// Breadth-first closure over the generators, respecting the configured caps.
pub fn enumerate_group(ty: GroupType, n: usize) -> Result<FiniteGroup> {
    enumerate_group_with(ty, n, &Caps::from_env())
}

pub fn enumerate_group_with(ty: GroupType, n: usize, caps: &Caps) -> Result<FiniteGroup> {
    caps.check(ty, n)?;
    Ok(generated_subgroup(ty, n, &ty.labels(n)))
}

/// The standard parabolic subgroup generated by `labels`.
pub fn generated_subgroup(ty: GroupType, n: usize, labels: &[usize]) -> FiniteGroup {
    let id = SignedPermutation::identity(n);
    let mut elements = vec![id.clone()];
    let mut words = vec![Vec::new()];
    let mut index = HashMap::from([(id, 0usize)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for &s in labels {
            let next = elements[k].mul_generator(s);
            if index.contains_key(&next) {
                continue;
            }
            let mut word = words[k].clone();
            word.push(s);
            index.insert(next.clone(), elements.len());
            queue.push_back(elements.len());
            elements.push(next);
            words.push(word);
        }
    }
    FiniteGroup {
        ty,
        n,
        labels: labels.to_vec(),
        elements,
        words,
        index,
    }
}

/// All permutations of `S_n` in breadth-first order.
pub fn symmetric_group(n: usize) -> Result<Vec<Permutation>> {
    Caps::from_env().check(GroupType::A, n)?;
    Ok(parabolic_elements(n, &GroupType::A.labels(n)))
}

/// Elements of the parabolic subgroup `⟨J⟩ ⊆ S_n`, breadth-first order.
pub fn parabolic_elements(n: usize, labels: &[usize]) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    let id = Permutation::identity(n);
    seen.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        for &s in labels {
            let next = w.mul_simple(s);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
        out.push(w);
    }
    out
}

/// Letters of `1..n` grouped into the blocks permuted by `⟨J⟩`.
pub fn parabolic_blocks(n: usize, labels: &[usize]) -> Vec<Vec<usize>> {
    let j: HashSet<usize> = labels.iter().copied().collect();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for letter in 1..=n {
        if letter > 1 && j.contains(&(letter - 1)) {
            blocks.last_mut().unwrap().push(letter);
        } else {
            blocks.push(vec![letter]);
        }
    }
    blocks
}

/// Reflections (transpositions) lying in `⟨J⟩`.
pub fn parabolic_reflections(n: usize, labels: &[usize]) -> Vec<Reflection> {
    parabolic_blocks(n, labels)
        .iter()
        .flat_map(|b| {
            b.iter()
                .tuple_combinations()
                .map(|(&a, &c)| Reflection::new(a, c))
                .collect::<Vec<_>>()
        })
        .sorted()
        .collect()
}

/// `Des_A(w) = {t ∈ A : ℓ(tw) < ℓ(w)}`; for `t = (i, j)` this is `w⁻¹(i) > w⁻¹(j)`.
pub fn left_descents_in<'a, I>(reflections: I, w: &Permutation) -> BTreeSet<Reflection>
where
    I: IntoIterator<Item = &'a Reflection>,
{
    let pos = w.positions();
    reflections
        .into_iter()
        .filter(|t| pos[t.i() - 1] > pos[t.j() - 1])
        .copied()
        .collect()
}

/// `⟨f, α_(i,j)⟩ = f_j − f_i` for `i < j`.
pub fn pair(f: &Functional, t: &Reflection) -> i64 {
    f.pair(t)
}

/// The lower interval `[id, w]` of the right weak order.
pub fn weak_interval(w: &Permutation) -> Vec<Permutation> {
    let mut seen = HashSet::from([w.clone()]);
    let mut stack = vec![w.clone()];
    while let Some(u) = stack.pop() {
        for i in 1..u.n() {
            if u.has_right_descent(i) {
                let v = u.mul_simple(i);
                if seen.insert(v.clone()) {
                    stack.push(v);
                }
            }
        }
    }
    sort_elements(seen.into_iter().collect())
}

/// Right weak order: `u <= w` iff `ℓ(u) + ℓ(u⁻¹w) = ℓ(w)`.
pub fn weak_le(u: &Permutation, w: &Permutation) -> bool {
    u.length() + u.inverse().compose(w).length() == w.length()
}

/// Sorts elements into the canonical breadth-first order.
pub fn sort_elements(mut v: Vec<Permutation>) -> Vec<Permutation> {
    v.sort_by_cached_key(|w| w.order_key());
    v
}

/// Geodesic convexity in the right Cayley graph of `S_n`.
///
/// Convex subsets are exactly intersections of the half-spaces
/// `{w : w⁻¹(i) < w⁻¹(j)}` and their complements, so `K` is convex iff
/// every permutation on the same side as `K` of every wall it does not
/// straddle already lies in `K`.
pub fn is_convex(set: &[Permutation]) -> bool {
    let Some(first) = set.first() else {
        return true;
    };
    let n = first.n();
    let members: HashSet<&Permutation> = set.iter().collect();
    // side[t] = Some(true) if every member has t as a left descent
    let mut walls: Vec<(Reflection, bool)> = Vec::new();
    for t in Reflection::all(n) {
        let mut sides = set.iter().map(|w| {
            let pos = w.positions();
            pos[t.i() - 1] > pos[t.j() - 1]
        });
        let s0 = sides.next().unwrap();
        if sides.all(|s| s == s0) {
            walls.push((t, s0));
        }
    }
    // Only elements reachable through the Cayley graph without crossing a
    // fixed wall can lie in the hull; walk outwards from the set.
    let mut seen: HashSet<Permutation> = set.iter().cloned().collect();
    let mut stack: Vec<Permutation> = set.to_vec();
    while let Some(u) = stack.pop() {
        for i in 1..n {
            let v = u.mul_simple(i);
            if seen.contains(&v) {
                continue;
            }
            let crossed = u.conjugate_simple(i);
            if walls.iter().any(|(t, _)| *t == crossed) {
                continue;
            }
            if !members.contains(&v) {
                return false;
            }
            seen.insert(v.clone());
            stack.push(v);
        }
    }
    true
}

/// `W^J`: permutations with no left descent in `J`, the minimal length
/// representatives of the right cosets `⟨J⟩w`.
pub fn minimal_coset_reps(n: usize, labels: &[usize]) -> Result<Vec<Permutation>> {
    if let Some(&bad) = labels.iter().find(|&&s| s == 0 || s >= n) {
        return Err(Error::Domain(format!("s_{bad} is not a generator of S_{n}")));
    }
    Ok(symmetric_group(n)?
        .into_iter()
        .filter(|w| {
            let pos = w.positions();
            labels.iter().all(|&j| pos[j - 1] < pos[j])
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn left_descent_examples() {
        let t12 = Reflection::new(1, 2);
        let t13 = Reflection::new(1, 3);
        assert!(left_descents_in(&[t12, t13], &Permutation::identity(3)).is_empty());
        assert_eq!(
            left_descents_in(&[t12], &p("2,1,3")),
            BTreeSet::from([t12])
        );
        assert!(left_descents_in(&[t13], &p("1,3,2")).is_empty());
    }

    #[test]
    fn left_descents_match_length_definition() {
        for w in symmetric_group(4).unwrap() {
            let all = Reflection::all(4);
            let des = left_descents_in(&all, &w);
            for t in &all {
                let tw = t.to_permutation(4).compose(&w);
                assert_eq!(des.contains(t), tw.length() < w.length());
            }
            assert_eq!(des.len(), w.length());
        }
    }

    #[test]
    fn weak_interval_examples() {
        assert_eq!(weak_interval(&Permutation::identity(4)).len(), 1);
        assert_eq!(
            weak_interval(&p("1,3,2")),
            vec![Permutation::identity(3), p("1,3,2")]
        );
        let got = weak_interval(&p("1,4,2,5,3"));
        let s = |i| Permutation::simple(5, i);
        let id = Permutation::identity(5);
        let expected = sort_elements(vec![
            id.clone(),
            s(3),
            s(3).compose(&s(2)),
            s(3).compose(&s(4)),
            s(3).compose(&s(2)).compose(&s(4)),
        ]);
        assert_eq!(got, expected);
    }

    #[test]
    fn weak_interval_agrees_with_length_definition() {
        let all = symmetric_group(4).unwrap();
        for w in &all {
            let brute: Vec<_> = all.iter().filter(|u| weak_le(u, w)).cloned().collect();
            assert_eq!(weak_interval(w), sort_elements(brute));
        }
    }

    #[test]
    fn convexity_examples() {
        let id = Permutation::identity(3);
        let s1 = Permutation::simple(3, 1);
        let s2 = Permutation::simple(3, 2);
        assert!(is_convex(std::slice::from_ref(&id)));
        assert!(is_convex(&[id.clone(), s1.clone(), s2.clone()]));
        assert!(!is_convex(&[id, s1.compose(&s2)]));
    }

    #[test]
    fn coset_representatives() {
        let reps = minimal_coset_reps(3, &[1]).unwrap();
        let s = |i| Permutation::simple(3, i);
        assert_eq!(
            reps,
            vec![Permutation::identity(3), s(2), s(2).compose(&s(1))]
        );
        assert_eq!(minimal_coset_reps(3, &[]).unwrap().len(), 6);
        assert_eq!(minimal_coset_reps(4, &[1, 3]).unwrap().len(), 6);
        for labels in [vec![1], vec![2, 3], vec![1, 2, 3]] {
            let reps = minimal_coset_reps(4, &labels).unwrap();
            assert_eq!(reps.len() * parabolic_elements(4, &labels).len(), 24);
        }
        assert!(minimal_coset_reps(3, &[3]).is_err());
    }

    #[test]
    fn enumeration_sizes_and_caps() {
        let caps = Caps::default();
        assert_eq!(enumerate_group_with(GroupType::A, 3, &caps).unwrap().order(), 6);
        assert_eq!(enumerate_group_with(GroupType::B, 2, &caps).unwrap().order(), 8);
        assert_eq!(enumerate_group_with(GroupType::A, 1, &caps).unwrap().order(), 1);
        assert_eq!(enumerate_group_with(GroupType::B, 3, &caps).unwrap().order(), 48);
        assert!(matches!(
            enumerate_group_with(GroupType::A, 8, &caps),
            Err(Error::SizeLimit { .. })
        ));
        assert!(enumerate_group_with(GroupType::B, 6, &caps).is_err());
    }

    #[test]
    fn enumerated_words_are_reduced() {
        let g = enumerate_group_with(GroupType::B, 3, &Caps::default()).unwrap();
        for (w, word) in g.elements.iter().zip(&g.words) {
            assert_eq!(word.len(), w.length(), "{w:?}");
        }
    }

    #[test]
    fn simple_steps_change_length_by_one() {
        for w in symmetric_group(4).unwrap() {
            for i in 1..4 {
                assert_eq!(w.mul_simple(i).length().abs_diff(w.length()), 1);
            }
        }
    }

    #[test]
    fn blocks_of_parabolic() {
        assert_eq!(
            parabolic_blocks(5, &[1, 3, 4]),
            vec![vec![1, 2], vec![3, 4, 5]]
        );
        assert_eq!(parabolic_reflections(4, &[1, 3]).len(), 2);
    }
}
