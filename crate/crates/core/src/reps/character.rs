use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};
use serde::Serialize;

use super::{Matrices, Representation};
use crate::error::{Error, Result};
use crate::groups::{self, GroupType, SignedPermutation};
use crate::linalg::{rat_int, Rational};
use crate::tableaux::SkewShape;

/// Character values, one per conjugacy class of the table it was computed on.
pub type Character = Vec<Rational>;

#[derive(Clone, Debug, Serialize)]
pub struct ConjugacyClass {
    pub size: usize,
    pub representative: SignedPermutation,
    /// A reduced word for the representative.
    pub word: Vec<usize>,
    /// Cycle type, for classes of a full symmetric group.
    pub cycle_type: Option<Vec<usize>>,
}

/// Conjugacy classes of a finite Coxeter group or one of its standard
/// parabolic subgroups.
#[derive(Debug, Serialize)]
pub struct ClassTable {
    pub ty: GroupType,
    pub n: usize,
    pub labels: Vec<usize>,
    pub order: usize,
    pub classes: Vec<ConjugacyClass>,
    #[serde(skip)]
    class_of: HashMap<SignedPermutation, usize>,
}

impl ClassTable {
    pub fn class_of(&self, w: &SignedPermutation) -> Option<usize> {
        self.class_of.get(w).copied()
    }

    /// `⟨χ, ψ⟩ = (1/|G|) Σ_g χ(g) ψ(g)`; characters here are real.
    pub fn inner(&self, a: &[Rational], b: &[Rational]) -> Rational {
        let sum = self
            .classes
            .iter()
            .zip(a.iter().zip(b))
            .fold(Rational::zero(), |acc, (c, (x, y))| acc + rat_int(c.size as i64) * x * y);
        sum / rat_int(self.order as i64)
    }
}

type TableKey = (GroupType, usize, Vec<usize>);

fn cache() -> &'static Mutex<HashMap<TableKey, Arc<ClassTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<TableKey, Arc<ClassTable>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The class table of `⟨labels⟩`, computed once per process.
pub fn class_table(ty: GroupType, n: usize, labels: &[usize]) -> Result<Arc<ClassTable>> {
    groups::Caps::from_env().check(ty, n)?;
    let mut labels = labels.to_vec();
    labels.sort_unstable();
    labels.dedup();
    let key = (ty, n, labels.clone());
    if let Some(t) = cache().lock().expect("class table cache").get(&key) {
        return Ok(Arc::clone(t));
    }
    let table = Arc::new(compute_table(ty, n, &labels));
    cache()
        .lock()
        .expect("class table cache")
        .insert(key, Arc::clone(&table));
    Ok(table)
}

fn compute_table(ty: GroupType, n: usize, labels: &[usize]) -> ClassTable {
    let group = groups::generated_subgroup(ty, n, labels);
    let full_a = ty == GroupType::A && labels == GroupType::A.labels(n).as_slice();
    let mut class_index: Vec<usize> = vec![usize::MAX; group.order()];
    let mut firsts: Vec<usize> = Vec::new();
    if full_a {
        let mut by_type: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for (k, w) in group.elements.iter().enumerate() {
            let perm = w.to_permutation().expect("type A elements are unsigned");
            by_type.entry(perm.cycle_type()).or_default().push(k);
        }
        for (c, members) in by_type.values().enumerate() {
            firsts.push(members[0]);
            for &k in members {
                class_index[k] = c;
            }
        }
    } else {
        let gens: Vec<SignedPermutation> = labels
            .iter()
            .map(|&s| SignedPermutation::identity(n).mul_generator(s))
            .collect();
        for start in 0..group.order() {
            if class_index[start] != usize::MAX {
                continue;
            }
            let c = firsts.len();
            firsts.push(start);
            class_index[start] = c;
            let mut stack = vec![start];
            while let Some(k) = stack.pop() {
                for g in &gens {
                    let y = g.compose(&group.elements[k]).compose(g);
                    let j = group.index_of(&y).expect("closed under conjugation");
                    if class_index[j] == usize::MAX {
                        class_index[j] = c;
                        stack.push(j);
                    }
                }
            }
        }
    }
    let mut sizes = vec![0usize; firsts.len()];
    for &c in &class_index {
        sizes[c] += 1;
    }
    let classes = firsts
        .iter()
        .zip(sizes)
        .map(|(&k, size)| {
            let w = &group.elements[k];
            ConjugacyClass {
                size,
                representative: w.clone(),
                word: group.words[k].clone(),
                cycle_type: full_a.then(|| w.to_permutation().expect("unsigned").cycle_type()),
            }
        })
        .collect();
    let class_of = group
        .elements
        .iter()
        .cloned()
        .zip(class_index)
        .collect();
    ClassTable {
        ty,
        n,
        labels: labels.to_vec(),
        order: group.order(),
        classes,
        class_of,
    }
}

/// Exact character of a seminormal representation.
pub fn character(rep: &Representation) -> Result<Character> {
    if !matches!(rep.matrices, Matrices::Exact(_)) {
        return Err(Error::Domain("exact characters need seminormal matrices".into()));
    }
    let table = class_table(rep.group, rep.n, &rep.generators)?;
    table
        .classes
        .iter()
        .map(|c| Ok(rep.exact_word(&c.word)?.trace()))
        .collect()
}

pub fn float_character(rep: &Representation) -> Result<Vec<f64>> {
    let table = class_table(rep.group, rep.n, &rep.generators)?;
    table
        .classes
        .iter()
        .map(|c| Ok(rep.float_word(&c.word)?.trace()))
        .collect()
}

/// `⟨χ, ψ⟩` on the class table of `rep`'s group.
pub fn char_inner(rep: &Representation, a: &[Rational], b: &[Rational]) -> Result<Rational> {
    let table = class_table(rep.group, rep.n, &rep.generators)?;
    if a.len() != table.classes.len() || b.len() != table.classes.len() {
        return Err(Error::SizeMismatch("character length differs from class count".into()));
    }
    Ok(table.inner(a, b))
}

pub fn is_irreducible(rep: &Representation) -> Result<bool> {
    let chi = character(rep)?;
    Ok(char_inner(rep, &chi, &chi)?.is_one())
}

/// `χ^{λ/μ}` at a permutation of the given cycle type, by removing border
/// strips of the last cycle length.
pub fn mn_character(shape: &SkewShape, cycle_type: &[usize]) -> Result<i64> {
    if cycle_type.iter().sum::<usize>() != shape.size() || cycle_type.contains(&0) {
        return Err(Error::SizeMismatch(format!(
            "cycle type {cycle_type:?} is not a partition of {}",
            shape.size()
        )));
    }
    let lambda = shape.lambda().to_vec();
    let mu: Vec<usize> = (0..lambda.len())
        .map(|i| shape.mu().get(i).copied().unwrap_or(0))
        .collect();
    Ok(mn_rec(&lambda, &mu, cycle_type))
}

fn mn_rec(lambda: &[usize], mu: &[usize], rho: &[usize]) -> i64 {
    let Some((&r, rest)) = rho.split_last() else {
        return 1;
    };
    let mut total = 0;
    let mut inner = vec![0; lambda.len()];
    for_each_between(lambda, mu, 0, &mut inner, &mut |nu| {
        let removed: usize = lambda.iter().zip(nu).map(|(a, b)| a - b).sum();
        if removed != r {
            return;
        }
        if let Some(height) = border_strip_height(lambda, nu) {
            let sign = if height % 2 == 0 { 1 } else { -1 };
            total += sign * mn_rec(nu, mu, rest);
        }
    });
    total
}

/// Calls `visit` on every partition `ν` with `μ ⊆ ν ⊆ λ`.
fn for_each_between(
    lambda: &[usize],
    mu: &[usize],
    row: usize,
    nu: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if row == lambda.len() {
        visit(nu);
        return;
    }
    let hi = if row == 0 { lambda[0] } else { lambda[row].min(nu[row - 1]) };
    for x in mu[row]..=hi {
        nu[row] = x;
        for_each_between(lambda, mu, row + 1, nu, visit);
    }
}

/// Rows spanned minus one, when `λ/ν` is a nonempty connected skew shape
/// with no 2×2 square.
fn border_strip_height(lambda: &[usize], nu: &[usize]) -> Option<usize> {
    let rows: Vec<usize> = (0..lambda.len()).filter(|&i| lambda[i] > nu[i]).collect();
    let (&first, &last) = (rows.first()?, rows.last()?);
    for i in first..last {
        // consecutive rows must overlap in exactly one column
        if lambda[i + 1] <= nu[i] || lambda[i + 1] > nu[i] + 1 {
            return None;
        }
    }
    Some(last - first)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::{build_skew, Normalization};

    #[test]
    fn class_tables() {
        let t = class_table(GroupType::A, 3, &[1, 2]).unwrap();
        let types: Vec<_> = t.classes.iter().map(|c| c.cycle_type.clone().unwrap()).collect();
        assert_eq!(types, vec![vec![1, 1, 1], vec![2, 1], vec![3]]);
        assert_eq!(t.classes.iter().map(|c| c.size).collect::<Vec<_>>(), vec![1, 3, 2]);
        let b = class_table(GroupType::B, 2, &[0, 1]).unwrap();
        assert_eq!(b.classes.len(), 5);
        assert_eq!(b.order, 8);
        let b3 = class_table(GroupType::B, 3, &[0, 1, 2]).unwrap();
        assert_eq!(b3.classes.len(), 10);
        let p = class_table(GroupType::A, 4, &[1, 3]).unwrap();
        assert_eq!(p.classes.len(), 4);
        assert!(class_table(GroupType::B, 6, &[0]).is_err());
    }

    #[test]
    fn murnaghan_nakayama_values() {
        let s = |x: &str| -> SkewShape { x.parse().unwrap() };
        assert_eq!(mn_character(&s("2,1"), &[3]).unwrap(), -1);
        assert_eq!(mn_character(&s("2,1"), &[2, 1]).unwrap(), 0);
        assert_eq!(mn_character(&s("2,1"), &[1, 1, 1]).unwrap(), 2);
        assert_eq!(mn_character(&s("3,2"), &[1, 1, 1, 1, 1]).unwrap(), 5);
        assert_eq!(mn_character(&s("2,2/1"), &[1, 1, 1]).unwrap(), 2);
        assert_eq!(mn_character(&s("2,2/1"), &[3]).unwrap(), -1);
        assert_eq!(mn_character(&s("3,3,1/3,1"), &[2, 1]).unwrap(), 1);
        assert!(mn_character(&s("2,1"), &[2]).is_err());
    }

    #[test]
    fn characters_of_small_specht_modules() {
        let rep = build_skew(&"2,1".parse().unwrap(), Normalization::Seminormal).unwrap();
        assert_eq!(character(&rep).unwrap(), vec![rat_int(2), rat_int(0), rat_int(-1)]);
        assert!(is_irreducible(&rep).unwrap());
        let skew = build_skew(&"2,2/1".parse().unwrap(), Normalization::Seminormal).unwrap();
        let chi = character(&skew).unwrap();
        assert_eq!(char_inner(&skew, &chi, &chi).unwrap(), rat_int(1));
        let orth = build_skew(&"2,1".parse().unwrap(), Normalization::Orthogonal).unwrap();
        let fl = float_character(&orth).unwrap();
        assert!((fl[2] + 1.0).abs() < 1e-12);
        assert!(character(&orth).is_err());
    }
}
