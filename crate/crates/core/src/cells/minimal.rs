use std::collections::{BTreeSet, HashMap};

use super::{descent_cell, is_generic_integer, Cell, Functional};
use crate::error::Result;
use crate::groups::{self, Permutation, Reflection};
use crate::tableaux::{enumerate_standard, tableau_from_content, SkewShape, Tableau};

/// `B_Q = {π : Q^{π⁻¹} is standard}`, in breadth-first order.
///
/// For each standard `T` of the same shape there is exactly one such `π`,
/// namely `π(T(b)) = Q(b)` for every box `b`.
pub fn standard_relabelings(q: &Tableau) -> Result<Vec<Permutation>> {
    let n = q.size();
    let out = enumerate_standard(q.shape())?
        .into_iter()
        .map(|t| {
            let images = (1..=n)
                .map(|k| q.entry(t.box_of(k)).expect("same shape"))
                .collect();
            Permutation::from_images(images).expect("bijection")
        })
        .collect();
    Ok(groups::sort_elements(out))
}

/// Solves `f_j − f_i = ε` over the given constraints, one potential per
/// letter; `None` if a cycle is inconsistent. Letters in different
/// components are separated by multiples of `4n`.
pub(crate) fn solve_potentials(n: usize, constraints: &[(Reflection, i64)]) -> Option<Vec<i64>> {
    let mut adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n + 1];
    for &(t, eps) in constraints {
        adj[t.i()].push((t.j(), eps));
        adj[t.j()].push((t.i(), -eps));
    }
    let mut pot: Vec<Option<i64>> = vec![None; n + 1];
    let spread = 4 * n as i64;
    let mut component = 0i64;
    for root in 1..=n {
        if pot[root].is_some() {
            continue;
        }
        pot[root] = Some(component * spread);
        component += 1;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            let pu = pot[u].unwrap();
            for &(v, d) in &adj[u] {
                match pot[v] {
                    None => {
                        pot[v] = Some(pu + d);
                        stack.push(v);
                    }
                    Some(pv) if pv != pu + d => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(pot.into_iter().skip(1).map(Option::unwrap).collect())
}

/// Whether `K` is a minimal abstract Young cell of `S_n`, with a witness
/// `(σ, Q)` such that `σ⁻¹K = B_Q`.
///
/// `K` is translated to contain the identity; then every `±1` assignment to
/// its boundary walls is solved for an integer functional whose identity
/// cell is the translate, and the functional's contents give `Q`. The
/// smallest such `Q` is returned.
pub fn is_minimal_ay_cell(k: &[Permutation]) -> Option<(Permutation, Tableau)> {
    let first = k.first()?;
    let n = first.n();
    if !groups::is_convex(k) {
        return None;
    }
    let sigma = groups::sort_elements(k.to_vec()).swap_remove(0);
    let sigma_inv = sigma.inverse();
    let translate = Cell::new(k.iter().map(|w| sigma_inv.compose(w)).collect()).ok()?;
    let walls: Vec<Reflection> = translate.boundary().iter().copied().collect();
    if walls.iter().any(|t| translate.interior().contains(t)) {
        return None;
    }
    let mut best: Option<Tableau> = None;
    for mask in 0u64..(1u64 << walls.len()) {
        let constraints: Vec<(Reflection, i64)> = walls
            .iter()
            .enumerate()
            .map(|(b, &t)| (t, if mask >> b & 1 == 1 { -1 } else { 1 }))
            .collect();
        let Some(coords) = solve_potentials(n, &constraints) else {
            continue;
        };
        let f = Functional::new(coords);
        if !is_generic_integer(&f) {
            continue;
        }
        let Ok(cell) = descent_cell(&f, &Permutation::identity(n)) else {
            continue;
        };
        if cell != translate {
            continue;
        }
        let shift = f.coords()[0];
        let contents: Vec<i64> = f.coords().iter().map(|x| x - shift).collect();
        let Ok(q) = tableau_from_content(&contents) else {
            continue;
        };
        if standard_relabelings(&q).ok()? == translate.members()
            && best.as_ref().is_none_or(|b| q < *b)
        {
            best = Some(q);
        }
    }
    best.map(|q| (sigma, q))
}

/// Every set `σ·B_Q` for `Q` standard of size `n` and `σ ∈ S_n`.
pub fn brute_force_minimal_cells(n: usize) -> Result<BTreeSet<Vec<Permutation>>> {
    let group = groups::symmetric_group(n)?;
    let mut bases: HashMap<Vec<Permutation>, ()> = HashMap::new();
    for shape in SkewShape::all_of_size(n) {
        for q in enumerate_standard(&shape)? {
            bases.insert(standard_relabelings(&q)?, ());
        }
    }
    let mut out = BTreeSet::new();
    for base in bases.keys() {
        for sigma in &group {
            let mut set: Vec<Permutation> = base.iter().map(|w| sigma.compose(w)).collect();
            set.sort();
            out.insert(set);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn relabelings_are_exactly_the_standard_ones() {
        let q = Tableau::from_rows(&[vec![1, 2, 4], vec![3, 5]]).unwrap();
        let brute: Vec<Permutation> = groups::symmetric_group(5)
            .unwrap()
            .into_iter()
            .filter(|pi| q.relabel(pi).unwrap().is_standard())
            .collect();
        assert_eq!(standard_relabelings(&q).unwrap(), groups::sort_elements(brute));
    }

    #[test]
    fn minimal_cell_examples() {
        let id = Permutation::identity(3);
        let (sigma, q) = is_minimal_ay_cell(&[id.clone(), p("1,3,2")]).unwrap();
        assert_eq!(sigma, id);
        assert_eq!(q, Tableau::from_rows(&[vec![1, 2], vec![3]]).unwrap());
        assert!(is_minimal_ay_cell(&[id.clone(), p("2,3,1")]).is_none());
        for w in groups::symmetric_group(4).unwrap() {
            let (sigma, q) = is_minimal_ay_cell(std::slice::from_ref(&w)).unwrap();
            assert_eq!(sigma, w);
            assert_eq!(standard_relabelings(&q).unwrap().len(), 1);
        }
    }

    #[test]
    fn potentials_detect_cycles() {
        let t = Reflection::new;
        assert!(solve_potentials(3, &[(t(1, 2), 1), (t(2, 3), 1), (t(1, 3), 1)]).is_none());
        let f = solve_potentials(3, &[(t(1, 2), 1), (t(2, 3), 1)]).unwrap();
        assert_eq!(f, vec![0, 1, 2]);
        let f = solve_potentials(3, &[(t(1, 3), -1)]).unwrap();
        assert_eq!(f[2] - f[0], -1);
        assert!((f[1] - f[0]).abs() >= 2);
    }
}
