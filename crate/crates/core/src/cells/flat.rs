use std::collections::{BTreeMap, BTreeSet};

use super::minimal::solve_potentials;
use super::{Cell, Functional};
use crate::error::{Error, Result};
use crate::groups::{self, Reflection};

/// An intersection of hyperplanes `⟨f, α_t⟩ = ε` with `ε = ±1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicFlat {
    n: usize,
    constraints: BTreeMap<Reflection, i64>,
    // potentials solving the constraints; equal differences hold on all of L
    potentials: Vec<i64>,
    component: Vec<usize>,
}

impl BasicFlat {
    /// Fails if a reflection is given both signs, a sign is not `±1`, or the
    /// equations have no common solution.
    pub fn new(n: usize, constraints: &[(Reflection, i64)]) -> Result<Self> {
        let mut map = BTreeMap::new();
        for &(t, eps) in constraints {
            if eps.abs() != 1 {
                return Err(Error::Domain(format!("constraint on {t} must be ±1, got {eps}")));
            }
            if t.j() > n {
                return Err(Error::Domain(format!("{t} is not a reflection of S_{n}")));
            }
            if let Some(&prev) = map.get(&t) {
                if prev != eps {
                    return Err(Error::InconsistentFlat(t.to_string()));
                }
            }
            map.insert(t, eps);
        }
        let list: Vec<(Reflection, i64)> = map.iter().map(|(&t, &e)| (t, e)).collect();
        let potentials = solve_potentials(n, &list)
            .ok_or_else(|| Error::InconsistentFlat(format!("the equations {list:?} have no solution")))?;
        // letters are in one component iff their difference is fixed on L
        let mut component: Vec<usize> = (0..n).collect();
        for &(t, _) in &list {
            let (a, b) = (find(&mut component, t.i() - 1), find(&mut component, t.j() - 1));
            component[a] = b;
        }
        for x in 0..n {
            component[x] = find(&mut component, x);
        }
        Ok(Self {
            n,
            constraints: map,
            potentials,
            component,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn constraints(&self) -> &BTreeMap<Reflection, i64> {
        &self.constraints
    }

    /// Reflections whose pairing is `±1` on all of `L`, including those
    /// forced by the given equations.
    pub fn a_l(&self) -> BTreeSet<Reflection> {
        Reflection::all(self.n)
            .into_iter()
            .filter(|t| self.fixed_pairing(t).is_some_and(|v| v.abs() == 1))
            .collect()
    }

    /// The pairing of `t`, if it is the same for every point of `L`.
    pub fn fixed_pairing(&self, t: &Reflection) -> Option<i64> {
        let (i, j) = (t.i() - 1, t.j() - 1);
        (self.component[i] == self.component[j]).then(|| self.potentials[j] - self.potentials[i])
    }

    pub fn contains(&self, f: &Functional) -> bool {
        f.n() == self.n && self.constraints.iter().all(|(t, &eps)| f.pair(t) == eps)
    }

    /// A point of `L` whose free differences are all large.
    pub fn point(&self) -> Functional {
        Functional::new(self.potentials.clone())
    }

    /// Connected components of letters whose differences are fixed on `L`.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for x in 0..self.n {
            groups.entry(self.component[x]).or_default().push(x + 1);
        }
        let mut out: Vec<Vec<usize>> = groups.into_values().collect();
        out.sort();
        out
    }

    /// Potentials relative to the smallest letter of each component.
    pub fn offsets(&self) -> Vec<i64> {
        let comps = self.components();
        let mut out = vec![0; self.n];
        for c in comps {
            let base = self.potentials[c[0] - 1];
            for &x in &c {
                out[x - 1] = self.potentials[x - 1] - base;
            }
        }
        out
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// The classes `W_A^D = {w : Des_A(w) = D}` of `S_n` for `A = A_L`,
/// ordered by their first member.
pub fn flat_partition(flat: &BasicFlat) -> Result<Vec<Cell>> {
    let a = flat.a_l();
    let mut classes: BTreeMap<BTreeSet<Reflection>, Vec<_>> = BTreeMap::new();
    for w in groups::symmetric_group(flat.n())? {
        classes
            .entry(groups::left_descents_in(&a, &w))
            .or_default()
            .push(w);
    }
    let mut cells = classes
        .into_values()
        .map(Cell::new)
        .collect::<Result<Vec<_>>>()?;
    cells.sort_by_cached_key(|c| c.members()[0].order_key());
    Ok(cells)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_examples() {
        let t = Reflection::new;
        let flat = BasicFlat::new(3, &[(t(1, 3), -1)]).unwrap();
        assert_eq!(flat.a_l(), BTreeSet::from([t(1, 3)]));
        let parts = flat_partition(&flat).unwrap();
        assert_eq!(parts.iter().map(Cell::len).collect::<Vec<_>>(), vec![3, 3]);
        assert!(parts.iter().all(Cell::is_convex));

        let whole = BasicFlat::new(4, &[]).unwrap();
        assert_eq!(flat_partition(&whole).unwrap().len(), 1);

        let point = BasicFlat::new(2, &[(t(1, 2), 1)]).unwrap();
        let parts = flat_partition(&point).unwrap();
        assert_eq!(parts.iter().map(Cell::len).collect::<Vec<_>>(), vec![1, 1]);
    }

    #[test]
    fn implied_constraints_join_a_l() {
        let t = Reflection::new;
        let flat = BasicFlat::new(4, &[(t(1, 2), 1), (t(2, 3), -1)]).unwrap();
        // f_3 − f_1 = 0 is fixed but not ±1; (1,2),(2,3) are given
        assert_eq!(flat.a_l(), BTreeSet::from([t(1, 2), t(2, 3)]));
        assert_eq!(flat.fixed_pairing(&t(1, 3)), Some(0));
        let flat = BasicFlat::new(4, &[(t(1, 2), 1), (t(2, 3), 1), (t(3, 4), -1)]).unwrap();
        assert!(flat.a_l().contains(&t(1, 4)));
        assert_eq!(flat.fixed_pairing(&t(2, 4)), Some(0));
        assert!(flat.contains(&flat.point()));
    }

    #[test]
    fn inconsistent_constraints_are_rejected() {
        let t = Reflection::new;
        assert!(matches!(
            BasicFlat::new(3, &[(t(1, 2), 1), (t(1, 2), -1)]),
            Err(Error::InconsistentFlat(_))
        ));
        assert!(BasicFlat::new(3, &[(t(1, 2), 1), (t(2, 3), 1), (t(1, 3), 1)]).is_err());
        assert!(BasicFlat::new(3, &[(t(1, 2), 2)]).is_err());
    }
}
