use std::collections::HashMap;

use num_traits::Zero;

use super::character::{character, class_table, Character};
use super::{verify_axiom_b, BasisLabel, Matrices, Representation};
use crate::cells::Cell;
use crate::error::{Error, Result};
use crate::groups::{self, GroupType, Permutation, SignedPermutation};
use crate::linalg::{rat_int, Matrix, Rational};

/// Induces a representation of `⟨J⟩ ⊆ S_n` (basis indexed by permutations
/// `m ∈ D ⊆ ⟨J⟩`) up to `S_n`, on the basis `{C_{mr} : m ∈ D, r ∈ W^J}`.
///
/// When `rs ∈ W^J`, `s` sends `C_{mr}` to `C_{mrs}`. Otherwise `rs = pr`
/// for a simple `p ∈ J`, and `s` acts on the block of `r` as `ψ(p)`.
/// Seminormal inputs must satisfy axiom B on `D`.
pub fn induce(psi: &Representation) -> Result<Representation> {
    if psi.group != GroupType::A {
        return Err(Error::Domain("induction is implemented for type A".into()));
    }
    let n = psi.n;
    let j = &psi.generators;
    let reps = groups::minimal_coset_reps(n, j)?;
    let d: Vec<Permutation> = psi
        .basis
        .iter()
        .map(|b| {
            b.as_perm()
                .cloned()
                .ok_or_else(|| Error::Domain("induction needs a basis indexed by permutations".into()))
        })
        .collect::<Result<_>>()?;
    if psi.exact().is_some() {
        let cell = Cell::with_labels(d.clone(), j.clone())?;
        let (report, _) = verify_axiom_b(psi, &cell);
        if !report.ok() {
            return Err(Error::Domain(format!(
                "the subgroup representation breaks axiom B: {}",
                report.failures.join("; ")
            )));
        }
    }
    let rep_index: HashMap<&Permutation, usize> = reps.iter().enumerate().map(|(k, r)| (r, k)).collect();
    let dim_h = d.len();
    let index = |m: usize, r: usize| r * dim_h + m;
    let basis: Vec<BasisLabel> = reps
        .iter()
        .flat_map(|r| d.iter().map(move |m| BasisLabel::Perm(m.compose(r))))
        .collect();
    let size = basis.len();
    let s_labels = GroupType::A.labels(n);

    let build = |place: &mut dyn FnMut(usize, usize, usize, usize, usize)| -> Result<()> {
        for (g, &s) in s_labels.iter().enumerate() {
            for (ri, r) in reps.iter().enumerate() {
                let rs = r.mul_simple(s);
                if let Some(&rj) = rep_index.get(&rs) {
                    for m in 0..dim_h {
                        place(g, index(m, rj), index(m, ri), usize::MAX, 0);
                    }
                } else {
                    let p = rs.compose(&r.inverse());
                    let label = (1..n)
                        .find(|&i| p == Permutation::simple(n, i))
                        .filter(|i| j.contains(i))
                        .ok_or_else(|| Error::Domain(format!("r s r^-1 is not simple in J for r = {r}")))?;
                    let k = psi.generator_index(label).expect("label in J");
                    for m in 0..dim_h {
                        for m2 in 0..dim_h {
                            place(g, index(m2, ri), index(m, ri), k, m2 * dim_h + m);
                        }
                    }
                }
            }
        }
        Ok(())
    };

    let matrices = match &psi.matrices {
        Matrices::Exact(src) => {
            let mut out = vec![Matrix::<Rational>::zeros(size, size); s_labels.len()];
            build(&mut |g, row, col, k, rc| {
                let v = if k == usize::MAX {
                    rat_int(1)
                } else {
                    src[k].get(rc / dim_h, rc % dim_h).clone()
                };
                if !v.is_zero() {
                    out[g].set(row, col, v);
                }
            })?;
            Matrices::Exact(out)
        }
        Matrices::Float(src) => {
            let mut out = vec![Matrix::<f64>::zeros(size, size); s_labels.len()];
            build(&mut |g, row, col, k, rc| {
                let v = if k == usize::MAX { 1.0 } else { *src[k].get(rc / dim_h, rc % dim_h) };
                if v != 0.0 {
                    out[g].set(row, col, v);
                }
            })?;
            Matrices::Float(out)
        }
    };
    Ok(Representation {
        group: GroupType::A,
        n,
        generators: s_labels,
        basis,
        matrices,
    })
}

/// `χ↑(g) = (1/|H|) Σ_{x ∈ S_n} χ°(x g x⁻¹)`, with `χ°` the character of
/// `psi` extended by zero off `H`; values on the classes of `S_n`.
pub fn induced_character(psi: &Representation) -> Result<Character> {
    let n = psi.n;
    let chi_h = character(psi)?;
    let h_table = class_table(GroupType::A, n, &psi.generators)?;
    let g_table = class_table(GroupType::A, n, &GroupType::A.labels(n))?;
    let group = groups::symmetric_group(n)?;
    let h_order = rat_int(h_table.order as i64);
    g_table
        .classes
        .iter()
        .map(|c| {
            let g = c.representative.to_permutation().expect("type A");
            let sum = group.iter().fold(Rational::zero(), |acc, x| {
                let y = x.compose(&g).compose(&x.inverse());
                match h_table.class_of(&SignedPermutation::from(&y)) {
                    Some(k) => acc + &chi_h[k],
                    None => acc,
                }
            });
            Ok(sum / &h_order)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cells::Functional;
    use crate::reps::{build_parabolic, verify_coxeter, Normalization};

    #[test]
    fn trivial_induced_from_trivial_subgroup_is_regular() {
        let f = Functional::new(vec![0, 100, 200]);
        let psi = build_parabolic(&f, &[], Normalization::Seminormal).unwrap();
        assert_eq!(psi.dim(), 1);
        let up = induce(&psi).unwrap();
        assert_eq!(up.dim(), 6);
        assert!(verify_coxeter(&up).ok());
        assert_eq!(character(&up).unwrap(), induced_character(&psi).unwrap());
        assert_eq!(character(&up).unwrap()[0], rat_int(6));
    }

    #[test]
    fn induction_from_young_subgroup() {
        // trivial of S_2 x S_1 induced to S_3 is the permutation module
        let f = Functional::new(vec![0, 1, 100]);
        let psi = build_parabolic(&f, &[1], Normalization::Seminormal).unwrap();
        let up = induce(&psi).unwrap();
        assert_eq!(up.dim(), 3);
        assert!(verify_coxeter(&up).ok());
        assert_eq!(
            character(&up).unwrap(),
            vec![rat_int(3), rat_int(1), rat_int(0)]
        );
        assert_eq!(character(&up).unwrap(), induced_character(&psi).unwrap());
        let orth = induce(&build_parabolic(&f, &[1], Normalization::Orthogonal).unwrap()).unwrap();
        assert!(verify_coxeter(&orth).ok());
    }

    #[test]
    fn induction_from_whole_group_is_identity() {
        let f = Functional::new(vec![0, 1, -1]);
        let psi = build_parabolic(&f, &[1, 2], Normalization::Seminormal).unwrap();
        let up = induce(&psi).unwrap();
        assert_eq!(up.matrices, psi.matrices);
    }
}
