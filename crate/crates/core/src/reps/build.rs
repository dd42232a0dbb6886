use num_traits::{One, Zero};

use super::{BasisLabel, Matrices, Normalization, Representation};
use crate::cells::{descent_cell, descent_cell_parabolic, genericity_violations, Cell, Functional};
use crate::error::{Error, Result};
use crate::groups::{GroupType, Permutation};
use crate::linalg::{rat, Matrix, Rational};
use crate::tableaux::{SkewShape, Tableau};

/// The representation on `K^f_w` with coefficients read off `f`.
pub fn build_from_functional(f: &Functional, w: &Permutation, norm: Normalization) -> Result<Representation> {
    let cell = descent_cell(f, w)?;
    build_on_cell(f, &cell, norm)
}

/// The representation of `⟨J⟩` on the descent class of the identity.
pub fn build_parabolic(f: &Functional, labels: &[usize], norm: Normalization) -> Result<Representation> {
    let cell = descent_cell_parabolic(f, &Permutation::identity(f.n()), labels)?;
    build_on_cell(f, &cell, norm)
}

/// Matrices for the generators of `cell` acting on `{C_w : w ∈ K}`.
///
/// `ρ_s(C_w) = a·C_w + b·C_{ws}` with `a = ±1/⟨f, α_t⟩`, `t = wsw⁻¹`, the
/// sign positive on up steps; `b` is dropped when `ws ∉ K`.
pub fn build_on_cell(f: &Functional, cell: &Cell, norm: Normalization) -> Result<Representation> {
    if f.n() != cell.n() {
        return Err(Error::SizeMismatch(format!(
            "functional has {} coordinates but the cell acts on {} letters",
            f.n(),
            cell.n()
        )));
    }
    let violations = genericity_violations(f, cell);
    if !violations.is_empty() {
        return Err(Error::NotGeneric(violations));
    }
    let d = cell.len();
    let mut exact = Vec::new();
    let mut float = Vec::new();
    for &s in cell.labels() {
        let mut m = Matrix::<Rational>::zeros(d, d);
        let mut mf = Matrix::<f64>::zeros(d, d);
        for (c, w) in cell.members().iter().enumerate() {
            let ws = w.mul_simple(s);
            let sign = if ws.length() > w.length() { 1 } else { -1 };
            let a = rat(sign, f.pair(&w.conjugate_simple(s)));
            if let Some(r) = cell.index_of(&ws) {
                let b = if sign == 1 {
                    Rational::one()
                } else {
                    Rational::one() - a.clone() * a.clone()
                };
                let af = crate::linalg::to_f64(&a);
                mf.set(r, c, (1.0 - af * af).sqrt());
                m.set(r, c, b);
            }
            mf.set(c, c, crate::linalg::to_f64(&a));
            m.set(c, c, a);
        }
        exact.push(m);
        float.push(mf);
    }
    debug_assert!(exact.iter().all(|m| !m.get(0, 0).is_zero()));
    Ok(Representation {
        group: GroupType::A,
        n: cell.n(),
        generators: cell.labels().to_vec(),
        basis: cell.members().iter().cloned().map(BasisLabel::Perm).collect(),
        matrices: match norm {
            Normalization::Seminormal => Matrices::Exact(exact),
            Normalization::Orthogonal => Matrices::Float(float),
        },
    })
}

/// The content vector of the row-reading tableau of `shape`.
pub fn skew_functional(shape: &SkewShape) -> Result<Functional> {
    Ok(Functional::new(Tableau::row_tableau(shape).content_vector()?))
}

/// The skew representation on standard tableaux of `shape`; the basis
/// vector of `π` is the row tableau relabelled by `π`.
pub fn build_skew(shape: &SkewShape, norm: Normalization) -> Result<Representation> {
    let q0 = Tableau::row_tableau(shape);
    let f = skew_functional(shape)?;
    let mut rep = build_from_functional(&f, &Permutation::identity(shape.size()), norm)?;
    rep.basis = rep
        .basis
        .iter()
        .map(|b| match b {
            BasisLabel::Perm(pi) => q0.relabel(pi).map(BasisLabel::Tableau),
            other => Ok(other.clone()),
        })
        .collect::<Result<_>>()?;
    Ok(rep)
}

/// Young's orthogonal form for a skew shape.
pub fn build_orthogonal_skew(shape: &SkewShape) -> Result<Representation> {
    build_skew(shape, Normalization::Orthogonal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::{verify_axiom_b, verify_coxeter};
    use crate::tableaux::enumerate_standard;

    #[test]
    fn skew_basis_is_the_standard_tableaux() {
        for s in ["3,2", "2,2/1", "3,3,1/3,1", "3,1,1/1"] {
            let shape: SkewShape = s.parse().unwrap();
            let rep = build_skew(&shape, Normalization::Seminormal).unwrap();
            let mut labels: Vec<Tableau> = rep
                .basis
                .iter()
                .map(|b| match b {
                    BasisLabel::Tableau(t) => t.clone(),
                    _ => panic!("expected tableau labels"),
                })
                .collect();
            labels.sort();
            assert_eq!(labels, enumerate_standard(&shape).unwrap(), "{s}");
            assert!(verify_coxeter(&rep).ok(), "{s}");
        }
    }

    #[test]
    fn orthogonal_form_matches_axial_distances() {
        let shape: SkewShape = "3,2".parse().unwrap();
        let rep = build_orthogonal_skew(&shape).unwrap();
        let mats = rep.float_matrices();
        for (g, &s) in rep.generators.iter().enumerate() {
            for (c, b) in rep.basis.iter().enumerate() {
                let BasisLabel::Tableau(t) = b else { panic!() };
                let cont = t.content_vector().unwrap();
                let r = (cont[s] - cont[s - 1]) as f64;
                assert!((mats[g].get(c, c) - 1.0 / r).abs() < 1e-12);
            }
            let m = &mats[g];
            assert!(m.max_abs_diff(&m.transpose()) < 1e-12, "symmetric");
        }
        assert!(verify_coxeter(&rep).ok());
    }

    #[test]
    fn every_class_of_a_generic_functional_builds() {
        // Same formulas on descent classes away from the identity.
        let mut away = 0;
        for coords in ["0,1,-1", "0,2,-1,1", "0,3,1,-1", "0,1,2,-1,0", "0,-2,1,3"] {
            let f: Functional = coords.parse().unwrap();
            for w in crate::groups::symmetric_group(f.n()).unwrap() {
                let cell = descent_cell(&f, &w).unwrap();
                match build_on_cell(&f, &cell, Normalization::Seminormal) {
                    Ok(rep) => {
                        assert!(verify_coxeter(&rep).ok(), "{coords} at {w}");
                        assert!(verify_axiom_b(&rep, &cell).0.ok(), "{coords} at {w}");
                        away += usize::from(!cell.contains_identity());
                    }
                    Err(Error::NotGeneric(v)) => assert!(!v.is_empty()),
                    Err(e) => panic!("{e}"),
                }
            }
        }
        assert!(away > 0);
    }

    #[test]
    fn non_generic_functional_is_rejected() {
        let f: Functional = "0,1,1".parse().unwrap();
        let err = build_from_functional(&f, &Permutation::identity(3), Normalization::Seminormal);
        assert!(matches!(err, Err(Error::NotGeneric(_))));
        let f: Functional = "0,1".parse().unwrap();
        assert!(matches!(
            build_from_functional(&f, &Permutation::identity(3), Normalization::Seminormal),
            Err(Error::SizeMismatch(_))
        ));
    }
}
