//! Representation matrices: construction, verification and characters.

mod bn;
mod build;
mod character;
mod induce;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::cells::Cell;
use crate::error::{Error, Result};
use crate::groups::{GroupType, Permutation, Reflection};
use crate::linalg::{to_f64, Matrix, Rational};
use crate::tableaux::Tableau;

pub use bn::{bn_classical, bn_pair_label, extend_to_bn, shuffle_cell};
pub use build::{
    build_from_functional, build_on_cell, build_orthogonal_skew, build_parabolic, build_skew,
    skew_functional,
};
pub use character::{
    char_inner, character, class_table, float_character, is_irreducible, mn_character,
    Character, ClassTable, ConjugacyClass,
};
pub use induce::{induce, induced_character};

/// How the off-diagonal coefficients are normalized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Normalization {
    /// `ḃ = 1`, `b̈ = 1 − ȧ²`: every entry rational.
    Seminormal,
    /// `ḃ = b̈ = √(1 − ȧ²)`, in floating point.
    Orthogonal,
}

impl std::str::FromStr for Normalization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "seminormal" => Ok(Self::Seminormal),
            "orthogonal" => Ok(Self::Orthogonal),
            _ => Err(Error::Parse(format!("unknown normalization {s:?}"))),
        }
    }
}

/// What a basis vector is indexed by.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BasisLabel {
    Perm(Permutation),
    Tableau(Tableau),
    /// A pair of tableaux on complementary letter sets, as rows of letters.
    Pair {
        left: Vec<Vec<usize>>,
        right: Vec<Vec<usize>>,
    },
}

impl BasisLabel {
    pub fn as_perm(&self) -> Option<&Permutation> {
        match self {
            BasisLabel::Perm(p) => Some(p),
            _ => None,
        }
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = |r: &[Vec<usize>]| {
            r.iter()
                .map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
                .collect::<Vec<_>>()
                .join("/")
        };
        match self {
            BasisLabel::Perm(p) => write!(f, "{p}"),
            BasisLabel::Tableau(t) => write!(f, "{}", t.to_text().replace('\n', "/")),
            BasisLabel::Pair { left, right } => write!(f, "({} | {})", rows(left), rows(right)),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Matrices {
    Exact(Vec<Matrix<Rational>>),
    Float(Vec<Matrix<f64>>),
}

/// One square matrix per simple generator; columns hold the images of the
/// basis vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation {
    pub group: GroupType,
    pub n: usize,
    pub generators: Vec<usize>,
    pub basis: Vec<BasisLabel>,
    pub matrices: Matrices,
}

impl Representation {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn normalization(&self) -> Normalization {
        match self.matrices {
            Matrices::Exact(_) => Normalization::Seminormal,
            Matrices::Float(_) => Normalization::Orthogonal,
        }
    }

    pub fn generator_index(&self, label: usize) -> Option<usize> {
        self.generators.iter().position(|&s| s == label)
    }

    pub fn exact(&self) -> Option<&[Matrix<Rational>]> {
        match &self.matrices {
            Matrices::Exact(m) => Some(m),
            Matrices::Float(_) => None,
        }
    }

    pub fn float_matrices(&self) -> Vec<Matrix<f64>> {
        match &self.matrices {
            Matrices::Exact(m) => m.iter().map(|x| x.map(to_f64)).collect(),
            Matrices::Float(m) => m.clone(),
        }
    }

    /// `ρ(s_{a_1})⋯ρ(s_{a_k})` for the word `a`.
    pub fn exact_word(&self, word: &[usize]) -> Result<Matrix<Rational>> {
        let mats = self
            .exact()
            .ok_or_else(|| Error::Domain("representation has no exact matrices".into()))?;
        let mut out = Matrix::identity(self.dim());
        for &s in word {
            let k = self
                .generator_index(s)
                .ok_or_else(|| Error::Domain(format!("s_{s} is not a generator")))?;
            out = out.mul_sparse(&mats[k].sparse());
        }
        Ok(out)
    }

    pub fn float_word(&self, word: &[usize]) -> Result<Matrix<f64>> {
        let mats = self.float_matrices();
        let mut out = Matrix::identity(self.dim());
        for &s in word {
            let k = self
                .generator_index(s)
                .ok_or_else(|| Error::Domain(format!("s_{s} is not a generator")))?;
            out = out.mul_sparse(&mats[k].sparse());
        }
        Ok(out)
    }
}

/// Outcome of a verification, with human-readable counterexamples.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Report {
    pub checks: usize,
    pub failures: Vec<String>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, pass: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !pass {
            self.failures.push(msg());
        }
    }

    pub fn merge(&mut self, other: Report) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
    }
}

/// Tolerance for floating-point matrix identities.
pub const FLOAT_TOL: f64 = 1e-9;

/// `M_s² = I` and `(M_s M_t)^{m(s,t)} = I` for every pair of generators.
pub fn verify_coxeter(rep: &Representation) -> Report {
    let mut report = Report::default();
    let labels = &rep.generators;
    for (a, &s) in labels.iter().enumerate() {
        for &t in &labels[a..] {
            let m = if s == t { 1 } else { rep.group.coxeter_m(s, t) };
            let word: Vec<usize> = if s == t {
                vec![s, s]
            } else {
                [s, t].repeat(m)
            };
            let pass = match &rep.matrices {
                Matrices::Exact(_) => rep.exact_word(&word).is_ok_and(|x| x.is_identity()),
                Matrices::Float(_) => rep
                    .float_word(&word)
                    .is_ok_and(|x| x.is_identity_within(FLOAT_TOL)),
            };
            report.check(pass, || {
                if s == t {
                    format!("rho(s_{s})^2 != I")
                } else {
                    format!("(rho(s_{s}) rho(s_{t}))^{m} != I")
                }
            });
        }
    }
    report
}

/// Up/down coefficients read off an exact representation whose basis is a
/// cell: `(ȧ, ḃ)` from up steps and `(ä, b̈)` from down steps, per reflection.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Coefficients {
    pub up: BTreeMap<Reflection, (Rational, Option<Rational>)>,
    pub down: BTreeMap<Reflection, (Rational, Option<Rational>)>,
}

impl Coefficients {
    /// `ȧ_t`, taken from an up step or as `−ä_t` from a down step.
    pub fn a_dot(&self) -> BTreeMap<Reflection, Rational> {
        let mut out: BTreeMap<Reflection, Rational> =
            self.down.iter().map(|(t, (a, _))| (*t, -a.clone())).collect();
        for (t, (a, _)) in &self.up {
            out.insert(*t, a.clone());
        }
        out
    }
}

/// Checks that every `ρ_s(C_w)` lies in the span of `C_w` and `C_{ws}`
/// (`C_w` alone when `ws ∉ K`), with coefficients depending only on
/// `wsw⁻¹` and the direction of the step. Returns the coefficients found.
pub fn verify_axiom_b(rep: &Representation, cell: &Cell) -> (Report, Coefficients) {
    let mut report = Report::default();
    let mut coeffs = Coefficients::default();
    let Some(mats) = rep.exact() else {
        report.check(false, || "axiom B is checked on exact matrices".into());
        return (report, coeffs);
    };
    let members: Vec<Option<&Permutation>> = rep.basis.iter().map(BasisLabel::as_perm).collect();
    let same_basis = members.len() == cell.len()
        && members
            .iter()
            .zip(cell.members())
            .all(|(a, b)| a.is_some_and(|a| a == b));
    report.check(same_basis, || "basis is not indexed by the cell".into());
    if !same_basis {
        return (report, coeffs);
    }
    for (g, &s) in rep.generators.iter().enumerate() {
        let m = &mats[g];
        for (c, w) in cell.members().iter().enumerate() {
            let ws = w.mul_simple(s);
            let partner = cell.index_of(&ws);
            let t = w.conjugate_simple(s);
            let up = ws.length() > w.length();
            let stray = (0..cell.len()).any(|r| r != c && Some(r) != partner && !m.get(r, c).is_zero());
            report.check(!stray, || format!("rho(s_{s}) C_{w} leaves span of C_w, C_ws"));
            let a = m.get(c, c).clone();
            let b = partner.map(|r| m.get(r, c).clone());
            let table = if up { &mut coeffs.up } else { &mut coeffs.down };
            match table.get(&t) {
                None => {
                    table.insert(t, (a, b));
                }
                Some((a0, b0)) => {
                    let consistent = *a0 == a && (b0.is_none() || b.is_none() || *b0 == b);
                    report.check(consistent, || {
                        format!("coefficients of {t} at {w} for s_{s} differ from an earlier step")
                    });
                    if b0.is_none() && b.is_some() {
                        table.insert(t, (a, b));
                    }
                }
            }
        }
    }
    (report, coeffs)
}

/// Graphviz rendering of the weak-order Hasse diagram of the cell, each
/// edge `w → ws` labelled by `s` and the up coefficients `(ȧ, ḃ)`.
pub fn hasse_dot(rep: &Representation, cell: &Cell) -> String {
    let mats = rep.float_matrices();
    let mut out = String::from("digraph cell {\n  rankdir=BT;\n");
    for (k, w) in cell.members().iter().enumerate() {
        out.push_str(&format!("  n{k} [label=\"{w}\"];\n"));
    }
    for (g, &s) in rep.generators.iter().enumerate() {
        for (c, w) in cell.members().iter().enumerate() {
            let ws = w.mul_simple(s);
            if ws.length() < w.length() {
                continue;
            }
            if let Some(r) = cell.index_of(&ws) {
                let (a, b) = match rep.exact() {
                    Some(ex) => (
                        crate::linalg::format_rational(ex[g].get(c, c)),
                        crate::linalg::format_rational(ex[g].get(r, c)),
                    ),
                    None => (format!("{:.6}", mats[g].get(c, c)), format!("{:.6}", mats[g].get(r, c))),
                };
                out.push_str(&format!("  n{c} -> n{r} [label=\"s{s} ({a}, {b})\"];\n"));
            }
        }
    }
    out.push_str("}\n");
    out
}

/// `ρ` with a scalar change of one matrix entry, for negative tests.
#[doc(hidden)]
pub fn perturbed(rep: &Representation, generator: usize, row: usize, col: usize) -> Representation {
    let mut out = rep.clone();
    match &mut out.matrices {
        Matrices::Exact(m) => {
            let x = m[generator].get(row, col).clone() + Rational::one();
            m[generator].set(row, col, x);
        }
        Matrices::Float(m) => {
            let x = m[generator].get(row, col) + 1.0;
            m[generator].set(row, col, x);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cells::{descent_cell, Functional};
    use crate::linalg::{rat, rat_int};

    fn f(s: &str) -> Functional {
        s.parse().unwrap()
    }

    #[test]
    fn hand_computed_example() {
        let rep = build_from_functional(&f("0,1,-1"), &Permutation::identity(3), Normalization::Seminormal).unwrap();
        assert_eq!(rep.dim(), 2);
        let m = rep.exact().unwrap();
        let s1 = Matrix::from_rows(vec![vec![rat_int(1), rat_int(0)], vec![rat_int(0), rat_int(-1)]]).unwrap();
        let s2 = Matrix::from_rows(vec![vec![rat(-1, 2), rat(3, 4)], vec![rat_int(1), rat(1, 2)]]).unwrap();
        assert_eq!(m[0], s1);
        assert_eq!(m[1], s2);
        assert!(verify_coxeter(&rep).ok());
    }

    #[test]
    fn perturbation_breaks_coxeter() {
        let rep = build_from_functional(&f("0,1,-1"), &Permutation::identity(3), Normalization::Seminormal).unwrap();
        assert!(!verify_coxeter(&perturbed(&rep, 0, 0, 0)).ok());
        let orth = build_from_functional(&f("0,1,-1"), &Permutation::identity(3), Normalization::Orthogonal).unwrap();
        assert!(verify_coxeter(&orth).ok());
        assert!(!verify_coxeter(&perturbed(&orth, 1, 1, 0)).ok());
    }

    #[test]
    fn axiom_b_on_builds() {
        for coords in ["0,1,-1", "0,2,-1", "0,3,9", "0,1,2,-1,0", "0,-2,1,3"] {
            let g = f(coords);
            let id = Permutation::identity(g.n());
            let rep = build_from_functional(&g, &id, Normalization::Seminormal).unwrap();
            let cell = descent_cell(&g, &id).unwrap();
            let (report, coeffs) = verify_axiom_b(&rep, &cell);
            assert!(report.ok(), "{coords}: {:?}", report.failures);
            // the coefficients recover the functional
            for (t, a) in coeffs.a_dot() {
                assert_eq!(a, rat(1, g.pair(&t)), "{coords} {t}");
            }
        }
    }

    #[test]
    fn sign_rep_on_a_point() {
        let g = f("0,-1,-2");
        let id = Permutation::identity(3);
        let rep = build_from_functional(&g, &id, Normalization::Seminormal).unwrap();
        assert_eq!(rep.dim(), 1);
        let cell = descent_cell(&g, &id).unwrap();
        assert!(verify_axiom_b(&rep, &cell).0.ok());
        assert!(rep.exact().unwrap().iter().all(|m| m.get(0, 0) == &rat_int(-1)));
    }

    #[test]
    fn scrambled_regular_rep_fails_axiom_b() {
        let g = f("0,3,9");
        let id = Permutation::identity(3);
        let rep = build_from_functional(&g, &id, Normalization::Seminormal).unwrap();
        let cell = descent_cell(&g, &id).unwrap();
        // conjugate by a unipotent change of basis mixing the first three vectors
        let mut p = Matrix::<Rational>::identity(6);
        let mut p_inv = Matrix::<Rational>::identity(6);
        p.set(0, 1, rat_int(1));
        p.set(1, 2, rat_int(2));
        p_inv.set(0, 1, rat_int(-1));
        p_inv.set(0, 2, rat_int(2));
        p_inv.set(1, 2, rat_int(-2));
        assert!(p.mul(&p_inv).is_identity());
        let mats = rep.exact().unwrap().iter().map(|m| p_inv.mul(m).mul(&p)).collect();
        let scrambled = Representation {
            matrices: Matrices::Exact(mats),
            ..rep.clone()
        };
        assert!(verify_coxeter(&scrambled).ok());
        assert!(!verify_axiom_b(&scrambled, &cell).0.ok());
    }

    #[test]
    fn dot_export_lists_edges() {
        let g = f("0,2,-1");
        let id = Permutation::identity(3);
        let rep = build_from_functional(&g, &id, Normalization::Seminormal).unwrap();
        let cell = descent_cell(&g, &id).unwrap();
        let dot = hasse_dot(&rep, &cell);
        assert!(dot.starts_with("digraph cell {"));
        assert_eq!(dot.matches("->").count(), 2);
        assert!(dot.contains("s1 (1/2/1, 1/1)") || dot.contains("s1 (1/2, 1/1)"));
    }
}
