//! Functionals, descent cells, genericity and flats.

mod flat;
mod minimal;

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{self, Caps, GroupType, Permutation, Reflection};
use crate::tableaux::{derived, is_content_vector, Tableau};

pub use flat::{flat_partition, BasicFlat};
pub use minimal::{brute_force_minimal_cells, is_minimal_ay_cell, standard_relabelings};

/// An integer vector standing for a functional modulo the all-ones vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Functional {
    coords: Vec<i64>,
}

impl Functional {
    pub fn new(coords: Vec<i64>) -> Self {
        Self { coords }
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// `⟨f, α_(i,j)⟩ = f_j − f_i`.
    pub fn pair(&self, t: &Reflection) -> i64 {
        self.coords[t.j() - 1] - self.coords[t.i() - 1]
    }

    /// `f_i = 3^i`: every pairing has absolute value at least 2.
    pub fn regular(n: usize) -> Self {
        Self::new((0..n as u32).map(|i| 3i64.pow(i)).collect())
    }
}

impl From<Vec<i64>> for Functional {
    fn from(coords: Vec<i64>) -> Self {
        Self::new(coords)
    }
}

impl fmt::Display for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Functional {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let coords = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad coordinate {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coords))
    }
}

/// A set of permutations with its interior and boundary reflections,
/// relative to the simple generators in `labels`.
#[derive(Clone, Serialize)]
pub struct Cell {
    n: usize,
    labels: Vec<usize>,
    members: Vec<Permutation>,
    interior: BTreeSet<Reflection>,
    boundary: BTreeSet<Reflection>,
    #[serde(skip)]
    index: HashMap<Permutation, usize>,
}

impl PartialEq for Cell {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.members == other.members
    }
}

impl Eq for Cell {}

impl fmt::Debug for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.members).finish()
    }
}

impl Cell {
    /// A cell of `S_n` with all simple generators.
    pub fn new(members: Vec<Permutation>) -> Result<Self> {
        let n = members
            .first()
            .map(Permutation::n)
            .ok_or_else(|| Error::Domain("a cell needs at least one element".into()))?;
        Self::with_labels(members, GroupType::A.labels(n))
    }

    /// A cell inside the parabolic subgroup generated by `labels`.
    pub fn with_labels(members: Vec<Permutation>, labels: Vec<usize>) -> Result<Self> {
        let n = members
            .first()
            .map(Permutation::n)
            .ok_or_else(|| Error::Domain("a cell needs at least one element".into()))?;
        if members.iter().any(|w| w.n() != n) {
            return Err(Error::SizeMismatch("cell members act on different letters".into()));
        }
        if let Some(&bad) = labels.iter().find(|&&s| s == 0 || s >= n) {
            return Err(Error::Domain(format!("s_{bad} is not a generator of S_{n}")));
        }
        let members = groups::sort_elements(members);
        let index: HashMap<Permutation, usize> = members
            .iter()
            .enumerate()
            .map(|(k, w)| (w.clone(), k))
            .collect();
        if index.len() != members.len() {
            return Err(Error::Domain("cell members must be distinct".into()));
        }
        let mut interior = BTreeSet::new();
        let mut boundary = BTreeSet::new();
        for w in &members {
            for &s in &labels {
                let t = w.conjugate_simple(s);
                if index.contains_key(&w.mul_simple(s)) {
                    interior.insert(t);
                } else {
                    boundary.insert(t);
                }
            }
        }
        Ok(Self {
            n,
            labels,
            members,
            interior,
            boundary,
            index,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Members in breadth-first order from the identity.
    pub fn members(&self) -> &[Permutation] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn index_of(&self, w: &Permutation) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn contains(&self, w: &Permutation) -> bool {
        self.index.contains_key(w)
    }

    /// `T_K`.
    pub fn interior(&self) -> &BTreeSet<Reflection> {
        &self.interior
    }

    /// `T_∂K`.
    pub fn boundary(&self) -> &BTreeSet<Reflection> {
        &self.boundary
    }

    pub fn contains_identity(&self) -> bool {
        self.contains(&Permutation::identity(self.n))
    }

    pub fn is_convex(&self) -> bool {
        groups::is_convex(&self.members)
    }

    /// `σ·K`.
    pub fn translate(&self, sigma: &Permutation) -> Result<Cell> {
        let members = self.members.iter().map(|w| sigma.compose(w)).collect();
        Cell::with_labels(members, self.labels.clone())
    }
}

/// `A_f = {t : ⟨f, α_t⟩ = ±1}`.
pub fn boundary_reflections(f: &Functional) -> BTreeSet<Reflection> {
    Reflection::all(f.n())
        .into_iter()
        .filter(|t| f.pair(t).abs() == 1)
        .collect()
}

/// `K^f_w = {v : Des_A(v) = Des_A(w)}` with `A = A_f`.
pub fn descent_cell(f: &Functional, w: &Permutation) -> Result<Cell> {
    let n = f.n();
    if w.n() != n {
        return Err(Error::SizeMismatch(format!(
            "functional has {n} coordinates but the permutation has {} letters",
            w.n()
        )));
    }
    Caps::from_env().check(GroupType::A, n)?;
    descent_cell_parabolic(f, w, &GroupType::A.labels(n))
}

/// The descent class of `w` inside `⟨J⟩`, with `A` the reflections of
/// `⟨J⟩` pairing to `±1`. `w` must lie in `⟨J⟩`.
pub fn descent_cell_parabolic(f: &Functional, w: &Permutation, labels: &[usize]) -> Result<Cell> {
    let n = f.n();
    let a: HashSet<Reflection> = groups::parabolic_reflections(n, labels)
        .into_iter()
        .filter(|t| f.pair(t).abs() == 1)
        .collect();
    // Classes are convex, hence connected through edges whose wall is not in A.
    let mut seen = HashSet::from([w.clone()]);
    let mut stack = vec![w.clone()];
    while let Some(u) = stack.pop() {
        for &s in labels {
            if a.contains(&u.conjugate_simple(s)) {
                continue;
            }
            let v = u.mul_simple(s);
            if seen.insert(v.clone()) {
                stack.push(v);
            }
        }
    }
    Cell::with_labels(seen.into_iter().collect(), labels.to_vec())
}

/// A failed condition of genericity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Violation {
    /// An interior reflection pairs to 0 or ±1.
    Interior { t: Reflection, value: i64 },
    /// A boundary reflection does not pair to ±1.
    Boundary { t: Reflection, value: i64 },
    /// Two boundary walls at a corner `w` with `m(s, t) = 3` disagree.
    Corner {
        w: Permutation,
        s: usize,
        t: usize,
        left: i64,
        right: i64,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Interior { t, value } => {
                write!(f, "interior reflection {t} pairs to {value}")
            }
            Violation::Boundary { t, value } => {
                write!(f, "boundary reflection {t} pairs to {value}, expected ±1")
            }
            Violation::Corner {
                w,
                s,
                t,
                left,
                right,
            } => write!(
                f,
                "at {w} the walls of s_{s} and s_{t} pair to {left} and {right}"
            ),
        }
    }
}

/// Every violated genericity condition of `f` on `cell`, in a fixed order.
pub fn genericity_violations(f: &Functional, cell: &Cell) -> Vec<Violation> {
    let mut out = Vec::new();
    for t in cell.interior() {
        let value = f.pair(t);
        if value.abs() <= 1 {
            out.push(Violation::Interior { t: *t, value });
        }
    }
    for t in cell.boundary() {
        let value = f.pair(t);
        if value.abs() != 1 {
            out.push(Violation::Boundary { t: *t, value });
        }
    }
    for w in cell.members() {
        for &s in cell.labels() {
            for &t in cell.labels() {
                if t != s + 1 {
                    continue;
                }
                if cell.contains(&w.mul_simple(s)) || cell.contains(&w.mul_simple(t)) {
                    continue;
                }
                let left = f.pair(&w.conjugate_simple(s));
                let right = f.pair(&w.conjugate_simple(t));
                if left != right {
                    out.push(Violation::Corner {
                        w: w.clone(),
                        s,
                        t,
                        left,
                        right,
                    });
                }
            }
        }
    }
    out
}

/// Genericity of `f` for a convex cell containing the identity.
pub fn is_generic(f: &Functional, cell: &Cell) -> Result<bool> {
    if !cell.contains_identity() {
        return Err(Error::Precondition("the cell does not contain the identity".into()));
    }
    if !cell.is_convex() {
        return Err(Error::Precondition("the cell is not convex".into()));
    }
    Ok(genericity_violations(f, cell).is_empty())
}

/// Like [`genericity_violations`] but as an error.
pub fn check_generic(f: &Functional, cell: &Cell) -> Result<()> {
    let v = genericity_violations(f, cell);
    if v.is_empty() {
        Ok(())
    } else {
        Err(Error::NotGeneric(v))
    }
}

/// Every zero pairing `(i, j)` has indices strictly between realizing both
/// `+1` and `−1` against `i`.
pub fn is_generic_integer(f: &Functional) -> bool {
    is_content_vector(f.coords())
}

/// `π ↦ Q^{π⁻¹}` on the identity cell of `f`, whose derived vector must
/// match that of `cont(Q)`.
pub fn cell_tableau_bijection(f: &Functional, q: &Tableau) -> Result<Vec<(Permutation, Tableau)>> {
    let c = q.content_vector()?;
    if f.n() != c.len() {
        return Err(Error::SizeMismatch(format!(
            "functional has {} coordinates, tableau has {} boxes",
            f.n(),
            c.len()
        )));
    }
    if f.n() >= 2 && derived(f.coords())? != derived(&c)? {
        return Err(Error::Domain(format!(
            "derived vectors of {f} and the contents of the tableau differ"
        )));
    }
    if !is_generic_integer(f) {
        return Err(Error::Domain(format!("{f} is not generic for its identity cell")));
    }
    let cell = descent_cell(f, &Permutation::identity(f.n()))?;
    cell.members()
        .iter()
        .map(|pi| Ok((pi.clone(), q.relabel(pi)?)))
        .collect()
}
