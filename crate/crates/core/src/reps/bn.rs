use std::collections::HashMap;

use itertools::Itertools;
use num_traits::One;

use super::{BasisLabel, Matrices, Normalization, Representation};
use crate::cells::standard_relabelings;
use crate::error::{Error, Result};
use crate::groups::{self, GroupType, Permutation};
use crate::linalg::{rat, rat_int, to_f64, Matrix, Rational};
use crate::tableaux::{enumerate_standard, SkewShape, Tableau};

fn size_of(t: Option<&Tableau>) -> usize {
    t.map_or(0, Tableau::size)
}

/// `B_P · B_Q · Ω`: the shuffles of a relabelling of `P` (letters `1..k`)
/// with a relabelling of `Q` (letters `k+1..n`, given as a tableau on
/// `1..n−k`), where `Ω` holds the minimal coset representatives of
/// `S_k × S_{n−k}`.
pub fn shuffle_cell(p: Option<&Tableau>, q: Option<&Tableau>) -> Result<Vec<Permutation>> {
    let k = size_of(p);
    let n = k + size_of(q);
    if n == 0 {
        return Err(Error::EmptyShape);
    }
    let part = |t: Option<&Tableau>, len: usize| -> Result<Vec<Vec<usize>>> {
        match t {
            Some(t) => Ok(standard_relabelings(t)?
                .into_iter()
                .map(|w| w.images().to_vec())
                .collect()),
            None => Ok(vec![(1..=len).collect()]),
        }
    };
    let left = part(p, k)?;
    let right = part(q, n - k)?;
    let labels: Vec<usize> = (1..n).filter(|&s| s != k).collect();
    let omega = groups::minimal_coset_reps(n, &labels)?;
    let mut out = Vec::with_capacity(left.len() * right.len() * omega.len());
    for a in &left {
        for b in &right {
            let images = a.iter().copied().chain(b.iter().map(|x| x + k)).collect();
            let m = Permutation::from_images(images)?;
            out.extend(omega.iter().map(|r| m.compose(r)));
        }
    }
    Ok(groups::sort_elements(out))
}

fn rows_of(t: &Tableau) -> Vec<Vec<usize>> {
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); t.shape().lambda().len()];
    for (r, c) in t.shape().cells() {
        rows[r - 1].push(t.entry((r, c)).expect("box of the shape"));
    }
    rows
}

/// The pair of tableaux indexing `C_τ`: the letter in each box is replaced
/// by its preimage under `τ`.
pub fn bn_pair_label(p: Option<&Tableau>, q: Option<&Tableau>, tau: &Permutation) -> BasisLabel {
    let k = size_of(p);
    let inv = tau.inverse();
    let relabel = |t: Option<&Tableau>, shift: usize| -> Vec<Vec<usize>> {
        t.map(|t| {
            rows_of(t)
                .into_iter()
                .map(|row| row.into_iter().map(|v| inv.apply(v + shift)).collect())
                .collect()
        })
        .unwrap_or_default()
    };
    BasisLabel::Pair {
        left: relabel(p, 0),
        right: relabel(q, k),
    }
}

/// Per-generator coefficients: `(label, column, [(row, exact, float)])`.
type Column = Vec<(usize, Rational, f64)>;

fn assemble(
    n: usize,
    basis: Vec<BasisLabel>,
    columns: Vec<Vec<Column>>,
    norm: Normalization,
) -> Representation {
    let d = basis.len();
    let matrices = match norm {
        Normalization::Seminormal => Matrices::Exact(
            columns
                .iter()
                .map(|cols| {
                    let mut m = Matrix::zeros(d, d);
                    for (c, col) in cols.iter().enumerate() {
                        for (r, x, _) in col {
                            m.set(*r, c, x.clone());
                        }
                    }
                    m
                })
                .collect(),
        ),
        Normalization::Orthogonal => Matrices::Float(
            columns
                .iter()
                .map(|cols| {
                    let mut m = Matrix::zeros(d, d);
                    for (c, col) in cols.iter().enumerate() {
                        for (r, _, x) in col {
                            m.set(*r, c, *x);
                        }
                    }
                    m
                })
                .collect(),
        ),
    };
    Representation {
        group: GroupType::B,
        n,
        generators: GroupType::B.labels(n),
        basis,
        matrices,
    }
}

/// Column of `ρ(s_i)` for a step inside one tableau: `a = 1/h` on the
/// diagonal and the partner, when present, with `1` going up and `1 − a²`
/// going down (`√(1 − a²)` for the orthogonal form).
fn young_column(c: usize, h: i64, partner: Option<usize>, up: bool) -> Result<Column> {
    if h == 0 {
        return Err(Error::Domain("letters on a common diagonal".into()));
    }
    let a = rat(1, h);
    let af = to_f64(&a);
    let mut col = vec![(c, a.clone(), af)];
    if let Some(r) = partner {
        let b = if up { Rational::one() } else { Rational::one() - a.clone() * a };
        col.push((r, b, (1.0 - af * af).sqrt()));
    } else if h.abs() != 1 {
        return Err(Error::Domain("step leaves the cell away from a wall".into()));
    }
    Ok(col)
}

/// The representation of `B_n` on `{C_τ : τ ∈ B_P · B_Q · Ω}`.
///
/// `s_0` acts by `+1` when `τ(1)` is a letter of `P` and by `−1` otherwise.
/// `s_i` swaps `C_τ` and `C_{τs_i}` when `τ(i)` and `τ(i+1)` lie in
/// different tableaux, and acts by the Young coefficients of the contents
/// of `τ(i)`, `τ(i+1)` otherwise.
pub fn extend_to_bn(p: Option<&Tableau>, q: Option<&Tableau>, norm: Normalization) -> Result<Representation> {
    let k = size_of(p);
    let n = k + size_of(q);
    groups::Caps::from_env().check(GroupType::B, n)?;
    let cell = shuffle_cell(p, q)?;
    let index: HashMap<&Permutation, usize> = cell.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut content = vec![0i64; n + 1];
    if let Some(p) = p {
        for (v, c) in p.content_vector()?.into_iter().enumerate() {
            content[v + 1] = c;
        }
    }
    if let Some(q) = q {
        for (v, c) in q.content_vector()?.into_iter().enumerate() {
            content[k + v + 1] = c;
        }
    }
    let mut columns = Vec::with_capacity(n);
    columns.push(
        cell.iter()
            .enumerate()
            .map(|(c, tau)| {
                let x = if tau.apply(1) <= k { 1 } else { -1 };
                vec![(c, rat_int(x), x as f64)]
            })
            .collect(),
    );
    for i in 1..n {
        let mut cols = Vec::with_capacity(cell.len());
        for (c, tau) in cell.iter().enumerate() {
            let (x, y) = (tau.apply(i), tau.apply(i + 1));
            let partner = index.get(&tau.mul_simple(i)).copied();
            if (x <= k) != (y <= k) {
                let r = partner.expect("shuffles are closed under cross swaps");
                cols.push(vec![(r, Rational::one(), 1.0)]);
            } else {
                cols.push(young_column(c, content[y] - content[x], partner, x < y)?);
            }
        }
        columns.push(cols);
    }
    let basis = cell.into_iter().map(BasisLabel::Perm).collect();
    Ok(assemble(n, basis, columns, norm))
}

/// Where each letter sits: `(right tableau?, row, column)`.
type Placement = Vec<(bool, usize, usize)>;

fn standard_or_empty(parts: &[usize]) -> Result<Vec<Option<Tableau>>> {
    if parts.iter().all(|&x| x == 0) {
        return Ok(vec![None]);
    }
    let shape = SkewShape::straight(parts.to_vec())?;
    Ok(enumerate_standard(&shape)?.into_iter().map(Some).collect())
}

/// The classical model of the irreducible `B_n`-module indexed by `(λ, μ)`:
/// pairs of standard tableaux of shapes `λ` and `μ` on complementary
/// letter sets. `s_0` acts by `+1` when the letter `1` lies in the first
/// tableau; `s_i` swaps `i` and `i+1` when they lie in different tableaux
/// and otherwise acts by the Young coefficient of their axial distance,
/// going up when `i+1` is not strictly north of `i`.
pub fn bn_classical(lambda: &[usize], mu: &[usize], norm: Normalization) -> Result<Representation> {
    let k: usize = lambda.iter().sum();
    let n = k + mu.iter().sum::<usize>();
    if n == 0 {
        return Err(Error::EmptyShape);
    }
    groups::Caps::from_env().check(GroupType::B, n)?;
    let lefts = standard_or_empty(lambda)?;
    let rights = standard_or_empty(mu)?;
    let mut basis = Vec::new();
    let mut places: Vec<Placement> = Vec::new();
    for subset in (1..=n).combinations(k) {
        let complement: Vec<usize> = (1..=n).filter(|x| !subset.contains(x)).collect();
        for t in &lefts {
            for u in &rights {
                let mut place = vec![(false, 0, 0); n + 1];
                let mut rows_for = |t: &Option<Tableau>, letters: &[usize], right: bool| {
                    let Some(t) = t else { return Vec::new() };
                    let mut rows = vec![Vec::new(); t.shape().lambda().len()];
                    for (r, c) in t.shape().cells() {
                        let letter = letters[t.entry((r, c)).expect("box") - 1];
                        place[letter] = (right, r, c);
                        rows[r - 1].push(letter);
                    }
                    rows
                };
                let left = rows_for(t, &subset, false);
                let right = rows_for(u, &complement, true);
                basis.push(BasisLabel::Pair { left, right });
                places.push(place);
            }
        }
    }
    let index: HashMap<BasisLabel, usize> = basis.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
    let swapped = |label: &BasisLabel, i: usize| -> BasisLabel {
        let swap = |rows: &Vec<Vec<usize>>| -> Vec<Vec<usize>> {
            rows.iter()
                .map(|row| {
                    row.iter()
                        .map(|&x| if x == i { i + 1 } else if x == i + 1 { i } else { x })
                        .collect()
                })
                .collect()
        };
        match label {
            BasisLabel::Pair { left, right } => BasisLabel::Pair {
                left: swap(left),
                right: swap(right),
            },
            other => other.clone(),
        }
    };
    let mut columns = Vec::with_capacity(n);
    columns.push(
        places
            .iter()
            .enumerate()
            .map(|(c, place)| {
                let x = if place[1].0 { -1 } else { 1 };
                vec![(c, rat_int(x), x as f64)]
            })
            .collect(),
    );
    for i in 1..n {
        let mut cols = Vec::with_capacity(basis.len());
        for (c, place) in places.iter().enumerate() {
            let (side_a, ra, ca) = place[i];
            let (side_b, rb, cb) = place[i + 1];
            let partner = index.get(&swapped(&basis[c], i)).copied();
            if side_a != side_b {
                cols.push(vec![(partner.expect("cross swap stays standard"), Rational::one(), 1.0)]);
            } else {
                let h = (cb as i64 - rb as i64) - (ca as i64 - ra as i64);
                cols.push(young_column(c, h, partner, rb >= ra)?);
            }
        }
        columns.push(cols);
    }
    Ok(assemble(n, basis, columns, norm))
}
