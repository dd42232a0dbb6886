use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A skew diagram `λ/μ`. Boxes are `(row, col)` pairs, both 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewShape {
    lambda: Vec<usize>,
    mu: Vec<usize>,
}

fn is_partition(p: &[usize]) -> bool {
    p.windows(2).all(|w| w[0] >= w[1])
}

impl SkewShape {
    /// `mu` is padded with zeros; trailing zero rows of `lambda` are dropped.
    pub fn new(lambda: Vec<usize>, mut mu: Vec<usize>) -> Result<Self> {
        let mut lambda = lambda;
        while lambda.last() == Some(&0) {
            lambda.pop();
        }
        while mu.last() == Some(&0) {
            mu.pop();
        }
        if !is_partition(&lambda) || !is_partition(&mu) {
            return Err(Error::Domain(format!(
                "{lambda:?}/{mu:?}: both parts must be weakly decreasing"
            )));
        }
        if mu.len() > lambda.len() || mu.iter().zip(&lambda).any(|(m, l)| m > l) {
            return Err(Error::Domain(format!("{mu:?} is not contained in {lambda:?}")));
        }
        mu.resize(lambda.len(), 0);
        Ok(Self { lambda, mu })
    }

    pub fn straight(lambda: Vec<usize>) -> Result<Self> {
        Self::new(lambda, Vec::new())
    }

    pub fn lambda(&self) -> &[usize] {
        &self.lambda
    }

    /// `μ`, padded with zeros to the length of `λ`.
    pub fn mu(&self) -> &[usize] {
        &self.mu
    }

    pub fn size(&self) -> usize {
        self.lambda.iter().sum::<usize>() - self.mu.iter().sum::<usize>()
    }

    pub fn is_straight(&self) -> bool {
        self.mu.iter().all(|&m| m == 0)
    }

    /// Boxes in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (r, (&l, &m)) in self.lambda.iter().zip(&self.mu).enumerate() {
            for c in m + 1..=l {
                out.push((r + 1, c));
            }
        }
        out
    }

    pub fn contains(&self, (r, c): (usize, usize)) -> bool {
        r >= 1 && r <= self.lambda.len() && c > self.mu[r - 1] && c <= self.lambda[r - 1]
    }

    /// Builds the unique skew shape with the given boxes, or fails if the
    /// boxes do not form one. Coordinates must be positive.
    pub fn from_cells(cells: &[(usize, usize)]) -> Result<Self> {
        if cells.is_empty() {
            return Self::new(Vec::new(), Vec::new());
        }
        let rows = cells.iter().map(|c| c.0).max().unwrap();
        let mut lambda = vec![0usize; rows];
        let mut lo = vec![usize::MAX; rows];
        let mut count = vec![0usize; rows];
        for &(r, c) in cells {
            if r == 0 || c == 0 {
                return Err(Error::Domain("box coordinates are 1-based".into()));
            }
            lambda[r - 1] = lambda[r - 1].max(c);
            lo[r - 1] = lo[r - 1].min(c);
            count[r - 1] += 1;
        }
        let mut mu = vec![0usize; rows];
        // Empty rows take the smallest admissible value so μ stays a partition.
        for r in (0..rows).rev() {
            if count[r] == 0 {
                let below = if r + 1 < rows { lambda[r + 1] } else { 0 };
                lambda[r] = below;
                mu[r] = below;
            } else {
                if count[r] != lambda[r] + 1 - lo[r] {
                    return Err(Error::Domain(format!("row {} is not contiguous", r + 1)));
                }
                mu[r] = lo[r] - 1;
            }
        }
        let shape = Self::new(lambda, mu)?;
        if shape.size() != cells.len() {
            return Err(Error::Domain("boxes do not form a skew shape".into()));
        }
        Ok(shape)
    }

    /// Canonical shapes: no empty rows, no empty columns and a box in the
    /// first column. Every skew diagram of size `n` is a translate of one of
    /// these up to separating its components further, which does not change
    /// the content differences that matter (they stay at least 2).
    pub fn is_canonical(&self) -> bool {
        if self.size() == 0 {
            return false;
        }
        let cells = self.cells();
        let rows: HashSet<usize> = cells.iter().map(|c| c.0).collect();
        let cols: HashSet<usize> = cells.iter().map(|c| c.1).collect();
        let max_col = *self.lambda.first().unwrap_or(&0);
        rows.len() == self.lambda.len() && (1..=max_col).all(|c| cols.contains(&c))
    }

    /// All canonical skew shapes with `n` boxes, in a deterministic order.
    pub fn all_of_size(n: usize) -> Vec<SkewShape> {
        let mut out = Vec::new();
        if n == 0 {
            return out;
        }
        for lambda in partitions_in_box(n, n) {
            let total: usize = lambda.iter().sum();
            if total < n {
                continue;
            }
            for mu in subpartitions(&lambda, total - n) {
                if let Ok(s) = SkewShape::new(lambda.clone(), mu) {
                    if s.is_canonical() {
                        out.push(s);
                    }
                }
            }
        }
        out.sort();
        out
    }

    pub fn conjugate(&self) -> SkewShape {
        SkewShape::new(conjugate(&self.lambda), conjugate(&self.mu)).expect("conjugate shape")
    }
}

/// Conjugate partition.
pub fn conjugate(p: &[usize]) -> Vec<usize> {
    let first = p.first().copied().unwrap_or(0);
    (1..=first).map(|c| p.iter().filter(|&&x| x >= c).count()).collect()
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions with at most `rows` parts, each at most `cols`.
fn partitions_in_box(rows: usize, cols: usize) -> Vec<Vec<usize>> {
    fn go(rows: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(prefix.clone());
        if rows == 0 {
            return;
        }
        for part in (1..=max).rev() {
            prefix.push(part);
            go(rows - 1, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(rows, cols, &mut Vec::new(), &mut out);
    out
}

/// Partitions `μ ⊆ λ` with `|μ| = size`.
fn subpartitions(lambda: &[usize], size: usize) -> Vec<Vec<usize>> {
    fn go(lambda: &[usize], row: usize, left: usize, prev: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if row == lambda.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let hi = lambda[row].min(prev).min(left);
        for m in (0..=hi).rev() {
            cur.push(m);
            go(lambda, row + 1, left - m, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda, 0, size, usize::MAX, &mut Vec::new(), &mut out);
    out
}

/// Number of standard Young tableaux of straight shape `λ` by the hook
/// length formula.
pub fn hook_length_count(lambda: &[usize]) -> u128 {
    let n: usize = lambda.iter().sum();
    let conj = conjugate(lambda);
    let mut num: u128 = (1..=n as u128).product();
    let mut hooks: u128 = 1;
    for (r, &len) in lambda.iter().enumerate() {
        for (c, &height) in conj.iter().enumerate().take(len) {
            hooks *= (len - c + height - r - 1) as u128;
        }
    }
    num /= hooks;
    num
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |p: &[usize]| {
            p.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        let mu: Vec<usize> = self.mu.iter().copied().filter(|&m| m > 0).collect();
        if mu.is_empty() {
            write!(f, "({})", join(&self.lambda))
        } else {
            write!(f, "({})/({})", join(&self.lambda), join(&mu))
        }
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `3,2` or `3,3,1/3,1` (parentheses optional).
impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse = |part: &str| -> Result<Vec<usize>> {
            let part = part.trim().trim_start_matches('(').trim_end_matches(')');
            if part.is_empty() {
                return Ok(Vec::new());
            }
            part.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad part {x:?} in shape {s:?}")))
                })
                .collect()
        };
        let mut it = s.splitn(2, '/');
        let lambda = parse(it.next().unwrap_or(""))?;
        let mu = match it.next() {
            Some(m) => parse(m)?,
            None => Vec::new(),
        };
        SkewShape::new(lambda, mu)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let s: SkewShape = "3,3,1/3,1".parse().unwrap();
        assert_eq!(s.size(), 3);
        assert_eq!(s.to_string(), "(3,3,1)/(3,1)");
        assert_eq!("(2,1)".parse::<SkewShape>().unwrap().to_string(), "(2,1)");
        assert!("2,3".parse::<SkewShape>().is_err());
        assert!("2/3".parse::<SkewShape>().is_err());
    }

    #[test]
    fn from_cells_round_trips() {
        for s in SkewShape::all_of_size(4) {
            assert_eq!(SkewShape::from_cells(&s.cells()).unwrap(), s);
        }
        assert!(SkewShape::from_cells(&[(1, 1), (1, 3)]).is_err());
        // columns out of order are not a skew shape
        assert!(SkewShape::from_cells(&[(1, 1), (2, 2)]).is_err());
    }

    #[test]
    fn hook_lengths() {
        assert_eq!(hook_length_count(&[2, 1]), 2);
        assert_eq!(hook_length_count(&[3, 2]), 5);
        assert_eq!(hook_length_count(&[3, 2, 1]), 16);
        for n in 1..=7 {
            let total: u128 = partitions(n)
                .iter()
                .map(|p| hook_length_count(p).pow(2))
                .sum();
            assert_eq!(total, (1..=n as u128).product());
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn canonical_shapes_small() {
        // size 1: a box; size 2: row, column, two corner-touching boxes
        assert_eq!(SkewShape::all_of_size(1).len(), 1);
        assert_eq!(SkewShape::all_of_size(2).len(), 3);
        for s in SkewShape::all_of_size(5) {
            assert_eq!(s.size(), 5);
            assert!(s.is_canonical());
        }
    }
}
