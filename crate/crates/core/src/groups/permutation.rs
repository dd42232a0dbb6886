use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `{1..n}` in one-line notation: `images[i - 1] = π(i)`.
///
/// Composition is function composition, `(π∘σ)(i) = π(σ(i))`. Right
/// multiplication by `s_i` swaps positions `i, i+1`; left multiplication by a
/// transposition `(a, b)` swaps the values `a, b`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || seen[x] {
                return Err(Error::Domain(format!(
                    "{images:?} is not a permutation of 1..{n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Self { images })
    }

    /// The simple reflection `s_i = (i, i+1)` in `S_n`.
    pub fn simple(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "s_{i} is not a generator of S_{n}");
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        p
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `π(i)` for `1 <= i <= n`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &x)| x == k + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (k, &x) in self.images.iter().enumerate() {
            inv[x - 1] = k + 1;
        }
        Self { images: inv }
    }

    /// Positions of values: `result[v - 1] = π⁻¹(v)`.
    pub fn positions(&self) -> Vec<usize> {
        self.inverse().images
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n(), "composing permutations of different degree");
        Self {
            images: other.images.iter().map(|&x| self.images[x - 1]).collect(),
        }
    }

    /// `self · s_i`.
    pub fn mul_simple(&self, i: usize) -> Self {
        let mut p = self.clone();
        p.images.swap(i - 1, i);
        p
    }

    /// `s_i · self`.
    pub fn simple_mul(&self, i: usize) -> Self {
        let images = self
            .images
            .iter()
            .map(|&x| {
                if x == i {
                    i + 1
                } else if x == i + 1 {
                    i
                } else {
                    x
                }
            })
            .collect();
        Self { images }
    }

    /// Coxeter length, the number of inversions of the one-line word.
    pub fn length(&self) -> usize {
        let w = &self.images;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Right descent `s_i`: `ℓ(w s_i) < ℓ(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// Left descent `s_i`: `ℓ(s_i w) < ℓ(w)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let pos = self.positions();
        pos[i - 1] > pos[i]
    }

    /// Lexicographically least reduced word, as generator labels `1..n-1`.
    /// `w = s_{a_1} s_{a_2} ⋯ s_{a_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut w = self.clone();
        'outer: loop {
            for i in 1..w.n() {
                if w.has_left_descent(i) {
                    word.push(i);
                    w = w.simple_mul(i);
                    continue 'outer;
                }
            }
            break;
        }
        word
    }

    /// Sort key realizing breadth-first order from the identity with
    /// generators tried in increasing order.
    pub fn order_key(&self) -> (usize, Vec<usize>) {
        let word = self.reduced_word();
        (word.len(), word)
    }

    /// Cycle type as a weakly decreasing partition of `n`.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut parts = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x);
                len += 1;
            }
            parts.push(len);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }

    pub fn sign(&self) -> i64 {
        if self.length().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Conjugate `w s_i w⁻¹`, which is the transposition `(w(i), w(i+1))`.
    pub fn conjugate_simple(&self, i: usize) -> Reflection {
        Reflection::new(self.apply(i), self.apply(i + 1))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let images = parse_list::<usize>(s)?;
        Self::from_images(images)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::from_images(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

pub(crate) fn parse_list<T: FromStr>(s: &str) -> Result<Vec<T>> {
    let s = s.trim().trim_start_matches('[').trim_end_matches(']');
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<T>()
                .map_err(|_| Error::Parse(format!("bad list entry {tok:?}")))
        })
        .collect()
}

/// A transposition `(i, j)` with `i < j`, the reflections of type `A`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Reflection {
    i: usize,
    j: usize,
}

impl Reflection {
    /// Builds `(a, b)` from two distinct letters in either order.
    pub fn new(a: usize, b: usize) -> Self {
        assert!(a != b && a >= 1 && b >= 1, "({a},{b}) is not a transposition");
        Self {
            i: a.min(b),
            j: a.max(b),
        }
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn is_simple(&self) -> bool {
        self.j == self.i + 1
    }

    pub fn to_permutation(&self, n: usize) -> Permutation {
        let mut p = Permutation::identity(n);
        p.images.swap(self.i - 1, self.j - 1);
        p
    }

    /// All `n(n-1)/2` transpositions of `S_n`.
    pub fn all(n: usize) -> Vec<Reflection> {
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                out.push(Reflection { i, j });
            }
        }
        out
    }
}

impl fmt::Display for Reflection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

impl fmt::Debug for Reflection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn length_examples() {
        assert_eq!(Permutation::identity(5).length(), 0);
        assert_eq!(p("3,2,1,5,4").length(), 4);
        assert_eq!(p("1,4,2,5,3").length(), 3);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!("1,1,2".parse::<Permutation>().is_err());
        assert!("0,1".parse::<Permutation>().is_err());
        assert!("1,x".parse::<Permutation>().is_err());
    }

    #[test]
    fn multiplication_conventions() {
        let w = p("3,1,2");
        // right multiplication swaps positions
        assert_eq!(w.mul_simple(1), p("1,3,2"));
        assert_eq!(w.mul_simple(1), w.compose(&Permutation::simple(3, 1)));
        // left multiplication swaps values
        assert_eq!(w.simple_mul(1), p("3,2,1"));
        assert_eq!(w.simple_mul(1), Permutation::simple(3, 1).compose(&w));
    }

    #[test]
    fn reduced_word_reconstructs_element() {
        for w in [p("1,4,2,5,3"), p("3,2,1,5,4"), p("4,3,2,1")] {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            let mut x = Permutation::identity(w.n());
            for &i in &word {
                x = x.mul_simple(i);
            }
            assert_eq!(x, w);
        }
        assert_eq!(p("1,4,2,5,3").reduced_word(), vec![3, 2, 4]);
    }

    #[test]
    fn conjugate_of_simple_is_transposition() {
        let w = p("2,3,1");
        let t = w.conjugate_simple(2);
        assert_eq!(t, Reflection::new(1, 3));
        let s = Permutation::simple(3, 2);
        assert_eq!(t.to_permutation(3), w.compose(&s).compose(&w.inverse()));
    }

    #[test]
    fn cycle_type_and_display() {
        assert_eq!(p("2,1,4,5,3").cycle_type(), vec![3, 2]);
        assert_eq!(p("3,2,1,5,4").to_string(), "3,2,1,5,4");
        assert_eq!(format!("{:?}", Reflection::new(3, 1)), "(1,3)");
    }
}
