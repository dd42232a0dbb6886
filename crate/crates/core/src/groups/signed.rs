use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::permutation::{parse_list, Permutation};
use crate::error::{Error, Result};

/// An element of the hyperoctahedral group `B_n`: a bijection `w` of
/// `{±1..±n}` with `w(-i) = -w(i)`, stored by its values on `1..n`.
///
/// The generator `s_0` negates the first entry under right multiplication;
/// `s_i` (`i >= 1`) swaps positions `i, i+1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct SignedPermutation {
    images: Vec<i64>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n as i64).collect(),
        }
    }

    pub fn from_images(images: Vec<i64>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::Domain(format!(
                    "{images:?} is not a signed permutation of 1..{n}"
                )));
            }
            seen[a] = true;
        }
        Ok(Self { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[i64] {
        &self.images
    }

    /// `w(i)` for `i ∈ {±1..±n}`.
    pub fn apply(&self, i: i64) -> i64 {
        let v = self.images[i.unsigned_abs() as usize - 1];
        if i < 0 {
            -v
        } else {
            v
        }
    }

    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n());
        Self {
            images: other.images.iter().map(|&x| self.apply(x)).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (k, &x) in self.images.iter().enumerate() {
            let pos = k as i64 + 1;
            inv[x.unsigned_abs() as usize - 1] = if x < 0 { -pos } else { pos };
        }
        Self { images: inv }
    }

    /// `self · s_label`.
    pub fn mul_generator(&self, label: usize) -> Self {
        let mut w = self.clone();
        if label == 0 {
            w.images[0] = -w.images[0];
        } else {
            w.images.swap(label - 1, label);
        }
        w
    }

    /// Coxeter length in `B_n`: `inv + neg + nsp`.
    pub fn length(&self) -> usize {
        let w = &self.images;
        let mut inv = 0;
        let mut nsp = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    inv += 1;
                }
                if w[i] + w[j] < 0 {
                    nsp += 1;
                }
            }
        }
        let neg = w.iter().filter(|&&x| x < 0).count();
        inv + neg + nsp
    }

    pub fn is_unsigned(&self) -> bool {
        self.images.iter().all(|&x| x > 0)
    }

    /// The underlying permutation when no entry is negated.
    pub fn to_permutation(&self) -> Option<Permutation> {
        if !self.is_unsigned() {
            return None;
        }
        Permutation::from_images(self.images.iter().map(|&x| x as usize).collect()).ok()
    }
}

impl From<&Permutation> for SignedPermutation {
    fn from(p: &Permutation) -> Self {
        Self {
            images: p.images().iter().map(|&x| x as i64).collect(),
        }
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_images(parse_list::<i64>(s)?)
    }
}

impl TryFrom<Vec<i64>> for SignedPermutation {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        Self::from_images(v)
    }
}

impl From<SignedPermutation> for Vec<i64> {
    fn from(p: SignedPermutation) -> Self {
        p.images
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_negative_entries() {
        let w: SignedPermutation = "-2,1,3".parse().unwrap();
        assert_eq!(w.to_string(), "-2,1,3");
        assert!("-1,1".parse::<SignedPermutation>().is_err());
    }

    #[test]
    fn generator_action_and_inverse() {
        let w: SignedPermutation = "2,-3,1".parse().unwrap();
        assert_eq!(w.mul_generator(0).to_string(), "-2,-3,1");
        assert_eq!(w.mul_generator(2).to_string(), "2,1,-3");
        assert_eq!(w.compose(&w.inverse()), SignedPermutation::identity(3));
    }

    #[test]
    fn length_of_generators_is_one() {
        let e = SignedPermutation::identity(3);
        for label in 0..3 {
            assert_eq!(e.mul_generator(label).length(), 1);
        }
        // longest element of B_3 is -1 and has length n^2
        let w0: SignedPermutation = "-1,-2,-3".parse().unwrap();
        assert_eq!(w0.length(), 9);
    }
}
