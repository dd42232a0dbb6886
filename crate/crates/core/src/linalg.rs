//! Small dense matrices over exact rationals or `f64`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `p/q` as an exact rational.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn rat_int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Always `p/q`, with `q = 1` for integers.
pub fn format_rational(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    let mut it = s.trim().splitn(2, '/');
    let p: BigInt = it.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
    let q: BigInt = match it.next() {
        Some(q) => q.trim().parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

pub trait Scalar:
    Clone + PartialEq + fmt::Debug + Zero + One + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone + PartialEq + fmt::Debug + Zero + One + Add<Output = T> + Sub<Output = T> + Mul<Output = T> + Neg<Output = T>
{
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::SizeMismatch("ragged matrix rows".into()));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    /// Product skipping zero entries of the left factor.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix dimensions do not match");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = std::mem::replace(&mut out.data[i * other.cols + j], T::zero());
                    out.data[i * other.cols + j] = cur + a.clone() * b.clone();
                }
            }
        }
        out
    }

    /// `self · s` for a column-sparse right factor.
    pub fn mul_sparse(&self, s: &SparseColumns<T>) -> Self {
        assert_eq!(self.cols, s.n, "matrix dimensions do not match");
        let mut out = Self::zeros(self.rows, s.n);
        for (j, col) in s.cols.iter().enumerate() {
            for (k, v) in col {
                for i in 0..self.rows {
                    let a = self.get(i, *k);
                    if a.is_zero() {
                        continue;
                    }
                    let cur = std::mem::replace(&mut out.data[i * s.n + j], T::zero());
                    out.data[i * s.n + j] = cur + a.clone() * v.clone();
                }
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Nonzero entries of each column.
    pub fn sparse(&self) -> SparseColumns<T> {
        let cols = (0..self.cols)
            .map(|j| {
                (0..self.rows)
                    .filter(|&i| !self.get(i, j).is_zero())
                    .map(|i| (i, self.get(i, j).clone()))
                    .collect()
            })
            .collect();
        SparseColumns { n: self.rows, cols }
    }

    /// `M^k` by repeated multiplication.
    pub fn pow(&self, k: usize) -> Self {
        let s = self.sparse();
        let mut out = Self::identity(self.rows);
        for _ in 0..k {
            out = out.mul_sparse(&s);
        }
        out
    }
}

impl Matrix<f64> {
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn is_identity_within(&self, tol: f64) -> bool {
        self.rows == self.cols && self.max_abs_diff(&Self::identity(self.rows)) <= tol
    }
}

impl Matrix<Rational> {
    pub fn to_f64(&self) -> Matrix<f64> {
        self.map(to_f64)
    }

    pub fn max_abs_entry(&self) -> Rational {
        self.data.iter().map(|x| x.abs()).max().unwrap_or_else(Rational::zero)
    }
}

/// A square matrix stored by the nonzero entries of its columns.
#[derive(Clone, Debug)]
pub struct SparseColumns<T> {
    n: usize,
    cols: Vec<Vec<(usize, T)>>,
}

impl<T> SparseColumns<T> {
    pub fn column(&self, j: usize) -> &[(usize, T)] {
        &self.cols[j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_formatting() {
        assert_eq!(format_rational(&rat(6, -8)), "-3/4");
        assert_eq!(format_rational(&rat_int(2)), "2/1");
        assert_eq!(parse_rational("-3/4").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational("5").unwrap(), rat_int(5));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a").is_err());
    }

    #[test]
    fn products_and_traces() {
        let a = Matrix::from_rows(vec![vec![rat(-1, 2), rat(3, 4)], vec![rat_int(1), rat(1, 2)]]).unwrap();
        assert!(a.mul(&a).is_identity());
        assert_eq!(a.mul_sparse(&a.sparse()), a.mul(&a));
        assert_eq!(a.trace(), rat_int(0));
        assert_eq!(a.transpose().get(0, 1), &rat_int(1));
        assert!(a.pow(2).is_identity());
        assert!(!a.is_identity());
    }

    #[test]
    fn float_tolerance() {
        let h = 3f64.sqrt() / 2.0;
        let r = Matrix::from_rows(vec![vec![-0.5, h], vec![h, 0.5]]).unwrap();
        assert!(r.mul(&r).is_identity_within(1e-12));
        assert!(Matrix::from_rows(vec![vec![1.0, 0.0], vec![0.0]]).is_err());
    }
}
