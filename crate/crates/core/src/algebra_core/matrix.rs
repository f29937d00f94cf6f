//! Square matrices over a [`Ring`], plus the text format
//! `[[1+2t, 0],[t, 3]]` for matrices of polynomials in `t`.

use std::fmt;

use super::poly::Poly;
use super::scalar::{Rational, Ring};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    dim: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn zero(dim: usize) -> Self {
        Matrix { dim, data: vec![T::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Matrix::zero(dim);
        for i in 0..dim {
            m.data[i * dim + i] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: row.len() });
            }
            data.extend(row);
        }
        Ok(Matrix { dim, data })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Matrix { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.dim + j]
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn map<S: Ring>(&self, f: impl FnMut(&T) -> S) -> Matrix<S> {
        Matrix { dim: self.dim, data: self.data.iter().map(f).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    fn assert_same(&self, other: &Self) {
        assert_eq!(self.dim, other.dim, "matrix dimension mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same(other);
        Matrix {
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same(other);
        Matrix {
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(Ring::neg)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|x| x.scale(c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same(other);
        let n = self.dim;
        Matrix::from_fn(n, |i, j| {
            let mut acc = T::zero();
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                let b = &other.data[k * n + j];
                if b.is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(b));
            }
            acc
        })
    }

    /// `[self, other] = self*other - other*self`
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }
}

impl<T: Ring> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.data.chunks(self.dim.max(1)))
            .finish()
    }
}

impl Matrix<Poly> {
    pub fn integrate(&self) -> Self {
        self.map(Poly::integrate)
    }

    pub fn derivative(&self) -> Self {
        self.map(Poly::derivative)
    }

    pub fn eval(&self, t: &Rational) -> Matrix<Rational> {
        self.map(|p| p.eval(t))
    }

    /// Parses `[[1+2t, 0],[t, 3]]`; entries may also be double-quoted.
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        let inner = trimmed
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::syntax(0, "matrix must be enclosed in `[ ]`"))?;
        let mut rows = Vec::new();
        let mut rest = inner.trim();
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('[')
                .ok_or_else(|| Error::syntax(text.len() - rest.len(), "expected `[` starting a row"))?;
            let close = open
                .find(']')
                .ok_or_else(|| Error::syntax(text.len() - open.len(), "unterminated row"))?;
            let row = open[..close]
                .split(',')
                .map(|e| Poly::parse_in(e.trim().trim_matches('"'), "t"))
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
            rest = open[close + 1..].trim_start();
            rest = rest.strip_prefix(',').unwrap_or(rest).trim_start();
        }
        if rows.is_empty() {
            return Err(Error::Empty("matrix has no rows"));
        }
        Matrix::from_rows(rows)
    }
}

impl fmt::Display for Matrix<Poly> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.data.chunks(self.dim.max(1)).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, p) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
