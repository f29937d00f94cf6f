use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::algebra_core::scalar::Rational;
use crate::error::{Error, Result};
use crate::rota_baxter::free::letter;
use crate::rota_baxter::{sample, FreeRb, LaurentPole, MatrixPoly, MatrixSeq, RotaBaxter};

/// Where a check is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelKind {
    /// Trees and forests under grafting and the Grossman–Larson product.
    Tree,
    Free,
    MatrixPoly,
    MatrixSeq,
    LaurentPole,
}

impl ModelKind {
    pub const ALL: [ModelKind; 5] =
        [ModelKind::Tree, ModelKind::Free, ModelKind::MatrixPoly, ModelKind::MatrixSeq, ModelKind::LaurentPole];

    pub fn name(self) -> &'static str {
        match self {
            ModelKind::Tree => "tree",
            ModelKind::Free => "free",
            ModelKind::MatrixPoly => "matrix-poly",
            ModelKind::MatrixSeq => "matrix-seq",
            ModelKind::LaurentPole => "laurent-pole",
        }
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ModelKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ModelKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::OutOfRange(format!("unknown model `{s}`")))
    }
}

/// A model that can produce the `i`-th generic input of a check.
pub(crate) trait Sampled: RotaBaxter {
    fn sample<R: Rng>(&self, rng: &mut R, i: usize) -> Self::Elem;
}

impl Sampled for FreeRb {
    fn sample<R: Rng>(&self, _: &mut R, i: usize) -> Self::Elem {
        letter(&format!("b{}", i + 1))
    }
}

impl Sampled for MatrixPoly {
    fn sample<R: Rng>(&self, rng: &mut R, _: usize) -> Self::Elem {
        sample::matrix_poly(rng, self, 1)
    }
}

impl Sampled for MatrixSeq {
    fn sample<R: Rng>(&self, rng: &mut R, _: usize) -> Self::Elem {
        sample::matrix_seq(rng, self)
    }
}

impl Sampled for LaurentPole {
    fn sample<R: Rng>(&self, rng: &mut R, _: usize) -> Self::Elem {
        sample::laurent_matrix(rng, self, 1)
    }
}

/// Matrix models use 2×2 matrices; sequences are long enough that
/// `n`-fold iterated sums do not vanish identically.
pub(crate) fn matrix_poly() -> MatrixPoly {
    MatrixPoly::new(2)
}

pub(crate) fn matrix_seq(n: usize, theta: &Rational) -> MatrixSeq {
    MatrixSeq::new(2, n + 2, theta.clone())
}

pub(crate) fn laurent() -> LaurentPole {
    LaurentPole::new(2)
}

/// Runs a generic function in the model named by `$kind`; the tree model
/// is rejected.
macro_rules! in_model {
    ($kind:expr, $n:expr, $theta:expr, $f:ident ( $($arg:expr),* )) => {
        match $kind {
            ModelKind::Free => $f(&crate::rota_baxter::FreeRb, $($arg),*),
            ModelKind::MatrixPoly => $f(&models::matrix_poly(), $($arg),*),
            ModelKind::MatrixSeq => $f(&models::matrix_seq($n, $theta), $($arg),*),
            ModelKind::LaurentPole => $f(&models::laurent(), $($arg),*),
            ModelKind::Tree => Err(Error::OutOfRange("this form needs a Rota-Baxter model".into())),
        }
    };
}

pub(crate) use in_model;
