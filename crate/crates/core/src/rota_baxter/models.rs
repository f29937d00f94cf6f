use super::free::{self, RbExpr};
use super::RotaBaxter;
use crate::algebra_core::matrix::Matrix;
use crate::algebra_core::poly::{Laurent, Poly};
use crate::algebra_core::scalar::{Rational, Ring};
use crate::error::{Error, Result};

/// The free algebra with formal weight `th`; it has no unit.
#[derive(Clone, Copy, Debug, Default)]
pub struct FreeRb;

impl RotaBaxter for FreeRb {
    type Elem = RbExpr;

    fn name(&self) -> String {
        "free".into()
    }
    fn weight(&self) -> Option<Rational> {
        None
    }
    fn check(&self, x: &RbExpr) -> Result<()> {
        if x.keys().all(|w| w.is_reduced()) {
            Ok(())
        } else {
            Err(Error::Precondition("expression is not in normal form".into()))
        }
    }
    fn zero(&self) -> RbExpr {
        RbExpr::zero()
    }
    fn unit(&self) -> Option<RbExpr> {
        None
    }
    fn add(&self, x: &RbExpr, y: &RbExpr) -> RbExpr {
        x.add(y)
    }
    fn neg(&self, x: &RbExpr) -> RbExpr {
        x.neg()
    }
    fn sub(&self, x: &RbExpr, y: &RbExpr) -> RbExpr {
        x.sub(y)
    }
    fn mul(&self, x: &RbExpr, y: &RbExpr) -> RbExpr {
        free::mul(x, y)
    }
    fn scale(&self, x: &RbExpr, c: &Rational) -> RbExpr {
        x.scale(c)
    }
    fn weight_mul(&self, x: &RbExpr) -> RbExpr {
        free::theta_times(x)
    }
    fn r(&self, x: &RbExpr) -> RbExpr {
        free::apply_r(x)
    }
    fn is_zero(&self, x: &RbExpr) -> bool {
        x.is_zero()
    }
}

fn check_dim<T: Ring>(m: &Matrix<T>, dim: usize) -> Result<()> {
    if m.dim() == dim {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected: dim, found: m.dim() })
    }
}

/// `d×d` matrices over `Q[t]` with `R = ∫_0^t`, weight 0.
#[derive(Clone, Copy, Debug)]
pub struct MatrixPoly {
    pub dim: usize,
}

impl MatrixPoly {
    pub fn new(dim: usize) -> Self {
        MatrixPoly { dim }
    }
}

impl RotaBaxter for MatrixPoly {
    type Elem = Matrix<Poly>;

    fn name(&self) -> String {
        format!("matrix-poly(d={})", self.dim)
    }
    fn weight(&self) -> Option<Rational> {
        Some(Rational::ZERO)
    }
    fn check(&self, x: &Matrix<Poly>) -> Result<()> {
        check_dim(x, self.dim)
    }
    fn zero(&self) -> Matrix<Poly> {
        Matrix::zero(self.dim)
    }
    fn unit(&self) -> Option<Matrix<Poly>> {
        Some(Matrix::identity(self.dim))
    }
    fn add(&self, x: &Matrix<Poly>, y: &Matrix<Poly>) -> Matrix<Poly> {
        x.add(y)
    }
    fn neg(&self, x: &Matrix<Poly>) -> Matrix<Poly> {
        x.neg()
    }
    fn sub(&self, x: &Matrix<Poly>, y: &Matrix<Poly>) -> Matrix<Poly> {
        x.sub(y)
    }
    fn mul(&self, x: &Matrix<Poly>, y: &Matrix<Poly>) -> Matrix<Poly> {
        x.mul(y)
    }
    fn scale(&self, x: &Matrix<Poly>, c: &Rational) -> Matrix<Poly> {
        x.scale(c)
    }
    fn weight_mul(&self, _: &Matrix<Poly>) -> Matrix<Poly> {
        Matrix::zero(self.dim)
    }
    fn r(&self, x: &Matrix<Poly>) -> Matrix<Poly> {
        x.integrate()
    }
    fn is_zero(&self, x: &Matrix<Poly>) -> bool {
        x.is_zero()
    }
}

/// Sequences `f(0), …, f(L−1)` of `d×d` rational matrices with
/// `R(f)(n) = θ Σ_{k<n} f(k)`, weight `θ`.
#[derive(Clone, Debug)]
pub struct MatrixSeq {
    pub dim: usize,
    pub len: usize,
    pub theta: Rational,
}

impl MatrixSeq {
    pub fn new(dim: usize, len: usize, theta: Rational) -> Self {
        MatrixSeq { dim, len, theta }
    }

    /// `1×1` sequence from scalars.
    pub fn from_scalars(&self, xs: &[Rational]) -> Vec<Matrix<Rational>> {
        xs.iter().map(|x| Matrix::from_fn(1, |_, _| x.clone())).collect()
    }

    fn zip(
        &self,
        x: &[Matrix<Rational>],
        y: &[Matrix<Rational>],
        f: impl Fn(&Matrix<Rational>, &Matrix<Rational>) -> Matrix<Rational>,
    ) -> Vec<Matrix<Rational>> {
        x.iter().zip(y).map(|(a, b)| f(a, b)).collect()
    }
}

impl RotaBaxter for MatrixSeq {
    type Elem = Vec<Matrix<Rational>>;

    fn name(&self) -> String {
        format!("matrix-seq(d={}, L={}, theta={})", self.dim, self.len, self.theta)
    }
    fn weight(&self) -> Option<Rational> {
        Some(self.theta.clone())
    }
    fn check(&self, x: &Self::Elem) -> Result<()> {
        if x.len() != self.len {
            return Err(Error::DimensionMismatch { expected: self.len, found: x.len() });
        }
        x.iter().try_for_each(|m| check_dim(m, self.dim))
    }
    fn zero(&self) -> Self::Elem {
        vec![Matrix::zero(self.dim); self.len]
    }
    fn unit(&self) -> Option<Self::Elem> {
        Some(vec![Matrix::identity(self.dim); self.len])
    }
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.zip(x, y, Matrix::add)
    }
    fn neg(&self, x: &Self::Elem) -> Self::Elem {
        x.iter().map(Matrix::neg).collect()
    }
    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.zip(x, y, Matrix::sub)
    }
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.zip(x, y, Matrix::mul)
    }
    fn scale(&self, x: &Self::Elem, c: &Rational) -> Self::Elem {
        x.iter().map(|m| m.scale(c)).collect()
    }
    fn weight_mul(&self, x: &Self::Elem) -> Self::Elem {
        self.scale(x, &self.theta)
    }
    fn r(&self, x: &Self::Elem) -> Self::Elem {
        let mut acc = Matrix::zero(self.dim);
        let mut out = Vec::with_capacity(x.len());
        for m in x {
            out.push(acc.scale(&self.theta));
            acc = acc.add(m);
        }
        out
    }
    fn is_zero(&self, x: &Self::Elem) -> bool {
        x.iter().all(Matrix::is_zero)
    }
}

/// `d×d` matrices of Laurent polynomials in `z`; `R` keeps the strictly
/// negative powers entrywise, weight −1.
#[derive(Clone, Copy, Debug)]
pub struct LaurentPole {
    pub dim: usize,
}

impl LaurentPole {
    pub fn new(dim: usize) -> Self {
        LaurentPole { dim }
    }
}

impl RotaBaxter for LaurentPole {
    type Elem = Matrix<Laurent>;

    fn name(&self) -> String {
        format!("laurent-pole(d={})", self.dim)
    }
    fn weight(&self) -> Option<Rational> {
        Some(Rational::NEG_ONE)
    }
    fn check(&self, x: &Matrix<Laurent>) -> Result<()> {
        check_dim(x, self.dim)
    }
    fn zero(&self) -> Matrix<Laurent> {
        Matrix::zero(self.dim)
    }
    fn unit(&self) -> Option<Matrix<Laurent>> {
        Some(Matrix::identity(self.dim))
    }
    fn add(&self, x: &Matrix<Laurent>, y: &Matrix<Laurent>) -> Matrix<Laurent> {
        x.add(y)
    }
    fn neg(&self, x: &Matrix<Laurent>) -> Matrix<Laurent> {
        x.neg()
    }
    fn sub(&self, x: &Matrix<Laurent>, y: &Matrix<Laurent>) -> Matrix<Laurent> {
        x.sub(y)
    }
    fn mul(&self, x: &Matrix<Laurent>, y: &Matrix<Laurent>) -> Matrix<Laurent> {
        x.mul(y)
    }
    fn scale(&self, x: &Matrix<Laurent>, c: &Rational) -> Matrix<Laurent> {
        x.scale(c)
    }
    fn weight_mul(&self, x: &Matrix<Laurent>) -> Matrix<Laurent> {
        x.neg()
    }
    fn r(&self, x: &Matrix<Laurent>) -> Matrix<Laurent> {
        x.map(Laurent::pole_part)
    }
    fn is_zero(&self, x: &Matrix<Laurent>) -> bool {
        x.is_zero()
    }
}

/// Same algebra as `M` with `R̃ = −θ·id − R`, again of weight `θ`.
#[derive(Clone, Debug)]
pub struct Tilde<M>(pub M);

impl<M: RotaBaxter> RotaBaxter for Tilde<M> {
    type Elem = M::Elem;

    fn name(&self) -> String {
        format!("tilde({})", self.0.name())
    }
    fn weight(&self) -> Option<Rational> {
        self.0.weight()
    }
    fn check(&self, x: &M::Elem) -> Result<()> {
        self.0.check(x)
    }
    fn zero(&self) -> M::Elem {
        self.0.zero()
    }
    fn unit(&self) -> Option<M::Elem> {
        self.0.unit()
    }
    fn add(&self, x: &M::Elem, y: &M::Elem) -> M::Elem {
        self.0.add(x, y)
    }
    fn neg(&self, x: &M::Elem) -> M::Elem {
        self.0.neg(x)
    }
    fn sub(&self, x: &M::Elem, y: &M::Elem) -> M::Elem {
        self.0.sub(x, y)
    }
    fn mul(&self, x: &M::Elem, y: &M::Elem) -> M::Elem {
        self.0.mul(x, y)
    }
    fn scale(&self, x: &M::Elem, c: &Rational) -> M::Elem {
        self.0.scale(x, c)
    }
    fn weight_mul(&self, x: &M::Elem) -> M::Elem {
        self.0.weight_mul(x)
    }
    fn r(&self, x: &M::Elem) -> M::Elem {
        self.0.neg(&self.0.add(&self.0.weight_mul(x), &self.0.r(x)))
    }
    fn is_zero(&self, x: &M::Elem) -> bool {
        self.0.is_zero(x)
    }
}
