//! Rota–Baxter algebras: the free one (by rewriting), concrete matrix
//! models, the pre-Lie and double products they carry, iterated
//! operators, and the embedding of the Grossman–Larson algebra.

pub mod free;
mod iota;
mod models;
pub mod rewrite;
pub mod sample;

use std::fmt;

pub use free::{apply_r, parse_rb, Atom, RbExpr, RbWord};
pub use iota::{iota, iota_free};
pub use models::{FreeRb, LaurentPole, MatrixPoly, MatrixSeq, Tilde};
pub use rewrite::{rb_normal_form, rb_normal_form_with, Strategy};

use crate::algebra_core::scalar::Rational;
use crate::combinatorics::Permutation;
use crate::error::{Error, Result};

/// An associative algebra with a weight-`θ` Rota–Baxter operator:
/// `R(x)R(y) = R(R(x)y + xR(y)) + θR(xy)`.
pub trait RotaBaxter {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn name(&self) -> String;
    /// `None` when the weight is a formal parameter.
    fn weight(&self) -> Option<Rational>;
    /// Rejects elements of a different shape than the model's.
    fn check(&self, x: &Self::Elem) -> Result<()>;

    fn zero(&self) -> Self::Elem;
    /// `None` for non-unital algebras.
    fn unit(&self) -> Option<Self::Elem>;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn scale(&self, x: &Self::Elem, c: &Rational) -> Self::Elem;
    /// `θ·x`
    fn weight_mul(&self, x: &Self::Elem) -> Self::Elem;
    fn r(&self, x: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;

    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.add(x, &self.neg(y))
    }
}

fn checked<M: RotaBaxter>(m: &M, xs: &[&M::Elem]) -> Result<()> {
    xs.iter().try_for_each(|x| m.check(x)).map_err(|_| Error::ModelMismatch)
}

/// `a ◁ b = aR(b) − R(b)a + θab`
pub fn right_product<M: RotaBaxter>(m: &M, a: &M::Elem, b: &M::Elem) -> M::Elem {
    let rb = m.r(b);
    let x = m.sub(&m.mul(a, &rb), &m.mul(&rb, a));
    m.add(&x, &m.weight_mul(&m.mul(a, b)))
}

/// `a ▷ b = R(a)b − bR(a) − θba`
pub fn left_product<M: RotaBaxter>(m: &M, a: &M::Elem, b: &M::Elem) -> M::Elem {
    let ra = m.r(a);
    let x = m.sub(&m.mul(&ra, b), &m.mul(b, &ra));
    m.sub(&x, &m.weight_mul(&m.mul(b, a)))
}

/// `a ∗ b = R(a)b + aR(b) + θab`
pub fn star_product<M: RotaBaxter>(m: &M, a: &M::Elem, b: &M::Elem) -> M::Elem {
    let x = m.add(&m.mul(&m.r(a), b), &m.mul(a, &m.r(b)));
    m.add(&x, &m.weight_mul(&m.mul(a, b)))
}

/// Right pre-Lie product `a ◁θ b`.
pub fn pre_lie_right<M: RotaBaxter>(m: &M, a: &M::Elem, b: &M::Elem) -> Result<M::Elem> {
    checked(m, &[a, b])?;
    Ok(right_product(m, a, b))
}

/// Left pre-Lie product `a ▷θ b`.
pub fn pre_lie_left<M: RotaBaxter>(m: &M, a: &M::Elem, b: &M::Elem) -> Result<M::Elem> {
    checked(m, &[a, b])?;
    Ok(left_product(m, a, b))
}

/// Double product `a ∗θ b`, with `R(a ∗θ b) = R(a)R(b)`.
pub fn double_product<M: RotaBaxter>(m: &M, a: &M::Elem, b: &M::Elem) -> Result<M::Elem> {
    checked(m, &[a, b])?;
    Ok(star_product(m, a, b))
}

/// `R(x)R(y) − R(R(x)y + xR(y)) − θR(xy)`, zero exactly when the axiom holds.
pub fn rb_defect<M: RotaBaxter>(m: &M, x: &M::Elem, y: &M::Elem) -> Result<M::Elem> {
    checked(m, &[x, y])?;
    let (rx, ry) = (m.r(x), m.r(y));
    let lhs = m.mul(&rx, &ry);
    let inner = m.add(&m.mul(&rx, y), &m.mul(x, &ry));
    let rhs = m.add(&m.r(&inner), &m.weight_mul(&m.r(&m.mul(x, y))));
    Ok(m.sub(&lhs, &rhs))
}

/// `R^[n]`: `b_1`, then `R(R^[n−1]) · b_n`.
pub fn iterated_r<M: RotaBaxter>(m: &M, bs: &[M::Elem]) -> Result<M::Elem> {
    let (first, rest) = bs.split_first().ok_or(Error::Empty("iterated_r needs arguments"))?;
    checked(m, &bs.iter().collect::<Vec<_>>())?;
    Ok(rest.iter().fold(first.clone(), |acc, b| m.mul(&m.r(&acc), b)))
}

/// `R^[σ]`: [`iterated_r`] on `b_σ(1), …, b_σ(n)`.
pub fn iterated_r_perm<M: RotaBaxter>(m: &M, bs: &[M::Elem], sigma: &Permutation) -> Result<M::Elem> {
    if sigma.len() != bs.len() {
        return Err(Error::DimensionMismatch { expected: bs.len(), found: sigma.len() });
    }
    iterated_r(m, &sigma.permute(bs))
}

/// `Σ_σ R^[σ]` over all permutations.
pub fn symmetrized_iterated_r<M: RotaBaxter>(m: &M, bs: &[M::Elem]) -> Result<M::Elem> {
    let mut out = m.zero();
    for sigma in Permutation::all(bs.len()) {
        out = m.add(&out, &iterated_r_perm(m, bs, &sigma)?);
    }
    Ok(out)
}

/// `b^{▷1} = b`, `b^{▷k} = b^{▷(k−1)} ▷θ b`.
pub fn left_power<M: RotaBaxter>(m: &M, b: &M::Elem, k: usize) -> Result<M::Elem> {
    if k == 0 {
        return Err(Error::OutOfRange("left powers start at 1".into()));
    }
    checked(m, &[b])?;
    Ok((1..k).fold(b.clone(), |acc, _| left_product(m, &acc, b)))
}

/// Left-nested product `((x_1 ∗ x_2) ∗ ···) ∗ x_k`.
pub fn star_fold<M: RotaBaxter>(m: &M, xs: &[M::Elem]) -> Result<M::Elem> {
    let (first, rest) = xs.split_first().ok_or(Error::Empty("star_fold needs factors"))?;
    checked(m, &xs.iter().collect::<Vec<_>>())?;
    Ok(rest.iter().fold(first.clone(), |acc, x| star_product(m, &acc, x)))
}

#[cfg(test)]
mod tests {
    use super::free::letter;
    use super::*;
    use crate::algebra_core::matrix::Matrix;
    use crate::algebra_core::scalar::int;

    fn p(s: &str) -> RbExpr {
        rb_normal_form(&parse_rb(s).unwrap())
    }

    #[test]
    fn products_in_free_model() {
        let m = FreeRb;
        let (a, b) = (letter("a"), letter("b"));
        assert_eq!(pre_lie_right(&m, &a, &b).unwrap(), p("a R(b) - R(b) a + th a b"));
        assert_eq!(pre_lie_left(&m, &a, &b).unwrap(), p("R(a) b - b R(a) - th b a"));
        let sum = m.add(&pre_lie_right(&m, &a, &b).unwrap(), &pre_lie_left(&m, &b, &a).unwrap());
        assert!(sum.is_zero());
        let star = double_product(&m, &a, &b).unwrap();
        assert_eq!(m.r(&star), m.mul(&m.r(&a), &m.r(&b)));
    }

    #[test]
    fn iterated() {
        let m = FreeRb;
        let bs = [letter("b1"), letter("b2")];
        assert_eq!(iterated_r(&m, &bs[..1]).unwrap(), letter("b1"));
        assert_eq!(iterated_r(&m, &bs).unwrap(), p("R(b1) b2"));
        let swap = Permutation::new(vec![2, 1]).unwrap();
        assert_eq!(iterated_r_perm(&m, &bs, &swap).unwrap(), p("R(b2) b1"));
        assert!(iterated_r(&m, &[]).is_err());
    }

    #[test]
    fn weight_zero_left_product_is_commutator() {
        let m = MatrixPoly::new(2);
        let a = Matrix::parse("[[1, t],[0, 2]]").unwrap();
        let b = Matrix::parse("[[t, 0],[1, 1]]").unwrap();
        let ra = m.r(&a);
        assert_eq!(pre_lie_left(&m, &a, &b).unwrap(), ra.mul(&b).sub(&b.mul(&ra)));
    }

    #[test]
    fn scalar_sequences() {
        let m = MatrixSeq::new(1, 4, int(3));
        let a = m.from_scalars(&[int(1), int(2), int(-1), int(5)]);
        let b = m.from_scalars(&[int(2), int(0), int(7), int(1)]);
        let ab = m.mul(&a, &b);
        assert_eq!(pre_lie_left(&m, &a, &b).unwrap(), m.scale(&ab, &int(-3)));
    }

    #[test]
    fn mismatched_shapes() {
        let m = MatrixPoly::new(2);
        let a = Matrix::parse("[[1, t],[0, 2]]").unwrap();
        let b = Matrix::parse("[[1]]").unwrap();
        assert_eq!(pre_lie_left(&m, &a, &b), Err(Error::ModelMismatch));
    }
}
