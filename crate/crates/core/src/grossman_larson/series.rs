//! Series graded by vertex count and truncated at a fixed degree.

use std::fmt;

use super::gl_product;
use crate::algebra_core::lincomb::GLVector;
use crate::algebra_core::scalar::{int, Rational};
use crate::error::{Error, Result};

/// Which product powers are taken with.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductMode {
    /// The forest product.
    Commutative,
    /// The Grossman–Larson product.
    Star,
}

impl ProductMode {
    pub fn mul(self, x: &GLVector, y: &GLVector) -> GLVector {
        match self {
            ProductMode::Commutative => x.forest_mul(y),
            ProductMode::Star => gl_product(x, y),
        }
    }
}

/// Components of degree `0..=N`.
#[derive(Clone, PartialEq)]
pub struct GLSeries {
    components: Vec<GLVector>,
}

impl GLSeries {
    pub fn zero(truncation: usize) -> Self {
        GLSeries { components: vec![GLVector::zero(); truncation + 1] }
    }

    pub fn one(truncation: usize) -> Self {
        let mut s = GLSeries::zero(truncation);
        s.components[0] = GLVector::unit();
        s
    }

    /// Splits `v` by degree and discards everything above `truncation`.
    pub fn from_vector(v: &GLVector, truncation: usize) -> Self {
        let mut s = GLSeries::zero(truncation);
        for (f, c) in v {
            if f.degree() <= truncation {
                s.components[f.degree()].add_term(f.clone(), c.clone());
            }
        }
        s
    }

    pub fn truncation(&self) -> usize {
        self.components.len() - 1
    }

    pub fn component(&self, d: usize) -> &GLVector {
        &self.components[d]
    }

    pub fn components(&self) -> &[GLVector] {
        &self.components
    }

    pub fn to_vector(&self) -> GLVector {
        let mut out = GLVector::zero();
        self.components.iter().for_each(|c| out.add_assign(c));
        out
    }

    /// Same series cut at a lower degree.
    pub fn truncate(&self, truncation: usize) -> Self {
        GLSeries { components: self.components[..=truncation.min(self.truncation())].to_vec() }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.truncation(), other.truncation(), "series truncation mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        GLSeries { components: self.components.iter().zip(&other.components).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        GLSeries { components: self.components.iter().zip(&other.components).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        GLSeries { components: self.components.iter().map(|a| a.scale(c)).collect() }
    }

    /// Product in the given mode, truncated. Both products preserve degree.
    pub fn mul(&self, other: &Self, mode: ProductMode) -> Self {
        self.check(other);
        let n = self.truncation();
        let mut out = GLSeries::zero(n);
        for (i, a) in self.components.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.components[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.components[i + j].add_assign(&mode.mul(a, b));
                }
            }
        }
        out
    }

    /// `Σ_{k≥0} coeff(k) · self^k` for a series without constant term.
    fn compose(&self, mode: ProductMode, coeff: impl Fn(usize) -> Rational) -> Self {
        let n = self.truncation();
        let mut out = GLSeries::one(n).scale(&coeff(0));
        let mut power = GLSeries::one(n);
        for k in 1..=n {
            power = power.mul(self, mode);
            out = out.add(&power.scale(&coeff(k)));
        }
        out
    }
}

impl fmt::Debug for GLSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O({})", self.to_vector(), self.truncation() + 1)
    }
}

impl fmt::Display for GLSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_vector())
    }
}

/// `Σ vⁿ/n!` with powers taken in `mode`.
pub fn gl_exp(v: &GLSeries, mode: ProductMode) -> Result<GLSeries> {
    if !v.component(0).is_zero() {
        return Err(Error::Precondition("exp needs a series without degree-0 part".into()));
    }
    let mut fact = vec![int(1)];
    for k in 1..=v.truncation() {
        let next = &fact[k - 1] * int(k as i64);
        fact.push(next);
    }
    Ok(v.compose(mode, |k| int(1) / &fact[k]))
}

/// `log(e + x) = Σ (−1)^{n+1} xⁿ/n` with powers taken in `mode`.
pub fn gl_log(v: &GLSeries, mode: ProductMode) -> Result<GLSeries> {
    if v.component(0) != &GLVector::unit() {
        return Err(Error::Precondition("log needs a series with degree-0 part e".into()));
    }
    let x = v.sub(&GLSeries::one(v.truncation()));
    Ok(x.compose(mode, |k| match k {
        0 => int(0),
        k if k % 2 == 1 => int(1) / int(k as i64),
        k => int(-1) / int(k as i64),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra_core::expr::parse_element;
    use crate::algebra_core::lincomb::LinComb;
    use crate::algebra_core::tree::Alphabet;
    use crate::grossman_larson::coproduct;

    fn v(s: &str) -> GLVector {
        parse_element(s, &Alphabet::open()).unwrap()
    }

    fn series(s: &str, n: usize) -> GLSeries {
        GLSeries::from_vector(&v(s), n)
    }

    #[test]
    fn commutative_exp() {
        let e = gl_exp(&series("a", 2), ProductMode::Commutative).unwrap();
        assert_eq!(e.to_vector(), v("e + a + 1/2*a.a"));
    }

    #[test]
    fn round_trips() {
        for mode in [ProductMode::Commutative, ProductMode::Star] {
            for n in 1..=4 {
                let x = series("a + b[a] - 1/3*a.b", n);
                let back = gl_log(&gl_exp(&x, mode).unwrap(), mode).unwrap();
                assert_eq!(back, x, "{mode:?} N={n}");
            }
        }
        assert_eq!(
            gl_log(&gl_exp(&series("a", 3), ProductMode::Star).unwrap(), ProductMode::Star)
                .unwrap()
                .to_vector(),
            v("a")
        );
    }

    #[test]
    fn mixed_log_degree_two() {
        let e = gl_exp(&series("a", 2), ProductMode::Commutative).unwrap();
        let l = gl_log(&e, ProductMode::Star).unwrap();
        assert_eq!(l.component(2), &v("-1/2*a[a]"));
    }

    #[test]
    fn preconditions() {
        assert!(gl_exp(&series("e + a", 2), ProductMode::Star).is_err());
        assert!(gl_log(&series("a", 2), ProductMode::Star).is_err());
    }

    #[test]
    fn exponential_is_group_like() {
        let n = 4;
        let e = gl_exp(&series("a + b", n), ProductMode::Commutative).unwrap();
        let lhs = coproduct(&e.to_vector());
        let mut rhs = LinComb::zero();
        for i in 0..=n {
            for j in 0..=n - i {
                for (f, c) in e.component(i) {
                    for (g, d) in e.component(j) {
                        rhs.add_term((f.clone(), g.clone()), c * d);
                    }
                }
            }
        }
        assert!(lhs == rhs);
    }
}
