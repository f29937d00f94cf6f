//! Exact rational scalars and the small ring abstraction shared by
//! polynomials, matrices and linear combinations.

use std::fmt;

use dashu_base::{Abs, Signed};
use dashu_int::IBig;

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always kept in lowest terms.
pub type Rational = dashu_ratio::RBig;

/// Commutative-or-not ring over the rationals.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, c: &Rational) -> Self;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational::ZERO
    }
    fn one() -> Self {
        Rational::ONE
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
}

pub fn int(n: i64) -> Rational {
    Rational::from(n)
}

/// `n / d`; panics on a zero denominator, use [`parse_rational`] for input.
pub fn rat(n: i64, d: i64) -> Rational {
    assert!(d != 0, "zero denominator");
    Rational::from_parts_signed(IBig::from(n), IBig::from(d))
}

pub fn factorial(n: usize) -> Rational {
    (1..=n).fold(int(1), |acc, k| acc * int(k as i64))
}

pub fn binomial(n: usize, k: usize) -> Rational {
    if k > n {
        return int(0);
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Parses `p` or `p/q` with optional leading sign.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let bad = |s: &str| Error::syntax(0, format!("invalid integer `{s}`"));
    let n: IBig = num.parse().map_err(|_| bad(num))?;
    match den {
        None => Ok(Rational::from(n)),
        Some(d) => {
            let d: IBig = d.parse().map_err(|_| bad(d))?;
            if d == IBig::ZERO {
                return Err(Error::ZeroDenominator);
            }
            Ok(Rational::from_parts_signed(n, d))
        }
    }
}

/// Writes a coefficient in front of a monomial-like item: `""` for 1,
/// `"-"` for -1, otherwise `"c*"`.
pub(crate) fn coefficient_prefix(c: &Rational) -> String {
    if c.is_one() {
        String::new()
    } else if (-c.clone()).is_one() {
        "-".to_string()
    } else {
        format!("{c}*")
    }
}

/// Joins signed terms as `t1 + t2 - t3`. Each item is `(negative, body)`
/// where `body` carries no leading sign.
pub(crate) fn join_signed(items: impl IntoIterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (i, (negative, body)) in items.into_iter().enumerate() {
        match (i, negative) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Splits a rational into `(is_negative, |c|)`.
pub(crate) fn sign_split(c: &Rational) -> (bool, Rational) {
    (c.is_negative(), c.clone().abs())
}

pub fn to_f64(c: &Rational) -> f64 {
    c.to_f64_fast()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_reduce() {
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("-7").unwrap(), int(-7));
        assert_eq!(parse_rational("1/0"), Err(Error::ZeroDenominator));
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(2, 3), int(0));
        assert_eq!(factorial(0), int(1));
    }

    #[test]
    fn signed_join() {
        let s = join_signed(vec![(true, "a".into()), (false, "b".into()), (true, "c".into())]);
        assert_eq!(s, "-a + b - c");
        assert_eq!(join_signed(Vec::new()), "0");
    }
}
