//! Polynomials with rational coefficients: univariate (used both for the
//! time variable `t` and the formal weight `th`), Laurent in `z`, and
//! multivariate for iterated integrals over simplices.

use std::collections::BTreeMap;
use std::fmt;

use super::scalar::{coefficient_prefix, int, join_signed, parse_rational, sign_split, Ring, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial, coefficients from low to high degree.
/// Trailing zeros are never stored, so the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.push(c);
        Poly::new(coeffs)
    }

    /// The variable itself.
    pub fn var() -> Self {
        Poly::monomial(int(1), 1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Multiplication by the variable.
    pub fn shift(&self) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Definite integral from 0 to the variable.
    pub fn integrate(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / int(k as i64 + 1));
        }
        Poly::new(coeffs)
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Text form with the given variable name, e.g. `1 + 2*t - 1/2*t^2`.
    pub fn to_string_in(&self, var: &str) -> String {
        let items = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let (neg, abs) = sign_split(c);
                let body = match k {
                    0 => abs.to_string(),
                    1 => format!("{}{var}", coefficient_prefix(&abs)),
                    _ => format!("{}{var}^{k}", coefficient_prefix(&abs)),
                };
                (neg, body)
            });
        join_signed(items)
    }

    /// Parses sums of terms `c`, `c*x^k`, `cx^k`, `x`, `-x^2` in the
    /// variable `var`.
    pub fn parse_in(text: &str, var: &str) -> Result<Self> {
        PolyParser { src: text, pos: 0, var }.parse()
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_in("x"))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_in("t"))
    }
}

impl Ring for Poly {
    fn zero() -> Self {
        Poly::default()
    }
    fn one() -> Self {
        Poly::constant(int(1))
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Poly::default();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(coeffs)
    }
    fn neg(&self) -> Self {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
    fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Poly::default();
        }
        Poly { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }
}

struct PolyParser<'a> {
    src: &'a str,
    pos: usize,
    var: &'a str,
}

impl PolyParser<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        while self.rest().starts_with(char::is_whitespace) {
            self.pos += self.rest().chars().next().map_or(1, char::len_utf8);
        }
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&str> {
        self.skip_ws();
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return None;
        }
        let start = self.pos;
        self.pos += len;
        Some(&self.src[start..self.pos])
    }

    fn parse(mut self) -> Result<Poly> {
        let mut acc = Poly::default();
        let mut first = true;
        loop {
            self.skip_ws();
            if self.rest().is_empty() {
                if first {
                    return Err(Error::syntax(self.pos, "empty polynomial"));
                }
                break;
            }
            let negative = if self.eat("-") {
                true
            } else if self.eat("+") || first {
                false
            } else {
                return Err(Error::syntax(self.pos, "expected `+` or `-`"));
            };
            first = false;
            let mut term = self.term()?;
            if negative {
                term = term.neg();
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let start = self.pos;
        let coeff = match self.digits() {
            Some(n) => {
                let n = n.to_string();
                if self.eat("/") {
                    let at = self.pos;
                    let d = self
                        .digits()
                        .ok_or_else(|| Error::syntax(at, "expected denominator"))?
                        .to_string();
                    Some(parse_rational(&format!("{n}/{d}"))?)
                } else {
                    Some(parse_rational(&n)?)
                }
            }
            None => None,
        };
        if coeff.is_some() {
            self.eat("*");
        }
        let var = self.var;
        let power = if self.eat(var) {
            if self.eat("^") {
                let at = self.pos;
                let p = self
                    .digits()
                    .ok_or_else(|| Error::syntax(at, "expected exponent"))?;
                p.parse::<usize>()
                    .map_err(|_| Error::syntax(at, "exponent too large"))?
            } else {
                1
            }
        } else if coeff.is_none() {
            return Err(Error::syntax(start, format!("expected number or `{var}`")));
        } else {
            0
        };
        Ok(Poly::monomial(coeff.unwrap_or_else(|| int(1)), power))
    }
}

/// Laurent polynomial in `z` with finitely many nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Laurent {
    terms: BTreeMap<i32, Rational>,
}

impl Laurent {
    pub fn monomial(c: Rational, k: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Laurent { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &Rational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    /// Projection onto the strictly negative powers of `z`.
    pub fn pole_part(&self) -> Self {
        Laurent {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| **k < 0)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    fn insert_add(terms: &mut BTreeMap<i32, Rational>, k: i32, c: Rational) {
        let entry = terms.entry(k).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            terms.remove(&k);
        }
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items = self.terms.iter().map(|(k, c)| {
            let (neg, abs) = sign_split(c);
            let body = if *k == 0 {
                abs.to_string()
            } else {
                format!("{}z^{k}", coefficient_prefix(&abs))
            };
            (neg, body)
        });
        write!(f, "{}", join_signed(items))
    }
}

impl Ring for Laurent {
    fn zero() -> Self {
        Laurent::default()
    }
    fn one() -> Self {
        Laurent::monomial(int(1), 0)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            Laurent::insert_add(&mut terms, *k, c.clone());
        }
        Laurent { terms }
    }
    fn mul(&self, other: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                Laurent::insert_add(&mut terms, i + j, a * b);
            }
        }
        Laurent { terms }
    }
    fn neg(&self) -> Self {
        Laurent { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
    fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Laurent::default();
        }
        Laurent { terms: self.terms.iter().map(|(k, x)| (*k, x * c)).collect() }
    }
}

/// Sparse multivariate polynomial in a fixed number of variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u16>, Rational>,
}

impl MultiPoly {
    pub fn zero_in(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    /// Embeds a univariate polynomial as a polynomial in variable `var`.
    pub fn from_poly(p: &Poly, nvars: usize, var: usize) -> Self {
        let mut out = MultiPoly::zero_in(nvars);
        for (k, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut exps = vec![0u16; nvars];
            exps[var] = k as u16;
            out.terms.insert(exps, c.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert_add(&mut self, exps: Vec<u16>, c: Rational) {
        let entry = self.terms.entry(exps.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(e.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = MultiPoly::zero_in(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u16> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert_add(e, c1 * c2);
            }
        }
        out
    }

    /// Integrates variable `var` from 0 up to variable `upper`, which
    /// leaves `var` absent from the result.
    pub fn integrate_up_to(&self, var: usize, upper: usize) -> Self {
        let mut out = MultiPoly::zero_in(self.nvars);
        for (e, c) in &self.terms {
            let k = e[var];
            let mut e2 = e.clone();
            e2[var] = 0;
            e2[upper] += k + 1;
            out.insert_add(e2, c / int(k as i64 + 1));
        }
        out
    }

    /// Reads the polynomial as univariate in `var`; all other exponents
    /// must vanish.
    pub fn into_poly(&self, var: usize) -> Option<Poly> {
        let mut coeffs: Vec<Rational> = Vec::new();
        for (e, c) in &self.terms {
            if e.iter().enumerate().any(|(i, x)| i != var && *x != 0) {
                return None;
            }
            let k = e[var] as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Rational::zero());
            }
            coeffs[k] += c;
        }
        Some(Poly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra_core::scalar::rat;

    #[test]
    fn parse_format_roundtrip() {
        let p = Poly::parse_in("1+2t", "t").unwrap();
        assert_eq!(p, Poly::new(vec![int(1), int(2)]));
        assert_eq!(p.to_string(), "1 + 2*t");
        let q = Poly::parse_in("-1/2*t^2 + t - 3", "t").unwrap();
        assert_eq!(q.to_string(), "-3 + t - 1/2*t^2");
        assert_eq!(Poly::parse_in(&q.to_string(), "t").unwrap(), q);
        assert_eq!(Poly::parse_in("0", "t").unwrap(), Poly::default());
        assert_eq!(Poly::default().to_string(), "0");
        assert!(Poly::parse_in("2 t t", "t").is_err());
        assert_eq!(Poly::parse_in("2*th", "th").unwrap().to_string_in("th"), "2*th");
    }

    #[test]
    fn integral_and_derivative() {
        let p = Poly::parse_in("1 + 2t + 3t^2", "t").unwrap();
        let ip = p.integrate();
        assert_eq!(ip.to_string(), "t + t^2 + t^3");
        assert_eq!(ip.derivative(), p);
        assert_eq!(ip.eval(&int(0)), int(0));
        assert_eq!(p.eval(&rat(1, 2)), rat(11, 4));
    }

    #[test]
    fn laurent_pole_projection() {
        let x = Laurent::monomial(int(2), -1).add(&Laurent::monomial(int(1), 1));
        let y = Laurent::monomial(int(1), 1);
        assert_eq!(x.pole_part(), Laurent::monomial(int(2), -1));
        assert_eq!(x.mul(&y), Laurent::monomial(int(2), 0).add(&Laurent::monomial(int(1), 2)));
    }

    #[test]
    fn simplex_volume() {
        // ∫_{0 ≤ t0 ≤ t1 ≤ t} 1 = t^2 / 2
        let one = MultiPoly::from_poly(&Poly::one(), 3, 0);
        let v = one.integrate_up_to(0, 1).integrate_up_to(1, 2);
        assert_eq!(v.into_poly(2).unwrap(), Poly::monomial(rat(1, 2), 2));
    }
}
