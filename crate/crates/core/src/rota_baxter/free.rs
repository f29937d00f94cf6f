//! The free Rota–Baxter algebra over a set of letters, with the weight
//! kept as a formal parameter `th`.
//!
//! A word is a nonempty juxtaposition of letters and wrapped words
//! `R(w)`. Words with no two adjacent wrapped atoms (at every nesting
//! level) are reduced; they form a basis, and expressions are
//! combinations of them with coefficients in `Q[th]`.
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := factor (['*'] factor)*
//! factor := integer ['/' integer] | 'th' | letter | 'R(' expr ')' | '(' expr ')'
//! ```

use std::cell::RefCell;
use std::fmt;
use std::sync::Arc;

use dashu_int::IBig;
use rustc_hash::FxHashMap;

use crate::algebra_core::expr::{is_ident_char, is_ident_start};
use crate::algebra_core::lincomb::LinComb;
use crate::algebra_core::poly::Poly;
use crate::algebra_core::scalar::{coefficient_prefix, join_signed, sign_split, Rational};
use crate::algebra_core::tree::Decoration;
use crate::error::{Error, Result};

/// Name of the formal weight in the text format.
pub const THETA: &str = "th";

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    Letter(Decoration),
    Wrapped(Arc<RbWord>),
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RbWord(Vec<Atom>);

/// Combination of words with coefficients polynomial in the weight.
pub type RbExpr = LinComb<RbWord, Poly>;

impl RbWord {
    pub fn letter(d: impl Into<Decoration>) -> Self {
        RbWord(vec![Atom::Letter(d.into())])
    }

    /// The one-atom word `R(w)`.
    pub fn wrap(w: RbWord) -> Self {
        RbWord(vec![Atom::Wrapped(Arc::new(w))])
    }

    pub fn from_atoms(atoms: Vec<Atom>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::Empty("words need at least one atom"));
        }
        Ok(RbWord(atoms))
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.0
    }

    pub fn concat(&self, other: &RbWord) -> RbWord {
        let mut atoms = Vec::with_capacity(self.0.len() + other.0.len());
        atoms.extend_from_slice(&self.0);
        atoms.extend_from_slice(&other.0);
        RbWord(atoms)
    }

    /// Number of letters, counted through wrappers.
    pub fn degree(&self) -> usize {
        self.0
            .iter()
            .map(|a| match a {
                Atom::Letter(_) => 1,
                Atom::Wrapped(w) => w.degree(),
            })
            .sum()
    }

    /// Number of `R` applications.
    pub fn wrappers(&self) -> usize {
        self.0
            .iter()
            .map(|a| match a {
                Atom::Letter(_) => 0,
                Atom::Wrapped(w) => 1 + w.wrappers(),
            })
            .sum()
    }

    pub fn is_reduced(&self) -> bool {
        let adjacent = self
            .0
            .windows(2)
            .any(|p| matches!(p, [Atom::Wrapped(_), Atom::Wrapped(_)]));
        !adjacent
            && self.0.iter().all(|a| match a {
                Atom::Letter(_) => true,
                Atom::Wrapped(w) => w.is_reduced(),
            })
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Letter(d) => write!(f, "{d}"),
            Atom::Wrapped(w) => write!(f, "R({w})"),
        }
    }
}

impl fmt::Display for RbWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for RbWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn word_expr(w: RbWord) -> RbExpr {
    RbExpr::basis(w)
}

pub fn letter(name: &str) -> RbExpr {
    word_expr(RbWord::letter(name))
}

/// `th · x`
pub fn theta_times(x: &RbExpr) -> RbExpr {
    x.mul_coeffs(&Poly::var())
}

/// `R` extended linearly.
pub fn apply_r(x: &RbExpr) -> RbExpr {
    let mut out = RbExpr::zero();
    for (w, c) in x {
        out.add_term(RbWord::wrap(w.clone()), c.clone());
    }
    out
}

thread_local! {
    static PRODUCTS: RefCell<FxHashMap<(RbWord, RbWord), RbExpr>> = RefCell::new(FxHashMap::default());
}

const PRODUCT_CACHE_LIMIT: usize = 1 << 18;

/// Reduced form of `u · v` for reduced words: the junction
/// `R(x)R(y)` is replaced by `R(R(x)y + xR(y) + th·xy)` until no two
/// wrapped atoms meet.
pub fn mul_words(u: &RbWord, v: &RbWord) -> RbExpr {
    let (Some(Atom::Wrapped(x)), Some(Atom::Wrapped(y))) = (u.0.last(), v.0.first()) else {
        return word_expr(u.concat(v));
    };
    let key = (u.clone(), v.clone());
    if let Some(hit) = PRODUCTS.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    let rx = RbWord::wrap((**x).clone());
    let ry = RbWord::wrap((**y).clone());
    let mut inner = mul_words(&rx, y);
    inner.add_assign(&mul_words(x, &ry));
    inner.add_assign(&theta_times(&mul_words(x, y)));
    let prefix = &u.0[..u.0.len() - 1];
    let suffix = &v.0[1..];
    let mut out = RbExpr::zero();
    for (w, c) in &inner {
        let mut atoms = Vec::with_capacity(prefix.len() + 1 + suffix.len());
        atoms.extend_from_slice(prefix);
        atoms.push(Atom::Wrapped(Arc::new(w.clone())));
        atoms.extend_from_slice(suffix);
        out.add_term(RbWord(atoms), c.clone());
    }
    PRODUCTS.with(|c| {
        let mut c = c.borrow_mut();
        if c.len() >= PRODUCT_CACHE_LIMIT {
            c.clear();
        }
        c.insert(key, out.clone());
    });
    out
}

/// Product of reduced expressions.
pub fn mul(x: &RbExpr, y: &RbExpr) -> RbExpr {
    x.bilinear(y, mul_words)
}

/// Reduces an arbitrary word by rebuilding it from its atoms with
/// [`mul`] and [`apply_r`].
pub fn reduce_word(w: &RbWord) -> RbExpr {
    let mut acc: Option<RbExpr> = None;
    for a in &w.0 {
        let x = match a {
            Atom::Letter(_) => word_expr(RbWord(vec![a.clone()])),
            Atom::Wrapped(inner) => apply_r(&reduce_word(inner)),
        };
        acc = Some(match acc {
            None => x,
            Some(prev) => mul(&prev, &x),
        });
    }
    acc.expect("words are nonempty")
}

pub fn format_expr(x: &RbExpr) -> String {
    let mut items: Vec<(usize, String, &Poly)> =
        x.iter().map(|(w, c)| (w.degree(), w.to_string(), c)).collect();
    items.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    join_signed(items.into_iter().map(|(_, body, c)| {
        if c.is_constant() {
            let (neg, abs) = sign_split(&c.coeff(0));
            (neg, format!("{}{body}", coefficient_prefix(&abs)))
        } else {
            (false, format!("({})*{body}", c.to_string_in(THETA)))
        }
    }))
}

impl fmt::Display for RbExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_expr(self))
    }
}

impl fmt::Debug for RbExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_expr(self))
    }
}

/// Parses an expression without reducing it; see [`super::rb_normal_form`].
pub fn parse_rb(text: &str) -> Result<RbExpr> {
    let mut p = Parser { src: text, pos: 0 };
    let raw = p.expr()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(Error::syntax(p.pos, "unexpected trailing input"));
    }
    into_words(raw, 0)
}

/// During parsing the empty atom list stands for scalars.
type Raw = LinComb<Vec<Atom>, Poly>;

fn into_words(raw: Raw, pos: usize) -> Result<RbExpr> {
    let mut out = RbExpr::zero();
    for (atoms, c) in &raw {
        if atoms.is_empty() {
            return Err(Error::syntax(pos, "scalar term in the non-unital free algebra"));
        }
        out.add_term(RbWord(atoms.clone()), c.clone());
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Raw> {
        let mut acc = Raw::zero();
        let mut negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            let t = self.term()?;
            acc.add_assign(&if negative { t.neg() } else { t });
            if self.eat('+') {
                negative = false;
            } else if self.eat('-') {
                negative = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&mut self) -> bool {
        self.skip_ws();
        self.peek().is_some_and(|c| c == '(' || c.is_ascii_digit() || is_ident_start(c))
    }

    fn term(&mut self) -> Result<Raw> {
        let mut acc = self.factor()?;
        loop {
            let explicit = self.eat('*');
            if !explicit && !self.starts_factor() {
                return Ok(acc);
            }
            let f = self.factor()?;
            acc = acc.bilinear(&f, |u, v| {
                let mut w = u.clone();
                w.extend_from_slice(v);
                Raw::basis(w)
            });
        }
    }

    fn integer(&mut self) -> Option<IBig> {
        self.skip_ws();
        let len = self.src[self.pos..].bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return None;
        }
        let n = self.src[self.pos..self.pos + len].parse().ok();
        self.pos += len;
        n
    }

    fn factor(&mut self) -> Result<Raw> {
        self.skip_ws();
        let start = self.pos;
        if let Some(n) = self.integer() {
            let mut c = Rational::from(n);
            if self.eat('/') {
                let d = self.integer().ok_or_else(|| Error::syntax(self.pos, "expected denominator"))?;
                if d == IBig::ZERO {
                    return Err(Error::ZeroDenominator);
                }
                c /= Rational::from(d);
            }
            return Ok(Raw::term(Vec::new(), Poly::constant(c)));
        }
        if self.eat('(') {
            let inner = self.expr()?;
            if !self.eat(')') {
                return Err(Error::syntax(self.pos, "expected `)`"));
            }
            return Ok(inner);
        }
        match self.peek() {
            Some(c) if is_ident_start(c) => {}
            _ => return Err(Error::syntax(start, "expected a letter, `R(`, `th` or a number")),
        }
        while self.peek().is_some_and(is_ident_char) {
            self.pos += 1;
        }
        let name = &self.src[start..self.pos];
        match name {
            THETA => Ok(Raw::term(Vec::new(), Poly::var())),
            "R" => {
                if !self.eat('(') {
                    return Err(Error::syntax(self.pos, "expected `(` after R"));
                }
                let at = self.pos;
                let inner = into_words(self.expr()?, at)?;
                if !self.eat(')') {
                    return Err(Error::syntax(self.pos, "expected `)`"));
                }
                let mut out = Raw::zero();
                for (w, c) in &inner {
                    out.add_term(vec![Atom::Wrapped(Arc::new(w.clone()))], c.clone());
                }
                Ok(out)
            }
            _ => Ok(Raw::basis(vec![Atom::Letter(Decoration::new(name))])),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> RbExpr {
        parse_rb(s).unwrap()
    }

    fn nf(s: &str) -> RbExpr {
        p(s).linear(reduce_word)
    }

    #[test]
    fn parse_and_print() {
        let x = p("R(b1 R(b2)) b3");
        assert_eq!(x.to_string(), "R(b1 R(b2)) b3");
        assert_eq!(p("(-1 + 2*th) R(b)").to_string(), "(-1 + 2*th)*R(b)");
        assert_eq!(p("2*a - 1/2 a b").to_string(), "2*a - 1/2*a b");
        assert_eq!(p("(a + b) c").to_string(), "a c + b c");
        assert_eq!(p("R(a + th b)").to_string(), "R(a) + (th)*R(b)");
        for s in ["R(b1 R(b2)) b3", "(-1 + 2*th)*R(b)", "R(a) R(b) - 3*b", "th*R(a b)"] {
            assert_eq!(p(&p(s).to_string()), p(s), "{s}");
        }
        assert!(parse_rb("th").is_err());
        assert!(parse_rb("R(1)").is_err());
        assert!(parse_rb("R(a").is_err());
        assert!(parse_rb("a +").is_err());
    }

    #[test]
    fn basic_rewrite() {
        assert_eq!(nf("R(b1) R(b2)"), p("R(R(b1) b2) + R(b1 R(b2)) + th R(b1 b2)"));
        assert_eq!(nf("b1 R(b2) b3"), p("b1 R(b2) b3"));
        assert!(p("R(a) R(b)").keys().all(|w| !w.is_reduced()));
    }

    #[test]
    fn product_is_associative() {
        let xs = [nf("R(a)"), nf("R(a) b R(b)"), nf("R(R(a) b) + th a"), nf("b R(a b)")];
        for x in &xs {
            for y in &xs {
                for z in &xs {
                    assert_eq!(mul(&mul(x, y), z), mul(x, &mul(y, z)));
                }
            }
        }
    }

    #[test]
    fn results_are_reduced() {
        let x = nf("R(a) R(b) R(R(a) R(b))");
        assert!(x.keys().all(RbWord::is_reduced));
        assert_eq!(x.keys().map(RbWord::degree).max(), Some(4));
    }
}
