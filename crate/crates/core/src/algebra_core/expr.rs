//! Text format for elements of the Grossman–Larson algebra.
//!
//! ```text
//! element    := term (('+' | '-') term)*
//! term       := [coeff '*'] forest
//! coeff      := integer ['/' positive-integer]
//! forest     := tree ('.' tree)*  |  'e'
//! tree       := decoration ['[' tree (',' tree)* ']']
//! decoration := identifier
//! ```

use dashu_int::IBig;

use super::lincomb::GLVector;
use super::scalar::{coefficient_prefix, join_signed, sign_split, Rational};
use super::tree::{Alphabet, Decoration, Forest, Tree};
use crate::error::{Error, Result};

/// Symbol reserved for the empty forest.
pub const UNIT_SYMBOL: &str = "e";

pub fn parse_element(text: &str, alphabet: &Alphabet) -> Result<GLVector> {
    let mut p = Parser::new(text, alphabet);
    let v = p.element()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(Error::syntax(p.pos, "unexpected trailing input"));
    }
    Ok(v)
}

/// Parses a single tree, e.g. `a[b,c[d]]`.
pub fn parse_tree(text: &str, alphabet: &Alphabet) -> Result<Tree> {
    let mut p = Parser::new(text, alphabet);
    let t = p.tree()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(Error::syntax(p.pos, "unexpected trailing input"));
    }
    Ok(t)
}

/// Parses a single forest, e.g. `a.b[c]` or `e`.
pub fn parse_forest(text: &str, alphabet: &Alphabet) -> Result<Forest> {
    let mut p = Parser::new(text, alphabet);
    let f = p.forest()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(Error::syntax(p.pos, "unexpected trailing input"));
    }
    Ok(f)
}

/// Canonical text: terms sorted by degree, then by serialization.
pub fn format_element(v: &GLVector) -> String {
    let mut items: Vec<(usize, String, &Rational)> =
        v.iter().map(|(f, c)| (f.degree(), f.to_string(), c)).collect();
    items.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    join_signed(items.into_iter().map(|(_, body, c)| {
        let (neg, abs) = sign_split(c);
        (neg, format!("{}{body}", coefficient_prefix(&abs)))
    }))
}

pub(crate) fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

pub(crate) fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    alphabet: &'a Alphabet,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, alphabet: &'a Alphabet) -> Self {
        Parser { src, pos: 0, alphabet }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
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

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::syntax(self.pos, format!("expected `{c}`")))
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

    fn identifier(&mut self) -> Result<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(c) if is_ident_start(c) => {}
            _ => return Err(Error::syntax(start, "expected decoration")),
        }
        while self.peek().is_some_and(is_ident_char) {
            self.pos += 1;
        }
        Ok((start, &self.src[start..self.pos]))
    }

    fn element(&mut self) -> Result<GLVector> {
        let mut v = GLVector::zero();
        let mut negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            let (mut c, f) = self.term()?;
            if negative {
                c = -c;
            }
            v.add_term(f, c);
            if self.eat('+') {
                negative = false;
            } else if self.eat('-') {
                negative = true;
            } else {
                break;
            }
        }
        Ok(v)
    }

    fn term(&mut self) -> Result<(Rational, Forest)> {
        let coeff = match self.integer() {
            Some(n) => {
                let c = if self.eat('/') {
                    let d = self
                        .integer()
                        .ok_or_else(|| Error::syntax(self.pos, "expected denominator"))?;
                    if d == IBig::ZERO {
                        return Err(Error::ZeroDenominator);
                    }
                    Rational::from_parts_signed(n, d)
                } else {
                    Rational::from(n)
                };
                self.expect('*')?;
                c
            }
            None => Rational::ONE,
        };
        Ok((coeff, self.forest()?))
    }

    fn forest(&mut self) -> Result<Forest> {
        let mut trees = Vec::new();
        loop {
            self.skip_ws();
            let save = self.pos;
            let (_, name) = self.identifier()?;
            if name == UNIT_SYMBOL {
                if trees.is_empty() && !self.eat('.') && !self.eat('[') {
                    return Ok(Forest::empty());
                }
                return Err(Error::syntax(save, "`e` denotes the empty forest and cannot be a vertex"));
            }
            self.pos = save;
            trees.push(self.tree()?);
            if !self.eat('.') {
                break;
            }
        }
        Ok(Forest::new(trees))
    }

    fn tree(&mut self) -> Result<Tree> {
        let (start, name) = self.identifier()?;
        if name == UNIT_SYMBOL {
            return Err(Error::syntax(start, "`e` denotes the empty forest and cannot be a vertex"));
        }
        let label = Decoration::new(name);
        self.alphabet.check(&label)?;
        let mut children = Vec::new();
        if self.eat('[') {
            loop {
                children.push(self.tree()?);
                if !self.eat(',') {
                    break;
                }
            }
            self.expect(']')?;
        }
        Ok(Tree::new(label, children))
    }
}
