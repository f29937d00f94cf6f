//! Finite formal linear combinations with exact coefficients.

use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;

use super::scalar::{Rational, Ring};
use super::tree::{Forest, Tree};

/// `Σ c_k · k` over an ordered basis; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinComb<K: Ord, C = Rational> {
    terms: BTreeMap<K, C>,
}

impl<K: Ord, C> Default for LinComb<K, C> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone, C: Ring> LinComb<K, C> {
    pub fn zero() -> Self {
        LinComb::default()
    }

    pub fn basis(k: K) -> Self {
        let mut v = LinComb::zero();
        v.terms.insert(k, C::one());
        v
    }

    pub fn term(k: K, c: C) -> Self {
        let mut v = LinComb::zero();
        v.add_term(k, c);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: &K) -> C {
        self.terms.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, C> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, C> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, k: K, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &C) {
        if *c == C::one() {
            self.add_assign(other);
            return;
        }
        for (k, x) in &other.terms {
            self.add_term(k.clone(), x.mul(c));
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (k, x) in &other.terms {
            self.add_term(k.clone(), x.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, x) in &other.terms {
            out.add_term(k.clone(), x.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LinComb { terms: self.terms.iter().map(|(k, c)| (k.clone(), c.neg())).collect() }
    }

    /// Multiplies every coefficient by a ring element.
    pub fn mul_coeffs(&self, c: &C) -> Self {
        let mut out = LinComb::zero();
        for (k, x) in &self.terms {
            out.add_term(k.clone(), x.mul(c));
        }
        out
    }

    /// Multiplies every coefficient by a rational.
    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = LinComb::zero();
        for (k, x) in &self.terms {
            out.add_term(k.clone(), x.scale(c));
        }
        out
    }

    /// Keeps only the terms satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&K) -> bool) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Bilinear extension of a basis-level product `f(k1, k2)`.
    pub fn bilinear(&self, other: &Self, mut f: impl FnMut(&K, &K) -> Self) -> Self {
        let mut out = LinComb::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                out.add_scaled(&f(k1, k2), &c1.mul(c2));
            }
        }
        out
    }

    /// Linear extension of a basis-level map.
    pub fn linear<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<K2, C>) -> LinComb<K2, C> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }
}

impl<K: Ord + Clone, C: Ring> FromIterator<(K, C)> for LinComb<K, C> {
    fn from_iter<I: IntoIterator<Item = (K, C)>>(iter: I) -> Self {
        let mut out = LinComb::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<'a, K: Ord, C> IntoIterator for &'a LinComb<K, C> {
    type Item = (&'a K, &'a C);
    type IntoIter = btree_map::Iter<'a, K, C>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

/// Element of the Grossman–Larson algebra: rational combination of forests.
pub type GLVector = LinComb<Forest, Rational>;

impl GLVector {
    pub fn from_tree(t: Tree) -> Self {
        GLVector::basis(Forest::single(t))
    }

    pub fn unit() -> Self {
        GLVector::basis(Forest::empty())
    }

    /// Homogeneous component of the given vertex count.
    pub fn degree_part(&self, d: usize) -> Self {
        self.filter(|f| f.degree() == d)
    }

    /// Largest vertex count present, `None` for zero.
    pub fn max_degree(&self) -> Option<usize> {
        self.keys().map(Forest::degree).max()
    }

    /// True when every term is a single tree.
    pub fn is_tree_combination(&self) -> bool {
        self.keys().all(|f| f.weight() == 1)
    }

    /// Commutative (forest) product.
    pub fn forest_mul(&self, other: &Self) -> Self {
        self.bilinear(other, |f, g| GLVector::basis(f.mul(g)))
    }
}

impl std::fmt::Debug for GLVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&crate::algebra_core::expr::format_element(self))
    }
}

impl std::fmt::Display for GLVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&crate::algebra_core::expr::format_element(self))
    }
}
