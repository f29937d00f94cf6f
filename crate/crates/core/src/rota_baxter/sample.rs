//! Seeded random elements for property checks.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use super::free::{Atom, RbExpr, RbWord};
use super::models::{LaurentPole, MatrixPoly, MatrixSeq};
use crate::algebra_core::matrix::Matrix;
use crate::algebra_core::poly::{Laurent, Poly};
use crate::algebra_core::scalar::{int, Rational, Ring};
use crate::algebra_core::tree::{Decoration, Tree};

fn small<R: Rng>(rng: &mut R) -> Rational {
    int(rng.gen_range(-3..=3))
}

/// A word that may contain adjacent wrapped atoms at any depth.
pub fn unreduced_word<R: Rng>(rng: &mut R, letters: &[&str], atoms: usize, depth: usize) -> RbWord {
    let n = rng.gen_range(1..=atoms.max(1));
    let list = (0..n)
        .map(|_| {
            if depth > 0 && rng.gen_bool(0.6) {
                Atom::Wrapped(Arc::new(unreduced_word(rng, letters, atoms.saturating_sub(1).max(1), depth - 1)))
            } else {
                Atom::Letter(Decoration::new(letters.choose(rng).expect("letters")))
            }
        })
        .collect();
    RbWord::from_atoms(list).expect("nonempty")
}

/// A few unreduced words with coefficients in `Q[th]` of degree ≤ 1.
pub fn unreduced_expr<R: Rng>(rng: &mut R, letters: &[&str]) -> RbExpr {
    let mut out = RbExpr::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let c = Poly::new(vec![small(rng), small(rng)]);
        out.add_term(unreduced_word(rng, letters, 3, 2), c);
    }
    out
}

pub fn matrix_poly<R: Rng>(rng: &mut R, m: &MatrixPoly, degree: usize) -> Matrix<Poly> {
    Matrix::from_fn(m.dim, |_, _| Poly::new((0..=degree).map(|_| small(rng)).collect()))
}

pub fn matrix_seq<R: Rng>(rng: &mut R, m: &MatrixSeq) -> Vec<Matrix<Rational>> {
    (0..m.len).map(|_| Matrix::from_fn(m.dim, |_, _| small(rng))).collect()
}

pub fn laurent_matrix<R: Rng>(rng: &mut R, m: &LaurentPole, span: i32) -> Matrix<Laurent> {
    Matrix::from_fn(m.dim, |_, _| {
        (-span..=span).fold(Laurent::zero(), |acc, k| acc.add(&Laurent::monomial(small(rng), k)))
    })
}

/// Random rooted tree with exactly `size` vertices.
pub fn tree<R: Rng>(rng: &mut R, letters: &[&str], size: usize) -> Tree {
    let label = Decoration::new(letters.choose(rng).expect("letters"));
    let mut left = size.saturating_sub(1);
    let mut children = Vec::new();
    while left > 0 {
        let k = rng.gen_range(1..=left);
        children.push(tree(rng, letters, k));
        left -= k;
    }
    Tree::new(label, children)
}
