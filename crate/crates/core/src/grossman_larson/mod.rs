//! Grafting, the Grossman–Larson product, the forest action with its
//! deshuffle coproduct, symmetric braces, the expansion of commutative
//! forests into ∗-products, and truncated exponential/logarithm series.

pub mod engine;
mod expansion;
mod series;

pub use expansion::{
    block_element, brace_closed_form, brace_closed_form_with, expand_forest, expand_forest_with,
};
pub use series::{gl_exp, gl_log, GLSeries, ProductMode};

use crate::algebra_core::lincomb::{GLVector, LinComb};
use crate::algebra_core::scalar::int;
use crate::algebra_core::tree::{Forest, Tree};

/// `t ↶ s`: attach the root of `s` under each vertex of `t` in turn.
pub fn graft(t: &Tree, s: &Tree) -> GLVector {
    t.graft_everywhere(s).into_iter().map(|x| (Forest::single(x), int(1))).collect()
}

/// All `2^w` ordered splittings of the trees of `f`, with multiplicity.
pub fn deshuffle(f: &Forest) -> Vec<(Forest, Forest)> {
    let trees = f.trees();
    let w = trees.len();
    (0..1usize << w)
        .map(|mask| {
            let (mut left, mut right) = (Vec::new(), Vec::new());
            for (i, t) in trees.iter().enumerate() {
                if mask >> (w - 1 - i) & 1 == 1 {
                    right.push(t.clone());
                } else {
                    left.push(t.clone());
                }
            }
            (Forest::new(left), Forest::new(right))
        })
        .collect()
}

/// Deshuffle coproduct extended linearly.
pub fn coproduct(v: &GLVector) -> LinComb<(Forest, Forest)> {
    let mut out = LinComb::zero();
    for (f, c) in v {
        for pair in deshuffle(f) {
            out.add_term(pair, c.clone());
        }
    }
    out
}

/// Calls `visit` once per map from `0..m` into `0..k`.
fn for_each_map(m: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    if m > 0 && k == 0 {
        return;
    }
    let mut choice = vec![0usize; m];
    loop {
        visit(&choice);
        let mut i = m;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < k {
                break;
            }
            choice[i] = 0;
        }
    }
}

/// Rebuilds every tree of `f` with the trees listed in `extra[v]` attached
/// under global vertex `v` (vertices numbered tree by tree in preorder).
fn attach_to_forest(f: &Forest, extra: &[Vec<&Tree>]) -> Vec<Tree> {
    let mut offset = 0;
    f.trees()
        .iter()
        .map(|t| {
            let slots = &extra[offset..offset + t.size()];
            offset += t.size();
            t.attach(slots)
        })
        .collect()
}

/// `F ↶ H` on basis forests: every tree of `H` is grafted onto some vertex
/// of the original `F`, simultaneously.
pub fn forest_action_basis(f: &Forest, h: &Forest) -> GLVector {
    let deg = f.degree();
    let hs = h.trees();
    let mut out = GLVector::zero();
    let mut extra: Vec<Vec<&Tree>> = vec![Vec::new(); deg];
    for_each_map(hs.len(), deg, |choice| {
        extra.iter_mut().for_each(Vec::clear);
        for (j, &v) in choice.iter().enumerate() {
            extra[v].push(&hs[j]);
        }
        out.add_term(Forest::new(attach_to_forest(f, &extra)), int(1));
    });
    out
}

/// Bilinear extension of [`forest_action_basis`].
pub fn forest_action(f: &GLVector, h: &GLVector) -> GLVector {
    f.bilinear(h, forest_action_basis)
}

/// Symmetric brace `{l; F} = l ↶ F`.
pub fn brace(l: &Tree, f: &Forest) -> GLVector {
    forest_action_basis(&Forest::single(l.clone()), f)
}

/// `F ∗ G` on basis forests: every tree of `G` either stays a separate
/// factor or is grafted onto a vertex of `F`.
pub fn gl_product_basis(f: &Forest, g: &Forest) -> GLVector {
    let deg = f.degree();
    let gs = g.trees();
    let mut out = GLVector::zero();
    let mut extra: Vec<Vec<&Tree>> = vec![Vec::new(); deg];
    for_each_map(gs.len(), deg + 1, |choice| {
        extra.iter_mut().for_each(Vec::clear);
        let mut trees = Vec::with_capacity(f.weight() + gs.len());
        for (j, &v) in choice.iter().enumerate() {
            if v == deg {
                trees.push(gs[j].clone());
            } else {
                extra[v].push(&gs[j]);
            }
        }
        trees.extend(attach_to_forest(f, &extra));
        out.add_term(Forest::new(trees), int(1));
    });
    out
}

/// Bilinear extension of [`gl_product_basis`].
pub fn gl_product(f: &GLVector, g: &GLVector) -> GLVector {
    f.bilinear(g, gl_product_basis)
}
