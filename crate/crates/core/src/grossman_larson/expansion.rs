//! Commutative forests and symmetric braces rewritten through
//! admissible partition chains.

use super::engine::Engine;
use super::forest_action;
use crate::algebra_core::lincomb::GLVector;
use crate::algebra_core::tree::Tree;
use crate::combinatorics::{Conventions, Permutation};
use crate::error::Result;

/// `t_P = Σ_{σ ∈ S_{h-1}} t_{p_σ(1)} ↶ (t_{p_σ(2)} ↶ (··· ↶ t_{p_h}))` for
/// a block `P = {p_1 < ··· < p_h}` (1-based indices into `ts`).
pub fn block_element(ts: &[GLVector], block: &[usize]) -> GLVector {
    let mut sorted = block.to_vec();
    sorted.sort_unstable();
    let (&top, rest) = sorted.split_last().expect("blocks are nonempty");
    let mut out = GLVector::zero();
    for sigma in Permutation::all(rest.len()) {
        let order = sigma.permute(rest);
        let mut acc = ts[top - 1].clone();
        for &p in order.iter().rev() {
            acc = forest_action(&ts[p - 1], &acc);
        }
        out.add_assign(&acc);
    }
    out
}

/// `Σ (−1)^{n−k} t_{P_1} ∗ ··· ∗ t_{P_k}` over admissible chains.
pub fn expand_forest(ts: &[Tree]) -> Result<GLVector> {
    expand_forest_with(ts, &Conventions::standard())
}

pub fn expand_forest_with(ts: &[Tree], conventions: &Conventions) -> Result<GLVector> {
    Engine::new().expand_forest(ts, conventions)
}

/// `Σ (−1)^{n−k} (···((l ↶ l_{P_1}) ↶ l_{P_2}) ··· ↶ l_{P_k})`; equals the
/// symmetric brace `{l; l_1···l_n}`.
pub fn brace_closed_form(l: &Tree, ls: &[Tree]) -> Result<GLVector> {
    brace_closed_form_with(l, ls, &Conventions::standard())
}

pub fn brace_closed_form_with(l: &Tree, ls: &[Tree], conventions: &Conventions) -> Result<GLVector> {
    Engine::new().brace_closed_form(l, ls, conventions)
}
