use std::collections::BTreeMap;

use super::free::{self, RbExpr};
use super::{right_product, star_product, FreeRb, RotaBaxter};
use crate::algebra_core::lincomb::GLVector;
use crate::algebra_core::scalar::int;
use crate::algebra_core::tree::{Decoration, Tree};
use crate::combinatorics::{ChainPlan, Conventions, Permutation};
use crate::error::{Error, Result};

struct Iota<'a, M: RotaBaxter, F> {
    model: &'a M,
    assign: F,
    conventions: &'a Conventions,
    plans: BTreeMap<usize, ChainPlan>,
    trees: BTreeMap<Tree, M::Elem>,
}

impl<M: RotaBaxter, F: Fn(&Decoration) -> Option<M::Elem>> Iota<'_, M, F> {
    fn plan(&mut self, n: usize) -> Result<ChainPlan> {
        if let Some(p) = self.plans.get(&n) {
            return Ok(p.clone());
        }
        let p = ChainPlan::new(&self.conventions.chains(n)?);
        self.plans.insert(n, p.clone());
        Ok(p)
    }

    /// `Σ_σ x_{p_σ(1)} ◁ (x_{p_σ(2)} ◁ (··· ◁ x_{p_h}))`
    fn block(&self, xs: &[M::Elem], block: &[usize]) -> M::Elem {
        let m = self.model;
        let mut sorted = block.to_vec();
        sorted.sort_unstable();
        let (&top, rest) = sorted.split_last().expect("blocks are nonempty");
        let mut out = m.zero();
        for sigma in Permutation::all(rest.len()) {
            let mut acc = xs[top - 1].clone();
            for &p in sigma.permute(rest).iter().rev() {
                acc = right_product(m, &xs[p - 1], &acc);
            }
            out = m.add(&out, &acc);
        }
        out
    }

    fn accumulate(m: &M, acc: &mut Option<M::Elem>, x: M::Elem, c: i64) {
        let x = if c == 1 { x } else { m.scale(&x, &int(c)) };
        *acc = Some(match acc.take() {
            None => x,
            Some(a) => m.add(&a, &x),
        });
    }

    fn tree(&mut self, t: &Tree) -> Result<M::Elem> {
        if let Some(x) = self.trees.get(t) {
            return Ok(x.clone());
        }
        let m = self.model;
        let root = (self.assign)(t.label())
            .ok_or_else(|| Error::UnassignedDecoration(t.label().to_string()))?;
        m.check(&root).map_err(|_| Error::ModelMismatch)?;
        let out = if t.children().is_empty() {
            root
        } else {
            let xs = t.children().iter().map(|c| self.tree(c)).collect::<Result<Vec<_>>>()?;
            let plan = self.plan(xs.len())?;
            let (c, rest) = plan.evaluate(
                |b| self.block(&xs, b),
                |prev, b| right_product(m, prev.unwrap_or(&root), b),
                |acc, x, c| Self::accumulate(m, acc, x, c),
            );
            let base = m.scale(&root, &int(c));
            rest.map_or(base.clone(), |r| m.add(&base, &r))
        };
        self.trees.insert(t.clone(), out.clone());
        Ok(out)
    }

    fn forest(&mut self, ts: &[Tree]) -> Result<M::Elem> {
        let m = self.model;
        match ts {
            [] => m.unit().ok_or(Error::UnitNotRepresentable),
            [t] => self.tree(t),
            _ => {
                let xs = ts.iter().map(|t| self.tree(t)).collect::<Result<Vec<_>>>()?;
                let plan = self.plan(xs.len())?;
                let (c, rest) = plan.evaluate(
                    |b| self.block(&xs, b),
                    |prev, b| match prev {
                        None => b.clone(),
                        Some(p) => star_product(m, p, b),
                    },
                    |acc, x, c| Self::accumulate(m, acc, x, c),
                );
                let mut out = rest.unwrap_or_else(|| m.zero());
                if c != 0 {
                    let unit = m.unit().ok_or(Error::UnitNotRepresentable)?;
                    out = m.add(&out, &m.scale(&unit, &int(c)));
                }
                Ok(out)
            }
        }
    }
}

/// Image of `v` under the embedding that sends grafting to `◁θ` and the
/// Grossman–Larson product to `∗θ`, given images of the letters.
pub fn iota<M: RotaBaxter>(
    model: &M,
    v: &GLVector,
    assign: impl Fn(&Decoration) -> Option<M::Elem>,
    conventions: &Conventions,
) -> Result<M::Elem> {
    let mut ctx = Iota { model, assign, conventions, plans: BTreeMap::new(), trees: BTreeMap::new() };
    let mut out = model.zero();
    for (f, c) in v {
        let x = ctx.forest(f.trees())?;
        out = model.add(&out, &model.scale(&x, c));
    }
    Ok(out)
}

/// [`iota`] into the free algebra, each letter sent to itself.
pub fn iota_free(v: &GLVector) -> Result<RbExpr> {
    iota(&FreeRb, v, |d| Some(free::letter(d.as_str())), &Conventions::standard())
}
