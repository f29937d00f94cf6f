//! Hash-consed forest arithmetic for bulk computations.
//!
//! Trees are interned once per [`Engine`] and referred to by integer ids,
//! so grafting and products never copy subtrees. Results are converted
//! back to canonical [`GLVector`]s at the boundary.

use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use crate::algebra_core::lincomb::GLVector;
use crate::algebra_core::scalar::Rational;
use crate::algebra_core::tree::{Decoration, Forest, Tree};
use crate::combinatorics::{ChainPlan, Conventions, Permutation};
use crate::error::{Error, Result};

pub type Id = u32;
type Children = SmallVec<[Id; 4]>;
/// A forest: tree ids sorted ascending.
type Key = SmallVec<[Id; 6]>;
/// Label followed by the sorted child ids.
type NodeKey = SmallVec<[u32; 5]>;

struct Node {
    label: u32,
    children: Children,
    size: u32,
}

/// Coefficient kept as a machine integer until it overflows or stops
/// being integral.
#[derive(Clone, Debug)]
enum Coef {
    Small(i64),
    Big(Box<Rational>),
}

impl Coef {
    const ONE: Coef = Coef::Small(1);

    fn from_rational(r: &Rational) -> Coef {
        if r.denominator().is_one() {
            if let Ok(n) = i64::try_from(r.numerator()) {
                return Coef::Small(n);
            }
        }
        Coef::Big(Box::new(r.clone()))
    }

    fn to_rational(&self) -> Rational {
        match self {
            Coef::Small(n) => Rational::from(*n),
            Coef::Big(r) => (**r).clone(),
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Coef::Small(n) => *n == 0,
            Coef::Big(r) => r.is_zero(),
        }
    }

    fn is_one(&self) -> bool {
        matches!(self, Coef::Small(1))
    }

    fn normalize(r: Rational) -> Coef {
        Coef::from_rational(&r)
    }

    fn add_assign(&mut self, other: &Coef) {
        if let (Coef::Small(a), Coef::Small(b)) = (&*self, other) {
            if let Some(c) = a.checked_add(*b) {
                *self = Coef::Small(c);
                return;
            }
        }
        *self = Coef::normalize(self.to_rational() + other.to_rational());
    }

    fn mul(&self, other: &Coef) -> Coef {
        if let (Coef::Small(a), Coef::Small(b)) = (self, other) {
            if let Some(c) = a.checked_mul(*b) {
                return Coef::Small(c);
            }
        }
        Coef::normalize(self.to_rational() * other.to_rational())
    }
}

impl PartialEq for Coef {
    fn eq(&self, other: &Coef) -> bool {
        match (self, other) {
            (Coef::Small(a), Coef::Small(b)) => a == b,
            _ => self.to_rational() == other.to_rational(),
        }
    }
}

/// Linear combination of interned forests.
#[derive(Clone, Default, PartialEq)]
pub struct Combo {
    terms: FxHashMap<Key, Coef>,
}

impl Combo {
    /// The forest `ids` with coefficient one.
    pub fn single(ids: &[Id]) -> Self {
        let mut key = Key::from_slice(ids);
        key.sort_unstable();
        let mut c = Combo::default();
        c.add_term(key, Coef::ONE);
        c
    }

    fn add_term(&mut self, k: Key, c: Coef) {
        use std::collections::hash_map::Entry;
        match self.terms.entry(k) {
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
            Entry::Occupied(mut e) => {
                e.get_mut().add_assign(&c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn add_scaled(&mut self, other: &Combo, c: &Coef) {
        let one = c.is_one();
        for (k, x) in &other.terms {
            self.add_term(k.clone(), if one { x.clone() } else { x.mul(c) });
        }
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
}

/// Interning arena plus a grafting memo.
#[derive(Default)]
pub struct Engine {
    labels: Vec<Decoration>,
    label_ids: FxHashMap<Decoration, u32>,
    nodes: Vec<Node>,
    index: FxHashMap<NodeKey, Id>,
    grafts: FxHashMap<(Id, Id), (u32, u32)>,
    graft_results: Vec<Id>,
}

impl Engine {
    pub fn new() -> Self {
        Engine::default()
    }

    /// Number of distinct trees interned so far.
    pub fn interned(&self) -> usize {
        self.nodes.len()
    }

    fn node(&mut self, label: u32, mut children: Children) -> Id {
        children.sort_unstable();
        let mut key = NodeKey::with_capacity(children.len() + 1);
        key.push(label);
        key.extend_from_slice(&children);
        if let Some(&id) = self.index.get(&key) {
            return id;
        }
        let size = 1 + children.iter().map(|&c| self.nodes[c as usize].size).sum::<u32>();
        let id = self.nodes.len() as Id;
        self.nodes.push(Node { label, children, size });
        self.index.insert(key, id);
        id
    }

    fn label(&mut self, d: &Decoration) -> u32 {
        if let Some(&l) = self.label_ids.get(d) {
            return l;
        }
        let l = self.labels.len() as u32;
        self.labels.push(d.clone());
        self.label_ids.insert(d.clone(), l);
        l
    }

    pub fn intern(&mut self, t: &Tree) -> Id {
        let children: Children = t.children().iter().map(|c| self.intern(c)).collect();
        let label = self.label(t.label());
        self.node(label, children)
    }

    pub fn tree(&self, id: Id) -> Tree {
        let n = &self.nodes[id as usize];
        Tree::new(
            self.labels[n.label as usize].clone(),
            n.children.iter().map(|&c| self.tree(c)).collect(),
        )
    }

    fn size(&self, id: Id) -> u32 {
        self.nodes[id as usize].size
    }

    pub fn from_tree(&mut self, t: &Tree) -> Combo {
        let id = self.intern(t);
        let mut c = Combo::default();
        c.add_term(SmallVec::from_slice(&[id]), Coef::ONE);
        c
    }

    pub fn from_vector(&mut self, v: &GLVector) -> Combo {
        let mut out = Combo::default();
        for (f, c) in v {
            let mut key: Key = f.trees().iter().map(|t| self.intern(t)).collect();
            key.sort_unstable();
            out.add_term(key, Coef::from_rational(c));
        }
        out
    }

    pub fn to_vector(&self, c: &Combo) -> GLVector {
        c.terms
            .iter()
            .map(|(k, x)| (Forest::new(k.iter().map(|&id| self.tree(id)).collect()), x.to_rational()))
            .collect()
    }

    /// `t` with `s` attached under the preorder vertex `v`.
    fn graft_at(&mut self, t: Id, s: Id, v: u32) -> Id {
        let label = self.nodes[t as usize].label;
        let mut children = self.nodes[t as usize].children.clone();
        if v == 0 {
            children.push(s);
            return self.node(label, children);
        }
        let mut offset = 1;
        for i in 0..children.len() {
            let size = self.size(children[i]);
            if v < offset + size {
                children[i] = self.graft_at(children[i], s, v - offset);
                return self.node(label, children);
            }
            offset += size;
        }
        unreachable!("vertex index out of range")
    }

    /// One result per vertex of `t`, as a range into `graft_results`.
    fn graft(&mut self, t: Id, s: Id) -> std::ops::Range<usize> {
        let (start, len) = match self.grafts.get(&(t, s)) {
            Some(&r) => r,
            None => {
                let n = self.size(t);
                let mut r = Vec::with_capacity(n as usize);
                for v in 0..n {
                    r.push(self.graft_at(t, s, v));
                }
                let start = self.graft_results.len() as u32;
                self.graft_results.extend_from_slice(&r);
                self.grafts.insert((t, s), (start, n));
                (start, n)
            }
        };
        start as usize..(start + len) as usize
    }

    /// Attaches `extra[v]` under preorder vertex `v` of `t`, all at once.
    fn attach(&mut self, t: Id, extra: &[Children], next: &mut usize) -> Id {
        let idx = *next;
        let size = self.size(t) as usize;
        if extra[idx..idx + size].iter().all(|e| e.is_empty()) {
            *next += size;
            return t;
        }
        *next += 1;
        let label = self.nodes[t as usize].label;
        let mut children = self.nodes[t as usize].children.clone();
        for c in children.iter_mut() {
            *c = self.attach(*c, extra, next);
        }
        children.extend_from_slice(&extra[idx]);
        self.node(label, children)
    }

    /// Basis action `F ↶ H` (`stay = false`) or product `F ∗ H`
    /// (`stay = true`, trees of `H` may also remain separate).
    fn combine(&mut self, f: &[Id], h: &[Id], stay: bool, coeff: &Coef, out: &mut Combo) {
        let deg: u32 = f.iter().map(|&t| self.size(t)).sum();
        if h.is_empty() {
            out.add_term(SmallVec::from_slice(f), coeff.clone());
            return;
        }
        if h.len() == 1 {
            let s = h[0];
            if stay {
                let mut k: Key = SmallVec::from_slice(f);
                k.push(s);
                k.sort_unstable();
                out.add_term(k, coeff.clone());
            }
            for (i, &t) in f.iter().enumerate() {
                for r in self.graft(t, s) {
                    let mut k: Key = SmallVec::from_slice(f);
                    k[i] = self.graft_results[r];
                    k.sort_unstable();
                    out.add_term(k, coeff.clone());
                }
            }
            return;
        }
        let choices = deg as usize + usize::from(stay);
        if choices == 0 {
            return;
        }
        let mut choice = vec![0usize; h.len()];
        let mut extra: Vec<Children> = vec![Children::new(); deg as usize];
        loop {
            extra.iter_mut().for_each(|e| e.clear());
            let mut k: Key = SmallVec::new();
            for (j, &v) in choice.iter().enumerate() {
                if v == deg as usize {
                    k.push(h[j]);
                } else {
                    extra[v].push(h[j]);
                }
            }
            let mut offset = 0;
            for &t in f {
                let mut next = offset;
                let r = self.attach(t, &extra, &mut next);
                offset = next;
                k.push(r);
            }
            k.sort_unstable();
            out.add_term(k, coeff.clone());
            let mut i = h.len();
            loop {
                if i == 0 {
                    return;
                }
                i -= 1;
                choice[i] += 1;
                if choice[i] < choices {
                    break;
                }
                choice[i] = 0;
            }
        }
    }

    /// Bilinear forest action `x ↶ y`.
    pub fn act(&mut self, x: &Combo, y: &Combo) -> Combo {
        self.bilinear(x, y, false)
    }

    /// Bilinear Grossman–Larson product `x ∗ y`.
    pub fn mul(&mut self, x: &Combo, y: &Combo) -> Combo {
        self.bilinear(x, y, true)
    }

    fn bilinear(&mut self, x: &Combo, y: &Combo, stay: bool) -> Combo {
        let mut out = Combo::default();
        out.terms.reserve(4 * x.len() * y.len());
        for (f, a) in &x.terms {
            for (h, b) in &y.terms {
                let c = if a.is_one() {
                    b.clone()
                } else if b.is_one() {
                    a.clone()
                } else {
                    a.mul(b)
                };
                self.combine(f, h, stay, &c, &mut out);
            }
        }
        out
    }

    pub fn unit(&self) -> Combo {
        let mut c = Combo::default();
        c.add_term(Key::new(), Coef::ONE);
        c
    }

    /// Block element `t_P` (see [`super::block_element`]).
    pub fn block_element(&mut self, ts: &[Combo], block: &[usize]) -> Combo {
        let mut sorted = block.to_vec();
        sorted.sort_unstable();
        let (&top, rest) = sorted.split_last().expect("blocks are nonempty");
        let mut out = Combo::default();
        for sigma in Permutation::all(rest.len()) {
            let order = sigma.permute(rest);
            let mut acc = ts[top - 1].clone();
            for &p in order.iter().rev() {
                acc = self.act(&ts[p - 1], &acc);
            }
            out.add_scaled(&acc, &Coef::ONE);
        }
        out
    }

    /// Evaluates `Σ sign · (((base ⋆ t_{P_1}) ⋆ t_{P_2}) ⋆ ···)` over the
    /// chains of `plan`, with `⋆` the product (`stay`) or the action.
    fn evaluate(&mut self, plan: &ChainPlan, base: &Combo, ts: &[Combo], stay: bool) -> Combo {
        let mut blocks: Vec<Option<Combo>> = vec![None; plan.blocks().len()];
        let mut values: Vec<Combo> = Vec::with_capacity(plan.len());
        for step in plan.steps() {
            let mut value = Combo::default();
            if step.constant != 0 {
                value.add_scaled(base, &Coef::Small(step.constant));
            }
            for &(child, block) in &step.terms {
                if blocks[block].is_none() {
                    blocks[block] = Some(self.block_element(ts, &plan.blocks()[block]));
                }
                let b = blocks[block].as_ref().expect("computed above");
                let term = self.bilinear(&values[child], b, stay);
                value.add_scaled(&term, &Coef::ONE);
            }
            values.push(value);
        }
        values.pop().unwrap_or_default()
    }

    pub fn expand_forest(&mut self, ts: &[Tree], conventions: &Conventions) -> Result<GLVector> {
        let ids: Vec<Id> = ts.iter().map(|t| self.intern(t)).collect();
        let out = self.expand_ids(&ids, conventions)?;
        Ok(self.to_vector(&out))
    }

    /// [`Engine::expand_forest`] on interned trees, without conversion.
    pub fn expand_ids(&mut self, ids: &[Id], conventions: &Conventions) -> Result<Combo> {
        if ids.is_empty() {
            return Err(Error::Empty("expand_forest needs at least one tree"));
        }
        let plan = ChainPlan::new(&conventions.chains(ids.len())?);
        Ok(self.expand_planned(ids, &plan))
    }

    /// Expansion with a prepared plan, for callers that expand many
    /// tuples of the same length.
    pub fn expand_planned(&mut self, ids: &[Id], plan: &ChainPlan) -> Combo {
        let vs: Vec<Combo> = ids.iter().map(|&t| Combo::single(&[t])).collect();
        let unit = self.unit();
        self.evaluate(plan, &unit, &vs, true)
    }

    pub fn brace_closed_form(
        &mut self,
        l: &Tree,
        ls: &[Tree],
        conventions: &Conventions,
    ) -> Result<GLVector> {
        let root = self.from_tree(l);
        if ls.is_empty() {
            return Ok(self.to_vector(&root));
        }
        let vs: Vec<Combo> = ls.iter().map(|t| self.from_tree(t)).collect();
        let plan = ChainPlan::new(&conventions.chains(ls.len())?);
        let out = self.evaluate(&plan, &root, &vs, false);
        Ok(self.to_vector(&out))
    }
}
