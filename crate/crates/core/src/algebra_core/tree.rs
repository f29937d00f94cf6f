//! Decorated rooted trees and forests in canonical form.
//!
//! Children of every vertex are kept sorted by the order
//! (vertex count, root decoration, sorted child list), so structural
//! equality coincides with equality of the canonical serialization.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Vertex label drawn from a finite alphabet.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Decoration(Arc<str>);

impl Decoration {
    pub fn new(name: &str) -> Self {
        Decoration(Arc::from(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Decoration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Decoration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Decoration {
    fn from(s: &str) -> Self {
        Decoration::new(s)
    }
}

/// The set of admissible decorations. An open alphabet accepts any
/// identifier.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Option<BTreeSet<Decoration>>,
}

impl Alphabet {
    pub fn open() -> Self {
        Alphabet { symbols: None }
    }

    pub fn new<'a>(symbols: impl IntoIterator<Item = &'a str>) -> Self {
        Alphabet { symbols: Some(symbols.into_iter().map(Decoration::new).collect()) }
    }

    pub fn check(&self, d: &Decoration) -> Result<()> {
        match &self.symbols {
            Some(set) if !set.contains(d) => Err(Error::UnknownDecoration(d.to_string())),
            _ => Ok(()),
        }
    }

    pub fn symbols(&self) -> Option<impl Iterator<Item = &Decoration>> {
        self.symbols.as_ref().map(|s| s.iter())
    }
}

/// Subtrees are shared, so cloning a tree is cheap.
// equality only adds a pointer shortcut, so the derived hash agrees with it
#[allow(clippy::derived_hash_with_manual_eq)]
#[derive(Clone, Eq, Hash)]
pub struct Tree {
    label: Decoration,
    children: Arc<[Tree]>,
    size: usize,
}

impl PartialEq for Tree {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size
            && self.label == other.label
            && (Arc::ptr_eq(&self.children, &other.children) || self.children == other.children)
    }
}

impl Tree {
    pub fn leaf(label: impl Into<Decoration>) -> Self {
        Tree { label: label.into(), children: Arc::new([]), size: 1 }
    }

    /// Builds a tree and canonicalizes the child multiset.
    pub fn new(label: impl Into<Decoration>, mut children: Vec<Tree>) -> Self {
        children.sort();
        let size = 1 + children.iter().map(|c| c.size).sum::<usize>();
        Tree { label: label.into(), children: children.into(), size }
    }

    pub fn label(&self) -> &Decoration {
        &self.label
    }

    pub fn children(&self) -> &[Tree] {
        &self.children
    }

    /// Number of vertices.
    pub fn size(&self) -> usize {
        self.size
    }

    /// The branches as a forest.
    pub fn branches(&self) -> Forest {
        Forest { trees: self.children.to_vec() }
    }

    /// Labels in preorder, root first.
    pub fn labels(&self) -> Vec<Decoration> {
        let mut out = Vec::with_capacity(self.size);
        fn walk(t: &Tree, out: &mut Vec<Decoration>) {
            out.push(t.label.clone());
            t.children.iter().for_each(|c| walk(c, out));
        }
        walk(self, &mut out);
        out
    }

    /// Attaches `extra[v]` as new children of the vertex with preorder
    /// index `v`. `extra` must have one slot per vertex.
    pub fn attach(&self, extra: &[Vec<&Tree>]) -> Tree {
        debug_assert_eq!(extra.len(), self.size);
        let mut next = 0;
        self.attach_from(&mut next, extra)
    }

    fn attach_from(&self, next: &mut usize, extra: &[Vec<&Tree>]) -> Tree {
        let idx = *next;
        if extra[idx..idx + self.size].iter().all(Vec::is_empty) {
            *next += self.size;
            return self.clone();
        }
        *next += 1;
        let mut children: Vec<Tree> =
            self.children.iter().map(|c| c.attach_from(next, extra)).collect();
        children.extend(extra[idx].iter().map(|s| (*s).clone()));
        Tree::new(self.label.clone(), children)
    }

    /// Every tree obtained by linking the root of `s` to one vertex of
    /// `self`, one entry per vertex (duplicates kept).
    pub fn graft_everywhere(&self, s: &Tree) -> Vec<Tree> {
        let mut slots: Vec<Vec<&Tree>> = vec![Vec::new(); self.size];
        (0..self.size)
            .map(|v| {
                slots[v].push(s);
                let t = self.attach(&slots);
                slots[v].clear();
                t
            })
            .collect()
    }
}

impl Ord for Tree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size
            .cmp(&other.size)
            .then_with(|| self.label.cmp(&other.label))
            .then_with(|| {
                if Arc::ptr_eq(&self.children, &other.children) {
                    Ordering::Equal
                } else {
                    self.children.cmp(&other.children)
                }
            })
    }
}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)?;
        if !self.children.is_empty() {
            write!(f, "[")?;
            for (i, c) in self.children.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{c}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Commutative product of trees; the empty forest is the unit `e`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Forest {
    trees: Vec<Tree>,
}

impl Forest {
    pub fn empty() -> Self {
        Forest::default()
    }

    pub fn new(mut trees: Vec<Tree>) -> Self {
        trees.sort();
        Forest { trees }
    }

    pub fn single(t: Tree) -> Self {
        Forest { trees: vec![t] }
    }

    pub fn trees(&self) -> &[Tree] {
        &self.trees
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    /// Number of trees.
    pub fn weight(&self) -> usize {
        self.trees.len()
    }

    /// Total number of vertices.
    pub fn degree(&self) -> usize {
        self.trees.iter().map(Tree::size).sum()
    }

    /// The single tree of a weight-one forest.
    pub fn as_tree(&self) -> Option<&Tree> {
        match self.trees.as_slice() {
            [t] => Some(t),
            _ => None,
        }
    }

    /// Commutative forest product.
    pub fn mul(&self, other: &Forest) -> Forest {
        let mut trees = Vec::with_capacity(self.trees.len() + other.trees.len());
        let (mut i, mut j) = (0, 0);
        while i < self.trees.len() && j < other.trees.len() {
            if self.trees[i] <= other.trees[j] {
                trees.push(self.trees[i].clone());
                i += 1;
            } else {
                trees.push(other.trees[j].clone());
                j += 1;
            }
        }
        trees.extend_from_slice(&self.trees[i..]);
        trees.extend_from_slice(&other.trees[j..]);
        Forest { trees }
    }
}

/// Every tree with exactly `size` vertices over `labels`, sorted.
pub fn trees_of_size(labels: &[Decoration], size: usize) -> Vec<Tree> {
    if size == 0 {
        return Vec::new();
    }
    let mut out: Vec<Tree> = forests_of_size(labels, size - 1)
        .into_iter()
        .flat_map(|f| labels.iter().map(move |l| Tree::new(l.clone(), f.trees.clone())))
        .collect();
    out.sort();
    out
}

/// Every tree with at most `max_size` vertices over `labels`, sorted.
pub fn trees_up_to(labels: &[Decoration], max_size: usize) -> Vec<Tree> {
    (1..=max_size).flat_map(|n| trees_of_size(labels, n)).collect()
}

/// Every forest of total degree `degree` over `labels` (`e` for zero).
pub fn forests_of_size(labels: &[Decoration], degree: usize) -> Vec<Forest> {
    fn go(
        pool: &[Vec<Tree>],
        rest: usize,
        min: (usize, usize),
        cur: &mut Vec<Tree>,
        out: &mut Vec<Forest>,
    ) {
        if rest == 0 {
            out.push(Forest::new(cur.clone()));
            return;
        }
        for size in min.0..=rest {
            let start = if size == min.0 { min.1 } else { 0 };
            for idx in start..pool[size].len() {
                cur.push(pool[size][idx].clone());
                go(pool, rest - size, (size, idx), cur, out);
                cur.pop();
            }
        }
    }
    let pool: Vec<Vec<Tree>> = (0..=degree).map(|n| trees_of_size(labels, n)).collect();
    let mut out = Vec::new();
    go(&pool, degree, (1, 0), &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.trees.is_empty() {
            return write!(f, "e");
        }
        for (i, t) in self.trees.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Tree> for Forest {
    fn from(t: Tree) -> Self {
        Forest::single(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(label: &str, children: Vec<Tree>) -> Tree {
        Tree::new(label, children)
    }

    #[test]
    fn children_are_a_multiset() {
        let x = t("a", vec![Tree::leaf("c"), Tree::leaf("b")]);
        let y = t("a", vec![Tree::leaf("b"), Tree::leaf("c")]);
        assert_eq!(x, y);
        assert_eq!(x.to_string(), "a[b,c]");
    }

    #[test]
    fn order_is_size_then_label_then_children() {
        let big = t("a", vec![Tree::leaf("d")]);
        let small = Tree::leaf("z");
        assert!(small < big);
        assert!(Tree::leaf("a") < Tree::leaf("b"));
        let x = t("a", vec![big.clone(), small.clone()]);
        assert_eq!(x.to_string(), "a[z,a[d]]");
        assert_eq!(x.size(), 4);
    }

    #[test]
    fn grafting_sites() {
        let ab = t("a", vec![Tree::leaf("b")]);
        let grafts: Vec<String> =
            ab.graft_everywhere(&Tree::leaf("c")).iter().map(|x| x.to_string()).collect();
        assert_eq!(grafts, vec!["a[b,c]", "a[b[c]]"]);
    }

    #[test]
    fn enumeration_counts() {
        // rooted trees with 1..5 vertices: 1, 1, 2, 4, 9
        let one = [Decoration::new("a")];
        let counts: Vec<usize> = (1..=5).map(|n| trees_of_size(&one, n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9]);
        let two = [Decoration::new("a"), Decoration::new("b")];
        let counts: Vec<usize> = (1..=3).map(|n| trees_of_size(&two, n).len()).collect();
        assert_eq!(counts, vec![2, 4, 14]);
        assert_eq!(trees_up_to(&two, 3).len(), 20);
        assert_eq!(forests_of_size(&one, 0), vec![Forest::empty()]);
        // forests of a single label: 1, 1, 2, 4, 9 shifted (forests of n = trees of n+1)
        let counts: Vec<usize> = (0..=4).map(|n| forests_of_size(&one, n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9]);
    }

    #[test]
    fn forest_product_is_additive() {
        let f = Forest::new(vec![Tree::leaf("b"), t("a", vec![Tree::leaf("a")])]);
        let g = Forest::single(Tree::leaf("a"));
        let fg = f.mul(&g);
        assert_eq!(fg.to_string(), "a.b.a[a]");
        assert_eq!(fg.degree(), f.degree() + g.degree());
        assert_eq!(fg.weight(), f.weight() + g.weight());
        assert_eq!(Forest::empty().to_string(), "e");
    }
}
