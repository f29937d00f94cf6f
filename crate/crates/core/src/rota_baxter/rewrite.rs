//! Step-by-step rewriting of unreduced expressions with a choice of
//! redex, used to compare rewrite orders against the direct product.

use std::sync::Arc;

use super::free::{reduce_word, Atom, RbExpr, RbWord};
use crate::algebra_core::poly::Poly;
use crate::algebra_core::scalar::Ring;

/// Which redex `R(u)R(v)` to rewrite next.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// First redex in preorder, in the first unreduced word.
    Leftmost,
    /// Last redex in preorder, in the last unreduced word.
    Rightmost,
    /// A redex of maximal nesting depth, in the first unreduced word.
    Innermost,
    /// Rebuilds each word with the reduced product directly.
    Recursive,
}

impl Strategy {
    pub const ALL: [Strategy; 4] =
        [Strategy::Leftmost, Strategy::Rightmost, Strategy::Innermost, Strategy::Recursive];
}

/// Position of a redex: wrapper indices from the top, then the index of
/// the left atom of the pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Redex {
    pub path: Vec<usize>,
    pub index: usize,
}

pub fn redexes(w: &RbWord) -> Vec<Redex> {
    let mut out = Vec::new();
    collect(w, &mut Vec::new(), &mut out);
    out
}

fn collect(w: &RbWord, path: &mut Vec<usize>, out: &mut Vec<Redex>) {
    let atoms = w.atoms();
    for (i, a) in atoms.iter().enumerate() {
        if let Atom::Wrapped(inner) = a {
            if matches!(atoms.get(i + 1), Some(Atom::Wrapped(_))) {
                out.push(Redex { path: path.clone(), index: i });
            }
            path.push(i);
            collect(inner, path, out);
            path.pop();
        }
    }
}

/// Applies `R(u)R(v) → R(R(u)v) + R(uR(v)) + th·R(uv)` once.
pub fn rewrite_at(w: &RbWord, redex: &Redex) -> RbExpr {
    rewrite_path(w, &redex.path, redex.index)
}

fn rewrite_path(w: &RbWord, path: &[usize], index: usize) -> RbExpr {
    let atoms = w.atoms();
    let splice = |i: usize, width: usize, inner: &RbExpr| -> RbExpr {
        let mut out = RbExpr::zero();
        for (x, c) in inner {
            let mut new = atoms[..i].to_vec();
            new.push(Atom::Wrapped(Arc::new(x.clone())));
            new.extend_from_slice(&atoms[i + width..]);
            out.add_term(RbWord::from_atoms(new).expect("nonempty"), c.clone());
        }
        out
    };
    match path.split_first() {
        Some((&i, rest)) => {
            let Atom::Wrapped(inner) = &atoms[i] else { unreachable!("paths follow wrappers") };
            splice(i, 1, &rewrite_path(inner, rest, index))
        }
        None => {
            let (Atom::Wrapped(u), Atom::Wrapped(v)) = (&atoms[index], &atoms[index + 1]) else {
                unreachable!("redexes are wrapped pairs")
            };
            let mut inner = RbExpr::zero();
            inner.add_term(RbWord::wrap((**u).clone()).concat(v), Poly::one());
            inner.add_term(u.concat(&RbWord::wrap((**v).clone())), Poly::one());
            inner.add_term(u.concat(v), Poly::var());
            splice(index, 2, &inner)
        }
    }
}

fn pick(w: &RbWord, strategy: Strategy) -> Option<Redex> {
    let all = redexes(w);
    match strategy {
        Strategy::Leftmost => all.into_iter().next(),
        Strategy::Rightmost => all.into_iter().last(),
        Strategy::Innermost => {
            let depth = all.iter().map(|r| r.path.len()).max()?;
            all.into_iter().find(|r| r.path.len() == depth)
        }
        Strategy::Recursive => unreachable!("handled separately"),
    }
}

/// Reduces an expression to normal form by repeated single steps.
pub fn rb_normal_form_with(x: &RbExpr, strategy: Strategy) -> RbExpr {
    if strategy == Strategy::Recursive {
        return x.linear(reduce_word);
    }
    let mut cur = x.clone();
    loop {
        let mut unreduced = cur.keys().filter(|w| !w.is_reduced());
        let target = match strategy {
            Strategy::Rightmost => unreduced.next_back(),
            _ => unreduced.next(),
        };
        let Some(w) = target.cloned() else { return cur };
        let redex = pick(&w, strategy).expect("unreduced words contain a redex");
        let c = cur.coeff(&w);
        let mut next = cur.filter(|k| *k != w);
        next.add_scaled(&rewrite_at(&w, &redex), &c);
        cur = next;
    }
}

/// Unique reduced form of an arbitrary expression.
pub fn rb_normal_form(x: &RbExpr) -> RbExpr {
    rb_normal_form_with(x, Strategy::Recursive)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rota_baxter::free::parse_rb;

    #[test]
    fn strategies_agree_on_examples() {
        for s in [
            "R(b) R(b) R(b)",
            "R(b1) R(b2)",
            "R(R(a) R(b)) R(c) a R(b) R(R(c))",
            "(2 - th) R(a) R(b R(a) R(c)) - R(a R(b)) R(b)",
        ] {
            let x = parse_rb(s).unwrap();
            let reference = rb_normal_form(&x);
            assert!(reference.keys().all(RbWord::is_reduced));
            for st in Strategy::ALL {
                assert_eq!(rb_normal_form_with(&x, st), reference, "{s} {st:?}");
            }
        }
    }

    #[test]
    fn single_step() {
        let x = parse_rb("a R(b) R(c)").unwrap();
        let w = x.keys().next().unwrap();
        let r = redexes(w);
        assert_eq!(r, vec![Redex { path: vec![], index: 1 }]);
        let expected = parse_rb("a R(R(b) c) + a R(b R(c)) + th a R(b c)").unwrap();
        assert_eq!(rewrite_at(w, &r[0]), expected);
        let nested = parse_rb("R(R(a) R(b)) c").unwrap();
        assert_eq!(redexes(nested.keys().next().unwrap())[0].path, vec![0]);
    }
}
