//! Permutation statistics, admissible ordered set partitions,
//! compositions, and the rational coefficient tables (c-coefficients,
//! Bernoulli numbers).

use std::collections::BTreeSet;
use std::fmt;

use rustc_hash::FxHashMap;

use crate::algebra_core::scalar::{binomial, factorial, int, Rational};
use crate::error::{Error, Result};

/// Bijection of `{1..n}`, stored in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || seen[x] {
                return Err(Error::Precondition(format!("{images:?} is not a permutation of 1..{n}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// `σ(i)` for `1 ≤ i ≤ n`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<usize> = (1..=n).collect();
        let mut out = vec![Permutation { images: cur.clone() }];
        loop {
            let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
                return out;
            };
            let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
            out.push(Permutation { images: cur.clone() });
        }
    }

    /// Applies the permutation to a list: `out[i] = items[σ(i+1) - 1]`.
    pub fn permute<T: Clone>(&self, items: &[T]) -> Vec<T> {
        self.images.iter().map(|&x| items[x - 1].clone()).collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Positions `i` with `σ(i) > σ(i+1)`.
pub fn descent_set(sigma: &Permutation) -> BTreeSet<usize> {
    sigma
        .images
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i + 1)
        .collect()
}

/// Positions of the left-to-right maxima (strict records).
pub fn record_positions(sigma: &Permutation) -> Vec<usize> {
    let mut best = 0;
    let mut out = Vec::new();
    for (i, &x) in sigma.images.iter().enumerate() {
        if x > best {
            best = x;
            out.push(i + 1);
        }
    }
    out
}

/// Cuts the one-line word in front of every record. Each cycle starts
/// with its maximum and the maxima increase from left to right.
pub fn canonical_cycle_decomposition(sigma: &Permutation) -> Vec<Vec<usize>> {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut best = 0;
    for &x in &sigma.images {
        if x > best {
            best = x;
            cycles.push(vec![x]);
        } else {
            cycles.last_mut().expect("first entry is a record").push(x);
        }
    }
    cycles
}

/// Inverse of [`canonical_cycle_decomposition`]: concatenates the cycles.
pub fn flatten_cycles(cycles: &[Vec<usize>]) -> Result<Permutation> {
    Permutation::new(cycles.iter().flatten().copied().collect())
}

/// Ordered set partition `(P_1, …, P_k)` of `{1..n}`; each block sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionChain {
    blocks: Vec<Vec<usize>>,
}

impl PartitionChain {
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut all: Vec<usize> = blocks.iter().flatten().copied().collect();
        all.sort_unstable();
        if blocks.iter().any(Vec::is_empty) || all != (1..=all.len()).collect::<Vec<_>>() {
            return Err(Error::Precondition(format!("{blocks:?} is not a set partition")));
        }
        blocks.iter_mut().for_each(|b| b.sort_unstable());
        Ok(PartitionChain { blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Total number of elements `n`.
    pub fn size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// `(-1)^(n-k)`
    pub fn sign(&self) -> Rational {
        if (self.size() - self.len()).is_multiple_of(2) {
            int(1)
        } else {
            int(-1)
        }
    }
}

impl fmt::Display for PartitionChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            let inner: Vec<String> = b.iter().map(usize::to_string).collect();
            write!(f, "{{{}}}", inner.join(","))?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for PartitionChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All unordered set partitions of `{1..n}`, blocks listed by their
/// minima (restricted growth strings).
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(i: usize, n: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i > n {
            out.push(blocks.clone());
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(i);
            go(i + 1, n, blocks, out);
            blocks[b].pop();
        }
        blocks.push(vec![i]);
        go(i + 1, n, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    go(1, n, &mut Vec::new(), &mut out);
    out
}

/// Ordered partitions of `{1..n}` whose block maxima strictly increase.
pub fn admissible_partition_chains(n: usize) -> Result<Vec<PartitionChain>> {
    Conventions::standard().chains(n)
}

/// Sequence of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Empty("composition"));
        }
        if parts.contains(&0) {
            return Err(Error::Precondition(format!("composition {parts:?} has a zero part")));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", inner.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All compositions of `n`, ordered by number of parts then
/// lexicographically descending on the parts.
pub fn compositions(n: usize) -> Vec<Composition> {
    fn go(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for first in (1..=rest).rev() {
            cur.push(first);
            go(rest - first, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    if n > 0 {
        go(n, &mut Vec::new(), &mut raw);
    }
    raw.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.cmp(a)));
    raw.into_iter().map(|parts| Composition { parts }).collect()
}

/// `c(s_1, …, s_k) = n! / ∏_j (s_1 + … + s_j)`.
pub fn c_coefficient(c: &Composition) -> Result<Rational> {
    Conventions::standard().c_coefficient(c)
}

/// Bernoulli numbers with `B_1 = -1/2`.
pub fn bernoulli_number(n: usize) -> Rational {
    let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        if m == 0 {
            b.push(int(1));
            continue;
        }
        let s = (0..m).fold(int(0), |acc, j| acc + binomial(m + 1, j) * &b[j]);
        b.push(-s / int(m as i64 + 1));
    }
    b.pop().unwrap()
}

/// Number of permutations of `S_n` whose descent set is exactly `s`.
pub fn descent_class_size(n: usize, s: &BTreeSet<usize>) -> usize {
    Permutation::all(n).iter().filter(|p| &descent_set(p) == s).count()
}

/// Deliberate corruptions of the coefficient conventions, used to make
/// sure the verification suite is not vacuous.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mutation {
    /// Use `B_1 = +1/2`.
    FlipBernoulliOne,
    /// Negate the c-coefficient of one composition.
    FlipCCoefficient(Composition),
    /// Require block maxima to decrease instead of increase.
    ReverseAdmissibility,
}

/// The coefficient conventions every expansion draws from. The standard
/// conventions are the correct ones; a mutated set corrupts exactly one
/// of them.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Conventions {
    mutation: Option<Mutation>,
}

impl Conventions {
    pub const fn standard() -> Self {
        Conventions { mutation: None }
    }

    pub fn mutated(m: Mutation) -> Self {
        Conventions { mutation: Some(m) }
    }

    pub fn mutation(&self) -> Option<&Mutation> {
        self.mutation.as_ref()
    }

    pub fn bernoulli(&self, n: usize) -> Rational {
        let b = bernoulli_number(n);
        if n == 1 && self.mutation == Some(Mutation::FlipBernoulliOne) {
            -b
        } else {
            b
        }
    }

    pub fn c_coefficient(&self, c: &Composition) -> Result<Rational> {
        if c.parts.is_empty() {
            return Err(Error::Empty("composition"));
        }
        let mut partial = 0;
        let mut denom = int(1);
        for &s in &c.parts {
            partial += s;
            denom *= int(partial as i64);
        }
        let value = factorial(partial) / denom;
        match &self.mutation {
            Some(Mutation::FlipCCoefficient(m)) if m == c => Ok(-value),
            _ => Ok(value),
        }
    }

    /// The admissibility statistic: for every pair of blocks `k < i`,
    /// `max(P_i)` exceeds every element of `P_k`.
    pub fn admissible(&self, blocks: &[Vec<usize>]) -> bool {
        let maxima: Vec<usize> = blocks.iter().map(|b| *b.iter().max().unwrap()).collect();
        let reversed = self.mutation == Some(Mutation::ReverseAdmissibility);
        maxima.windows(2).all(|w| if reversed { w[1] < w[0] } else { w[1] > w[0] })
    }

    /// Admissible ordered partitions of `{1..n}` under these conventions.
    pub fn chains(&self, n: usize) -> Result<Vec<PartitionChain>> {
        if n == 0 {
            return Err(Error::Empty("partition chains need n >= 1"));
        }
        let mut out = Vec::new();
        for partition in set_partitions(n) {
            let k = partition.len();
            for order in Permutation::all(k) {
                let blocks = order.permute(&partition);
                if self.admissible(&blocks) {
                    out.push(PartitionChain { blocks });
                }
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }
}

/// A signed sum over partition chains, regrouped by last block so that
/// chains sharing an initial segment share its evaluation.
#[derive(Clone, Debug)]
pub struct ChainPlan {
    blocks: Vec<Vec<usize>>,
    /// In dependency order; the last step is the whole sum.
    steps: Vec<PlanStep>,
}

#[derive(Clone, Debug)]
pub struct PlanStep {
    /// Multiple of the base element (sum of signs of exhausted chains).
    pub constant: i64,
    /// `(earlier step, block)`: the step's value followed by that block.
    pub terms: Vec<(usize, usize)>,
}

type Prefixes = Vec<(Vec<Vec<usize>>, i64)>;

impl ChainPlan {
    pub fn new(chains: &[PartitionChain]) -> Self {
        let list: Prefixes = chains
            .iter()
            .map(|c| (c.blocks().to_vec(), if (c.size() - c.len()) % 2 == 0 { 1 } else { -1 }))
            .collect();
        let mut plan = ChainPlan { blocks: Vec::new(), steps: Vec::new() };
        let mut memo = FxHashMap::default();
        let mut block_ids = FxHashMap::default();
        plan.build(list, &mut memo, &mut block_ids);
        plan
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn steps(&self) -> &[PlanStep] {
        &self.steps
    }

    /// Evaluates the sum with `apply(prev, block)` standing for the value
    /// `prev` followed by one block, `None` meaning the empty prefix.
    /// Returns the multiple of the empty prefix and the remaining value.
    pub fn evaluate<T>(
        &self,
        mut block: impl FnMut(&[usize]) -> T,
        mut apply: impl FnMut(Option<&T>, &T) -> T,
        mut accumulate: impl FnMut(&mut Option<T>, T, i64),
    ) -> (i64, Option<T>) {
        let mut blocks: Vec<Option<T>> = (0..self.blocks.len()).map(|_| None).collect();
        let mut values: Vec<(i64, Option<T>)> = Vec::with_capacity(self.steps.len());
        for step in &self.steps {
            let mut rest = None;
            for &(child, b) in &step.terms {
                if blocks[b].is_none() {
                    blocks[b] = Some(block(&self.blocks[b]));
                }
                let bv = blocks[b].as_ref().expect("computed above");
                let (c, prev) = &values[child];
                if *c != 0 {
                    accumulate(&mut rest, apply(None, bv), *c);
                }
                if let Some(p) = prev {
                    accumulate(&mut rest, apply(Some(p), bv), 1);
                }
            }
            values.push((step.constant, rest));
        }
        values.pop().unwrap_or((0, None))
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    fn build(
        &mut self,
        mut list: Prefixes,
        memo: &mut FxHashMap<Prefixes, usize>,
        block_ids: &mut FxHashMap<Vec<usize>, usize>,
    ) -> usize {
        list.sort();
        if let Some(&i) = memo.get(&list) {
            return i;
        }
        let mut constant = 0;
        let mut groups: Vec<(Vec<usize>, Prefixes)> = Vec::new();
        for (mut blocks, sign) in list.iter().cloned() {
            let Some(last) = blocks.pop() else {
                constant += sign;
                continue;
            };
            match groups.iter_mut().find(|(b, _)| *b == last) {
                Some((_, g)) => g.push((blocks, sign)),
                None => groups.push((last, vec![(blocks, sign)])),
            }
        }
        let mut terms = Vec::with_capacity(groups.len());
        for (block, prefixes) in groups {
            let child = self.build(prefixes, memo, block_ids);
            let next = self.blocks.len();
            let b = *block_ids.entry(block.clone()).or_insert(next);
            if b == next {
                self.blocks.push(block);
            }
            terms.push((child, b));
        }
        self.steps.push(PlanStep { constant, terms });
        let i = self.steps.len() - 1;
        memo.insert(list, i);
        i
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra_core::scalar::rat;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn comp(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    /// Brute force: every ordered set partition, filtered by the literal
    /// quantified statement.
    fn chains_oracle(n: usize) -> Vec<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        for p in set_partitions(n) {
            for order in Permutation::all(p.len()) {
                let blocks = order.permute(&p);
                let ok = (0..blocks.len()).all(|i| {
                    (0..i).all(|k| {
                        let sup = blocks[i].iter().max().unwrap();
                        blocks[k].iter().all(|j| sup > j)
                    })
                });
                if ok {
                    out.push(blocks);
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn chains_small() {
        let c1 = admissible_partition_chains(1).unwrap();
        assert_eq!(c1.len(), 1);
        assert_eq!(c1[0].to_string(), "({1})");
        let c2: Vec<String> =
            admissible_partition_chains(2).unwrap().iter().map(|c| c.to_string()).collect();
        assert_eq!(c2, vec!["({1,2})", "({1},{2})"]);
        assert_eq!(admissible_partition_chains(3).unwrap().len(), 5);
        assert!(admissible_partition_chains(0).is_err());
    }

    #[test]
    fn chains_match_oracle_and_bell() {
        let bell = [1, 1, 2, 5, 15, 52, 203, 877];
        for n in 1..=6 {
            let mut got: Vec<Vec<Vec<usize>>> =
                admissible_partition_chains(n).unwrap().iter().map(|c| c.blocks.clone()).collect();
            got.sort();
            assert_eq!(got, chains_oracle(n), "n = {n}");
            assert_eq!(got.len(), bell[n]);
        }
    }

    #[test]
    fn chain_term_count_is_factorial() {
        for n in 1..=7 {
            let total: Rational = admissible_partition_chains(n)
                .unwrap()
                .iter()
                .map(|c| c.blocks.iter().fold(int(1), |acc, b| acc * factorial(b.len() - 1)))
                .fold(int(0), |acc, x| acc + x);
            assert_eq!(total, factorial(n), "n = {n}");
        }
    }

    #[test]
    fn descents() {
        assert!(descent_set(&Permutation::identity(4)).is_empty());
        assert_eq!(descent_set(&perm(&[2, 1])), BTreeSet::from([1]));
        assert_eq!(descent_set(&perm(&[1, 3, 2, 4])), BTreeSet::from([2]));
    }

    #[test]
    fn cycles_from_records() {
        let show = |c: Vec<Vec<usize>>| {
            c.iter()
                .map(|cy| format!("({})", cy.iter().map(usize::to_string).collect::<String>()))
                .collect::<String>()
        };
        assert_eq!(
            show(canonical_cycle_decomposition(&perm(&[3, 2, 5, 4, 1, 6, 8, 7]))),
            "(32)(541)(6)(87)"
        );
        assert_eq!(show(canonical_cycle_decomposition(&perm(&[4, 3, 5, 1, 2]))), "(43)(512)");
        assert_eq!(canonical_cycle_decomposition(&Permutation::identity(4)).len(), 4);
    }

    #[test]
    fn cycle_decomposition_is_a_bijection() {
        for n in 1..=6 {
            let mut seen = BTreeSet::new();
            for p in Permutation::all(n) {
                let cycles = canonical_cycle_decomposition(&p);
                assert_eq!(cycles.len(), record_positions(&p).len());
                for w in cycles.windows(2) {
                    assert!(w[0][0] < w[1][0]);
                }
                for c in &cycles {
                    assert!(c[1..].iter().all(|x| *x < c[0]));
                }
                assert_eq!(flatten_cycles(&cycles).unwrap(), p);
                assert!(seen.insert(cycles));
            }
            assert_eq!(int(seen.len() as i64), factorial(n));
        }
    }

    #[test]
    fn descent_classes_are_multinomials() {
        for n in 1..=6 {
            for c in compositions(n) {
                let mut eta = BTreeSet::new();
                let mut acc = 0;
                for &p in &c.parts()[..c.parts().len() - 1] {
                    acc += p;
                    eta.insert(acc);
                }
                let count = Permutation::all(n)
                    .iter()
                    .filter(|p| descent_set(p).is_subset(&eta))
                    .count();
                let multinomial =
                    c.parts().iter().fold(factorial(n), |acc, &p| acc / factorial(p));
                assert_eq!(int(count as i64), multinomial, "{c}");
            }
        }
    }

    #[test]
    fn c_coefficients() {
        assert_eq!(c_coefficient(&comp(&[1, 1])).unwrap(), int(1));
        assert_eq!(c_coefficient(&comp(&[2])).unwrap(), int(1));
        assert_eq!(c_coefficient(&comp(&[3])).unwrap(), int(2));
        assert_eq!(c_coefficient(&comp(&[2, 1])).unwrap(), int(1));
        assert_eq!(c_coefficient(&comp(&[1, 2])).unwrap(), int(2));
        assert_eq!(c_coefficient(&comp(&[1, 1, 1])).unwrap(), int(1));
        assert!(Composition::new(vec![]).is_err());
    }

    #[test]
    fn composition_listing() {
        let c3: Vec<String> = compositions(3).iter().map(|c| c.to_string()).collect();
        assert_eq!(c3, vec!["(3)", "(2,1)", "(1,2)", "(1,1,1)"]);
        assert_eq!(compositions(5).len(), 16);
    }

    #[test]
    fn bernoulli() {
        assert_eq!(bernoulli_number(0), int(1));
        assert_eq!(bernoulli_number(1), rat(-1, 2));
        assert_eq!(bernoulli_number(2), rat(1, 6));
        assert_eq!(bernoulli_number(3), int(0));
        assert_eq!(bernoulli_number(4), rat(-1, 30));
    }

    #[test]
    fn mutations_change_exactly_one_thing() {
        let m = Conventions::mutated(Mutation::FlipBernoulliOne);
        assert_eq!(m.bernoulli(1), rat(1, 2));
        assert_eq!(m.bernoulli(2), rat(1, 6));
        let m = Conventions::mutated(Mutation::FlipCCoefficient(comp(&[1, 1])));
        assert_eq!(m.c_coefficient(&comp(&[1, 1])).unwrap(), int(-1));
        assert_eq!(m.c_coefficient(&comp(&[2])).unwrap(), int(1));
        let m = Conventions::mutated(Mutation::ReverseAdmissibility);
        let c2: Vec<String> = m.chains(2).unwrap().iter().map(|c| c.to_string()).collect();
        assert_eq!(c2, vec!["({1,2})", "({2},{1})"]);
    }

    #[test]
    fn plan_reproduces_chain_sum() {
        use std::collections::BTreeMap;
        type Formal = BTreeMap<Vec<Vec<usize>>, i64>;
        for conv in [Conventions::standard(), Conventions::mutated(Mutation::ReverseAdmissibility)] {
            for n in 1..=5 {
                let chains = conv.chains(n).unwrap();
                let plan = ChainPlan::new(&chains);
                let (c, rest) = plan.evaluate(
                    |b| Formal::from([(vec![b.to_vec()], 1)]),
                    |prev: Option<&Formal>, b| {
                        let empty = Formal::from([(vec![], 1)]);
                        let mut out = Formal::new();
                        for (p, x) in prev.unwrap_or(&empty) {
                            for (q, y) in b {
                                let mut k = p.clone();
                                k.extend(q.iter().cloned());
                                *out.entry(k).or_default() += x * y;
                            }
                        }
                        out
                    },
                    |acc, t, k| {
                        let a = acc.get_or_insert_with(Formal::new);
                        for (key, x) in t {
                            *a.entry(key).or_default() += k * x;
                        }
                    },
                );
                assert_eq!(c, 0);
                let mut got = rest.unwrap();
                got.retain(|_, x| *x != 0);
                let expected: Formal = chains
                    .iter()
                    .map(|ch| (ch.blocks().to_vec(), if ch.sign() == int(1) { 1 } else { -1 }))
                    .collect();
                assert_eq!(got, expected, "n={n}");
            }
        }
    }
}
