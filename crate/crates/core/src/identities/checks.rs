use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::models::{self, in_model, ModelKind, Sampled};
use super::{CheckParams, CheckReport, Counterexample, Status};
use crate::algebra_core::lincomb::GLVector;
use crate::algebra_core::matrix::Matrix;
use crate::algebra_core::poly::Poly;
use crate::algebra_core::scalar::{factorial, int, Rational};
use crate::algebra_core::tree::{trees_up_to, Decoration, Forest, Tree};
use crate::combinatorics::{
    canonical_cycle_decomposition, compositions, set_partitions, ChainPlan, Permutation,
};
use crate::error::{Error, Result};
use crate::grossman_larson::{
    block_element, brace, brace_closed_form_with, engine::Engine, gl_exp, gl_product, GLSeries, ProductMode,
};
use crate::magnus::{bch_formula, bch_series, brace_with_exp, magnus_in_model, mps_log, sharp_product};
use crate::ode::{dyson_series, graded_exp, texp_prelie_form, texp_symmetrized, Orientation};
use crate::rota_baxter::{
    iota, iterated_r, left_power, left_product, right_product, sample, star_product, symmetrized_iterated_r,
    MatrixPoly, MatrixSeq, RotaBaxter,
};

const LETTERS: [&str; 2] = ["a", "b"];

struct Report {
    id: &'static str,
    params: Vec<(String, String)>,
    stats: Vec<(String, String)>,
}

impl Report {
    fn new(id: &'static str) -> Self {
        Report { id, params: Vec::new(), stats: Vec::new() }
    }

    fn param(mut self, k: &str, v: impl ToString) -> Self {
        self.params.push((k.into(), v.to_string()));
        self
    }

    fn stat(&mut self, k: &str, v: impl ToString) {
        self.stats.push((k.into(), v.to_string()));
    }

    fn finish(self, cx: Option<Counterexample>) -> Result<CheckReport> {
        Ok(CheckReport {
            id: self.id.into(),
            params: self.params,
            stats: self.stats,
            status: if cx.is_some() { Status::Fail } else { Status::Pass },
            counterexample: cx,
        })
    }
}

fn cx(input: impl Into<String>, lhs: impl ToString, rhs: impl ToString) -> Option<Counterexample> {
    Some(Counterexample { input: input.into(), lhs: lhs.to_string(), rhs: rhs.to_string() })
}

fn bound(id: &str, n: usize, lo: usize, hi: usize) -> Result<usize> {
    if n < lo || n > hi {
        return Err(Error::OutOfRange(format!("{id} supports n in {lo}..={hi}, got {n}")));
    }
    Ok(n)
}

fn rng(p: &CheckParams) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(p.seed)
}

fn show_trees(ts: &[Tree]) -> String {
    ts.iter().map(Tree::to_string).collect::<Vec<_>>().join(" ")
}

fn show_list<T: std::fmt::Debug>(xs: &[T]) -> String {
    xs.iter().map(|x| format!("{x:?}")).collect::<Vec<_>>().join(" ; ")
}

fn random_tree<R: Rng>(r: &mut R, max_size: usize) -> Tree {
    let size = r.gen_range(1..=max_size);
    sample::tree(r, &LETTERS, size)
}

// ---- trees -------------------------------------------------------------

/// Expanding a forest through admissible chains gives back the forest.
/// Both sides meet only at the final comparison: the right side is the
/// forest itself.
pub(super) fn thm1(p: &CheckParams) -> Result<CheckReport> {
    let n = bound("thm1", p.n.unwrap_or(3), 1, 6)?;
    let mut report = Report::new("thm1").param("n", n);
    let labels: Vec<Decoration> = LETTERS.iter().map(|s| Decoration::new(s)).collect();
    let pool = trees_up_to(&labels, 3);
    let exhaustive = n <= 4;
    let chains = p.conventions.chains(n)?.len();
    let mut tuples = 0usize;
    let mut terms = 0usize;
    let mut failure = None;

    let mut test = |ts: &[Tree], plan: &ChainPlan, chains: usize| -> bool {
        let mut eng = Engine::new();
        let ids: Vec<_> = ts.iter().map(|t| eng.intern(t)).collect();
        let combo = eng.expand_planned(&ids, plan);
        let lhs = eng.to_vector(&combo);
        let rhs = GLVector::basis(Forest::new(ts.to_vec()));
        tuples += 1;
        terms += chains;
        if lhs != rhs {
            failure = cx(show_trees(ts), &lhs, &rhs);
            return false;
        }
        true
    };

    if exhaustive {
        'lengths: for len in 1..=n {
            let chain_list = p.conventions.chains(len)?;
            let plan = ChainPlan::new(&chain_list);
            let mut idx = vec![0usize; len];
            loop {
                let ts: Vec<Tree> = idx.iter().map(|&i| pool[i].clone()).collect();
                if !test(&ts, &plan, chain_list.len()) {
                    break 'lengths;
                }
                // odometer over pool^len
                let mut j = 0;
                while j < len {
                    idx[j] += 1;
                    if idx[j] < pool.len() {
                        break;
                    }
                    idx[j] = 0;
                    j += 1;
                }
                if j == len {
                    break;
                }
            }
        }
    } else {
        let samples = p.samples.unwrap_or(100);
        report = report.param("samples", samples).param("seed", p.seed);
        let plan = ChainPlan::new(&p.conventions.chains(n)?);
        let mut r = rng(p);
        for _ in 0..samples {
            let ts: Vec<Tree> = (0..n).map(|_| random_tree(&mut r, 3)).collect();
            if !test(&ts, &plan, chains) {
                break;
            }
        }
    }
    report.stat("chains", chains);
    report.stat("tuples", tuples);
    report.stat("terms", terms);
    if exhaustive {
        report.stat("pool", pool.len());
    }
    report.finish(failure)
}

fn tree_combination<R: Rng>(r: &mut R) -> GLVector {
    let mut v = GLVector::zero();
    for _ in 0..r.gen_range(1..=2) {
        let t = random_tree(r, 2);
        v.add_term(Forest::single(t), int(r.gen_range(1..=3)));
    }
    v
}

/// `l_1 ⋯ l_n` as a forest product against the signed chain sum of
/// Grossman–Larson products of block elements, for tree combinations
/// `l_i`; in a Rota–Baxter model the enveloping algebra is represented
/// by `∗θ`, the symmetric product by `Σ_σ R^[σ` and blocks by `◁θ`.
pub(super) fn prop21(p: &CheckParams) -> Result<CheckReport> {
    let n = bound("prop21", p.n.unwrap_or(3), 1, 5)?;
    let samples = p.samples.unwrap_or(5);
    let kind = p.model.unwrap_or(ModelKind::Tree);
    let mut report = Report::new("prop21").param("n", n).param("model", kind).param("samples", samples).param("seed", p.seed);
    if kind != ModelKind::Tree {
        let failure = in_model!(kind, n, &p.weight, prop21_model(p, n, samples))?;
        report.stat("chains", p.conventions.chains(n)?.len());
        return report.finish(failure);
    }
    let mut r = rng(p);
    for k in 1..=n {
        let chains = p.conventions.chains(k)?;
        for _ in 0..samples {
            let ls: Vec<GLVector> = (0..k).map(|_| tree_combination(&mut r)).collect();
            let lhs = ls[1..].iter().fold(ls[0].clone(), |acc, l| acc.forest_mul(l));
            let mut rhs = GLVector::zero();
            for c in &chains {
                let term = c
                    .blocks()
                    .iter()
                    .map(|b| block_element(&ls, b))
                    .reduce(|a, b| gl_product(&a, &b))
                    .expect("chains are nonempty");
                rhs.add_scaled(&term, &c.sign());
            }
            if lhs != rhs {
                report.stat("chains", chains.len());
                let input = ls.iter().map(|l| format!("({l})")).collect::<Vec<_>>().join(" ");
                return report.finish(cx(input, lhs, rhs));
            }
        }
    }
    report.stat("chains", p.conventions.chains(n)?.len());
    report.finish(None)
}

/// `Σ_σ x_{p_σ(1)} ◁ (··· ◁ x_{p_h})` over orderings of all but the largest index.
fn right_block<M: RotaBaxter>(m: &M, xs: &[M::Elem], block: &[usize]) -> M::Elem {
    let mut sorted = block.to_vec();
    sorted.sort_unstable();
    let (&top, rest) = sorted.split_last().expect("blocks are nonempty");
    let mut out = m.zero();
    for sigma in Permutation::all(rest.len()) {
        let order = sigma.permute(rest);
        let acc = order.iter().rev().fold(xs[top - 1].clone(), |acc, &q| right_product(m, &xs[q - 1], &acc));
        out = m.add(&out, &acc);
    }
    out
}

/// `Σ_σ (··((x_{p_h} ▷ x_{q_1}) ▷ x_{q_2}) ···) ▷ x_{q_{h−1}}` over orderings `q` of the rest.
fn left_block<M: RotaBaxter>(m: &M, xs: &[M::Elem], block: &[usize]) -> M::Elem {
    let mut sorted = block.to_vec();
    sorted.sort_unstable();
    let (&top, rest) = sorted.split_last().expect("blocks are nonempty");
    let mut out = m.zero();
    for sigma in Permutation::all(rest.len()) {
        let acc = sigma.permute(rest).iter().fold(xs[top - 1].clone(), |acc, &q| left_product(m, &acc, &xs[q - 1]));
        out = m.add(&out, &acc);
    }
    out
}

fn star_all<M: RotaBaxter>(m: &M, xs: impl IntoIterator<Item = M::Elem>) -> M::Elem {
    xs.into_iter().reduce(|a, b| star_product(m, &a, &b)).expect("nonempty product")
}

fn prop21_model<M: Sampled>(m: &M, p: &CheckParams, n: usize, samples: usize) -> Result<Option<Counterexample>> {
    let mut r = rng(p);
    for k in 1..=n {
        let chains = p.conventions.chains(k)?;
        for _ in 0..samples {
            let xs: Vec<M::Elem> = (0..k).map(|i| m.sample(&mut r, i)).collect();
            let lhs = symmetrized_iterated_r(m, &xs)?;
            let mut rhs = m.zero();
            for c in &chains {
                let term = star_all(m, c.blocks().iter().map(|b| right_block(m, &xs, b)));
                rhs = m.add(&rhs, &m.scale(&term, &c.sign()));
            }
            if lhs != rhs {
                return Ok(cx(show_list(&xs), format!("{lhs:?}"), format!("{rhs:?}")));
            }
        }
    }
    Ok(None)
}

/// The symmetric brace from its defining forest action against the
/// chain-sum closed form.
pub(super) fn cor22(p: &CheckParams) -> Result<CheckReport> {
    let n = bound("cor22", p.n.unwrap_or(3), 1, 5)?;
    let samples = p.samples.unwrap_or(5);
    let mut report = Report::new("cor22").param("n", n).param("samples", samples).param("seed", p.seed);
    let mut r = rng(p);
    let mut failure = None;
    'outer: for k in 1..=n {
        for _ in 0..samples {
            let l = random_tree(&mut r, 3);
            let ls: Vec<Tree> = (0..k).map(|_| random_tree(&mut r, 2)).collect();
            let lhs = brace(&l, &Forest::new(ls.clone()));
            let rhs = brace_closed_form_with(&l, &ls, &p.conventions)?;
            if lhs != rhs {
                failure = cx(format!("{l} ; {}", show_trees(&ls)), lhs, rhs);
                break 'outer;
            }
        }
    }
    report.stat("chains", p.conventions.chains(n)?.len());
    report.finish(failure)
}

// ---- Rota–Baxter -------------------------------------------------------

/// `ι(b^k) = k!R^[k(b)` for `k ≤ n` and `ι(b_1⋯b_k) = Σ_σ R^[σ` for
/// `k ≤ min(n, 4)`. The left side goes through the embedding, the right
/// side through iterated `R` alone.
pub(super) fn iota_power(p: &CheckParams) -> Result<CheckReport> {
    let n = bound("iota_power", p.n.unwrap_or(3), 1, 6)?;
    let kind = p.model.unwrap_or(ModelKind::Free);
    let report = Report::new("iota_power").param("n", n).param("model", kind);
    let failure = in_model!(kind, n, &p.weight, iota_power_in(p, n))?;
    report.finish(failure)
}

fn iota_power_in<M: Sampled>(m: &M, p: &CheckParams, n: usize) -> Result<Option<Counterexample>> {
    let mut r = rng(p);
    let xs: Vec<M::Elem> = (0..n).map(|i| m.sample(&mut r, i)).collect();
    let names: Vec<String> = (1..=n).map(|i| format!("b{i}")).collect();
    let assign = |d: &Decoration| names.iter().position(|s| s == d.as_str()).map(|i| xs[i].clone());
    for k in 1..=n {
        let power = GLVector::basis(Forest::new(vec![Tree::leaf("b1"); k]));
        let lhs = iota(m, &power, assign, &p.conventions)?;
        let rhs = m.scale(&iterated_r(m, &vec![xs[0].clone(); k])?, &factorial(k));
        if lhs != rhs {
            return Ok(cx(format!("{power} with b1 = {:?}", xs[0]), format!("{lhs:?}"), format!("{rhs:?}")));
        }
        if k <= 4 {
            let forest = Forest::new(names[..k].iter().map(|s| Tree::leaf(s.as_str())).collect());
            let lhs = iota(m, &GLVector::basis(forest.clone()), assign, &p.conventions)?;
            let rhs = symmetrized_iterated_r(m, &xs[..k])?;
            if lhs != rhs {
                return Ok(cx(format!("{forest} with {}", show_list(&xs[..k])), format!("{lhs:?}"), format!("{rhs:?}")));
            }
        }
    }
    Ok(None)
}

/// `Σ_σ R^[σ` against the chain sum of `∗θ` products of `▷θ` blocks.
pub(super) fn bs_partition(p: &CheckParams) -> Result<CheckReport> {
    let n = bound("bs_partition", p.n.unwrap_or(3), 1, 6)?;
    let kind = p.model.unwrap_or(ModelKind::Free);
    let mut report = Report::new("bs_partition").param("n", n).param("model", kind).param("seed", p.seed);
    let failure = in_model!(kind, n, &p.weight, bs_partition_in(p, n))?;
    report.stat("permutations", factorial(n));
    report.stat("chains", p.conventions.chains(n)?.len());
    report.finish(failure)
}

fn bs_partition_in<M: Sampled>(m: &M, p: &CheckParams, n: usize) -> Result<Option<Counterexample>> {
    let mut r = rng(p);
    let xs: Vec<M::Elem> = (0..n).map(|i| m.sample(&mut r, i)).collect();
    for k in 1..=n {
        let lhs = symmetrized_iterated_r(m, &xs[..k])?;
        let mut rhs = m.zero();
        for c in p.conventions.chains(k)? {
            rhs = m.add(&rhs, &star_all(m, c.blocks().iter().map(|b| left_block(m, &xs, b))));
        }
        if lhs != rhs {
            return Ok(cx(show_list(&xs[..k]), format!("{lhs:?}"), format!("{rhs:?}")));
        }
    }
    Ok(None)
}

/// `Σ_σ R^[σ` against `Σ_σ lr_σ`, one `∗θ` factor per cycle of the
/// canonical cycle decomposition.
pub(super) fn bs_records(p: &CheckParams) -> Result<CheckReport> {
    let n = bound("bs_records", p.n.unwrap_or(3), 1, 6)?;
    let kind = p.model.unwrap_or(ModelKind::Free);
    let mut report = Report::new("bs_records").param("n", n).param("model", kind).param("seed", p.seed);
    let failure = in_model!(kind, n, &p.weight, bs_records_in(p, n))?;
    report.stat("permutations", factorial(n));
    report.finish(failure)
}

fn bs_records_in<M: Sampled>(m: &M, p: &CheckParams, n: usize) -> Result<Option<Counterexample>> {
    let mut r = rng(p);
    let xs: Vec<M::Elem> = (0..n).map(|i| m.sample(&mut r, i)).collect();
    for k in 1..=n {
        let lhs = symmetrized_iterated_r(m, &xs[..k])?;
        let mut rhs = m.zero();
        for sigma in Permutation::all(k) {
            let factors = canonical_cycle_decomposition(&sigma).into_iter().map(|cycle| {
                cycle[1..].iter().fold(xs[cycle[0] - 1].clone(), |acc, &j| left_product(m, &acc, &xs[j - 1]))
            });
            rhs = m.add(&rhs, &star_all(m, factors));
        }
        if lhs != rhs {
            return Ok(cx(show_list(&xs[..k]), format!("{lhs:?}"), format!("{rhs:?}")));
        }
    }
    Ok(None)
}

/// Scalar sequences: `Σ_σ R^[σ = Σ_P (−θ)^{n−k} ∗θ∏ (|P_i|−1)! ∏_{j∈P_i} b_j`
/// over all set partitions. The report also records whether the same sum
/// with `θ^{n−k}` holds (`literal_sign`).
pub(super) fn bs_commutative(p: &CheckParams) -> Result<CheckReport> {
    let n = bound("bs_commutative", p.n.unwrap_or(3), 1, 6)?;
    if !matches!(p.model, None | Some(ModelKind::MatrixSeq)) {
        return Err(Error::OutOfRange("bs_commutative runs in matrix-seq with d = 1".into()));
    }
    let samples = p.samples.unwrap_or(3);
    let m = MatrixSeq::new(1, n + 2, p.weight.clone());
    let mut report = Report::new("bs_commutative")
        .param("n", n)
        .param("model", ModelKind::MatrixSeq)
        .param("theta", &p.weight)
        .param("samples", samples)
        .param("seed", p.seed);
    let mut r = rng(p);
    let mut failure = None;
    let mut literal_holds = true;
    'outer: for k in 1..=n {
        for _ in 0..samples {
            let xs: Vec<_> = (0..k).map(|i| m.sample(&mut r, i)).collect();
            let lhs = symmetrized_iterated_r(&m, &xs)?;
            let rhs = |theta: Rational| {
                let mut out = m.zero();
                for partition in set_partitions(k) {
                    let factors = partition.iter().map(|block| {
                        let prod = block[1..].iter().fold(xs[block[0] - 1].clone(), |acc, &j| m.mul(&acc, &xs[j - 1]));
                        m.scale(&prod, &factorial(block.len() - 1))
                    });
                    let term = star_all(&m, factors);
                    let mut c = int(1);
                    for _ in 0..k - partition.len() {
                        c *= &theta;
                    }
                    out = m.add(&out, &m.scale(&term, &c));
                }
                out
            };
            let signed = rhs(-p.weight.clone());
            if rhs(p.weight.clone()) != lhs {
                literal_holds = false;
            }
            if signed != lhs {
                failure = cx(show_list(&xs), format!("{lhs:?}"), format!("{signed:?}"));
                break 'outer;
            }
        }
    }
    report.stat("literal_sign", if literal_holds { "pass" } else { "fail" });
    report.finish(failure)
}

/// `n!R^[n(b) = Σ_s c(s) b^{▷s_1} ∗θ ⋯ ∗θ b^{▷s_k}` over compositions `s`
/// of `n`, for every degree up to `n`.
pub(super) fn keyeq2(p: &CheckParams) -> Result<CheckReport> {
    let n = bound("keyeq2", p.n.unwrap_or(3), 1, 6)?;
    let kind = p.model.unwrap_or(ModelKind::Free);
    let mut report = Report::new("keyeq2").param("n", n).param("model", kind).param("seed", p.seed);
    let outcome = in_model!(kind, n, &p.weight, keyeq2_in(p, n))?;
    if let Some((k, _)) = &outcome {
        report.stat("failed_at", k);
    }
    report.finish(outcome.map(|(_, c)| c))
}

fn keyeq2_in<M: Sampled>(m: &M, p: &CheckParams, n: usize) -> Result<Option<(usize, Counterexample)>> {
    let mut r = rng(p);
    let b = m.sample(&mut r, 0);
    let powers: Vec<M::Elem> = (1..=n).map(|k| left_power(m, &b, k)).collect::<Result<_>>()?;
    for k in 1..=n {
        let lhs = m.scale(&iterated_r(m, &vec![b.clone(); k])?, &factorial(k));
        let mut rhs = m.zero();
        for comp in compositions(k) {
            let c = p.conventions.c_coefficient(&comp)?;
            let term = star_all(m, comp.parts().iter().map(|&s| powers[s - 1].clone()));
            rhs = m.add(&rhs, &m.scale(&term, &c));
        }
        if lhs != rhs {
            let c = Counterexample { input: format!("b = {b:?}, n = {k}"), lhs: format!("{lhs:?}"), rhs: format!("{rhs:?}") };
            return Ok(Some((k, c)));
        }
    }
    Ok(None)
}

// ---- time-ordered exponentials ---------------------------------------

fn matrix_only(id: &str, p: &CheckParams) -> Result<()> {
    match p.model {
        None | Some(ModelKind::MatrixPoly) => Ok(()),
        Some(other) => Err(Error::OutOfRange(format!("{id} runs in matrix-poly, not {other}"))),
    }
}

fn random_u<R: Rng>(r: &mut R, d: usize) -> Matrix<Poly> {
    sample::matrix_poly(r, &MatrixPoly::new(d), 2)
}

fn first_mismatch(a: &[Matrix<Poly>], b: &[Matrix<Poly>]) -> Option<usize> {
    a.iter().zip(b).position(|(x, y)| x != y)
}

/// The composition-sum form of the time-ordered exponential against the
/// Dyson series of `Ẏ = YU`, degree by degree, for `d = 1, 2, 3`; the
/// two-factor symmetrization identity; and `k!`·Dyson term = symmetrized
/// `k`-fold integral.
pub(super) fn texp_eq22(p: &CheckParams) -> Result<CheckReport> {
    matrix_only("texp_eq22", p)?;
    let n = bound("texp_eq22", p.n.unwrap_or(3), 1, 5)?;
    let samples = p.samples.unwrap_or(1);
    let mut report = Report::new("texp_eq22")
        .param("n", n)
        .param("model", ModelKind::MatrixPoly)
        .param("samples", samples)
        .param("seed", p.seed);
    let mut r = rng(p);
    let mut failure = None;
    let mut left_agrees = true;
    'outer: for _ in 0..samples {
        for d in 1..=3 {
            let u = random_u(&mut r, d);
            let lhs = texp_prelie_form(&u, n, &p.conventions)?;
            let rhs = dyson_series(&u, n, Orientation::Right);
            if let Some(k) = first_mismatch(&lhs, &rhs) {
                failure = cx(format!("U = {u}, degree {k}"), &lhs[k], &rhs[k]);
                break 'outer;
            }
            if first_mismatch(&lhs, &dyson_series(&u, n, Orientation::Left)).is_some() {
                left_agrees = false;
            }
            for k in 1..=n.min(4) {
                let sym = texp_symmetrized(&vec![u.clone(); k])?;
                let dyson = rhs[k].scale(&factorial(k));
                if sym != dyson {
                    failure = cx(format!("U = {u}, {k}-fold symmetrization"), sym, dyson);
                    break 'outer;
                }
            }
            let (u1, u2) = (random_u(&mut r, d), random_u(&mut r, d));
            let sym = texp_symmetrized(&[u1.clone(), u2.clone()])?;
            let parts = u1.integrate().mul(&u2.integrate()).add(&u2.integrate().commutator(&u1).integrate());
            if sym != parts {
                failure = cx(format!("U1 = {u1}, U2 = {u2}"), sym, parts);
                break 'outer;
            }
        }
    }
    report.stat("orientation", "right");
    if failure.is_none() {
        report.stat("left_orientation", if left_agrees { "pass" } else { "fail" });
    }
    report.finish(failure)
}

/// The descent-class logarithm against `∫Ω′` from the model Magnus
/// recursion, per degree, and its exponential against the Dyson series.
pub(super) fn mps_vs_magnus(p: &CheckParams) -> Result<CheckReport> {
    matrix_only("mps_vs_magnus", p)?;
    let n = bound("mps_vs_magnus", p.n.unwrap_or(3), 1, 5)?;
    let samples = p.samples.unwrap_or(1);
    let mut report = Report::new("mps_vs_magnus")
        .param("n", n)
        .param("model", ModelKind::MatrixPoly)
        .param("samples", samples)
        .param("seed", p.seed);
    let mut r = rng(p);
    let mut failure = None;
    'outer: for _ in 0..samples {
        for d in 1..=3 {
            let u = random_u(&mut r, d);
            let log = mps_log(&u, n)?;
            let omega: Vec<Matrix<Poly>> = magnus_in_model(&MatrixPoly::new(d), &u, n, &p.conventions)?
                .iter()
                .map(Matrix::integrate)
                .collect();
            if let Some(k) = first_mismatch(&log, &omega) {
                failure = cx(format!("U = {u}, degree {}", k + 1), &log[k], &omega[k]);
                break 'outer;
            }
            let exp = graded_exp(&log);
            let dyson = dyson_series(&u, n, Orientation::Right);
            if let Some(k) = first_mismatch(&exp, &dyson) {
                failure = cx(format!("U = {u}, exp of log, degree {k}"), &exp[k], &dyson[k]);
                break 'outer;
            }
        }
    }
    report.stat("orientation", "right");
    report.finish(failure)
}

// ---- products of exponentials ------------------------------------------

fn generators(n: usize) -> (GLSeries, GLSeries) {
    let g = |s: &str| GLSeries::from_vector(&GLVector::from_tree(Tree::leaf(s)), n);
    (g("x"), g("y"))
}

fn series_mismatch(id: &str, lhs: &GLSeries, rhs: &GLSeries) -> Option<Counterexample> {
    let d = (0..=lhs.truncation()).find(|&d| lhs.component(d) != rhs.component(d))?;
    cx(format!("{id} at degree {d}"), lhs.component(d), rhs.component(d))
}

fn series_report(id: &'static str, p: &CheckParams, default: usize) -> Result<(Report, usize)> {
    let n = bound(id, p.n.unwrap_or(default), 1, 6)?;
    Ok((Report::new(id).param("n", n).param("generators", "x,y"), n))
}

/// `exp(x) ∗ exp(y) = exp(y + {x; exp(y)})`.
pub(super) fn prod_exp(p: &CheckParams) -> Result<CheckReport> {
    let (report, n) = series_report("prod_exp", p, 3)?;
    let (x, y) = generators(n);
    let lhs = gl_exp(&x, ProductMode::Commutative)?.mul(&gl_exp(&y, ProductMode::Commutative)?, ProductMode::Star);
    let rhs = gl_exp(&y.add(&brace_with_exp(&x, &y)?), ProductMode::Commutative)?;
    report.finish(series_mismatch("exp(x)*exp(y)", &lhs, &rhs))
}

/// `y # x = y + {x; exp(y)}` and `exp(x) ∗ exp(y) = exp(y # x)`.
pub(super) fn sharp(p: &CheckParams) -> Result<CheckReport> {
    let (report, n) = series_report("sharp", p, 3)?;
    let (x, y) = generators(n);
    let yx = sharp_product(&y, &x, &p.conventions)?;
    let braced = y.add(&brace_with_exp(&x, &y)?);
    if let Some(c) = series_mismatch("y#x", &yx, &braced) {
        return report.finish(Some(c));
    }
    let lhs = gl_exp(&x, ProductMode::Commutative)?.mul(&gl_exp(&y, ProductMode::Commutative)?, ProductMode::Star);
    let rhs = gl_exp(&yx, ProductMode::Commutative)?;
    report.finish(series_mismatch("exp(y#x)", &lhs, &rhs))
}

/// `log^∗(exp^∗(x) ∗ exp^∗(y))` against the first BCH terms.
pub(super) fn bch(p: &CheckParams) -> Result<CheckReport> {
    let n = bound("bch", p.n.unwrap_or(3), 1, 3)?;
    let report = Report::new("bch").param("n", n).param("generators", "x,y");
    let (x, y) = generators(n);
    let lhs = bch_series(&x, &y)?;
    let rhs = GLSeries::from_vector(&bch_formula(x.component(1), y.component(1)), n);
    report.finish(series_mismatch("bch", &lhs, &rhs))
}
