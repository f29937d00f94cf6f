//! Acceptance run: one line per criterion.
//!
//! Each criterion is a list of sub-checks. A sub-check marked `known_failure`
//! is a literal value that this crate does not reproduce; the run asserts it
//! still fails, so the criterion line reads FAIL and names it. The binary
//! exits nonzero if any sub-check departs from its expected outcome.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use prelie::algebra_core::{
    forests_of_size, int, parse_element, rat, trees_up_to, Alphabet, Decoration, Forest, GLVector, Tree,
};
use prelie::combinatorics::{c_coefficient, compositions, Composition, Conventions, Mutation};
use prelie::grossman_larson::{forest_action, gl_product, ProductMode};
use prelie::identities::{run_suite_with, verify, CheckParams, CheckReport, ModelKind, SuiteLevel};
use prelie::magnus::{gl_log_of_exp, gl_magnus_fixed_point, gl_magnus_fixed_point_with, magnus_in_model};
use prelie::rota_baxter::free::{letter, word_expr};
use prelie::rota_baxter::{
    left_product, rb_defect, rb_normal_form_with, sample, Atom, FreeRb, RbWord, RotaBaxter, Strategy, Tilde,
};

struct Sub {
    name: String,
    ok: bool,
    known_failure: bool,
}

struct Criterion {
    subs: Vec<Sub>,
    notes: Vec<String>,
}

impl Criterion {
    fn new() -> Self {
        Criterion { subs: Vec::new(), notes: Vec::new() }
    }

    fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.subs.push(Sub { name: name.into(), ok, known_failure: false });
    }

    fn known_failure(&mut self, name: impl Into<String>, ok: bool) {
        self.subs.push(Sub { name: name.into(), ok, known_failure: true });
    }

    fn report(&mut self, r: &CheckReport) {
        self.check(r.to_string().lines().next().unwrap_or_default().to_string(), r.passed());
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

fn run(p: CheckParams, id: &str) -> CheckReport {
    verify(id, &p).unwrap_or_else(|e| panic!("{id}: {e}"))
}

fn labels() -> Vec<Decoration> {
    vec![Decoration::new("a"), Decoration::new("b")]
}

fn c1() -> Criterion {
    let mut c = Criterion::new();
    c.report(&run(CheckParams::default().n(4), "thm1"));
    c.report(&run(CheckParams::default().n(5).samples(100), "thm1"));
    c
}

fn act(x: &GLVector, y: &GLVector) -> GLVector {
    forest_action(x, y)
}

fn pre_lie_holds(x: &GLVector, y: &GLVector, z: &GLVector) -> bool {
    let lhs = act(&act(x, y), z).sub(&act(x, &act(y, z)));
    let rhs = act(&act(x, z), y).sub(&act(x, &act(z, y)));
    lhs == rhs
}

fn c2() -> Criterion {
    let mut c = Criterion::new();
    let trees: Vec<GLVector> = trees_up_to(&labels(), 3).into_iter().map(GLVector::from_tree).collect();
    let mut triples = 0;
    let mut ok = true;
    for x in &trees {
        for y in &trees {
            for z in &trees {
                ok &= pre_lie_holds(x, y, z);
                triples += 1;
            }
        }
    }
    c.check(format!("pre-Lie exhaustive, trees of <= 3 vertices, {triples} triples"), ok);

    let forests: Vec<(usize, GLVector)> =
        (0..=3).flat_map(|d| forests_of_size(&labels(), d).into_iter().map(move |f| (d, GLVector::basis(f)))).collect();
    let mut triples = 0;
    let mut ok = true;
    for (dx, x) in &forests {
        for (dy, y) in &forests {
            for (dz, z) in &forests {
                if dx + dy + dz <= 3 {
                    ok &= gl_product(&gl_product(x, y), z) == gl_product(x, &gl_product(y, z));
                    triples += 1;
                }
            }
        }
    }
    c.check(format!("associativity exhaustive, total degree <= 3, {triples} triples"), ok);

    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let letters = ["a", "b", "c"];
    let mut random_forest = |trees: usize, size: usize| -> GLVector {
        let ts: Vec<Tree> = (0..trees).map(|_| sample::tree(&mut rng, &letters, size)).collect();
        GLVector::basis(Forest::new(ts))
    };
    let mut ok = true;
    for i in 0..100 {
        let (x, y, z) = (random_forest(1, 4 + i % 2), random_forest(1, 3), random_forest(1, 2 + i % 2));
        ok &= pre_lie_holds(&x, &y, &z);
    }
    c.check("pre-Lie on 100 random triples of degree 9 to 11", ok);
    let mut ok = true;
    for _ in 0..50 {
        let (x, y, z) = (random_forest(2, 2), random_forest(1, 2), random_forest(2, 1));
        ok &= gl_product(&gl_product(&x, &y), &z) == gl_product(&x, &gl_product(&y, &z));
    }
    c.check("associativity on 50 random triples of degree 8", ok);
    c
}

/// Reduced words of at most three atoms over `a, b, R(a), R(b)`.
fn short_words() -> Vec<RbWord> {
    let atoms: Vec<Atom> = ["a", "b"]
        .iter()
        .flat_map(|s| [Atom::Letter(Decoration::new(s)), RbWord::wrap(RbWord::letter(*s)).atoms()[0].clone()])
        .collect();
    let mut words: Vec<Vec<Atom>> = vec![vec![]];
    let mut out = Vec::new();
    for _ in 0..3 {
        words = words
            .iter()
            .flat_map(|w| {
                atoms.iter().map(move |a| {
                    let mut v = w.clone();
                    v.push(a.clone());
                    v
                })
            })
            .collect();
        out.extend(words.iter().cloned());
    }
    out.into_iter().map(|v| RbWord::from_atoms(v).unwrap()).filter(RbWord::is_reduced).collect()
}

fn c3() -> Criterion {
    let mut c = Criterion::new();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut ok = true;
    for _ in 0..500 {
        let x = sample::unreduced_expr(&mut rng, &["a", "b"]);
        let reference = rb_normal_form_with(&x, Strategy::Recursive);
        ok &= reference.keys().all(RbWord::is_reduced);
        ok &= Strategy::ALL.iter().all(|&s| rb_normal_form_with(&x, s) == reference);
    }
    c.check(format!("normal forms agree under {} strategies on 500 expressions", Strategy::ALL.len()), ok);
    let words = short_words();
    let m = Tilde(FreeRb);
    let ok = words.iter().all(|u| {
        words.iter().all(|v| rb_defect(&m, &word_expr(u.clone()), &word_expr(v.clone())).unwrap().is_zero())
    });
    c.check(format!("-th*id - R on all pairs of {} reduced words", words.len()), ok);
    c
}

fn c4() -> Criterion {
    let mut c = Criterion::new();
    c.report(&run(CheckParams::default().n(5).model(ModelKind::Free), "iota_power"));
    c
}

fn c5() -> Criterion {
    let mut c = Criterion::new();
    for id in ["bs_partition", "bs_records"] {
        c.report(&run(CheckParams::default().n(4).model(ModelKind::Free), id));
    }
    for w in [int(2), rat(-3, 2)] {
        let r = run(CheckParams::default().n(5).weight(w.clone()), "bs_commutative");
        c.report(&r);
        c.known_failure(format!("commutative form with sign th^(n-k), theta={w}"), r.get("literal_sign") == Some("pass"));
    }
    c.note("the commutative form holds with sign (-th)^(n-k)");
    c
}

fn c6() -> Criterion {
    let mut c = Criterion::new();
    c.report(&run(CheckParams::default().n(5), "keyeq2"));
    let table = |n: usize| -> BTreeMap<Vec<usize>, String> {
        compositions(n).iter().map(|k| (k.parts().to_vec(), c_coefficient(k).unwrap().to_string())).collect()
    };
    let expect = |rows: &[(&[usize], &str)]| -> BTreeMap<Vec<usize>, String> {
        rows.iter().map(|(k, v)| (k.to_vec(), v.to_string())).collect()
    };
    c.check("c table n=2: (2)->1 (1,1)->1", table(2) == expect(&[(&[2], "1"), (&[1, 1], "1")]));
    c.check(
        "c table n=3: (3)->2 (2,1)->1 (1,2)->2 (1,1,1)->1",
        table(3) == expect(&[(&[3], "2"), (&[2, 1], "1"), (&[1, 2], "2"), (&[1, 1, 1], "1")]),
    );
    c
}

fn c7() -> Criterion {
    let mut c = Criterion::new();
    let ab = Alphabet::new(["a"]);
    let e = |s: &str| parse_element(s, &ab).unwrap();
    let omega = gl_magnus_fixed_point(5).unwrap();
    c.check("degree 1 is a", omega.component(1) == &e("a"));
    c.check("degree 2 is -1/2 a[a]", omega.component(2) == &e("-1/2*a[a]"));
    c.known_failure("degree 3 is 1/4 a[a[a]] + 1/12 a[a,a]", omega.component(3) == &e("1/4*a[a[a]] + 1/12*a[a,a]"));
    c.check("degree 3 is 1/3 a[a[a]] + 1/12 a[a,a]", omega.component(3) == &e("1/3*a[a[a]] + 1/12*a[a,a]"));
    let log = gl_log_of_exp(5).unwrap();
    c.check("fixed point equals log*(exp(a)) through degree 5", (1..=5).all(|d| omega.component(d) == log.component(d)));
    let forest = gl_magnus_fixed_point_with(5, ProductMode::Commutative, &Conventions::standard()).unwrap();
    c.note(format!(
        "with forest powers degree 3 is {} and the log equality {}",
        forest.component(3),
        if (1..=5).all(|d| forest.component(d) == log.component(d)) { "holds" } else { "fails" }
    ));

    let m = FreeRb;
    let a = letter("a");
    let model = magnus_in_model(&m, &a, 3, &Conventions::standard()).unwrap();
    let aa = left_product(&m, &a, &a);
    let aa_a = left_product(&m, &aa, &a);
    let a_aa = left_product(&m, &a, &aa);
    let combo = |x: (i64, i64), y: (i64, i64)| m.add(&m.scale(&aa_a, &rat(x.0, x.1)), &m.scale(&a_aa, &rat(y.0, y.1)));
    c.check("model degree 2 is +1/2 a>a", model[1] == m.scale(&aa, &rat(1, 2)));
    c.known_failure("model degree 3 is -1/4 (a>a)>a - 1/12 a>(a>a)", model[2] == combo((-1, 4), (-1, 12)));
    c.check("model degree 3 is +1/4 (a>a)>a + 1/12 a>(a>a)", model[2] == combo((1, 4), (1, 12)));
    c
}

fn c8() -> Criterion {
    let mut c = Criterion::new();
    c.report(&run(CheckParams::default().n(4).samples(2), "mps_vs_magnus"));
    c.note("d = 1, 2, 3 and t-degree 2 per sample");
    c
}

fn c9() -> Criterion {
    let mut c = Criterion::new();
    let r = run(CheckParams::default().n(4).samples(2), "texp_eq22");
    c.report(&r);
    c.known_failure("Dyson series of Y' = UY", r.get("left_orientation") == Some("pass"));
    c.note("texp form matches the Dyson series of Y' = YU");
    c
}

fn c10() -> Criterion {
    let mut c = Criterion::new();
    c.report(&run(CheckParams::default().n(5), "prod_exp"));
    c.report(&run(CheckParams::default().n(5), "sharp"));
    c.report(&run(CheckParams::default().n(3), "bch"));
    c
}

fn c11() -> Criterion {
    let mut c = Criterion::new();
    let baseline = run_suite_with(SuiteLevel::Quick, 0, &Conventions::standard());
    c.check("unmutated quick suite passes", baseline.iter().all(CheckReport::passed));
    let mutations = [
        ("B1 = +1/2", Mutation::FlipBernoulliOne),
        ("c(1,1) negated", Mutation::FlipCCoefficient(Composition::new(vec![1, 1]).unwrap())),
        ("admissibility reversed", Mutation::ReverseAdmissibility),
    ];
    for (name, m) in mutations {
        let caught: Vec<String> = run_suite_with(SuiteLevel::Quick, 0, &Conventions::mutated(m))
            .into_iter()
            .filter(|r| !r.passed())
            .map(|r| r.id)
            .collect();
        c.check(format!("{name} caught by [{}]", caught.join(",")), !caught.is_empty());
    }
    c
}

/// Id, title, runtime limit in seconds, body.
type Entry = (&'static str, &'static str, Option<u64>, fn() -> Criterion);

fn main() {
    let criteria: [Entry; 11] = [
        ("1", "expansion of forests", Some(60), c1),
        ("2", "pre-Lie grafting and GL associativity", Some(30), c2),
        ("3", "free Rota-Baxter rewriting", Some(60), c3),
        ("4", "iota of words and powers", Some(120), c4),
        ("5", "Bohnenblust-Spitzer", None, c5),
        ("6", "c-coefficients", None, c6),
        ("7", "Magnus", None, c7),
        ("8", "MPS equals Magnus", Some(120), c8),
        ("9", "time-ordered exponential", None, c9),
        ("10", "products of exponentials and BCH", None, c10),
        ("11", "mutation sanity", None, c11),
    ];
    let mut unexpected = Vec::new();
    for (id, title, limit, f) in criteria {
        let start = Instant::now();
        let mut c = f();
        let took = start.elapsed();
        if let Some(s) = limit {
            c.check(format!("runtime under {s} s"), took <= Duration::from_secs(s));
        }
        let failing: Vec<&Sub> = c.subs.iter().filter(|s| !s.ok).collect();
        let status = if failing.is_empty() { "PASS" } else { "FAIL" };
        println!("{status} criterion {id}: {title} ({:.1} s)", took.as_secs_f64());
        for s in &c.subs {
            let tag = match (s.ok, s.known_failure) {
                (true, false) => "ok",
                (false, true) => "fails as documented",
                (true, true) => "UNEXPECTED PASS",
                (false, false) => "FAILED",
            };
            println!("    [{tag}] {}", s.name);
            if s.ok == s.known_failure {
                unexpected.push(format!("criterion {id}: {}", s.name));
            }
        }
        for n in &c.notes {
            println!("    note: {n}");
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: every sub-check matched its expected outcome");
    } else {
        println!("acceptance: {} unexpected outcomes", unexpected.len());
        for u in &unexpected {
            println!("  {u}");
        }
        std::process::exit(1);
    }
}
