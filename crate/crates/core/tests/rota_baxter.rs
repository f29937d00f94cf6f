use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use prelie::algebra_core::scalar::int;
use prelie::algebra_core::{forests_of_size, trees_up_to, Decoration, GLVector};
use prelie::grossman_larson::{forest_action, gl_product};
use prelie::rota_baxter::free::{letter, word_expr};
use prelie::rota_baxter::{
    iota_free, rb_defect, rb_normal_form_with, right_product, sample, star_product, left_product, Atom, FreeRb,
    LaurentPole, MatrixPoly, MatrixSeq, RbExpr, RbWord, RotaBaxter, Strategy, Tilde,
};

#[test]
fn confluence_on_500_expressions() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..500 {
        let x = sample::unreduced_expr(&mut rng, &["a", "b"]);
        let reference = rb_normal_form_with(&x, Strategy::Recursive);
        assert!(reference.keys().all(RbWord::is_reduced));
        for s in Strategy::ALL {
            assert_eq!(rb_normal_form_with(&x, s), reference, "sample {i}: {x} under {s:?}");
        }
    }
}

fn axiom_on_samples<M: RotaBaxter>(m: &M, count: usize, mut draw: impl FnMut(&mut ChaCha8Rng) -> M::Elem) {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..count {
        let (x, y) = (draw(&mut rng), draw(&mut rng));
        assert!(m.is_zero(&rb_defect(m, &x, &y).unwrap()), "{}: {x:?} {y:?}", m.name());
    }
}

#[test]
fn axiom_in_every_model() {
    let free_sample = |r: &mut ChaCha8Rng| {
        let w = sample::unreduced_word(r, &["a", "b"], 2, 1);
        let v = sample::unreduced_word(r, &["a", "b"], 2, 1);
        let x = word_expr(w).add(&word_expr(v).scale(&int(-2)));
        rb_normal_form_with(&x, Strategy::Recursive)
    };
    axiom_on_samples(&FreeRb, 200, free_sample);
    let mp = MatrixPoly::new(2);
    axiom_on_samples(&mp, 200, |r| sample::matrix_poly(r, &mp, 2));
    let mp3 = MatrixPoly::new(3);
    axiom_on_samples(&mp3, 200, |r| sample::matrix_poly(r, &mp3, 1));
    for theta in [int(1), int(-2), int(3) / int(2)] {
        let ms = MatrixSeq::new(2, 5, theta);
        axiom_on_samples(&ms, 200, |r| sample::matrix_seq(r, &ms));
    }
    let lp = LaurentPole::new(2);
    axiom_on_samples(&lp, 200, |r| sample::laurent_matrix(r, &lp, 2));
}

#[test]
fn tilde_in_concrete_models() {
    let ms = MatrixSeq::new(2, 5, int(3));
    axiom_on_samples(&Tilde(ms.clone()), 200, |r| sample::matrix_seq(r, &ms));
    let lp = LaurentPole::new(2);
    axiom_on_samples(&Tilde(lp), 200, |r| sample::laurent_matrix(r, &lp, 2));
    // weight zero: −R is again a Rota–Baxter operator
    let mp = MatrixPoly::new(2);
    axiom_on_samples(&Tilde(mp), 200, |r| sample::matrix_poly(r, &mp, 2));
}

/// Reduced words with at most `len` atoms drawn from `a, b, R(a), R(b)`.
fn short_words(len: usize) -> Vec<RbWord> {
    let atoms: Vec<Atom> = ["a", "b"]
        .iter()
        .flat_map(|s| [Atom::Letter(Decoration::new(s)), RbWord::wrap(RbWord::letter(*s)).atoms()[0].clone()])
        .collect();
    let mut out: Vec<Vec<Atom>> = atoms.iter().map(|a| vec![a.clone()]).collect();
    let mut layer = out.clone();
    for _ in 1..len {
        let mut next = Vec::new();
        for w in &layer {
            for a in &atoms {
                let mut v = w.clone();
                v.push(a.clone());
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out.into_iter().map(|v| RbWord::from_atoms(v).unwrap()).filter(RbWord::is_reduced).collect()
}

#[test]
fn tilde_in_free_model_symbolically() {
    let words = short_words(3);
    assert_eq!(words.len(), 4 + 12 + 40);
    let m = Tilde(FreeRb);
    for u in &words {
        for v in &words {
            let d = rb_defect(&m, &word_expr(u.clone()), &word_expr(v.clone())).unwrap();
            assert!(d.is_zero(), "{u} {v}: {d}");
        }
    }
}

#[test]
fn derived_products_on_letters() {
    let m = FreeRb;
    let ls: Vec<RbExpr> = ["a", "b", "c"].iter().map(|s| letter(s)).collect();
    let r = |x: &RbExpr, y: &RbExpr| right_product(&m, x, y);
    let l = |x: &RbExpr, y: &RbExpr| left_product(&m, x, y);
    let s = |x: &RbExpr, y: &RbExpr| star_product(&m, x, y);
    for x in &ls {
        for y in &ls {
            assert_eq!(m.r(&s(x, y)), m.mul(&m.r(x), &m.r(y)));
            assert!(m.add(&r(x, y), &l(y, x)).is_zero());
            for z in &ls {
                let right = m.sub(&r(&r(x, y), z), &r(x, &r(y, z)));
                let right_swapped = m.sub(&r(&r(x, z), y), &r(x, &r(z, y)));
                assert_eq!(right, right_swapped, "right pre-Lie {x} {y} {z}");
                let left = m.sub(&l(&l(x, y), z), &l(x, &l(y, z)));
                let left_swapped = m.sub(&l(&l(y, x), z), &l(y, &l(x, z)));
                assert_eq!(left, left_swapped, "left pre-Lie {x} {y} {z}");
                assert_eq!(s(&s(x, y), z), s(x, &s(y, z)), "associativity {x} {y} {z}");
            }
        }
    }
}

#[test]
fn embedding_is_a_homomorphism() {
    let labels = vec![Decoration::new("a"), Decoration::new("b")];
    let trees: Vec<GLVector> = trees_up_to(&labels, 2).into_iter().map(GLVector::from_tree).collect();
    let m = FreeRb;
    for x in &trees {
        for y in &trees {
            let graft = iota_free(&forest_action(x, y)).unwrap();
            assert_eq!(graft, right_product(&m, &iota_free(x).unwrap(), &iota_free(y).unwrap()));
        }
    }
    let forests: Vec<GLVector> =
        (1..=2).flat_map(|d| forests_of_size(&labels, d)).map(GLVector::basis).collect();
    for x in &forests {
        for y in &forests {
            let prod = iota_free(&gl_product(x, y)).unwrap();
            assert_eq!(prod, star_product(&m, &iota_free(x).unwrap(), &iota_free(y).unwrap()), "{x} * {y}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_form_is_idempotent_and_linear(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = sample::unreduced_expr(&mut rng, &["a", "b"]);
        let y = sample::unreduced_expr(&mut rng, &["a", "b"]);
        let nx = rb_normal_form_with(&x, Strategy::Leftmost);
        prop_assert_eq!(rb_normal_form_with(&nx, Strategy::Rightmost), nx.clone());
        let ny = rb_normal_form_with(&y, Strategy::Innermost);
        prop_assert_eq!(rb_normal_form_with(&x.add(&y), Strategy::Leftmost), nx.add(&ny));
    }

    #[test]
    fn pre_lie_in_sequences(seed in any::<u64>()) {
        let m = MatrixSeq::new(2, 4, int(2));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y, z) = (sample::matrix_seq(&mut rng, &m), sample::matrix_seq(&mut rng, &m), sample::matrix_seq(&mut rng, &m));
        let r = |a: &Vec<_>, b: &Vec<_>| right_product(&m, a, b);
        let lhs = m.sub(&r(&r(&x, &y), &z), &r(&x, &r(&y, &z)));
        let rhs = m.sub(&r(&r(&x, &z), &y), &r(&x, &r(&z, &y)));
        prop_assert_eq!(lhs, rhs);
    }
}
