use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use prelie::algebra_core::{forests_of_size, trees_up_to, Decoration, Forest, GLVector, Tree};
use prelie::grossman_larson::{expand_forest, forest_action, gl_product, graft};
use prelie::rota_baxter::sample;

fn labels() -> Vec<Decoration> {
    vec![Decoration::new("a"), Decoration::new("b")]
}

fn t(x: &Tree) -> GLVector {
    GLVector::from_tree(x.clone())
}

fn act(x: &GLVector, y: &GLVector) -> GLVector {
    forest_action(x, y)
}

fn pre_lie_defect(x: &GLVector, y: &GLVector, z: &GLVector) -> GLVector {
    let lhs = act(&act(x, y), z).sub(&act(x, &act(y, z)));
    let rhs = act(&act(x, z), y).sub(&act(x, &act(z, y)));
    lhs.sub(&rhs)
}

#[test]
fn grafting_is_the_single_tree_action() {
    let trees = trees_up_to(&labels(), 3);
    for x in &trees {
        for y in &trees {
            assert_eq!(graft(x, y), act(&t(x), &t(y)));
        }
    }
}

#[test]
fn pre_lie_axiom_exhaustive() {
    let trees = trees_up_to(&labels(), 3);
    for x in &trees {
        for y in &trees {
            for z in &trees {
                assert!(pre_lie_defect(&t(x), &t(y), &t(z)).is_zero(), "{x} {y} {z}");
            }
        }
    }
}

fn forests_up_to(d: usize) -> Vec<Forest> {
    (0..=d).flat_map(|k| forests_of_size(&labels(), k)).collect()
}

#[test]
fn associativity_exhaustive() {
    let fs: Vec<GLVector> = forests_up_to(2).into_iter().map(GLVector::basis).collect();
    for x in &fs {
        for y in &fs {
            let xy = gl_product(x, y);
            for z in &fs {
                assert_eq!(gl_product(&xy, z), gl_product(x, &gl_product(y, z)));
            }
        }
    }
}

#[test]
fn unit_is_the_empty_forest() {
    for f in forests_up_to(3) {
        let v = GLVector::basis(f);
        assert_eq!(gl_product(&GLVector::unit(), &v), v);
        assert_eq!(gl_product(&v, &GLVector::unit()), v);
    }
}

fn random_forest(seed: u64, trees: usize, max_size: usize) -> GLVector {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ts: Vec<Tree> = (0..trees)
        .map(|i| sample::tree(&mut rng, &["a", "b", "c"], 1 + (seed as usize + i) % max_size))
        .collect();
    GLVector::basis(Forest::new(ts))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pre_lie_axiom_random(seed in any::<u64>()) {
        let x = random_forest(seed, 1, 4);
        let y = random_forest(seed ^ 1, 1, 3);
        let z = random_forest(seed ^ 2, 1, 3);
        prop_assert!(pre_lie_defect(&x, &y, &z).is_zero());
    }

    #[test]
    fn associativity_random(seed in any::<u64>(), a in 1usize..3, b in 1usize..3, c in 1usize..3) {
        let x = random_forest(seed, a, 2);
        let y = random_forest(seed ^ 7, b, 2);
        let z = random_forest(seed ^ 9, c, 2);
        prop_assert_eq!(gl_product(&gl_product(&x, &y), &z), gl_product(&x, &gl_product(&y, &z)));
    }

    #[test]
    fn action_is_a_right_module(seed in any::<u64>()) {
        // (t ↶ F) ↶ G = t ↶ (F ∗ G)
        let tree = random_forest(seed, 1, 3);
        let f = random_forest(seed ^ 3, 2, 2);
        let g = random_forest(seed ^ 5, 1, 2);
        prop_assert_eq!(act(&act(&tree, &f), &g), act(&tree, &gl_product(&f, &g)));
    }

    #[test]
    fn expansion_returns_the_forest(seed in any::<u64>(), n in 1usize..5) {
        let v = random_forest(seed, n, 3);
        let f = v.keys().next().unwrap().clone();
        prop_assert_eq!(expand_forest(f.trees()).unwrap(), v);
    }
}
