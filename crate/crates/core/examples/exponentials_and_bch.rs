//! Products of exponentials in the Grossman-Larson algebra and the first
//! Baker-Campbell-Hausdorff terms.

use prelie::algebra_core::{GLVector, Tree};
use prelie::combinatorics::Conventions;
use prelie::grossman_larson::{gl_exp, GLSeries, ProductMode};
use prelie::magnus::{bch_formula, bch_series, brace_with_exp, sharp_product};
use prelie::Result;

fn main() -> Result<()> {
    let n = 4;
    let gen = |s: &str| GLSeries::from_vector(&GLVector::from_tree(Tree::leaf(s)), n);
    let (x, y) = (gen("x"), gen("y"));

    let yx = sharp_product(&y, &x, &Conventions::standard())?;
    for d in 1..=3 {
        println!("(y # x)_{d} = {}", yx.component(d));
    }
    assert_eq!(yx, y.add(&brace_with_exp(&x, &y)?));

    let lhs = gl_exp(&x, ProductMode::Commutative)?.mul(&gl_exp(&y, ProductMode::Commutative)?, ProductMode::Star);
    assert_eq!(lhs, gl_exp(&yx, ProductMode::Commutative)?);
    println!("exp(x) * exp(y) = exp(y # x) through degree {n}");

    let (x3, y3) = (x.truncate(3), y.truncate(3));
    let bch = bch_series(&x3, &y3)?;
    assert_eq!(bch, GLSeries::from_vector(&bch_formula(x3.component(1), y3.component(1)), 3));
    for d in 1..=3 {
        println!("BCH_{d} = {}", bch.component(d));
    }
    Ok(())
}
