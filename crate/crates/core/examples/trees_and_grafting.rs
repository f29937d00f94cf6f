//! Grafting, the Grossman-Larson product and the forest action on small
//! decorated trees.

use prelie::algebra_core::{parse_element, parse_tree, Alphabet};
use prelie::grossman_larson::{brace, forest_action, gl_product, graft};
use prelie::Result;

fn main() -> Result<()> {
    let ab = Alphabet::new(["a", "b", "c"]);
    let a = parse_tree("a", &ab)?;
    let b = parse_tree("b[c]", &ab)?;
    println!("a <- b[c]      = {}", graft(&a, &b));
    println!("b[c] <- a      = {}", graft(&b, &a));

    let x = parse_element("a", &ab)?;
    let y = parse_element("b", &ab)?;
    println!("a * b          = {}", gl_product(&x, &y));
    println!("(a * b) * c    = {}", gl_product(&gl_product(&x, &y), &parse_element("c", &ab)?));

    // the action of a forest on a tree
    let forest = parse_element("b.c", &ab)?;
    println!("a <- (b.c)     = {}", forest_action(&x, &forest));

    let f = prelie::algebra_core::parse_forest("b.c", &ab)?;
    println!("{{a; b, c}}      = {}", brace(&a, &f));
    Ok(())
}
