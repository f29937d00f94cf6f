//! Writes commutative forests as combinations of Grossman-Larson products
//! of their trees, and checks the result against the forest itself.

use prelie::algebra_core::{parse_forest, Alphabet, GLVector};
use prelie::combinatorics::admissible_partition_chains;
use prelie::grossman_larson::expand_forest;
use prelie::Result;

fn main() -> Result<()> {
    for n in 1..=4 {
        let chains = admissible_partition_chains(n)?;
        println!("n = {n}: {} chains", chains.len());
        if n == 3 {
            for c in &chains {
                println!("    {c}  sign {}", c.sign());
            }
        }
    }

    let ab = Alphabet::open();
    for text in ["a.b", "a.b[c]", "a.a.b", "a[b].c.d"] {
        let f = parse_forest(text, &ab)?;
        let v = expand_forest(f.trees())?;
        let ok = v == GLVector::basis(f.clone());
        println!("{text:>10}: expansion returns the forest: {ok}");
    }
    Ok(())
}
