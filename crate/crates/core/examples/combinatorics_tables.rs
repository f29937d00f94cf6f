//! Compositions with their c-coefficients, descent classes and Bernoulli
//! numbers.

use std::collections::BTreeSet;

use prelie::combinatorics::{
    bernoulli_number, c_coefficient, canonical_cycle_decomposition, compositions, descent_class_size, descent_set,
    record_positions, Permutation,
};
use prelie::Result;

fn main() -> Result<()> {
    for n in 1..=4 {
        let row: Vec<String> =
            compositions(n).iter().map(|c| Ok(format!("{c}->{}", c_coefficient(c)?))).collect::<Result<_>>()?;
        println!("n={n}: {}", row.join(" "));
    }

    let sizes: Vec<usize> = (1..4).map(|d| descent_class_size(4, &BTreeSet::from([d]))).collect();
    println!("single-descent classes in S4: {sizes:?}");
    for p in Permutation::all(3) {
        println!(
            "{p}: descents {:?} records {:?} cycles {:?}",
            descent_set(&p),
            record_positions(&p),
            canonical_cycle_decomposition(&p)
        );
    }
    let b: Vec<String> = (0..=8).map(|k| bernoulli_number(k).to_string()).collect();
    println!("B_0..B_8 = {}", b.join(", "));
    Ok(())
}
