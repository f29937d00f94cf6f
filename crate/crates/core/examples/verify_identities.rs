//! Runs the quick suite, a single check with custom parameters, and the
//! same check under a corrupted coefficient convention.

use prelie::combinatorics::{Composition, Conventions, Mutation};
use prelie::identities::{run_suite, verify, CheckParams, ModelKind, SuiteLevel};
use prelie::Result;

fn main() -> Result<()> {
    for r in run_suite(SuiteLevel::Quick, 0) {
        println!("{r}");
    }

    let p = CheckParams::default().n(4).model(ModelKind::LaurentPole).seed(3);
    println!("{}", verify("bs_partition", &p)?);

    let bad = Conventions::mutated(Mutation::FlipCCoefficient(Composition::new(vec![1, 1])?));
    println!("{}", verify("keyeq2", &CheckParams::default().n(3).conventions(bad))?);
    Ok(())
}
