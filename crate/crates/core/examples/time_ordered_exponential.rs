//! Dyson series of Y' = YU for a polynomial matrix U, the composition-sum
//! form of the same series, and exp of the Magnus logarithm.

use prelie::algebra_core::{rat, Matrix};
use prelie::combinatorics::Conventions;
use prelie::magnus::mps_log;
use prelie::ode::{dyson_series, float_table, graded_exp, parse_grid, texp_prelie_form, total, Orientation};
use prelie::Result;

fn main() -> Result<()> {
    let u = Matrix::parse("[[1, t], [0, 2t]]")?;
    let n = 4;
    let dyson = dyson_series(&u, n, Orientation::Right);
    let prelie = texp_prelie_form(&u, n, &Conventions::standard())?;
    let via_log = graded_exp(&mps_log(&u, n)?);
    for k in 0..=n {
        println!("Y_{k} = {}", dyson[k]);
        assert_eq!(dyson[k], prelie[k]);
        assert_eq!(dyson[k], via_log[k]);
    }

    let y = total(&dyson);
    println!("Y(1/2) truncated = {:?}", y.eval(&rat(1, 2)).entries().iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("# floating-point values of the truncated sum, not exact");
    for (t, row) in float_table(&y, &parse_grid("0:1:4")?) {
        println!("{t:.3} {row:?}");
    }
    Ok(())
}
