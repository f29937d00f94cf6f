//! The pre-Lie Magnus expansion: tree level, in the free Rota-Baxter
//! algebra, and as the logarithm of a time-ordered exponential.

use prelie::algebra_core::Matrix;
use prelie::combinatorics::Conventions;
use prelie::magnus::{gl_log_of_exp, gl_magnus_fixed_point, magnus_in_model, mps_log};
use prelie::rota_baxter::free::letter;
use prelie::rota_baxter::{FreeRb, MatrixPoly};
use prelie::Result;

fn main() -> Result<()> {
    let omega = gl_magnus_fixed_point(4)?;
    let log = gl_log_of_exp(4)?;
    for d in 1..=4 {
        println!("degree {d}: {}", omega.component(d));
        assert_eq!(omega.component(d), log.component(d));
    }

    let model = magnus_in_model(&FreeRb, &letter("a"), 3, &Conventions::standard())?;
    for (d, x) in model.iter().enumerate() {
        println!("free model, degree {}: {x}", d + 1);
    }

    let u = Matrix::parse("[[0, 1], [t, 0]]")?;
    let mps = mps_log(&u, 3)?;
    let integrated = magnus_in_model(&MatrixPoly::new(2), &u, 3, &Conventions::standard())?;
    for (k, (m, w)) in mps.iter().zip(&integrated).enumerate() {
        println!("Omega_{} = {m}", k + 1);
        assert_eq!(m, &w.integrate());
    }
    Ok(())
}
