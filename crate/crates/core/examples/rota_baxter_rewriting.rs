//! Normal forms in the free Rota-Baxter algebra with formal weight `th`,
//! and the products it carries.

use prelie::rota_baxter::{
    double_product, parse_rb, pre_lie_right, rb_normal_form, rb_normal_form_with, FreeRb, Strategy,
};
use prelie::Result;

fn main() -> Result<()> {
    let x = parse_rb("R(a) R(b)")?;
    println!("R(a) R(b) = {}", rb_normal_form(&x));

    let y = parse_rb("R(R(a) R(b)) c R(c)")?;
    let nf = rb_normal_form(&y);
    println!("{y}\n  = {nf}");
    for s in Strategy::ALL {
        assert_eq!(rb_normal_form_with(&y, s), nf);
    }
    println!("all {} strategies agree", Strategy::ALL.len());

    let m = FreeRb;
    let (a, b) = (parse_rb("a")?, parse_rb("b")?);
    println!("a |> b  = {}", pre_lie_right(&m, &a, &b)?);
    println!("a . b   = {}", double_product(&m, &a, &b)?);
    Ok(())
}
