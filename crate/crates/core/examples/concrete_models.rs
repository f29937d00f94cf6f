//! The Rota-Baxter identity in the matrix models: integration of
//! polynomial matrices, summation of sequences, and the pole-part
//! projection on Laurent series.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use prelie::algebra_core::rat;
use prelie::rota_baxter::{rb_defect, sample, LaurentPole, MatrixPoly, MatrixSeq, RotaBaxter};
use prelie::Result;

fn report<M: RotaBaxter>(m: &M, pairs: &[(M::Elem, M::Elem)]) -> Result<()> {
    let mut zero = 0;
    for (x, y) in pairs {
        if m.is_zero(&rb_defect(m, x, y)?) {
            zero += 1;
        }
    }
    let w = m.weight().map_or("formal".to_string(), |w| w.to_string());
    println!("{:<36} weight {w:<5} defect zero on {zero}/{}", m.name(), pairs.len());
    Ok(())
}

fn main() -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);

    let mp = MatrixPoly::new(2);
    let pairs: Vec<_> = (0..20).map(|_| (sample::matrix_poly(&mut rng, &mp, 2), sample::matrix_poly(&mut rng, &mp, 2))).collect();
    println!("sample U = {}", pairs[0].0);
    report(&mp, &pairs)?;

    let ms = MatrixSeq::new(2, 6, rat(1, 3));
    let pairs: Vec<_> = (0..20).map(|_| (sample::matrix_seq(&mut rng, &ms), sample::matrix_seq(&mut rng, &ms))).collect();
    report(&ms, &pairs)?;

    let lp = LaurentPole::new(2);
    let pairs: Vec<_> =
        (0..20).map(|_| (sample::laurent_matrix(&mut rng, &lp, 2), sample::laurent_matrix(&mut rng, &lp, 2))).collect();
    report(&lp, &pairs)?;
    Ok(())
}
