//! Pfaffians of random alternating matrices, checked against the
//! determinant and under congruence.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use unimod::{congruence, parse_ring, pfaffian, psi, random_alternating, Matrix, Result};

fn main() -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for spec in ["Q", "Zmod:6", "Q[t]"] {
        let ring = parse_ring(spec)?;
        for n in [2, 4, 6] {
            let a = random_alternating(&ring, n, &mut rng);
            let pf = pfaffian(&a)?;
            let det = a.matrix().det()?;
            let alpha = Matrix::random(&ring, n, n, &mut rng);
            let moved = pfaffian(&congruence(&a, &alpha)?)?;
            println!(
                "{spec:>6} n={n}: det = pf^2 {}, pf(a^t A a) = det(a) pf(A) {}",
                det == &pf * &pf,
                moved == &alpha.det()? * &pf
            );
        }
    }
    let q = parse_ring("Q")?;
    println!("pf(psi_3) = {}", pfaffian(&psi(&q, 3))?);
    println!("psi_2 =\n{}", psi(&q, 2).matrix());
    Ok(())
}
