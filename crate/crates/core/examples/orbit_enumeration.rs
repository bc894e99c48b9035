//! Unimodular rows over small finite rings and their orbits under
//! elementary column operations, each member with a word reaching it.

use unimod::{enumerate_um, parse_ring, same_orbit, OrbitTable, Result};

fn main() -> Result<()> {
    for spec in ["Zmod:4", "Zmod:6", "Zmod:2[x]/(x^2)"] {
        let ring = parse_ring(spec)?;
        for n in 1..=3 {
            let table = OrbitTable::build(&ring, n)?;
            let sizes: Vec<usize> = table.orbits.iter().map(|o| o.len()).collect();
            println!(
                "{spec} n={n}: {} rows, orbit sizes {sizes:?}",
                enumerate_um(&ring, n)?.len()
            );
        }
    }
    let z4 = parse_ring("Zmod:4")?;
    let u = vec![z4.one(), z4.zero(), z4.zero()];
    let v = vec![z4.from_i64(3), z4.from_i64(2), z4.one()];
    if let Some(w) = same_orbit(&z4, &u, &v)? {
        let letters: Vec<String> = w
            .letters()
            .iter()
            .map(|l| format!("E{}{}({})", l.i, l.j, l.lambda))
            .collect();
        println!("(1,0,0) -> (3,2,1) over Zmod:4 by {}", letters.join(" "));
    }
    Ok(())
}
