//! Parsing ring specs and computing in them: rationals, residues,
//! polynomial rings and quotients by a single relation.

use unimod::{parse_ring, Result};

fn main() -> Result<()> {
    let z6 = parse_ring("Zmod:6")?;
    let five = z6.parse("5")?;
    println!(
        "in {}: 5 * 5 = {}, 5^-1 = {}",
        z6.spec(),
        &five * &five,
        z6.is_unit(&five).inverse().unwrap()
    );
    println!(
        "  units: {:?}",
        z6.enumerate_elements()?
            .into_iter()
            .filter(|e| z6.is_unit(e).inverse().is_some())
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
    );

    let q = parse_ring("Q[x,y]")?;
    let f = q.parse("(x + y)^3 - 1/2*x*y")?;
    println!("in {}: (x + y)^3 - xy/2 = {f}", q.spec());

    // normal forms modulo the relation are canonical
    let sphere = parse_ring("Q[x0,x1,x2]/(x0^2+x1^2+x2^2-1)")?;
    let g = sphere.parse("x0^2 + x1^2")?;
    println!("in the sphere ring: x0^2 + x1^2 = {g}");
    println!(
        "  and x0^2 + x1^2 + x2^2 = {}",
        sphere.parse("x0^2 + x1^2 + x2^2")?
    );

    let dual = parse_ring("Zmod:2[e]/(e^2)")?;
    let elems: Vec<String> = dual
        .enumerate_elements()?
        .iter()
        .map(ToString::to_string)
        .collect();
    println!("{} has {} elements: {elems:?}", dual.spec(), elems.len());
    let u = dual.parse("1 + e")?;
    println!(
        "  1 + e is a unit: {}",
        dual.is_unit(&u).inverse().is_some()
    );
    println!("  (1 + e)^2 = {}", u.pow(2));
    Ok(())
}
