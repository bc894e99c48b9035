//! Equivalence certificates between Pfaffian-one alternating matrices:
//! checking a known one, inverting it, and searching for one over a
//! finite ring.

use unimod::alternating::congruence_word;
use unimod::witt::commutation_certificate;
use unimod::{
    check_equiv, parse_ring, psi, search_equiv, witt_perp, witt_rep, ElementaryWord,
    EquivCertificate, Result,
};

fn main() -> Result<()> {
    let q = parse_ring("Q[a,b]")?;
    let w = ElementaryWord::from_letters(&q, 4, vec![(1, 3, q.var("a")?), (4, 2, q.var("b")?)])?;
    let x = witt_rep(congruence_word(&psi(&q, 2), &w)?)?;
    let y = witt_rep(psi(&q, 2))?;
    let c = EquivCertificate { l: 0, eps: w };
    println!(
        "x ~ psi_2 via {} letters: {}",
        c.eps.len(),
        check_equiv(&x, &y, &c)?
    );
    println!(
        "psi_2 ~ x via the inverse: {}",
        check_equiv(&y, &x, &c.inverse())?
    );

    let z3 = parse_ring("Zmod:3")?;
    let hidden =
        ElementaryWord::from_letters(&z3, 4, vec![(2, 3, z3.from_i64(2)), (1, 4, z3.one())])?;
    let x = witt_rep(congruence_word(&psi(&z3, 2), &hidden)?)?;
    let y = witt_rep(psi(&z3, 2))?;
    match search_equiv(&x, &y, 2, 0)? {
        Some(c) => println!(
            "search over Zmod:3 found {} letters, l = {}",
            c.eps.len(),
            c.l
        ),
        None => println!("search over Zmod:3 found nothing within depth 2"),
    }

    let a = witt_rep(psi(&z3, 1))?;
    let xy = witt_perp(&x, &a)?;
    let yx = witt_perp(&a, &x)?;
    match commutation_certificate(&x, &a)? {
        Some(c) => println!("x + a ~ a + x: {}", check_equiv(&xy, &yx, &c)?),
        None => println!("x + a ~ a + x: inconclusive"),
    }
    Ok(())
}
