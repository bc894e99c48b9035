//! Iterated squaring: from a row (v1, ..., vn) to Pfaffian-one alternating
//! matrices with first rows (0, v1^2, v2, ...), (0, v1^4, v2, ...), ...

use unimod::{
    krusemeyer_complete, parse_ring, power_first, skew4, square_witt_rep, CertifiedRow, Provenance,
    Result, SkewCompletion,
};

fn main() -> Result<()> {
    let ring = parse_ring("Zmod:7")?;
    let mut row = CertifiedRow::parse(&ring, &["3", "2", "5"], &["5", "0", "0"])?;
    let mut s = skew4(&row)?;
    for round in 1..=3 {
        let res = krusemeyer_complete(&s)?;
        let w = square_witt_rep(&res, 2)?;
        row = power_first(&row, 2)?;
        println!(
            "round {round}: first row {:?}, pf = {}",
            w.first_row()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>(),
            w.pfaffian()?
        );
        assert_eq!(w.first_row()[1..], *row.v());
        s = SkewCompletion::from_alternating(w, Provenance::Supplied)?;
    }
    Ok(())
}
