//! The full pipeline on the coordinate ring of the 2-sphere: a skew
//! completion of (x0, x1, x2), the completion K of (x0^2, x1, x2), and the
//! elementary certificate relating them.

use unimod::{
    krusemeyer_complete, parse_ring, skew4, verify_certificate, verify_completion, CertifiedRow,
    Result,
};

fn main() -> Result<()> {
    let ring = parse_ring("Q[x0,x1,x2]/(x0^2+x1^2+x2^2-1)")?;
    let xs = ["x0", "x1", "x2"];
    // x0^2 + x1^2 + x2^2 = 1, so the row is its own witness
    let row = CertifiedRow::parse(&ring, &xs, &xs)?;
    let s = skew4(&row)?;
    println!(
        "skew completion V, pf = {}:\n{}",
        s.pfaffian(),
        s.matrix().matrix()
    );

    let res = krusemeyer_complete(&s)?;
    // the lower rows are large; show the first row and the term counts
    println!(
        "first row of K: {:?}",
        res.k
            .row(1)
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );
    for i in 2..=3 {
        let terms: Vec<usize> = res.k.row(i).iter().map(|e| e.terms().len()).collect();
        println!("terms in row {i}: {terms:?}");
    }
    let report = verify_completion(&res.target, &res.k)?;
    println!(
        "first row (x0^2, x1, x2): {}, det K = {}",
        report.first_row_matches, report.det
    );

    let eps = res.certificate.expect("always emitted");
    let ok = verify_certificate(s.matrix().matrix(), &res.k, &eps)?;
    println!(
        "certificate of {} letters, (1 + K) E(eps) = V: {ok}",
        eps.len()
    );
    Ok(())
}
