//! Desk check over Z/m: for every skew completion V of every row of length
//! 3, the first row and the transposed first column of K(V) lie in one
//! elementary orbit.

use unimod::finite::find_witness;
use unimod::{
    certify_row, enumerate_um, krusemeyer_complete, parse_ring, skew_completions, OrbitTable,
    Provenance, Result, SkewCompletion,
};

fn main() -> Result<()> {
    for m in [2, 3, 4, 5] {
        let ring = parse_ring(&format!("Zmod:{m}"))?;
        let table = OrbitTable::build(&ring, 3)?;
        let (mut checked, mut connected) = (0, 0);
        for v in enumerate_um(&ring, 3)? {
            let w = find_witness(&ring, &v)?.expect("unimodular");
            let row = certify_row(v, w)?;
            for a in skew_completions(&ring, &row)? {
                let s = SkewCompletion::from_alternating(a, Provenance::Search)?;
                if !(&s.pfaffian() * &s.pfaffian()).is_one() {
                    continue;
                }
                let k = krusemeyer_complete(&s)?.k;
                let first_row = k.row(1);
                let first_col = k.transpose().row(1);
                checked += 1;
                if table.connect(&first_row, &first_col).is_some() {
                    connected += 1;
                }
            }
        }
        println!("Zmod:{m}: {connected}/{checked} completions connect e1 K to e1 K^t");
    }
    Ok(())
}
