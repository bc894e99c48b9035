//! The JSON files read and written by the command-line tool.

use unimod::io::{from_json, to_json, MatrixFile, RowFile};
use unimod::{parse_ring, pfaffian, psi, AlternatingMatrix, Result};

fn main() -> Result<()> {
    let ring = parse_ring("Zmod:5")?;
    let file = MatrixFile::from_matrix(psi(&ring, 2).matrix());
    let text = to_json(&file);
    println!("matrix file:\n{text}");

    let back: MatrixFile = from_json(&text)?;
    let a = AlternatingMatrix::new(back.to_matrix(None)?)?;
    println!("read back, pf = {}", pfaffian(&a)?);

    let row: RowFile =
        from_json(r#"{"ring": "Zmod:6", "v": ["5", "2", "3"], "w": ["5", "0", "0"]}"#)?;
    let certified = row.to_row(None)?;
    println!(
        "row file certifies v = {:?}",
        certified
            .v()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );
    Ok(())
}
