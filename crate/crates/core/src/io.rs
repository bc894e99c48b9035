//! JSON file formats for matrices, words, rows, certificates and
//! completion results. Elements are written as expression strings in the
//! ring's syntax and parsed back on load.

use serde::{Deserialize, Serialize};

use crate::completion::{CertifiedRow, CompletionResult};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::{parse_ring, Ring};
use crate::witt::EquivCertificate;
use crate::word::ElementaryWord;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub ring: String,
    pub entries: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordFile {
    pub ring: String,
    pub size: usize,
    pub letters: Vec<(usize, usize, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowFile {
    pub ring: String,
    pub v: Vec<String>,
    pub w: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFile {
    pub l: usize,
    pub eps: WordFile,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompletionFile {
    pub ring: String,
    pub entries: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<WordFile>,
}

pub fn word_letters(w: &ElementaryWord) -> Vec<(usize, usize, String)> {
    w.letters()
        .iter()
        .map(|l| (l.i, l.j, l.lambda.to_string()))
        .collect()
}

impl MatrixFile {
    pub fn from_matrix(m: &Matrix) -> Self {
        MatrixFile {
            ring: m.ring().spec(),
            entries: m.to_strings(),
        }
    }

    /// Parses the entries over `ring`, or over the file's own ring.
    pub fn to_matrix(&self, ring: Option<&Ring>) -> Result<Matrix> {
        let ring = resolve_ring(&self.ring, ring)?;
        Matrix::parse(&ring, &self.entries)
    }
}

impl WordFile {
    pub fn from_word(w: &ElementaryWord) -> Self {
        WordFile {
            ring: w.ring().spec(),
            size: w.size(),
            letters: word_letters(w),
        }
    }

    pub fn to_word(&self, ring: Option<&Ring>) -> Result<ElementaryWord> {
        let ring = resolve_ring(&self.ring, ring)?;
        let letters = self
            .letters
            .iter()
            .map(|(i, j, s)| Ok((*i, *j, ring.parse(s)?)))
            .collect::<Result<Vec<_>>>()?;
        ElementaryWord::from_letters(&ring, self.size, letters)
    }
}

impl RowFile {
    pub fn from_row(r: &CertifiedRow) -> Self {
        let strings = |xs: &[crate::ring::Elem]| xs.iter().map(ToString::to_string).collect();
        RowFile {
            ring: r.ring().spec(),
            v: strings(r.v()),
            w: strings(r.w()),
        }
    }

    pub fn to_row(&self, ring: Option<&Ring>) -> Result<CertifiedRow> {
        let ring = resolve_ring(&self.ring, ring)?;
        CertifiedRow::parse(&ring, &self.v, &self.w)
    }
}

impl CertificateFile {
    pub fn from_certificate(c: &EquivCertificate) -> Self {
        CertificateFile {
            l: c.l,
            eps: WordFile::from_word(&c.eps),
        }
    }

    pub fn to_certificate(&self, ring: Option<&Ring>) -> Result<EquivCertificate> {
        Ok(EquivCertificate {
            l: self.l,
            eps: self.eps.to_word(ring)?,
        })
    }
}

impl CompletionFile {
    pub fn from_result(r: &CompletionResult) -> Self {
        CompletionFile {
            ring: r.k.ring().spec(),
            entries: r.k.to_strings(),
            certificate: r.certificate.as_ref().map(WordFile::from_word),
        }
    }

    /// The matrix and optional certificate; the first row of the matrix is
    /// taken as the target row.
    pub fn to_result(&self, ring: Option<&Ring>) -> Result<CompletionResult> {
        let ring = resolve_ring(&self.ring, ring)?;
        let k = Matrix::parse(&ring, &self.entries)?;
        let certificate = self
            .certificate
            .as_ref()
            .map(|c| c.to_word(Some(&ring)))
            .transpose()?;
        Ok(CompletionResult {
            target: k.row(1),
            k,
            certificate,
        })
    }
}

/// A ring given on the command line must match the file's ring.
fn resolve_ring(spec: &str, given: Option<&Ring>) -> Result<Ring> {
    let own = parse_ring(spec)?;
    match given {
        Some(r) if *r != own => Err(Error::RingMismatch(spec.to_string(), r.spec())),
        _ => Ok(own),
    }
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Io(format!("bad JSON: {e}")))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &std::path::Path) -> Result<T> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    from_json(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_round_trip() {
        let text = r#"{"ring": "Zmod:6", "entries": [["1", "2"], ["3", "10"]]}"#;
        let f: MatrixFile = from_json(text).unwrap();
        let m = f.to_matrix(None).unwrap();
        assert_eq!(m.entry(2, 2).to_string(), "4");
        let back = MatrixFile::from_matrix(&m);
        assert_eq!(back.to_matrix(None).unwrap(), m);
    }

    #[test]
    fn word_round_trip() {
        let text = r#"{"ring": "Q[t]", "size": 3, "letters": [[1, 2, "t"], [3, 1, "-1/2"]]}"#;
        let f: WordFile = from_json(text).unwrap();
        let w = f.to_word(None).unwrap();
        assert_eq!(w.len(), 2);
        assert_eq!(
            from_json::<WordFile>(&to_json(&WordFile::from_word(&w))).unwrap(),
            f
        );
        let bad = r#"{"ring": "Q", "size": 2, "letters": [[1, 1, "1"]]}"#;
        assert!(matches!(
            from_json::<WordFile>(bad).unwrap().to_word(None),
            Err(Error::BadLetter { .. })
        ));
    }

    #[test]
    fn row_and_mismatch() {
        let text = r#"{"ring": "Zmod:6", "v": ["5", "2", "3"], "w": ["5", "0", "0"]}"#;
        let f: RowFile = from_json(text).unwrap();
        assert!(f.to_row(None).is_ok());
        let q = Ring::rationals();
        assert!(matches!(f.to_row(Some(&q)), Err(Error::RingMismatch(..))));
        assert!(matches!(from_json::<RowFile>("{"), Err(Error::Io(_))));
    }
}
