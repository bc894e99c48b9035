//! Alternating matrices and the Pfaffian, normalized by `pf(ψ_r) = 1`.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::{Elem, Ring};
use crate::word::{congruence_by_word, ElementaryWord};

/// A square matrix with zero diagonal and `a_ji = -a_ij`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingMatrix {
    body: Matrix,
}

impl AlternatingMatrix {
    /// Validates `m`; the zero-diagonal test runs before the skew test in
    /// row-major order, so characteristic 2 inputs fail on the diagonal.
    pub fn new(m: Matrix) -> Result<Self> {
        check_alternating(&m)?;
        Ok(AlternatingMatrix { body: m })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.body
    }

    pub fn into_matrix(self) -> Matrix {
        self.body
    }

    pub fn size(&self) -> usize {
        self.body.rows()
    }

    pub fn ring(&self) -> &Ring {
        self.body.ring()
    }

    /// First row, 1-based index 1.
    pub fn first_row(&self) -> Vec<Elem> {
        self.body.row(1)
    }

    pub fn pfaffian(&self) -> Result<Elem> {
        pfaffian(self)
    }

    pub fn perp(&self, other: &AlternatingMatrix) -> Result<AlternatingMatrix> {
        Ok(AlternatingMatrix {
            body: self.body.perp(&other.body)?,
        })
    }
}

/// Checks the alternating conditions, reporting the first bad position
/// (1-based).
pub fn check_alternating(m: &Matrix) -> Result<()> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    for r in 0..m.rows() {
        for c in 0..r {
            if *m.at(r, c) != -m.at(c, r) {
                return Err(Error::NotSkew(r + 1, c + 1));
            }
        }
        if !m.at(r, r).is_zero() {
            return Err(Error::NonzeroDiagonal(r + 1));
        }
    }
    Ok(())
}

/// `ψ_r = ψ_{r-1} ⊥ ψ_1` with `ψ_1 = [[0,1],[-1,0]]`; `ψ_0` is empty.
pub fn psi(ring: &Ring, r: usize) -> AlternatingMatrix {
    let mut m = Matrix::zeros(ring, 2 * r, 2 * r);
    for k in 0..r {
        m.set(2 * k, 2 * k + 1, ring.one());
        m.set(2 * k + 1, 2 * k, -ring.one());
    }
    AlternatingMatrix { body: m }
}

/// Random strictly upper entries, mirrored with a sign.
pub fn random_alternating<R: rand::Rng + ?Sized>(
    ring: &Ring,
    n: usize,
    rng: &mut R,
) -> AlternatingMatrix {
    let mut m = Matrix::zeros(ring, n, n);
    for i in 0..n {
        for j in i + 1..n {
            let x = ring.random_element(rng);
            m.set(j, i, -&x);
            m.set(i, j, x);
        }
    }
    AlternatingMatrix { body: m }
}

/// First-row expansion `pf(A) = Σ_{j≥2} (-1)^j a_1j pf(A without rows and
/// columns 1, j)`, `pf(∅) = 1`.
pub fn pfaffian(a: &AlternatingMatrix) -> Result<Elem> {
    let n = a.size();
    if n % 2 == 1 {
        return Err(Error::OddSize(n));
    }
    let idx: Vec<usize> = (0..n).collect();
    Ok(pf_rec(&a.body, &idx))
}

fn pf_rec(m: &Matrix, idx: &[usize]) -> Elem {
    if idx.is_empty() {
        return m.ring().one();
    }
    let first = idx[0];
    let mut acc = m.ring().zero();
    for (pos, &j) in idx.iter().enumerate().skip(1) {
        let a = m.at(first, j);
        if a.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx[1..].iter().copied().filter(|&k| k != j).collect();
        let term = a * &pf_rec(m, &rest);
        // idx position `pos` is the 1-based column `pos + 1`
        acc = if pos % 2 == 1 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

/// `αᵗ A α`, with `pf(αᵗAα) = pf(A)·det(α)` checked exactly.
pub fn congruence(a: &AlternatingMatrix, alpha: &Matrix) -> Result<AlternatingMatrix> {
    if alpha.ring() != a.ring() {
        return Err(Error::RingMismatch(alpha.ring().spec(), a.ring().spec()));
    }
    if !alpha.is_square() || alpha.rows() != a.size() {
        return Err(Error::Dimension(format!(
            "cannot transport a {0}x{0} alternating matrix by a {1}x{2} matrix",
            a.size(),
            alpha.rows(),
            alpha.cols()
        )));
    }
    let body = alpha.transpose().mul(&a.body)?.mul(alpha)?;
    let out = AlternatingMatrix::new(body)?;
    if a.size() % 2 == 0 {
        let expected = &pfaffian(a)? * &alpha.det()?;
        let got = pfaffian(&out)?;
        if got != expected {
            return Err(Error::Construction(format!(
                "pfaffian of congruence is {got}, expected {expected}"
            )));
        }
    }
    Ok(out)
}

/// `E(w)ᵗ A E(w)`; the Pfaffian is unchanged.
pub fn congruence_word(a: &AlternatingMatrix, w: &ElementaryWord) -> Result<AlternatingMatrix> {
    AlternatingMatrix::new(congruence_by_word(&a.body, w)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_ring;

    fn int(ring: &Ring, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            ring,
            rows.iter()
                .map(|r| r.iter().map(|&x| ring.from_i64(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn validation() {
        let q = Ring::rationals();
        assert!(AlternatingMatrix::new(psi(&q, 2).into_matrix()).is_ok());
        assert_eq!(
            AlternatingMatrix::new(int(&q, &[&[0, 1], &[1, 0]])).unwrap_err(),
            Error::NotSkew(2, 1)
        );
        let z2 = Ring::modular(2).unwrap();
        assert_eq!(
            AlternatingMatrix::new(int(&z2, &[&[1, 1], &[1, 1]])).unwrap_err(),
            Error::NonzeroDiagonal(1)
        );
    }

    #[test]
    fn psi_blocks() {
        let q = Ring::rationals();
        assert_eq!(psi(&q, 1).into_matrix(), int(&q, &[&[0, 1], &[-1, 0]]));
        let p1 = psi(&q, 1);
        assert_eq!(p1.perp(&p1).unwrap(), psi(&q, 2));
        for r in 1..=6 {
            assert!(pfaffian(&psi(&q, r)).unwrap().is_one());
        }
    }

    #[test]
    fn small_pfaffians() {
        let r = parse_ring("Q[a]").unwrap();
        let a = r.var("a").unwrap();
        let m =
            Matrix::from_rows(&r, vec![vec![r.zero(), a.clone()], vec![-&a, r.zero()]]).unwrap();
        assert_eq!(pfaffian(&AlternatingMatrix::new(m).unwrap()).unwrap(), a);

        let q = Ring::rationals();
        let m = int(
            &q,
            &[
                &[0, 2, 3, 4],
                &[-2, 0, 5, 6],
                &[-3, -5, 0, 7],
                &[-4, -6, -7, 0],
            ],
        );
        assert_eq!(
            pfaffian(&AlternatingMatrix::new(m).unwrap()).unwrap(),
            q.from_i64(16)
        );

        let odd = AlternatingMatrix::new(Matrix::zeros(&q, 3, 3)).unwrap();
        assert_eq!(pfaffian(&odd).unwrap_err(), Error::OddSize(3));
    }

    #[test]
    fn congruence_scales_by_det() {
        let z5 = Ring::modular(5).unwrap();
        let p2 = psi(&z5, 2);
        let e = Matrix::elementary(&z5, 4, 1, 3, &z5.from_i64(3)).unwrap();
        assert!(pfaffian(&congruence(&p2, &e).unwrap()).unwrap().is_one());
        let mut d = Matrix::identity(&z5, 4);
        d.set(0, 0, z5.from_i64(2));
        assert_eq!(
            pfaffian(&congruence(&p2, &d).unwrap()).unwrap(),
            z5.from_i64(2)
        );
        assert_eq!(congruence(&p2, &Matrix::identity(&z5, 4)).unwrap(), p2);
    }
}
