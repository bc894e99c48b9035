//! Dense matrices over any [`Ring`].

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{Elem, Ring};

/// Row-major dense matrix. Public accessors use 1-based indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Elem>,
}

impl Matrix {
    pub fn new(ring: &Ring, rows: usize, cols: usize, entries: Vec<Elem>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|e| e.ring() != ring) {
            return Err(Error::RingMismatch(bad.ring().spec(), ring.spec()));
        }
        Ok(Matrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(ring: &Ring, rows: Vec<Vec<Elem>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Matrix::new(ring, nrows, ncols, rows.into_iter().flatten().collect())
    }

    /// Builds a matrix from element strings.
    pub fn parse<S: AsRef<str>>(ring: &Ring, rows: &[Vec<S>]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| ring.parse(s.as_ref())).collect())
            .collect::<Result<Vec<Vec<Elem>>>>()?;
        Matrix::from_rows(ring, parsed)
    }

    pub fn row_vector(ring: &Ring, v: &[Elem]) -> Result<Self> {
        Matrix::new(ring, 1, v.len(), v.to_vec())
    }

    pub fn zeros(ring: &Ring, rows: usize, cols: usize) -> Self {
        Matrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![ring.zero(); rows * cols],
        }
    }

    pub fn identity(ring: &Ring, n: usize) -> Self {
        let mut m = Matrix::zeros(ring, n, n);
        for k in 0..n {
            m.set(k, k, ring.one());
        }
        m
    }

    /// `E_ij(lambda) = I + lambda e_ij`, 1-based, `i != j`.
    /// Entries drawn independently by [`Ring::random_element`].
    pub fn random<R: rand::Rng + ?Sized>(
        ring: &Ring,
        rows: usize,
        cols: usize,
        rng: &mut R,
    ) -> Self {
        let entries = (0..rows * cols).map(|_| ring.random_element(rng)).collect();
        Matrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        }
    }

    pub fn elementary(ring: &Ring, n: usize, i: usize, j: usize, lambda: &Elem) -> Result<Self> {
        if i == j || i == 0 || j == 0 || i > n || j > n {
            return Err(Error::BadLetter { i, j, size: n });
        }
        let mut m = Matrix::identity(ring, n);
        m.set(i - 1, j - 1, lambda.clone());
        Ok(m)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// 0-based access, for use inside the crate's algorithms.
    pub(crate) fn at(&self, r: usize, c: usize) -> &Elem {
        &self.entries[r * self.cols + c]
    }

    pub(crate) fn set(&mut self, r: usize, c: usize, e: Elem) {
        self.entries[r * self.cols + c] = e;
    }

    /// Entry in row `i`, column `j` (1-based).
    pub fn entry(&self, i: usize, j: usize) -> &Elem {
        assert!(
            i >= 1 && j >= 1 && i <= self.rows && j <= self.cols,
            "index out of range"
        );
        self.at(i - 1, j - 1)
    }

    /// Row `i` (1-based).
    pub fn row(&self, i: usize) -> Vec<Elem> {
        assert!(i >= 1 && i <= self.rows, "row out of range");
        self.entries[(i - 1) * self.cols..i * self.cols].to_vec()
    }

    pub fn to_rows(&self) -> Vec<Vec<Elem>> {
        (1..=self.rows).map(|i| self.row(i)).collect()
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.to_rows()
            .into_iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect()
    }

    fn check_ring(&self, other: &Matrix) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring.spec(), other.ring.spec()));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_ring(other)?;
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(&self.ring, self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = self.ring.zero();
                for k in 0..self.cols {
                    let a = self.at(r, k);
                    if a.is_zero() {
                        continue;
                    }
                    acc = &acc + &(a * other.at(k, c));
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_ring(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Dimension(
                "cannot add matrices of different shapes".into(),
            ));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Matrix::new(&self.ring, self.rows, self.cols, entries)
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(&self.ring, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.at(r, c).clone());
            }
        }
        out
    }

    /// Block-diagonal sum `self ⊥ other`.
    pub fn perp(&self, other: &Matrix) -> Result<Matrix> {
        self.check_ring(other)?;
        let mut out = Matrix::zeros(&self.ring, self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.at(r, c).clone());
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                out.set(self.rows + r, self.cols + c, other.at(r, c).clone());
            }
        }
        Ok(out)
    }

    /// `[1] ⊥ self`.
    pub fn one_perp(&self) -> Matrix {
        Matrix::identity(&self.ring, 1)
            .perp(self)
            .expect("same ring")
    }

    /// Submatrix keeping the given 0-based rows and columns, in order.
    pub(crate) fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let entries = rows
            .iter()
            .flat_map(|&r| cols.iter().map(move |&c| self.at(r, c).clone()))
            .collect();
        Matrix {
            ring: self.ring.clone(),
            rows: rows.len(),
            cols: cols.len(),
            entries,
        }
    }

    /// Submatrix with one 0-based row and column deleted.
    pub(crate) fn without(&self, row: usize, col: usize) -> Matrix {
        let rows: Vec<usize> = (0..self.rows).filter(|&r| r != row).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&c| c != col).collect();
        self.select(&rows, &cols)
    }

    /// Division-free determinant, valid over rings with zero divisors.
    ///
    /// Cofactor expansion up to size 4, Berkowitz's characteristic
    /// polynomial recurrence above that.
    pub fn det(&self) -> Result<Elem> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.rows <= 4 {
            Ok(self.det_cofactor())
        } else {
            Ok(self.det_berkowitz())
        }
    }

    pub(crate) fn det_cofactor(&self) -> Elem {
        let n = self.rows;
        match n {
            0 => self.ring.one(),
            1 => self.at(0, 0).clone(),
            2 => &(self.at(0, 0) * self.at(1, 1)) - &(self.at(0, 1) * self.at(1, 0)),
            _ => {
                let mut acc = self.ring.zero();
                for c in 0..n {
                    let a = self.at(0, c);
                    if a.is_zero() {
                        continue;
                    }
                    let term = a * &self.without(0, c).det_cofactor();
                    acc = if c % 2 == 0 {
                        &acc + &term
                    } else {
                        &acc - &term
                    };
                }
                acc
            }
        }
    }

    pub(crate) fn det_berkowitz(&self) -> Elem {
        let n = self.rows;
        if n == 0 {
            return self.ring.one();
        }
        let ring = &self.ring;
        // coefficients of det(xI - A_r), leading coefficient first
        let mut poly = vec![ring.one()];
        for r in 0..n {
            let a_rr = self.at(r, r).clone();
            // column S = A[0..r, r], row R = A[r, 0..r]
            let mut t = vec![ring.one(), -&a_rr];
            let mut s: Vec<Elem> = (0..r).map(|k| self.at(k, r).clone()).collect();
            for _ in 0..r {
                let rs = (0..r)
                    .map(|k| self.at(r, k) * &s[k])
                    .fold(ring.zero(), |acc, x| &acc + &x);
                t.push(-&rs);
                s = (0..r)
                    .map(|i| {
                        (0..r)
                            .map(|k| self.at(i, k) * &s[k])
                            .fold(ring.zero(), |acc, x| &acc + &x)
                    })
                    .collect();
            }
            // Toeplitz (r+2)x(r+1) lower triangular times poly
            let next: Vec<Elem> = (0..r + 2)
                .map(|i| {
                    (0..=r.min(i))
                        .filter(|&j| i - j < t.len())
                        .map(|j| &t[i - j] * &poly[j])
                        .fold(ring.zero(), |acc, x| &acc + &x)
                })
                .collect();
            poly = next;
        }
        let constant = poly[n].clone();
        if n % 2 == 0 {
            constant
        } else {
            -constant
        }
    }

    /// Classical adjugate; `A · adj(A) = det(A) · I`.
    pub fn adjugate(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut out = Matrix::zeros(&self.ring, n, n);
        if n == 1 {
            out.set(0, 0, self.ring.one());
            return Ok(out);
        }
        for r in 0..n {
            for c in 0..n {
                let minor = self.without(r, c).det()?;
                let cof = if (r + c) % 2 == 0 { minor } else { -minor };
                out.set(c, r, cof);
            }
        }
        Ok(out)
    }

    /// Inverse of a determinant-one matrix, as its adjugate.
    pub fn inverse_det_one(&self) -> Result<Matrix> {
        let d = self.det()?;
        if !d.is_one() {
            return Err(Error::DeterminantNotOne(d.to_string()));
        }
        self.adjugate()
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let e = self.at(r, c);
                    if r == c {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }
}

impl std::hash::Hash for Matrix {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
        self.cols.hash(state);
        self.entries.hash(state);
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
