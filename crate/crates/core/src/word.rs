//! Products of elementary matrices `E_ij(λ)`, the certificate currency for
//! membership in the elementary group.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::{Elem, Ring};

/// One generator `E_ij(λ)`, 1-based, `i != j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Letter {
    pub i: usize,
    pub j: usize,
    pub lambda: Elem,
}

/// Ordered product of letters in a fixed ambient size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementaryWord {
    ring: Ring,
    size: usize,
    letters: Vec<Letter>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl ElementaryWord {
    pub fn empty(ring: &Ring, size: usize) -> Self {
        ElementaryWord {
            ring: ring.clone(),
            size,
            letters: Vec::new(),
        }
    }

    pub fn from_letters(
        ring: &Ring,
        size: usize,
        letters: Vec<(usize, usize, Elem)>,
    ) -> Result<Self> {
        let mut w = ElementaryWord::empty(ring, size);
        for (i, j, lambda) in letters {
            w.push(i, j, lambda)?;
        }
        Ok(w)
    }

    pub fn push(&mut self, i: usize, j: usize, lambda: Elem) -> Result<()> {
        if i == j || i == 0 || j == 0 || i > self.size || j > self.size {
            return Err(Error::BadLetter {
                i,
                j,
                size: self.size,
            });
        }
        if lambda.ring() != &self.ring {
            return Err(Error::RingMismatch(lambda.ring().spec(), self.ring.spec()));
        }
        self.letters.push(Letter { i, j, lambda });
        Ok(())
    }

    /// Pushes unless `λ = 0`.
    pub(crate) fn push_nonzero(&mut self, i: usize, j: usize, lambda: Elem) {
        if !lambda.is_zero() {
            self.push(i, j, lambda).expect("letter in range");
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The matrix `E_1 E_2 ⋯ E_k`.
    pub fn expand(&self) -> Matrix {
        apply_word(
            &Matrix::identity(&self.ring, self.size),
            self,
            Side::Right,
            false,
        )
        .expect("sizes agree")
    }

    /// Reversed order, negated parameters.
    pub fn inverse(&self) -> Self {
        ElementaryWord {
            ring: self.ring.clone(),
            size: self.size,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    i: l.i,
                    j: l.j,
                    lambda: -&l.lambda,
                })
                .collect(),
        }
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &ElementaryWord) -> Result<Self> {
        if self.size != other.size {
            return Err(Error::Dimension(format!(
                "word sizes {} and {} differ",
                self.size, other.size
            )));
        }
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring.spec(), other.ring.spec()));
        }
        let mut out = self.clone();
        out.letters.extend(other.letters.iter().cloned());
        Ok(out)
    }

    /// The same word acting on indices `offset+1..` of a larger size,
    /// so `[I_offset] ⊥ expand(self)` when `new_size = offset + size`.
    pub fn shifted(&self, offset: usize, new_size: usize) -> Result<Self> {
        if offset + self.size > new_size {
            return Err(Error::Dimension(format!(
                "cannot shift a size {} word by {offset} into size {new_size}",
                self.size
            )));
        }
        Ok(ElementaryWord {
            ring: self.ring.clone(),
            size: new_size,
            letters: self
                .letters
                .iter()
                .map(|l| Letter {
                    i: l.i + offset,
                    j: l.j + offset,
                    lambda: l.lambda.clone(),
                })
                .collect(),
        })
    }
}

/// Adds `λ` times column `from` to column `to` (0-based).
fn col_op(a: &mut Matrix, to: usize, from: usize, lambda: &Elem) {
    for r in 0..a.rows() {
        let src = a.at(r, from);
        if src.is_zero() {
            continue;
        }
        let v = a.at(r, to) + &(lambda * src);
        a.set(r, to, v);
    }
}

/// Adds `λ` times row `from` to row `to` (0-based).
fn row_op(a: &mut Matrix, to: usize, from: usize, lambda: &Elem) {
    for c in 0..a.cols() {
        let src = a.at(from, c);
        if src.is_zero() {
            continue;
        }
        let v = a.at(to, c) + &(lambda * src);
        a.set(to, c, v);
    }
}

/// `E(w)·A`, `A·E(w)`, `E(w)ᵗ·A` or `A·E(w)ᵗ`, by row and column
/// operations instead of matrix products.
pub fn apply_word(a: &Matrix, w: &ElementaryWord, side: Side, transpose: bool) -> Result<Matrix> {
    if a.ring() != w.ring() {
        return Err(Error::RingMismatch(a.ring().spec(), w.ring().spec()));
    }
    let dim = match side {
        Side::Left => a.rows(),
        Side::Right => a.cols(),
    };
    if dim != w.size() {
        return Err(Error::Dimension(format!(
            "word of size {} cannot act on a {}x{} matrix from the {}",
            w.size(),
            a.rows(),
            a.cols(),
            if side == Side::Left { "left" } else { "right" }
        )));
    }
    let mut out = a.clone();
    // E_ij(λ) on the right: col j += λ col i; on the left: row i += λ row j.
    // The transpose E_ji(λ) swaps the roles and reverses the product order.
    match (side, transpose) {
        (Side::Right, false) => {
            for l in w.letters() {
                col_op(&mut out, l.j - 1, l.i - 1, &l.lambda);
            }
        }
        (Side::Right, true) => {
            for l in w.letters().iter().rev() {
                col_op(&mut out, l.i - 1, l.j - 1, &l.lambda);
            }
        }
        (Side::Left, false) => {
            for l in w.letters().iter().rev() {
                row_op(&mut out, l.i - 1, l.j - 1, &l.lambda);
            }
        }
        (Side::Left, true) => {
            for l in w.letters() {
                row_op(&mut out, l.j - 1, l.i - 1, &l.lambda);
            }
        }
    }
    Ok(out)
}

/// `E(w)ᵗ · A · E(w)`.
pub fn congruence_by_word(a: &Matrix, w: &ElementaryWord) -> Result<Matrix> {
    let right = apply_word(a, w, Side::Right, false)?;
    apply_word(&right, w, Side::Left, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_word(ring: &Ring, n: usize, len: usize, rng: &mut ChaCha8Rng) -> ElementaryWord {
        let mut w = ElementaryWord::empty(ring, n);
        for _ in 0..len {
            let i = rng.gen_range(1..=n);
            let mut j = rng.gen_range(1..n);
            if j >= i {
                j += 1;
            }
            w.push(i, j, ring.random_element(rng)).unwrap();
        }
        w
    }

    #[test]
    fn expansion() {
        let r = Ring::rationals();
        assert!(ElementaryWord::empty(&r, 3).expand().is_identity());
        let lam = r.from_i64(7);
        let w = ElementaryWord::from_letters(&r, 3, vec![(1, 2, lam.clone())]).unwrap();
        assert_eq!(w.expand(), Matrix::elementary(&r, 3, 1, 2, &lam).unwrap());
        let w = ElementaryWord::from_letters(
            &r,
            2,
            vec![(1, 2, r.one()), (2, 1, -r.one()), (1, 2, r.one())],
        )
        .unwrap();
        let psi1 =
            Matrix::from_rows(&r, vec![vec![r.zero(), r.one()], vec![-r.one(), r.zero()]]).unwrap();
        assert_eq!(w.expand(), psi1);
    }

    #[test]
    fn bad_letters() {
        let r = Ring::rationals();
        let mut w = ElementaryWord::empty(&r, 3);
        assert!(matches!(
            w.push(2, 2, r.one()),
            Err(Error::BadLetter { .. })
        ));
        assert!(matches!(
            w.push(0, 1, r.one()),
            Err(Error::BadLetter { .. })
        ));
        assert!(matches!(
            w.push(1, 4, r.one()),
            Err(Error::BadLetter { .. })
        ));
    }

    #[test]
    fn column_operation_on_a_row() {
        let r = crate::ring::parse_ring("Q[a,b,c,t]").unwrap();
        let row = Matrix::parse(&r, &[vec!["a", "b", "c"]]).unwrap();
        let w = ElementaryWord::from_letters(&r, 3, vec![(3, 1, r.var("t").unwrap())]).unwrap();
        let out = apply_word(&row, &w, Side::Right, false).unwrap();
        assert_eq!(
            out,
            Matrix::parse(&r, &[vec!["a + t*c", "b", "c"]]).unwrap()
        );
    }

    #[test]
    fn apply_matches_products() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let ring = Ring::modular(6).unwrap();
        for n in 2..=4 {
            for _ in 0..20 {
                let w = random_word(&ring, n, 6, &mut rng);
                let a = Matrix::new(
                    &ring,
                    n,
                    n,
                    (0..n * n).map(|_| ring.random_element(&mut rng)).collect(),
                )
                .unwrap();
                let e = w.expand();
                let et = e.transpose();
                assert_eq!(
                    apply_word(&a, &w, Side::Right, false).unwrap(),
                    a.mul(&e).unwrap()
                );
                assert_eq!(
                    apply_word(&a, &w, Side::Right, true).unwrap(),
                    a.mul(&et).unwrap()
                );
                assert_eq!(
                    apply_word(&a, &w, Side::Left, false).unwrap(),
                    e.mul(&a).unwrap()
                );
                assert_eq!(
                    apply_word(&a, &w, Side::Left, true).unwrap(),
                    et.mul(&a).unwrap()
                );
                assert!(e.det().unwrap().is_one());
                assert!(e.mul(&w.inverse().expand()).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn shifting_embeds_in_the_lower_block() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let ring = Ring::modular(5).unwrap();
        let w = random_word(&ring, 3, 5, &mut rng);
        assert_eq!(w.shifted(1, 4).unwrap().expand(), w.expand().one_perp());
    }
}
