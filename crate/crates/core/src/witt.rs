//! Pfaffian-one alternating matrices as representatives of elementary
//! symplectic Witt classes, with pad-and-conjugate certificates.
//!
//! Two representatives `X` (size `2s`) and `Y` (size `2r`) are related by a
//! certificate `(l, ε)` when, padding both with `ψ` blocks to the common
//! size `max(2s, 2r) + 2l`,
//!
//! ```text
//! X ⊥ ψ_a = E(ε)ᵗ (Y ⊥ ψ_b) E(ε).
//! ```

use std::collections::HashSet;

use crate::alternating::{congruence_word, pfaffian, psi, AlternatingMatrix};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::Ring;
use crate::word::{apply_word, ElementaryWord, Letter, Side};

/// Largest ring and matrix size the searches accept.
pub const MAX_SEARCH_RING: u64 = 8;
pub const MAX_SEARCH_SIZE: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WittRep {
    a: AlternatingMatrix,
}

impl WittRep {
    pub fn matrix(&self) -> &AlternatingMatrix {
        &self.a
    }

    pub fn size(&self) -> usize {
        self.a.size()
    }

    pub fn ring(&self) -> &Ring {
        self.a.ring()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivCertificate {
    pub l: usize,
    pub eps: ElementaryWord,
}

impl EquivCertificate {
    /// Certificate for the swapped pair: `ε⁻¹`.
    pub fn inverse(&self) -> EquivCertificate {
        EquivCertificate {
            l: self.l,
            eps: self.eps.inverse(),
        }
    }
}

/// Accepts `a` iff it has even size and Pfaffian exactly 1.
pub fn witt_rep(a: AlternatingMatrix) -> Result<WittRep> {
    let pf = pfaffian(&a)?;
    if !pf.is_one() {
        return Err(Error::PfaffianNotOne(pf.to_string()));
    }
    Ok(WittRep { a })
}

/// `A ⊥ ψ_l`.
pub fn pad(x: &WittRep, l: usize) -> WittRep {
    WittRep {
        a: x.a.perp(&psi(x.ring(), l)).expect("same ring"),
    }
}

/// `A_x ⊥ A_y`.
pub fn witt_perp(x: &WittRep, y: &WittRep) -> Result<WittRep> {
    Ok(WittRep { a: x.a.perp(&y.a)? })
}

/// Both representatives padded to `max(size) + 2l`.
pub fn padded_pair(x: &WittRep, y: &WittRep, l: usize) -> Result<(Matrix, Matrix)> {
    if x.ring() != y.ring() {
        return Err(Error::RingMismatch(x.ring().spec(), y.ring().spec()));
    }
    let n = x.size().max(y.size()) + 2 * l;
    let px = pad(x, (n - x.size()) / 2);
    let py = pad(y, (n - y.size()) / 2);
    Ok((px.a.into_matrix(), py.a.into_matrix()))
}

/// Exact check of `X ⊥ ψ = E(ε)ᵗ (Y ⊥ ψ) E(ε)`; no search.
pub fn check_equiv(x: &WittRep, y: &WittRep, c: &EquivCertificate) -> Result<bool> {
    let (px, py) = padded_pair(x, y, c.l)?;
    if c.eps.size() != px.rows() {
        return Err(Error::Dimension(format!(
            "certificate has size {}, padded matrices have size {}",
            c.eps.size(),
            px.rows()
        )));
    }
    if c.eps.ring() != x.ring() {
        return Err(Error::RingMismatch(c.eps.ring().spec(), x.ring().spec()));
    }
    let conj = apply_word(
        &apply_word(&py, &c.eps, Side::Right, false)?,
        &c.eps,
        Side::Left,
        true,
    )?;
    Ok(conj == px)
}

/// All `E_ij(λ)` with `λ ≠ 0`, ordered by `(i, j)` then by the ring's
/// enumeration order.
pub fn generators(ring: &Ring, n: usize) -> Result<Vec<Letter>> {
    let elements = ring.enumerate_elements()?;
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            for lambda in elements.iter().filter(|e| !e.is_zero()) {
                out.push(Letter {
                    i,
                    j,
                    lambda: lambda.clone(),
                });
            }
        }
    }
    Ok(out)
}

pub(crate) fn check_search_bounds(ring: &Ring, n: usize) -> Result<()> {
    let size = ring
        .cardinality()
        .ok_or_else(|| Error::InfiniteRing(ring.spec()))?;
    if size > MAX_SEARCH_RING {
        return Err(Error::SearchBound(format!(
            "ring has {size} elements, limit is {MAX_SEARCH_RING}"
        )));
    }
    if n > MAX_SEARCH_SIZE {
        return Err(Error::SearchBound(format!(
            "matrix size {n} exceeds {MAX_SEARCH_SIZE}"
        )));
    }
    Ok(())
}

/// Breadth-first search for `ε` of length at most `depth`, trying padding
/// `l = 0, 1, …, max_pad` in turn.
///
/// Each level is expanded from parents in the order their words were found
/// and with generators in a fixed order, so the first word reaching the
/// target is the lexicographically least among the shortest. `None` is
/// inconclusive.
pub fn search_equiv(
    x: &WittRep,
    y: &WittRep,
    depth: usize,
    max_pad: usize,
) -> Result<Option<EquivCertificate>> {
    for l in 0..=max_pad {
        let (px, py) = padded_pair(x, y, l)?;
        let n = px.rows();
        check_search_bounds(x.ring(), n)?;
        let gens = generators(x.ring(), n)?;
        let ring = x.ring();
        let start = AlternatingMatrix::new(py)?;
        let target = px;
        if *start.matrix() == target {
            return Ok(Some(EquivCertificate {
                l,
                eps: ElementaryWord::empty(ring, n),
            }));
        }
        let mut seen: HashSet<Matrix> = HashSet::new();
        seen.insert(start.matrix().clone());
        let mut frontier = vec![(start, ElementaryWord::empty(ring, n))];
        for _ in 0..depth {
            let mut next = Vec::new();
            for (state, word) in &frontier {
                for g in &gens {
                    let step =
                        ElementaryWord::from_letters(ring, n, vec![(g.i, g.j, g.lambda.clone())])?;
                    let moved = congruence_word(state, &step)?;
                    if !seen.insert(moved.matrix().clone()) {
                        continue;
                    }
                    let mut w = word.clone();
                    w.push(g.i, g.j, g.lambda.clone())?;
                    if *moved.matrix() == target {
                        return Ok(Some(EquivCertificate { l, eps: w }));
                    }
                    next.push((moved, w));
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
    }
    Ok(None)
}

/// Word whose expansion is the signed permutation carrying `X ⊥ Y` to
/// `Y ⊥ X` under congruence, built from signed swaps
/// `E_pq(1)E_qp(-1)E_pq(1)` and sign corrections `diag(-1, -1)`.
///
/// Returns a certificate `(0, ε)` relating `x ⊥ y` to `y ⊥ x`, already
/// checked, or `None` if the construction fails to verify.
pub fn commutation_certificate(x: &WittRep, y: &WittRep) -> Result<Option<EquivCertificate>> {
    let xy = witt_perp(x, y)?;
    let yx = witt_perp(y, x)?;
    let ring = x.ring();
    let (a, b) = (x.size(), y.size());
    let n = a + b;
    // column c of P must be ±e_{target(c)}
    let target = |c: usize| if c < a { b + c } else { c - a };
    let mut word = ElementaryWord::empty(ring, n);
    let signed_swap = |w: &mut ElementaryWord, p: usize, q: usize| {
        w.push(p + 1, q + 1, ring.one()).expect("in range");
        w.push(q + 1, p + 1, -ring.one()).expect("in range");
        w.push(p + 1, q + 1, ring.one()).expect("in range");
    };
    let column_target = |m: &Matrix, c: usize| (0..n).find(|&r| !m.at(r, c).is_zero());
    for c in 0..n {
        let current = word.expand();
        if column_target(&current, c) == Some(target(c)) {
            continue;
        }
        let Some(src) = (c + 1..n).find(|&k| column_target(&current, k) == Some(target(c))) else {
            return Ok(None);
        };
        signed_swap(&mut word, c, src);
    }
    let current = word.expand();
    let negative: Vec<usize> = (0..n)
        .filter(|&c| !current.at(target(c), c).is_one())
        .collect();
    if negative.len() % 2 == 1 {
        return Ok(None);
    }
    for pair in negative.chunks(2) {
        signed_swap(&mut word, pair[0], pair[1]);
        signed_swap(&mut word, pair[0], pair[1]);
    }
    let cert = EquivCertificate { l: 0, eps: word };
    Ok(check_equiv(&xy, &yx, &cert)?.then_some(cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alternating::congruence;
    use crate::ring::parse_ring;

    fn rep(a: AlternatingMatrix) -> WittRep {
        witt_rep(a).unwrap()
    }

    #[test]
    fn representatives() {
        let q = Ring::rationals();
        assert!(witt_rep(psi(&q, 2)).is_ok());
        let m = Matrix::parse(&q, &[vec!["0", "2"], vec!["-2", "0"]]).unwrap();
        assert_eq!(
            witt_rep(AlternatingMatrix::new(m).unwrap()).unwrap_err(),
            Error::PfaffianNotOne("2".into())
        );
        let p1 = rep(psi(&q, 1));
        assert_eq!(witt_perp(&p1, &p1).unwrap().matrix(), &psi(&q, 2));
        assert_eq!(pad(&p1, 1).size(), 4);
        assert_eq!(pad(&p1, 0), p1);
        let p2 = rep(psi(&q, 2));
        assert_eq!(witt_perp(&p2, &p2).unwrap().size(), 8);
        assert_eq!(witt_perp(&p1, &p2).unwrap(), pad(&p1, 2));
    }

    #[test]
    fn certificates() {
        let z5 = Ring::modular(5).unwrap();
        let p2 = rep(psi(&z5, 2));
        let empty = EquivCertificate {
            l: 0,
            eps: ElementaryWord::empty(&z5, 4),
        };
        assert!(check_equiv(&p2, &p2, &empty).unwrap());
        let w = ElementaryWord::from_letters(
            &z5,
            4,
            vec![(1, 3, z5.from_i64(2)), (4, 2, z5.from_i64(2))],
        )
        .unwrap();
        let moved = rep(congruence(&psi(&z5, 2), &w.expand()).unwrap());
        let cert = EquivCertificate { l: 0, eps: w };
        assert!(check_equiv(&moved, &p2, &cert).unwrap());
        assert!(check_equiv(&p2, &moved, &cert.inverse()).unwrap());
        assert!(!check_equiv(&p2, &moved, &empty).unwrap());
        let bad = EquivCertificate {
            l: 1,
            eps: ElementaryWord::empty(&z5, 4),
        };
        assert!(matches!(
            check_equiv(&p2, &p2, &bad),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn search_finds_short_words() {
        let z2 = Ring::modular(2).unwrap();
        let p2 = rep(psi(&z2, 2));
        let found = search_equiv(&p2, &p2, 0, 0).unwrap().unwrap();
        assert!(found.eps.is_empty());
        let w =
            ElementaryWord::from_letters(&z2, 4, vec![(1, 3, z2.one()), (2, 4, z2.one())]).unwrap();
        let moved = rep(congruence(&psi(&z2, 2), &w.expand()).unwrap());
        let cert = search_equiv(&p2, &moved, 2, 0).unwrap().unwrap();
        assert!(cert.eps.len() <= 2);
        assert!(check_equiv(&p2, &moved, &cert).unwrap());
        assert!(check_equiv(&moved, &p2, &cert.inverse()).unwrap());
        let q = Ring::rationals();
        assert!(matches!(
            search_equiv(&rep(psi(&q, 1)), &rep(psi(&q, 1)), 1, 0),
            Err(Error::InfiniteRing(_))
        ));
    }

    #[test]
    fn commutation_over_symbolic_rings() {
        let r = parse_ring("Q[a,b]").unwrap();
        let a = r.var("a").unwrap();
        let b = r.var("b").unwrap();
        let e = ElementaryWord::from_letters(&r, 4, vec![(1, 3, a), (2, 4, b)]).unwrap();
        let x = rep(congruence(&psi(&r, 2), &e.expand()).unwrap());
        let y = rep(psi(&r, 1));
        let cert = commutation_certificate(&x, &y).unwrap().unwrap();
        assert!(check_equiv(
            &witt_perp(&x, &y).unwrap(),
            &witt_perp(&y, &x).unwrap(),
            &cert
        )
        .unwrap());
    }
}
