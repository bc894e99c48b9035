use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::Bound;

use super::scalar::{Base, Scalar};

/// Exponent vector over the declared variable list, with its total degree
/// cached.
///
/// Ordered graded-lexicographically: total degree first, then the
/// exponent of the earliest variable, and so on.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mono {
    degree: u32,
    exps: Vec<u32>,
}

impl Mono {
    pub fn new(exps: Vec<u32>) -> Self {
        Mono {
            degree: exps.iter().sum(),
            exps,
        }
    }

    pub fn one(nvars: usize) -> Self {
        Mono::new(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Mono::new(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono {
            degree: self.degree + other.degree,
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Mono) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Mono) -> Mono {
        Mono {
            degree: other.degree - self.degree,
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial; only nonzero coefficients are stored.
pub type Poly = BTreeMap<Mono, Scalar>;

pub(crate) fn add_term(base: &Base, p: &mut Poly, m: Mono, c: Scalar) {
    if base.is_zero(&c) {
        return;
    }
    match p.get_mut(&m) {
        Some(existing) => {
            let s = base.add(existing, &c);
            if base.is_zero(&s) {
                p.remove(&m);
            } else {
                *existing = s;
            }
        }
        None => {
            p.insert(m, c);
        }
    }
}

pub(crate) fn add(base: &Base, a: &Poly, b: &Poly) -> Poly {
    let mut out = a.clone();
    for (m, c) in b {
        add_term(base, &mut out, m.clone(), c.clone());
    }
    out
}

pub(crate) fn neg(base: &Base, a: &Poly) -> Poly {
    a.iter().map(|(m, c)| (m.clone(), base.neg(c))).collect()
}

/// All pairwise products sorted by monomial, then merged.
pub(crate) fn mul(base: &Base, a: &Poly, b: &Poly) -> Poly {
    let mut terms: Vec<(Mono, Scalar)> = Vec::with_capacity(a.len() * b.len());
    for (ma, ca) in a {
        for (mb, cb) in b {
            terms.push((ma.mul(mb), base.mul(ca, cb)));
        }
    }
    terms.sort_unstable_by(|x, y| x.0.cmp(&y.0));
    let mut merged: Vec<(Mono, Scalar)> = Vec::with_capacity(terms.len());
    for (m, c) in terms {
        match merged.last_mut() {
            Some((last, acc)) if *last == m => *acc = base.add(acc, &c),
            _ => merged.push((m, c)),
        }
    }
    merged
        .into_iter()
        .filter(|(_, c)| !base.is_zero(c))
        .collect()
}

pub(crate) fn constant(base: &Base, nvars: usize, c: Scalar) -> Poly {
    let mut p = Poly::new();
    add_term(base, &mut p, Mono::one(nvars), c);
    p
}

/// The single rewrite rule `lead -> lead - relation / lc(relation)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    pub poly: Poly,
    pub lead: Mono,
    pub lead_inv: Scalar,
}

impl Relation {
    /// Fails with the leading coefficient when it is not a unit.
    pub fn new(base: &Base, poly: Poly) -> Result<Self, Option<Scalar>> {
        let (lead, lc) = match poly.iter().next_back() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return Err(None),
        };
        let lead_inv = base.inv(&lc).ok_or(Some(lc))?;
        Ok(Relation {
            poly,
            lead,
            lead_inv,
        })
    }

    /// Rewrites until no term is divisible by the leading monomial.
    ///
    /// Every step replaces the largest reducible term by strictly smaller
    /// ones, so the loop terminates under the graded order and each scan
    /// may resume below the monomial just removed.
    pub fn reduce(&self, base: &Base, mut p: Poly) -> Poly {
        let mut upper: Bound<Mono> = Bound::Unbounded;
        loop {
            let hit = p
                .range((Bound::Unbounded, upper.clone()))
                .rev()
                .find(|(m, _)| self.lead.divides(m))
                .map(|(m, c)| (m.clone(), c.clone()));
            let Some((m, c)) = hit else {
                return p;
            };
            let shift = self.lead.quotient_of(&m);
            let factor = base.neg(&base.mul(&c, &self.lead_inv));
            for (rm, rc) in &self.poly {
                add_term(base, &mut p, rm.mul(&shift), base.mul(rc, &factor));
            }
            debug_assert!(!p.contains_key(&m));
            upper = Bound::Excluded(m);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let x2 = Mono::new(vec![2, 0]);
        let xy = Mono::new(vec![1, 1]);
        let y2 = Mono::new(vec![0, 2]);
        let x = Mono::new(vec![1, 0]);
        assert!(x2 > xy && xy > y2 && y2 > x);
        assert!(Mono::one(2) < x);
    }

    #[test]
    fn divisibility() {
        let a = Mono::new(vec![1, 1, 0]);
        let b = Mono::new(vec![2, 1, 3]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_of(&b), Mono::new(vec![1, 0, 3]));
    }
}
