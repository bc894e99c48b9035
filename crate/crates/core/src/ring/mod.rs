//! Exact commutative rings: `Q`, `Z/m`, multivariate polynomials over
//! either, and quotients of those by one principal relation whose leading
//! monomial has a unit coefficient.
//!
//! Elements are always stored in canonical form, so structural equality is
//! ring equality. For quotient rings the canonical form is the unique
//! representative with no term divisible by the relation's leading monomial.

mod parse;
mod poly;
mod scalar;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;

pub use parse::{parse_element, parse_ring};
pub use poly::{Mono, Poly, Relation};
pub use scalar::{mod_inverse, Base, Scalar};

use crate::error::{Error, Result};

/// Largest ring this crate will enumerate element by element.
pub const MAX_ENUMERATION: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingKind {
    Rationals,
    Modular(u64),
    Polynomial {
        base: Base,
        vars: Vec<String>,
    },
    Quotient {
        base: Base,
        vars: Vec<String>,
        relation: Relation,
    },
}

/// Shared handle to a validated ring descriptor.
#[derive(Debug, Clone)]
pub struct Ring(Arc<RingKind>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Ring {}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Scalar(Scalar),
    Poly(Poly),
}

/// A ring element in canonical form, tagged with its ring.
///
/// Arithmetic between elements of different rings is a programming error
/// and panics; matrix-level operations check rings and return errors.
#[derive(Debug, Clone)]
pub struct Elem {
    ring: Ring,
    repr: Repr,
}

impl PartialEq for Elem {
    fn eq(&self, other: &Self) -> bool {
        self.repr == other.repr && self.ring == other.ring
    }
}

impl Eq for Elem {}

impl std::hash::Hash for Elem {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.repr.hash(state);
    }
}

/// Outcome of a unit test in rings where it may be undecidable here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnitStatus {
    Unit(Elem),
    NotUnit,
    Unknown,
}

impl UnitStatus {
    pub fn inverse(self) -> Option<Elem> {
        match self {
            UnitStatus::Unit(e) => Some(e),
            _ => None,
        }
    }
}

impl Ring {
    pub fn rationals() -> Self {
        Ring(Arc::new(RingKind::Rationals))
    }

    pub fn modular(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::BadModulus(m));
        }
        Ok(Ring(Arc::new(RingKind::Modular(m))))
    }

    pub fn polynomial(base: Base, vars: Vec<String>) -> Result<Self> {
        check_base(&base)?;
        check_vars(&vars)?;
        Ok(Ring(Arc::new(RingKind::Polynomial { base, vars })))
    }

    /// Quotient of the polynomial ring by `relation`, given as an element of
    /// that polynomial ring.
    pub fn quotient(poly_ring: &Ring, relation: &Elem) -> Result<Self> {
        let RingKind::Polynomial { base, vars } = poly_ring.kind() else {
            return Err(Error::Invalid(
                "quotient base must be a polynomial ring".into(),
            ));
        };
        if relation.ring != *poly_ring {
            return Err(Error::RingMismatch(relation.ring.spec(), poly_ring.spec()));
        }
        let p = relation.poly().clone();
        if p.keys().all(Mono::is_one) {
            return Err(Error::ConstantRelation);
        }
        let relation = Relation::new(base, p).map_err(|lc| {
            Error::NonUnitLeadingCoefficient(lc.map(|c| c.to_string()).unwrap_or_default())
        })?;
        Ok(Ring(Arc::new(RingKind::Quotient {
            base: base.clone(),
            vars: vars.clone(),
            relation,
        })))
    }

    pub fn kind(&self) -> &RingKind {
        &self.0
    }

    pub fn base(&self) -> Base {
        match self.kind() {
            RingKind::Rationals => Base::Rationals,
            RingKind::Modular(m) => Base::Modular(*m),
            RingKind::Polynomial { base, .. } | RingKind::Quotient { base, .. } => base.clone(),
        }
    }

    pub fn vars(&self) -> &[String] {
        match self.kind() {
            RingKind::Polynomial { vars, .. } | RingKind::Quotient { vars, .. } => vars,
            _ => &[],
        }
    }

    fn is_poly(&self) -> bool {
        matches!(
            self.kind(),
            RingKind::Polynomial { .. } | RingKind::Quotient { .. }
        )
    }

    fn relation(&self) -> Option<&Relation> {
        match self.kind() {
            RingKind::Quotient { relation, .. } => Some(relation),
            _ => None,
        }
    }

    /// The polynomial ring a quotient ring is built on.
    pub fn cover(&self) -> Option<Ring> {
        match self.kind() {
            RingKind::Quotient { base, vars, .. } => Some(Ring(Arc::new(RingKind::Polynomial {
                base: base.clone(),
                vars: vars.clone(),
            }))),
            _ => None,
        }
    }

    /// The defining relation of a quotient ring, as a cover-ring element.
    pub fn relation_elem(&self) -> Option<Elem> {
        let rel = self.relation()?;
        Some(Elem {
            ring: self.cover()?,
            repr: Repr::Poly(rel.poly.clone()),
        })
    }

    /// The ring-spec string this descriptor parses from.
    pub fn spec(&self) -> String {
        match self.kind() {
            RingKind::Rationals => "Q".into(),
            RingKind::Modular(m) => format!("Zmod:{m}"),
            RingKind::Polynomial { base, vars } => format!("{}[{}]", base.spec(), vars.join(",")),
            RingKind::Quotient {
                base,
                vars,
                relation,
            } => {
                let cover = self.cover().expect("quotient has a cover");
                let rel = Elem::from_poly(&cover, relation.poly.clone());
                format!("{}[{}]/({})", base.spec(), vars.join(","), rel.compact())
            }
        }
    }

    fn make(&self, p: Poly) -> Elem {
        let p = match self.relation() {
            Some(rel) => rel.reduce(&self.base(), p),
            None => p,
        };
        Elem {
            ring: self.clone(),
            repr: Repr::Poly(p),
        }
    }

    pub fn scalar(&self, c: Scalar) -> Elem {
        if self.is_poly() {
            let p = poly::constant(&self.base(), self.vars().len(), c);
            self.make(p)
        } else {
            Elem {
                ring: self.clone(),
                repr: Repr::Scalar(c),
            }
        }
    }

    pub fn zero(&self) -> Elem {
        self.scalar(self.base().zero())
    }

    pub fn one(&self) -> Elem {
        self.scalar(self.base().one())
    }

    pub fn from_i64(&self, n: i64) -> Elem {
        self.scalar(self.base().from_i64(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Elem {
        self.scalar(self.base().from_bigint(n))
    }

    /// The image of `num/den`; fails when `den` is not invertible here.
    pub fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<Elem> {
        let base = self.base();
        let d = base.from_bigint(den);
        let inv = base
            .inv(&d)
            .ok_or_else(|| Error::NonUnitDivision(den.to_string()))?;
        Ok(self.scalar(base.mul(&base.from_bigint(num), &inv)))
    }

    pub fn var(&self, name: &str) -> Result<Elem> {
        let idx = self
            .vars()
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(self.var_at(idx))
    }

    pub fn var_at(&self, index: usize) -> Elem {
        let n = self.vars().len();
        let base = self.base();
        let mut p = Poly::new();
        poly::add_term(&base, &mut p, Mono::var(n, index), base.one());
        self.make(p)
    }

    /// Canonical form of `e`, which may come from this ring or, for a
    /// quotient ring, from the polynomial ring it is built on.
    pub fn normal_form(&self, e: &Elem) -> Result<Elem> {
        if e.ring == *self {
            return Ok(e.clone());
        }
        match self.cover() {
            Some(cover) if cover == e.ring => Ok(self.make(e.poly().clone())),
            _ => Err(Error::RingMismatch(e.ring.spec(), self.spec())),
        }
    }

    /// Number of elements, when finite and enumerable.
    pub fn cardinality(&self) -> Option<u64> {
        match self.kind() {
            RingKind::Modular(m) => Some(*m),
            RingKind::Quotient {
                base: Base::Modular(m),
                vars,
                relation,
            } if vars.len() == 1 => m.checked_pow(relation.lead.exps()[0]),
            _ => None,
        }
    }

    /// All elements in a fixed order: residues ascending for `Z/m`; for
    /// `Z/m[x]/(f)` coefficient vectors with the constant term varying fastest.
    pub fn enumerate_elements(&self) -> Result<Vec<Elem>> {
        let size = self
            .cardinality()
            .ok_or_else(|| Error::InfiniteRing(self.spec()))?;
        if size > MAX_ENUMERATION {
            return Err(Error::SearchBound(format!(
                "ring {} has {size} elements",
                self.spec()
            )));
        }
        let base = self.base();
        let residues = base.elements().expect("finite base");
        match self.kind() {
            RingKind::Modular(_) => Ok(residues.into_iter().map(|c| self.scalar(c)).collect()),
            RingKind::Quotient { relation, .. } => {
                let d = relation.lead.exps()[0] as usize;
                let m = residues.len() as u64;
                let out = (0..size)
                    .map(|mut idx| {
                        let mut p = Poly::new();
                        for k in 0..d {
                            let c = residues[(idx % m) as usize].clone();
                            idx /= m;
                            poly::add_term(&base, &mut p, Mono::new(vec![k as u32]), c);
                        }
                        self.make(p)
                    })
                    .collect();
                Ok(out)
            }
            _ => unreachable!("cardinality is only defined for finite rings"),
        }
    }

    /// Three-valued unit test; see [`UnitStatus`].
    ///
    /// Complete for `Q`, `Z/m` and the finite quotient rings. For infinite
    /// polynomial and quotient rings only constants and elements with a small
    /// power equal to a known unit are recognised.
    pub fn is_unit(&self, e: &Elem) -> UnitStatus {
        let base = self.base();
        if e.is_zero() {
            return UnitStatus::NotUnit;
        }
        if let Some(c) = e.as_constant() {
            // quotients here are free over the base, so a constant that is
            // not a unit modulo some prime of m stays a nonunit
            return match base.inv(&c) {
                Some(inv) => UnitStatus::Unit(self.scalar(inv)),
                None => UnitStatus::NotUnit,
            };
        }
        if let Some(status) = self.finite_unit_search(e) {
            return status;
        }
        if let RingKind::Polynomial { base, .. } = self.kind() {
            if base.is_field() {
                // nonconstant polynomials over a domain are never units
                return UnitStatus::NotUnit;
            }
        }
        let mut prev = e.clone();
        for _ in 2..=4 {
            let power = &prev * e;
            if let Some(c) = power.as_constant() {
                if let Some(inv) = base.inv(&c) {
                    // e * (e^{k-1} / c) = 1
                    return UnitStatus::Unit(&prev * &self.scalar(inv));
                }
            }
            prev = power;
        }
        UnitStatus::Unknown
    }

    fn finite_unit_search(&self, e: &Elem) -> Option<UnitStatus> {
        self.cardinality()?;
        let elements = self.enumerate_elements().ok()?;
        let one = self.one();
        Some(
            elements
                .into_iter()
                .find(|x| (e * x) == one)
                .map(UnitStatus::Unit)
                .unwrap_or(UnitStatus::NotUnit),
        )
    }

    /// Inverse of the integer `n` mapped into this ring, if it exists.
    pub fn integer_invertible(&self, n: u64) -> Option<Elem> {
        let base = self.base();
        base.inv(&base.from_bigint(&BigInt::from(n)))
            .map(|inv| self.scalar(inv))
    }

    /// A small random element, for randomized property suites.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        let base = self.base();
        let coeff = |rng: &mut R| match &base {
            Base::Rationals => {
                let num = BigInt::from(rng.gen_range(-5i64..=5));
                let den = BigInt::from(rng.gen_range(1i64..=3));
                Scalar::Q(BigRational::new(num, den))
            }
            Base::Modular(m) => Scalar::Z(rng.gen_range(0..*m)),
        };
        if !self.is_poly() {
            return self.scalar(coeff(rng));
        }
        let n = self.vars().len();
        let mut p = Poly::new();
        for _ in 0..rng.gen_range(0..=3) {
            let mut exps = vec![0u32; n];
            for _ in 0..rng.gen_range(0..=2) {
                exps[rng.gen_range(0..n)] += 1;
            }
            poly::add_term(&base, &mut p, Mono::new(exps), coeff(rng));
        }
        self.make(p)
    }
}

fn check_base(base: &Base) -> Result<()> {
    match base {
        Base::Modular(m) if *m < 2 => Err(Error::BadModulus(*m)),
        _ => Ok(()),
    }
}

fn check_vars(vars: &[String]) -> Result<()> {
    if vars.is_empty() {
        return Err(Error::Invalid("variable list is empty".into()));
    }
    for (i, v) in vars.iter().enumerate() {
        if vars[..i].contains(v) {
            return Err(Error::DuplicateVariable(v.clone()));
        }
    }
    Ok(())
}

impl Elem {
    fn from_poly(ring: &Ring, p: Poly) -> Elem {
        ring.make(p)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    fn poly(&self) -> &Poly {
        match &self.repr {
            Repr::Poly(p) => p,
            Repr::Scalar(_) => panic!("not a polynomial element"),
        }
    }

    /// Terms as (exponent vector, coefficient), highest first; a scalar
    /// ring element is reported as one constant term.
    pub fn terms(&self) -> Vec<(Mono, Scalar)> {
        match &self.repr {
            Repr::Scalar(c) => {
                if self.is_zero() {
                    vec![]
                } else {
                    vec![(Mono::one(0), c.clone())]
                }
            }
            Repr::Poly(p) => p
                .iter()
                .rev()
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Scalar(c) => self.ring.base().is_zero(c),
            Repr::Poly(p) => p.is_empty(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_constant()
            .is_some_and(|c| self.ring.base().is_one(&c))
    }

    /// The value when this element is a constant.
    pub fn as_constant(&self) -> Option<Scalar> {
        match &self.repr {
            Repr::Scalar(c) => Some(c.clone()),
            Repr::Poly(p) => match p.len() {
                0 => Some(self.ring.base().zero()),
                1 => {
                    let (m, c) = p.iter().next().expect("one term");
                    m.is_one().then(|| c.clone())
                }
                _ => None,
            },
        }
    }

    pub fn pow(&self, mut k: u32) -> Elem {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Value at a rational point; only for rings over `Q`.
    ///
    /// For a quotient ring the canonical representative is evaluated, which
    /// is meaningful when the point lies on the zero set of the relation.
    pub fn evaluate(&self, point: &[BigRational]) -> Result<BigRational> {
        if self.ring.base() != Base::Rationals {
            return Err(Error::Invalid(
                "evaluation needs rational coefficients".into(),
            ));
        }
        match &self.repr {
            Repr::Scalar(Scalar::Q(q)) => Ok(q.clone()),
            Repr::Scalar(_) => unreachable!(),
            Repr::Poly(p) => {
                if point.len() != self.ring.vars().len() {
                    return Err(Error::Dimension(format!(
                        "point has {} coordinates, ring has {} variables",
                        point.len(),
                        self.ring.vars().len()
                    )));
                }
                let mut acc = BigRational::zero();
                for (m, c) in p {
                    let Scalar::Q(c) = c else { unreachable!() };
                    let mut term = c.clone();
                    for (x, &e) in point.iter().zip(m.exps()) {
                        for _ in 0..e {
                            term *= x;
                        }
                    }
                    acc += term;
                }
                Ok(acc)
            }
        }
    }

    fn same_ring(&self, other: &Elem) {
        assert!(
            self.ring == other.ring,
            "ring mismatch: {} vs {}",
            self.ring.spec(),
            other.ring.spec()
        );
    }

    /// Rendering without spaces, as used inside ring specs.
    fn compact(&self) -> String {
        self.to_string().replace(' ', "")
    }
}

impl<'a> Add<&'a Elem> for &'a Elem {
    type Output = Elem;
    fn add(self, rhs: &Elem) -> Elem {
        self.same_ring(rhs);
        let base = self.ring.base();
        match (&self.repr, &rhs.repr) {
            (Repr::Scalar(a), Repr::Scalar(b)) => self.ring.scalar(base.add(a, b)),
            (Repr::Poly(a), Repr::Poly(b)) => Elem {
                ring: self.ring.clone(),
                repr: Repr::Poly(poly::add(&base, a, b)),
            },
            _ => unreachable!(),
        }
    }
}

impl<'a> Sub<&'a Elem> for &'a Elem {
    type Output = Elem;
    fn sub(self, rhs: &Elem) -> Elem {
        self + &(-rhs)
    }
}

impl Neg for &Elem {
    type Output = Elem;
    fn neg(self) -> Elem {
        let base = self.ring.base();
        let repr = match &self.repr {
            Repr::Scalar(a) => Repr::Scalar(base.neg(a)),
            Repr::Poly(p) => Repr::Poly(poly::neg(&base, p)),
        };
        Elem {
            ring: self.ring.clone(),
            repr,
        }
    }
}

impl<'a> Mul<&'a Elem> for &'a Elem {
    type Output = Elem;
    fn mul(self, rhs: &Elem) -> Elem {
        self.same_ring(rhs);
        let base = self.ring.base();
        match (&self.repr, &rhs.repr) {
            (Repr::Scalar(a), Repr::Scalar(b)) => self.ring.scalar(base.mul(a, b)),
            (Repr::Poly(a), Repr::Poly(b)) => self.ring.make(poly::mul(&base, a, b)),
            _ => unreachable!(),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<Elem> for Elem {
            type Output = Elem;
            fn $f(self, rhs: Elem) -> Elem {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a Elem> for Elem {
            type Output = Elem;
            fn $f(self, rhs: &'a Elem) -> Elem {
                (&self).$f(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Elem {
    type Output = Elem;
    fn neg(self) -> Elem {
        -&self
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = match &self.repr {
            Repr::Scalar(c) => return write!(f, "{c}"),
            Repr::Poly(p) => p,
        };
        if p.is_empty() {
            return write!(f, "0");
        }
        let vars = self.ring.vars();
        let base = self.ring.base();
        for (k, (m, c)) in p.iter().rev().enumerate() {
            let negative = c.is_negative();
            let mag = if negative { base.neg(c) } else { c.clone() };
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            let mono: Vec<String> = m
                .exps()
                .iter()
                .zip(vars)
                .filter(|(e, _)| **e > 0)
                .map(|(e, v)| {
                    if *e == 1 {
                        v.clone()
                    } else {
                        format!("{v}^{e}")
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if base.is_one(&mag) {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{mag}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Ring {
    /// Parses an element of this ring; shorthand for [`parse_element`].
    pub fn parse(&self, text: &str) -> Result<Elem> {
        parse_element(self, text)
    }
}

/// `n/d` as a rational, for building sample points.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sphere() -> Ring {
        parse_ring("Q[x0,x1,x2]/(x0^2+x1^2+x2^2-1)").unwrap()
    }

    fn g3() -> Ring {
        parse_ring("Q[v1,v2,v3,w1,w2,w3]/(v1*w1+v2*w2+v3*w3-1)").unwrap()
    }

    #[test]
    fn modular_literals_reduce() {
        let r = parse_ring("Zmod:6").unwrap();
        assert_eq!(r.parse("10").unwrap(), r.from_i64(4));
        assert_eq!(r.parse("-1").unwrap(), r.from_i64(5));
    }

    #[test]
    fn rational_literal_reduces() {
        let q = Ring::rationals();
        let half = q.parse("3/6").unwrap();
        assert_eq!(half.to_string(), "1/2");
    }

    #[test]
    fn sphere_rewrite_once() {
        let s = sphere();
        assert_eq!(
            s.parse("x0^2").unwrap(),
            s.parse("1 - x1^2 - x2^2").unwrap()
        );
    }

    #[test]
    fn sphere_cube() {
        // x0 * x0^2 -> x0 * (1 - x1^2 - x2^2)
        let s = sphere();
        let cube = s.parse("x0^3").unwrap();
        assert_eq!(cube, s.parse("x0 - x0*x1^2 - x0*x2^2").unwrap());
        let cover = s.cover().unwrap();
        let raw = cover.parse("x0^3").unwrap();
        assert_eq!(s.normal_form(&raw).unwrap(), cube);
    }

    #[test]
    fn g3_relation_rewrite() {
        let g = g3();
        assert_eq!(
            g.parse("v1*w1").unwrap(),
            g.parse("1 - v2*w2 - v3*w3").unwrap()
        );
    }

    #[test]
    fn relation_normalizes_to_zero() {
        for (spec, rel) in [
            ("Q[x0,x1,x2]/(x0^2+x1^2+x2^2-1)", "x0^2+x1^2+x2^2-1"),
            (
                "Q[v1,v2,v3,w1,w2,w3]/(v1*w1+v2*w2+v3*w3-1)",
                "v1*w1+v2*w2+v3*w3-1",
            ),
        ] {
            let r = parse_ring(spec).unwrap();
            assert!(r.parse(rel).unwrap().is_zero());
        }
    }

    #[test]
    fn exact_cancellation() {
        let r = parse_ring("Q[x]").unwrap();
        assert!(r.parse("(x+1)^2 - x^2 - 2*x - 1").unwrap().is_zero());
    }

    #[test]
    fn unit_detection() {
        let z6 = Ring::modular(6).unwrap();
        assert_eq!(
            z6.is_unit(&z6.from_i64(5)),
            UnitStatus::Unit(z6.from_i64(5))
        );
        assert_eq!(z6.is_unit(&z6.from_i64(2)), UnitStatus::NotUnit);
        let q = Ring::rationals();
        let inv = q.is_unit(&q.from_i64(24)).inverse().unwrap();
        assert_eq!(inv.to_string(), "1/24");
        let qx = parse_ring("Q[x]").unwrap();
        assert_eq!(qx.is_unit(&qx.parse("x").unwrap()), UnitStatus::NotUnit);
        // 1 + x is a unit in Z/4[x]/(x^2)... and in Z/2[x]/(x^2)
        let dual = parse_ring("Zmod:2[x]/(x^2)").unwrap();
        let e = dual.parse("1 + x").unwrap();
        assert_eq!(dual.is_unit(&e), UnitStatus::Unit(e.clone()));
        assert_eq!(dual.is_unit(&dual.parse("x").unwrap()), UnitStatus::NotUnit);
    }

    #[test]
    fn unit_by_small_power() {
        // in Q[x]/(x^2), 1 + x has (1+x)(1-x) = 1; its square is 1 + 2x,
        // not constant, so the power heuristic only applies to e.g. x in
        // Q[x]/(x^2 - 2): x^2 = 2
        let r = parse_ring("Q[x]/(x^2-2)").unwrap();
        let x = r.parse("x").unwrap();
        let inv = r.is_unit(&x).inverse().unwrap();
        assert!((&x * &inv).is_one());
        let s = sphere();
        assert_eq!(s.is_unit(&s.parse("x0").unwrap()), UnitStatus::Unknown);
    }

    #[test]
    fn integer_inverses() {
        let z5 = Ring::modular(5).unwrap();
        assert_eq!(z5.integer_invertible(24), Some(z5.from_i64(4)));
        let z6 = Ring::modular(6).unwrap();
        assert_eq!(z6.integer_invertible(6), None);
        let q = Ring::rationals();
        assert_eq!(q.integer_invertible(2).unwrap().to_string(), "1/2");
    }

    #[test]
    fn enumeration() {
        let z3 = Ring::modular(3).unwrap();
        let els: Vec<String> = z3
            .enumerate_elements()
            .unwrap()
            .iter()
            .map(|e| e.to_string())
            .collect();
        assert_eq!(els, ["0", "1", "2"]);
        assert_eq!(
            Ring::modular(6)
                .unwrap()
                .enumerate_elements()
                .unwrap()
                .len(),
            6
        );
        let dual = parse_ring("Zmod:2[x]/(x^2)").unwrap();
        let els: Vec<String> = dual
            .enumerate_elements()
            .unwrap()
            .iter()
            .map(|e| e.to_string())
            .collect();
        assert_eq!(els, ["0", "1", "x", "x + 1"]);
        assert!(matches!(
            Ring::rationals().enumerate_elements(),
            Err(Error::InfiniteRing(_))
        ));
        assert!(sphere().enumerate_elements().is_err());
    }

    #[test]
    fn spec_round_trip() {
        for spec in [
            "Q",
            "Zmod:6",
            "Q[x,y]",
            "Q[x0,x1,x2]/(x0^2+x1^2+x2^2-1)",
            "Zmod:2[x]/(x^2)",
        ] {
            let r = parse_ring(spec).unwrap();
            let again = parse_ring(&r.spec()).unwrap();
            assert_eq!(r, again, "{spec}");
        }
    }

    #[test]
    fn evaluation_on_sphere() {
        let s = sphere();
        let e = s.parse("x0*x1 + x2^2").unwrap();
        let pt = [ratio(3, 5), ratio(4, 5), BigRational::zero()];
        assert_eq!(e.evaluate(&pt).unwrap(), ratio(12, 25));
    }
}
