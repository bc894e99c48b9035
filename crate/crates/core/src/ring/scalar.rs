use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficient domain underneath every ring: the rationals or `Z/m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Base {
    Rationals,
    Modular(u64),
}

/// A coefficient in canonical form: a reduced fraction, or a residue in `[0, m)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Z(u64),
}

impl Base {
    pub fn zero(&self) -> Scalar {
        match self {
            Base::Rationals => Scalar::Q(BigRational::zero()),
            Base::Modular(_) => Scalar::Z(0),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            Base::Rationals => Scalar::Q(BigRational::from_integer(n.clone())),
            Base::Modular(m) => {
                let r = n.mod_floor(&BigInt::from(*m));
                Scalar::Z(u64::try_from(r).expect("residue fits in u64"))
            }
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Z(r) => *r == 0,
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Q(q) => q.is_one(),
            Scalar::Z(r) => *r == 1 % self.modulus().unwrap_or(2),
        }
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            Base::Rationals => None,
            Base::Modular(m) => Some(*m),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Base::Rationals, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x + y),
            (Base::Modular(m), Scalar::Z(x), Scalar::Z(y)) => {
                Scalar::Z(((*x as u128 + *y as u128) % *m as u128) as u64)
            }
            _ => panic!("scalar kind does not match its base"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Base::Rationals, Scalar::Q(x)) => Scalar::Q(-x),
            (Base::Modular(m), Scalar::Z(x)) => Scalar::Z(if *x == 0 { 0 } else { m - x }),
            _ => panic!("scalar kind does not match its base"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Base::Rationals, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x * y),
            (Base::Modular(m), Scalar::Z(x), Scalar::Z(y)) => {
                Scalar::Z(((*x as u128 * *y as u128) % *m as u128) as u64)
            }
            _ => panic!("scalar kind does not match its base"),
        }
    }

    /// Multiplicative inverse, when one exists.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        match (self, a) {
            (Base::Rationals, Scalar::Q(x)) => (!x.is_zero()).then(|| Scalar::Q(x.recip())),
            (Base::Modular(m), Scalar::Z(x)) => mod_inverse(*x, *m).map(Scalar::Z),
            _ => panic!("scalar kind does not match its base"),
        }
    }

    /// Every element of the base in enumeration order; `None` for the rationals.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self {
            Base::Rationals => None,
            Base::Modular(m) => Some((0..*m).map(Scalar::Z).collect()),
        }
    }

    pub fn is_field(&self) -> bool {
        match self {
            Base::Rationals => true,
            Base::Modular(m) => is_prime(*m),
        }
    }

    pub fn spec(&self) -> String {
        match self {
            Base::Rationals => "Q".to_string(),
            Base::Modular(m) => format!("Zmod:{m}"),
        }
    }
}

/// Inverse of `a` modulo `m` via the extended Euclidean algorithm.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Scalar {
    pub(crate) fn is_negative(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_negative(),
            Scalar::Z(_) => false,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Z(r) => write!(f, "{r}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modular_inverses() {
        assert_eq!(mod_inverse(5, 6), Some(5));
        assert_eq!(mod_inverse(2, 6), None);
        assert_eq!(mod_inverse(4, 5), Some(4));
        assert_eq!(mod_inverse(0, 7), None);
    }

    #[test]
    fn negative_integers_reduce_into_range() {
        let b = Base::Modular(6);
        assert_eq!(b.from_i64(-1), Scalar::Z(5));
        assert_eq!(b.from_i64(10), Scalar::Z(4));
    }

    #[test]
    fn fields() {
        assert!(Base::Rationals.is_field());
        assert!(Base::Modular(5).is_field());
        assert!(!Base::Modular(6).is_field());
    }
}
