//! Ring specs (`Q`, `Zmod:6`, `Q[x,y]`, `Zmod:2[x]/(x^2)`) and element
//! expressions over them.

use num_bigint::BigInt;

use super::{Base, Elem, Ring};
use crate::error::{Error, Result};

pub fn parse_ring(spec: &str) -> Result<Ring> {
    let spec = spec.trim();
    let (base_str, rest) = match spec.find('[') {
        Some(i) => (&spec[..i], Some(&spec[i..])),
        None => (spec, None),
    };
    let base = parse_base(base_str)?;
    let Some(rest) = rest else {
        return match base {
            Base::Rationals => Ok(Ring::rationals()),
            Base::Modular(m) => Ring::modular(m),
        };
    };
    let close = rest.find(']').ok_or_else(|| Error::Syntax {
        offset: spec.len(),
        message: "missing `]`".into(),
    })?;
    let vars: Vec<String> = rest[1..close]
        .split(',')
        .map(|v| v.trim().to_string())
        .collect();
    for v in &vars {
        if !is_identifier(v) {
            return Err(Error::Syntax {
                offset: base_str.len() + 1,
                message: format!("bad variable name `{v}`"),
            });
        }
    }
    let poly_ring = Ring::polynomial(base, vars)?;
    let tail = rest[close + 1..].trim();
    if tail.is_empty() {
        return Ok(poly_ring);
    }
    let body = tail
        .strip_prefix("/(")
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::Syntax {
            offset: base_str.len() + close + 1,
            message: "expected `/(relation)`".into(),
        })?;
    let relation = parse_element(&poly_ring, body)?;
    Ring::quotient(&poly_ring, &relation)
}

fn parse_base(s: &str) -> Result<Base> {
    if s == "Q" {
        return Ok(Base::Rationals);
    }
    let digits = s.strip_prefix("Zmod:").ok_or_else(|| Error::Syntax {
        offset: 0,
        message: format!("unknown base ring `{s}`"),
    })?;
    let m: u64 = digits.parse().map_err(|_| Error::Syntax {
        offset: 5,
        message: format!("bad modulus `{digits}`"),
    })?;
    if m < 2 {
        return Err(Error::BadModulus(m));
    }
    Ok(Base::Modular(m))
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parses `+ - * ^`, parentheses, variables and literals `n` or `n/d`.
pub fn parse_element(ring: &Ring, text: &str) -> Result<Elem> {
    let mut p = Parser {
        ring,
        src: text.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    ring: &'a Ring,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Syntax {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Elem> {
        let mut acc = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Elem> {
        let mut acc = self.unary()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Elem> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Elem> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let n = self.natural()?;
            let k = u32::try_from(n).map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn natural(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a nonnegative integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Ok(digits.parse().expect("digits"))
    }

    fn atom(&mut self) -> Result<Elem> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.natural()?;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let den = self.natural()?;
                    if den == BigInt::from(0) {
                        return Err(Error::NonUnitDivision("0".into()));
                    }
                    return self.ring.from_fraction(&num, &den);
                }
                Ok(self.ring.from_bigint(&num))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                self.ring.var(name)
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_specs() {
        assert!(matches!(
            parse_ring("Zmod:6").unwrap().kind(),
            super::super::RingKind::Modular(6)
        ));
        assert_eq!(parse_ring("Zmod:1").unwrap_err(), Error::BadModulus(1));
        assert!(matches!(parse_ring("R"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_ring("Q[x"), Err(Error::Syntax { .. })));
        assert_eq!(
            parse_ring("Q[x,x]").unwrap_err(),
            Error::DuplicateVariable("x".into())
        );
        assert!(parse_ring("Q[v1,v2,v3,w1,w2,w3]/(v1*w1+v2*w2+v3*w3-1)").is_ok());
    }

    #[test]
    fn non_unit_leading_coefficient() {
        assert!(matches!(
            parse_ring("Zmod:6[x]/(2*x^2+1)"),
            Err(Error::NonUnitLeadingCoefficient(_))
        ));
        assert!(parse_ring("Q[x]/(2*x^2+1)").is_ok());
        assert_eq!(parse_ring("Q[x]/(3)").unwrap_err(), Error::ConstantRelation);
    }

    #[test]
    fn element_errors() {
        let r = parse_ring("Q[x,y]").unwrap();
        assert_eq!(
            r.parse("z").unwrap_err(),
            Error::UnknownVariable("z".into())
        );
        assert!(matches!(r.parse("x +"), Err(Error::Syntax { .. })));
        assert!(matches!(r.parse("x ^ y"), Err(Error::Syntax { .. })));
        let z6 = Ring::modular(6).unwrap();
        assert!(matches!(z6.parse("1/2"), Err(Error::NonUnitDivision(_))));
        assert_eq!(z6.parse("1/5").unwrap(), z6.from_i64(5));
    }

    #[test]
    fn precedence() {
        let r = parse_ring("Q[x]").unwrap();
        assert_eq!(r.parse("-x^2").unwrap(), -r.parse("x*x").unwrap());
        assert_eq!(r.parse("2*x+3*x").unwrap(), r.parse("5*x").unwrap());
        assert_eq!(r.parse("(x-1)*(x+1)").unwrap(), r.parse("x^2-1").unwrap());
        assert_eq!(r.parse("3/2*x").unwrap().to_string(), "3/2*x");
    }
}
