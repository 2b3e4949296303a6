//! Exact scalars: rationals or residues modulo a prime.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::{Ratio, Rational64};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("`{0}` is not prime")]
    NotPrime(u64),
    #[error("unrecognised field `{0}`; expected `q` or `fp:<prime>`")]
    Unknown(String),
    #[error("{0} is not invertible in F_{1}")]
    NotInvertible(String, u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[derive(Default)]
pub enum FieldKind {
    #[default]
    Rational,
    Prime(u64),
}


impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => write!(f, "q"),
            FieldKind::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldKind {
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        // residues are multiplied in u128, so any u32-sized prime is safe
        if is_prime(p) && p < (1 << 32) {
            Ok(FieldKind::Prime(p))
        } else {
            Err(FieldError::NotPrime(p))
        }
    }

    pub fn parse(text: &str) -> Result<Self, FieldError> {
        match text {
            "q" | "Q" => Ok(FieldKind::Rational),
            _ => {
                let p = text
                    .strip_prefix("fp:")
                    .and_then(|s| s.parse::<u64>().ok())
                    .ok_or_else(|| FieldError::Unknown(text.to_string()))?;
                Self::prime(p)
            }
        }
    }

    pub fn zero(self) -> Scalar {
        match self {
            FieldKind::Rational => Scalar::Q(Ratio::zero()),
            FieldKind::Prime(p) => Scalar::P { v: 0, p },
        }
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    pub fn int(self, n: i64) -> Scalar {
        match self {
            FieldKind::Rational => Scalar::Q(Ratio::from_integer(n as i128)),
            FieldKind::Prime(p) => Scalar::P { v: (n as i128).rem_euclid(p as i128) as u64, p },
        }
    }

    pub fn from_rational(self, r: Rational64) -> Result<Scalar, FieldError> {
        match self {
            FieldKind::Rational => Ok(Scalar::Q(Ratio::new(*r.numer() as i128, *r.denom() as i128))),
            FieldKind::Prime(p) => {
                let den = self.int(*r.denom());
                if den.is_zero() {
                    return Err(FieldError::NotInvertible(r.to_string(), p));
                }
                Ok(self.int(*r.numer()) * den.inv())
            }
        }
    }
}

/// A field element. Operations between different fields panic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(Ratio<i128>),
    P { v: u64, p: u64 },
}

fn overflow() -> ! {
    panic!("rational arithmetic overflowed i128")
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::P { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::P { v, .. } => *v == 1,
        }
    }

    pub fn field(&self) -> FieldKind {
        match self {
            Scalar::Q(_) => FieldKind::Rational,
            Scalar::P { p, .. } => FieldKind::Prime(*p),
        }
    }

    pub fn inv(self) -> Scalar {
        match self {
            Scalar::Q(r) => {
                assert!(!r.is_zero(), "inverse of zero");
                Scalar::Q(r.recip())
            }
            Scalar::P { v, p } => {
                assert!(v != 0, "inverse of zero");
                let (g, x, _) = extended_gcd(v as i128, p as i128);
                debug_assert_eq!(g, 1);
                Scalar::P { v: x.rem_euclid(p as i128) as u64, p }
            }
        }
    }

    pub fn div(self, other: Scalar) -> Scalar {
        self * other.inv()
    }
}

fn extended_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let e = a.extended_gcd(&b);
    (e.gcd, e.x, e.y)
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, o: Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.checked_add(&b).unwrap_or_else(|| overflow())),
            (Scalar::P { v: a, p }, Scalar::P { v: b, p: q }) if p == q => Scalar::P { v: (a + b) % p, p },
            _ => panic!("mixed fields"),
        }
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, o: Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.checked_sub(&b).unwrap_or_else(|| overflow())),
            (Scalar::P { v: a, p }, Scalar::P { v: b, p: q }) if p == q => Scalar::P { v: (a + p - b) % p, p },
            _ => panic!("mixed fields"),
        }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.checked_mul(&b).unwrap_or_else(|| overflow())),
            (Scalar::P { v: a, p }, Scalar::P { v: b, p: q }) if p == q => {
                Scalar::P { v: ((a as u128 * b as u128) % p as u128) as u64, p }
            }
            _ => panic!("mixed fields"),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::P { v, p } => Scalar::P { v: (p - v) % p, p },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Scalar::Q(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Scalar::P { v, .. } => write!(f, "{v}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_arithmetic() {
        let f = FieldKind::prime(7).unwrap();
        let three = f.int(3);
        assert_eq!(three * three.inv(), f.one());
        assert_eq!(f.int(-1), f.int(6));
        assert_eq!(f.from_rational(Rational64::new(1, 2)).unwrap() * f.int(2), f.one());
        assert!(f.from_rational(Rational64::new(1, 7)).is_err());
    }

    #[test]
    fn parse_fields() {
        assert_eq!(FieldKind::parse("q").unwrap(), FieldKind::Rational);
        assert_eq!(FieldKind::parse("fp:5").unwrap(), FieldKind::Prime(5));
        assert!(FieldKind::parse("fp:6").is_err());
        assert!(FieldKind::parse("r").is_err());
    }
}
