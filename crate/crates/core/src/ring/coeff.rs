//! Arbitrary-precision integer coefficients.
//!
//! Almost every coefficient produced by the relation sweeps fits comfortably
//! in a machine word, so values are kept inline as `i128` and promoted to a
//! heap `BigInt` only on overflow. The representation is canonical: a value
//! that fits in `i128` is always stored inline, so equality is structural.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Clone, Debug)]
enum Repr {
    Small(i128),
    Big(Box<BigInt>),
}

/// An exact integer coefficient.
#[derive(Clone, Debug)]
pub struct Coeff(Repr);

impl Coeff {
    pub const ZERO: Coeff = Coeff(Repr::Small(0));
    pub const ONE: Coeff = Coeff(Repr::Small(1));

    pub fn from_i128(v: i128) -> Self {
        Coeff(Repr::Small(v))
    }

    pub fn from_bigint(v: BigInt) -> Self {
        match v.to_i128() {
            Some(s) => Coeff(Repr::Small(s)),
            None => Coeff(Repr::Big(Box::new(v))),
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        match &self.0 {
            Repr::Small(v) => BigInt::from(*v),
            Repr::Big(v) => (**v).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        // Canonical form keeps every i128-representable value inline, so a
        // Big repr is never zero.
        matches!(self.0, Repr::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1))
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(v) => *v < 0,
            Repr::Big(v) => v.is_negative(),
        }
    }

    pub fn is_even(&self) -> bool {
        match &self.0 {
            Repr::Small(v) => v % 2 == 0,
            Repr::Big(v) => v.is_even(),
        }
    }

    pub fn abs(&self) -> Coeff {
        match &self.0 {
            Repr::Small(v) => match v.checked_abs() {
                Some(a) => Coeff::from_i128(a),
                None => Coeff::from_bigint(-BigInt::from(*v)),
            },
            Repr::Big(v) => Coeff::from_bigint(v.abs()),
        }
    }

    pub fn neg(&self) -> Coeff {
        match &self.0 {
            Repr::Small(v) => match v.checked_neg() {
                Some(n) => Coeff::from_i128(n),
                None => Coeff::from_bigint(-BigInt::from(*v)),
            },
            Repr::Big(v) => Coeff::from_bigint(-(**v).clone()),
        }
    }

    pub fn add(&self, other: &Coeff) -> Coeff {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => match a.checked_add(*b) {
                Some(s) => Coeff::from_i128(s),
                None => Coeff::from_bigint(BigInt::from(*a) + BigInt::from(*b)),
            },
            _ => Coeff::from_bigint(self.to_bigint() + other.to_bigint()),
        }
    }

    pub fn sub(&self, other: &Coeff) -> Coeff {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => match a.checked_sub(*b) {
                Some(s) => Coeff::from_i128(s),
                None => Coeff::from_bigint(BigInt::from(*a) - BigInt::from(*b)),
            },
            _ => Coeff::from_bigint(self.to_bigint() - other.to_bigint()),
        }
    }

    pub fn mul(&self, other: &Coeff) -> Coeff {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => match a.checked_mul(*b) {
                Some(p) => Coeff::from_i128(p),
                None => Coeff::from_bigint(BigInt::from(*a) * BigInt::from(*b)),
            },
            _ => Coeff::from_bigint(self.to_bigint() * other.to_bigint()),
        }
    }

    /// Exact division; `None` when `other` is zero or does not divide evenly.
    pub fn div_exact(&self, other: &Coeff) -> Option<Coeff> {
        if other.is_zero() {
            return None;
        }
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => {
                if a % b != 0 {
                    return None;
                }
                match a.checked_div(*b) {
                    Some(q) => Some(Coeff::from_i128(q)),
                    None => Some(Coeff::from_bigint(BigInt::from(*a) / BigInt::from(*b))),
                }
            }
            _ => {
                let (q, r) = self.to_bigint().div_rem(&other.to_bigint());
                if r.is_zero() {
                    Some(Coeff::from_bigint(q))
                } else {
                    None
                }
            }
        }
    }

    /// Parse a decimal integer with optional leading sign.
    pub fn parse_decimal(s: &str) -> Option<Coeff> {
        if let Ok(v) = s.parse::<i128>() {
            return Some(Coeff::from_i128(v));
        }
        s.parse::<BigInt>().ok().map(Coeff::from_bigint)
    }
}

impl PartialEq for Coeff {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => a == b,
            (Repr::Big(a), Repr::Big(b)) => a == b,
            // Canonical form: mixed representations are never equal.
            _ => false,
        }
    }
}

impl Eq for Coeff {}

impl PartialOrd for Coeff {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Coeff {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => a.cmp(b),
            _ => self.to_bigint().cmp(&other.to_bigint()),
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(v) => write!(f, "{v}"),
            Repr::Big(v) => write!(f, "{v}"),
        }
    }
}

impl From<i64> for Coeff {
    fn from(v: i64) -> Self {
        Coeff::from_i128(v as i128)
    }
}

impl From<i32> for Coeff {
    fn from(v: i32) -> Self {
        Coeff::from_i128(v as i128)
    }
}
