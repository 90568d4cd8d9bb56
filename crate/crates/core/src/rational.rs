//! Reduced fractions over i128 for the identity forms that divide before
//! they are known to stay integral.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::Result;

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A fraction kept fully reduced, denominator always positive.
///
/// Equality is structural, which after reduction coincides with numeric
/// equality. Arithmetic is checked; overflow surfaces as an error instead
/// of wrapping.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExactRational {
    num: i128,
    den: i128,
}

impl ExactRational {
    /// Builds the reduced fraction num/den. Errors when den = 0.
    pub fn new(num: i128, den: i128) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero {
                what: "ExactRational::new",
                n: 0,
            });
        }
        let sign = if (num < 0) != (den < 0) && num != 0 {
            -1
        } else {
            1
        };
        let num_abs = num.unsigned_abs();
        let den_abs = den.unsigned_abs();
        let g = gcd_u128(num_abs, den_abs).max(1);
        Ok(ExactRational {
            num: sign * (num_abs / g) as i128,
            den: (den_abs / g) as i128,
        })
    }

    pub fn from_integer(n: i64) -> Self {
        ExactRational {
            num: n as i128,
            den: 1,
        }
    }

    /// n/d for nonnegative machine integers; panics only if d = 0.
    pub fn ratio(n: u64, d: u64) -> Self {
        ExactRational::new(n as i128, d as i128).expect("nonzero denominator")
    }

    pub fn zero() -> Self {
        ExactRational { num: 0, den: 1 }
    }

    pub fn one() -> Self {
        ExactRational { num: 1, den: 1 }
    }

    pub fn numerator(&self) -> i128 {
        self.num
    }

    pub fn denominator(&self) -> i128 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    /// The integer value when the denominator reduced to 1.
    pub fn to_integer(&self) -> Option<i64> {
        if self.den == 1 {
            i64::try_from(self.num).ok()
        } else {
            None
        }
    }

    pub fn checked_add(&self, other: &ExactRational) -> Result<ExactRational> {
        let overflow = || Error::Overflow {
            what: "ExactRational::add",
        };
        let a = self.num.checked_mul(other.den).ok_or_else(overflow)?;
        let b = other.num.checked_mul(self.den).ok_or_else(overflow)?;
        let num = a.checked_add(b).ok_or_else(overflow)?;
        let den = self.den.checked_mul(other.den).ok_or_else(overflow)?;
        ExactRational::new(num, den)
    }

    pub fn checked_mul(&self, other: &ExactRational) -> Result<ExactRational> {
        let overflow = || Error::Overflow {
            what: "ExactRational::mul",
        };
        // cross-reduce first so products stay small
        let g1 = gcd_u128(self.num.unsigned_abs(), other.den.unsigned_abs()).max(1) as i128;
        let g2 = gcd_u128(other.num.unsigned_abs(), self.den.unsigned_abs()).max(1) as i128;
        let num = (self.num / g1)
            .checked_mul(other.num / g2)
            .ok_or_else(overflow)?;
        let den = (self.den / g2)
            .checked_mul(other.den / g1)
            .ok_or_else(overflow)?;
        ExactRational::new(num, den)
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
