use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::ArithmeticError;

/// A reduced fraction `m/n` of positive integers.
///
/// Used for ratios of rationally connected supernatural numbers and for
/// relative ranks of nonzero idempotents.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PositiveRational {
    numerator: BigUint,
    denominator: BigUint,
}

impl PositiveRational {
    pub fn new(
        numerator: impl Into<BigUint>,
        denominator: impl Into<BigUint>,
    ) -> Result<Self, ArithmeticError> {
        let numerator = numerator.into();
        let denominator = denominator.into();
        if numerator.is_zero() || denominator.is_zero() {
            return Err(ArithmeticError::Zero);
        }
        let g = numerator.gcd(&denominator);
        Ok(PositiveRational {
            numerator: numerator / &g,
            denominator: denominator / &g,
        })
    }

    pub fn one() -> Self {
        PositiveRational {
            numerator: BigUint::one(),
            denominator: BigUint::one(),
        }
    }

    pub fn integer(n: impl Into<BigUint>) -> Result<Self, ArithmeticError> {
        Self::new(n, 1u32)
    }

    pub fn numerator(&self) -> &BigUint {
        &self.numerator
    }

    pub fn denominator(&self) -> &BigUint {
        &self.denominator
    }

    pub fn reciprocal(&self) -> Self {
        PositiveRational {
            numerator: self.denominator.clone(),
            denominator: self.numerator.clone(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.numerator.is_one() && self.denominator.is_one()
    }

    /// Orders `self` against 1.
    pub fn cmp_one(&self) -> Ordering {
        self.numerator.cmp(&self.denominator)
    }
}

impl Mul for &PositiveRational {
    type Output = PositiveRational;

    fn mul(self, rhs: &PositiveRational) -> PositiveRational {
        // Cross-cancel so the product is already reduced.
        let g1 = self.numerator.gcd(&rhs.denominator);
        let g2 = rhs.numerator.gcd(&self.denominator);
        PositiveRational {
            numerator: (&self.numerator / &g1) * (&rhs.numerator / &g2),
            denominator: (&self.denominator / &g2) * (&rhs.denominator / &g1),
        }
    }
}

impl Mul for PositiveRational {
    type Output = PositiveRational;

    fn mul(self, rhs: PositiveRational) -> PositiveRational {
        &self * &rhs
    }
}

impl PartialOrd for PositiveRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PositiveRational {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.numerator * &other.denominator).cmp(&(&other.numerator * &self.denominator))
    }
}

impl fmt::Display for PositiveRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

/// Error for textual rationals.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid positive rational {0:?}: expected m/n with m, n >= 1")]
pub struct RationalParseError(pub String);

impl FromStr for PositiveRational {
    type Err = RationalParseError;

    /// Accepts `m/n` or a bare `m`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || RationalParseError(s.to_string());
        let (num, den) = match s.trim().split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let num: BigUint = num.parse().map_err(|_| err())?;
        let den: BigUint = den.parse().map_err(|_| err())?;
        PositiveRational::new(num, den).map_err(|_| err())
    }
}
