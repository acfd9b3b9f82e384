//! Supernatural (Steinitz) numbers `∏ p^{r_p}` with exponents in `ℕ ∪ {∞}`.
//!
//! Only eventually-constant exponent patterns are representable: a default
//! exponent that applies to every prime, overridden at finitely many primes.
//! Every constructor returns the canonical form (no override equal to the
//! default, overrides sorted by prime), so derived equality is semantic
//! equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::ArithmeticError;
use crate::factor::TrialDivision;
use crate::rational::PositiveRational;

/// Exponent of a prime in a supernatural number.
///
/// Variant order gives `Finite(_) < Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Exponent {
    Finite(u64),
    Infinite,
}

impl Exponent {
    pub const ZERO: Exponent = Exponent::Finite(0);

    pub fn is_finite(self) -> bool {
        matches!(self, Exponent::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Exponent::Finite(k) => Some(k),
            Exponent::Infinite => None,
        }
    }

    pub fn checked_add(self, rhs: Exponent) -> Option<Exponent> {
        match (self, rhs) {
            (Exponent::Finite(a), Exponent::Finite(b)) => a.checked_add(b).map(Exponent::Finite),
            _ => Some(Exponent::Infinite),
        }
    }
}

impl Add for Exponent {
    type Output = Exponent;

    /// Panics if two finite exponents overflow `u64`.
    fn add(self, rhs: Exponent) -> Exponent {
        self.checked_add(rhs).expect("exponent overflow")
    }
}

impl From<u64> for Exponent {
    fn from(k: u64) -> Self {
        Exponent::Finite(k)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Finite(k) => write!(f, "{k}"),
            Exponent::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SupernaturalNumber {
    default_exp: Exponent,
    /// Strictly increasing primes, none mapped to `default_exp`.
    exceptions: Vec<(u64, Exponent)>,
}

impl Default for SupernaturalNumber {
    fn default() -> Self {
        Self::one()
    }
}

impl SupernaturalNumber {
    /// The empty product.
    pub fn one() -> Self {
        SupernaturalNumber {
            default_exp: Exponent::ZERO,
            exceptions: Vec::new(),
        }
    }

    /// `∏_p p^e` over all primes.
    pub fn all_primes(e: Exponent) -> Self {
        SupernaturalNumber {
            default_exp: e,
            exceptions: Vec::new(),
        }
    }

    pub fn from_natural(n: u64) -> Result<Self, ArithmeticError> {
        Self::from_natural_with(n, &TrialDivision::default())
    }

    pub fn from_natural_with(n: u64, td: &TrialDivision) -> Result<Self, ArithmeticError> {
        let factors = td.factor(n)?;
        Ok(Self::from_factorization(&factors))
    }

    pub fn from_big_natural(n: &BigUint) -> Result<Self, ArithmeticError> {
        let factors = TrialDivision::default().factor_big(n)?;
        Ok(Self::from_factorization(&factors))
    }

    /// From a verified factorization (increasing primes).
    pub(crate) fn from_factorization(factors: &[(u64, u32)]) -> Self {
        SupernaturalNumber {
            default_exp: Exponent::ZERO,
            exceptions: factors
                .iter()
                .filter(|&&(_, k)| k > 0)
                .map(|&(p, k)| (p, Exponent::Finite(u64::from(k))))
                .collect(),
        }
    }

    /// `p^e` for a single prime.
    pub fn prime_power(p: u64, e: Exponent) -> Result<Self, ArithmeticError> {
        Self::from_parts(Exponent::ZERO, [(p, e)])
    }

    /// Builds from a default exponent and per-prime overrides. Overrides must
    /// name distinct primes; overrides equal to the default are dropped.
    pub fn from_parts(
        default_exp: Exponent,
        exceptions: impl IntoIterator<Item = (u64, Exponent)>,
    ) -> Result<Self, ArithmeticError> {
        Self::from_parts_with(default_exp, exceptions, &TrialDivision::default())
    }

    pub fn from_parts_with(
        default_exp: Exponent,
        exceptions: impl IntoIterator<Item = (u64, Exponent)>,
        td: &TrialDivision,
    ) -> Result<Self, ArithmeticError> {
        let mut map = BTreeMap::new();
        for (p, e) in exceptions {
            if !td.is_prime(p)? {
                return Err(ArithmeticError::NotPrime(p));
            }
            if map.insert(p, e).is_some() {
                return Err(ArithmeticError::DuplicatePrime(p));
            }
        }
        Ok(Self::canonical(default_exp, map))
    }

    fn canonical(default_exp: Exponent, map: BTreeMap<u64, Exponent>) -> Self {
        SupernaturalNumber {
            default_exp,
            exceptions: map.into_iter().filter(|&(_, e)| e != default_exp).collect(),
        }
    }

    pub fn default_exponent(&self) -> Exponent {
        self.default_exp
    }

    /// Overrides of the default exponent, in increasing prime order.
    pub fn exceptions(&self) -> &[(u64, Exponent)] {
        &self.exceptions
    }

    /// Exponent of `p`. The caller guarantees `p` is prime; see
    /// [`SupernaturalNumber::exponent_at`] for the checked form.
    pub fn exponent_of(&self, p: u64) -> Exponent {
        match self.exceptions.binary_search_by_key(&p, |&(q, _)| q) {
            Ok(i) => self.exceptions[i].1,
            Err(_) => self.default_exp,
        }
    }

    pub fn exponent_at(&self, p: u64) -> Result<Exponent, ArithmeticError> {
        if !TrialDivision::default().is_prime(p)? {
            return Err(ArithmeticError::NotPrime(p));
        }
        Ok(self.exponent_of(p))
    }

    /// Combines exponents prime by prime. `op` must be applied to the defaults
    /// too, which is what makes the result again eventually constant.
    fn pointwise(&self, other: &Self, op: impl Fn(Exponent, Exponent) -> Exponent) -> Self {
        let mut map = BTreeMap::new();
        for &(p, _) in self.exceptions.iter().chain(&other.exceptions) {
            map.entry(p)
                .or_insert_with(|| op(self.exponent_of(p), other.exponent_of(p)));
        }
        Self::canonical(op(self.default_exp, other.default_exp), map)
    }

    /// Product: exponents add, with `∞` absorbing.
    pub fn mul(&self, other: &Self) -> Self {
        self.pointwise(other, |a, b| a + b)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        self.pointwise(other, Ord::max)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        self.pointwise(other, Ord::min)
    }

    /// `self | other`: every exponent of `self` is at most the matching one of `other`.
    pub fn divides(&self, other: &Self) -> bool {
        self.default_exp <= other.default_exp
            && self
                .exceptions
                .iter()
                .chain(&other.exceptions)
                .all(|&(p, _)| self.exponent_of(p) <= other.exponent_of(p))
    }

    pub fn is_locally_finite(&self) -> bool {
        self.default_exp.is_finite() && self.exceptions.iter().all(|(_, e)| e.is_finite())
    }

    /// The ordinary integer this number equals, if it is one.
    pub fn to_natural(&self) -> Option<BigUint> {
        if self.default_exp != Exponent::ZERO {
            return None;
        }
        self.exceptions
            .iter()
            .try_fold(BigUint::one(), |acc, &(p, e)| {
                let k = u32::try_from(e.finite()?).ok()?;
                Some(acc * BigUint::from(p).pow(k))
            })
    }

    /// Like [`to_natural`](Self::to_natural) but only when the value fits in a `u64`.
    pub fn to_u64(&self) -> Option<u64> {
        if self.default_exp != Exponent::ZERO {
            return None;
        }
        self.exceptions.iter().try_fold(1u64, |acc, &(p, e)| {
            let k = u32::try_from(e.finite()?).ok()?;
            acc.checked_mul(p.checked_pow(k)?)
        })
    }

    pub fn is_natural(&self) -> bool {
        self.default_exp == Exponent::ZERO && self.is_locally_finite()
    }

    /// The rational `q` with `other = q · self`, as signed prime exponents.
    ///
    /// Exists iff the defaults agree and every prime where the exponents differ
    /// has both exponents finite.
    pub(crate) fn ratio_factors(&self, other: &Self) -> Option<Vec<(u64, i128)>> {
        if self.default_exp != other.default_exp {
            return None;
        }
        let mut primes: Vec<u64> = self
            .exceptions
            .iter()
            .chain(&other.exceptions)
            .map(|&(p, _)| p)
            .collect();
        primes.sort_unstable();
        primes.dedup();
        let mut out = Vec::new();
        for p in primes {
            match (self.exponent_of(p), other.exponent_of(p)) {
                (a, b) if a == b => {}
                (Exponent::Finite(a), Exponent::Finite(b)) => {
                    out.push((p, i128::from(b) - i128::from(a)));
                }
                _ => return None,
            }
        }
        Some(out)
    }

    /// The reduced `q = m/n` with `n · other = m · self`, if one exists.
    pub fn rationally_connected(&self, other: &Self) -> Option<PositiveRational> {
        let factors = self.ratio_factors(other)?;
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for (p, d) in factors {
            let k = u32::try_from(d.unsigned_abs()).expect("exponent gap too large");
            let pk = BigUint::from(p).pow(k);
            match d.cmp(&0) {
                Ordering::Greater => num *= pk,
                Ordering::Less => den *= pk,
                Ordering::Equal => {}
            }
        }
        Some(PositiveRational::new(num, den).expect("nonzero products"))
    }

    /// `q · self`. Fails when some exponent would become negative.
    pub fn scale(&self, q: &PositiveRational) -> Result<Self, ArithmeticError> {
        let td = TrialDivision::default();
        let num = td.factor_big(q.numerator())?;
        let den = td.factor_big(q.denominator())?;
        self.scale_by_factors(&num, &den)
            .ok_or_else(|| ArithmeticError::DenominatorDoesNotDivide {
                value: self.to_string(),
                ratio: q.to_string(),
            })
    }

    /// `(∏ num) / (∏ den) · self`, `None` if a finite exponent goes negative.
    pub(crate) fn scale_by_factors(&self, num: &[(u64, u32)], den: &[(u64, u32)]) -> Option<Self> {
        let mut delta: BTreeMap<u64, i128> = BTreeMap::new();
        for &(p, k) in num {
            *delta.entry(p).or_default() += i128::from(k);
        }
        for &(p, k) in den {
            *delta.entry(p).or_default() -= i128::from(k);
        }
        let mut map: BTreeMap<u64, Exponent> = self.exceptions.iter().copied().collect();
        for (p, d) in delta {
            let e = match self.exponent_of(p) {
                Exponent::Infinite => Exponent::Infinite,
                Exponent::Finite(k) => {
                    let shifted = i128::from(k) + d;
                    if shifted < 0 {
                        return None;
                    }
                    Exponent::Finite(u64::try_from(shifted).ok()?)
                }
            };
            map.insert(p, e);
        }
        Some(Self::canonical(self.default_exp, map))
    }
}

impl Mul for &SupernaturalNumber {
    type Output = SupernaturalNumber;

    fn mul(self, rhs: &SupernaturalNumber) -> SupernaturalNumber {
        SupernaturalNumber::mul(self, rhs)
    }
}

impl fmt::Display for SupernaturalNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_steinitz(self))
    }
}

impl FromStr for SupernaturalNumber {
    type Err = crate::text::ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        crate::text::parse_steinitz(s)
    }
}
