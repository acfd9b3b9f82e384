//! Prime factorization by trial division.
//!
//! Inputs are machine words (or small big integers that reduce to machine
//! words after stripping small factors). Trial divisors are capped by a
//! configurable bound; if a cofactor cannot be certified prime below the
//! bound, factorization fails instead of guessing.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::ArithmeticError;

/// Default trial bound. Every `u64` factors completely below it.
pub const DEFAULT_TRIAL_BOUND: u64 = 1 << 32;

/// Trial-division factorizer with an explicit divisor cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrialDivision {
    bound: u64,
}

impl Default for TrialDivision {
    fn default() -> Self {
        TrialDivision {
            bound: DEFAULT_TRIAL_BOUND,
        }
    }
}

impl TrialDivision {
    pub fn with_bound(bound: u64) -> Self {
        TrialDivision {
            bound: bound.max(2),
        }
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// Factors `n` into `(prime, multiplicity)` pairs in increasing prime order.
    /// `factor(1)` is empty.
    pub fn factor(&self, n: u64) -> Result<Vec<(u64, u32)>, ArithmeticError> {
        if n == 0 {
            return Err(ArithmeticError::Zero);
        }
        let mut rest = n;
        let mut factors = Vec::new();
        let mut push = |rest: &mut u64, d: u64| {
            let mut k = 0;
            while rest.is_multiple_of(d) {
                *rest /= d;
                k += 1;
            }
            if k > 0 {
                factors.push((d, k));
            }
        };
        push(&mut rest, 2);
        let mut d = 3u64;
        while d <= rest / d {
            if d > self.bound {
                return Err(ArithmeticError::TrialBoundExceeded {
                    value: n.to_string(),
                    bound: self.bound,
                });
            }
            push(&mut rest, d);
            d += 2;
        }
        if rest > 1 {
            factors.push((rest, 1));
        }
        Ok(factors)
    }

    /// Factors a big natural number. Small primes are stripped with big
    /// arithmetic until the cofactor fits in a `u64`.
    pub fn factor_big(&self, n: &BigUint) -> Result<Vec<(u64, u32)>, ArithmeticError> {
        if n.is_zero() {
            return Err(ArithmeticError::Zero);
        }
        if let Some(small) = n.to_u64() {
            return self.factor(small);
        }
        let mut rest = n.clone();
        let mut factors = Vec::new();
        let mut d = 2u64;
        loop {
            if let Some(small) = rest.to_u64() {
                let tail = self.factor(small).map_err(|e| match e {
                    ArithmeticError::TrialBoundExceeded { bound, .. } => {
                        ArithmeticError::TrialBoundExceeded {
                            value: n.to_string(),
                            bound,
                        }
                    }
                    other => other,
                })?;
                // Every prime below d has been stripped, so the tail continues
                // the increasing order.
                for (p, k) in tail {
                    match factors.last_mut() {
                        Some((q, j)) if *q == p => *j += k,
                        _ => factors.push((p, k)),
                    }
                }
                return Ok(factors);
            }
            if d > self.bound {
                return Err(ArithmeticError::TrialBoundExceeded {
                    value: n.to_string(),
                    bound: self.bound,
                });
            }
            let big_d = BigUint::from(d);
            let mut k = 0;
            while (&rest % &big_d).is_zero() {
                rest /= &big_d;
                k += 1;
            }
            if k > 0 {
                factors.push((d, k));
            }
            d = if d == 2 { 3 } else { d + 2 };
        }
    }

    pub fn is_prime(&self, p: u64) -> Result<bool, ArithmeticError> {
        if p < 2 {
            return Ok(false);
        }
        Ok(self.factor(p)? == [(p, 1)])
    }
}
