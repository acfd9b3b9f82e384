//! Countable-dimensional unital locally matrix algebras, classified by their
//! supernatural invariant.
//!
//! A descriptor stands for the unique (up to isomorphism) countable-dimensional
//! unital locally matrix algebra `A` with `st(A)` equal to its Steinitz number,
//! so isomorphism is equality of invariants and Morita equivalence is rational
//! connectedness of invariants. Algebras of uncountable dimension are not
//! modelled: the invariant does not determine them.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;

use crate::error::ArithmeticError;
use crate::factor::TrialDivision;
use crate::rational::PositiveRational;
use crate::supernatural::SupernaturalNumber;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraDescriptor {
    steinitz: SupernaturalNumber,
}

impl From<SupernaturalNumber> for AlgebraDescriptor {
    fn from(steinitz: SupernaturalNumber) -> Self {
        AlgebraDescriptor { steinitz }
    }
}

impl fmt::Display for AlgebraDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.steinitz.fmt(f)
    }
}

/// Matrix amplifications `M_k(A) ≅ M_l(B)` exhibiting a Morita equivalence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoritaWitness {
    pub k: BigUint,
    pub l: BigUint,
    /// `st(B)/st(A)`, equal to `k/l`.
    pub ratio: PositiveRational,
    k_steinitz: SupernaturalNumber,
    l_steinitz: SupernaturalNumber,
}

impl MoritaWitness {
    /// Checks `k · st(A) = l · st(B)` exactly.
    pub fn holds_for(&self, a: &AlgebraDescriptor, b: &AlgebraDescriptor) -> bool {
        self.k_steinitz.mul(&a.steinitz) == self.l_steinitz.mul(&b.steinitz)
    }

    /// The pair `(M_k(A), M_l(B))`.
    pub fn amplify(
        &self,
        a: &AlgebraDescriptor,
        b: &AlgebraDescriptor,
    ) -> (AlgebraDescriptor, AlgebraDescriptor) {
        (
            self.k_steinitz.mul(&a.steinitz).into(),
            self.l_steinitz.mul(&b.steinitz).into(),
        )
    }
}

/// Position of `A` relative to `B` in their Morita class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CornerOrdering {
    /// `A` is isomorphic to a proper corner of `B`.
    Less,
    Equal,
    /// `B` is isomorphic to a proper corner of `A`.
    Greater,
    /// Not Morita equivalent.
    Incomparable,
}

impl fmt::Display for CornerOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CornerOrdering::Less => "LESS",
            CornerOrdering::Equal => "EQUAL",
            CornerOrdering::Greater => "GREATER",
            CornerOrdering::Incomparable => "INCOMPARABLE",
        })
    }
}

impl AlgebraDescriptor {
    pub fn new(steinitz: SupernaturalNumber) -> Self {
        AlgebraDescriptor { steinitz }
    }

    /// The ground field, `M_1(F)`.
    pub fn field() -> Self {
        AlgebraDescriptor::new(SupernaturalNumber::one())
    }

    pub fn steinitz(&self) -> &SupernaturalNumber {
        &self.steinitz
    }

    /// Whether `A` has a unital subalgebra `≅ M_n(F)`, i.e. `n ∈ D(A)`.
    pub fn admits_matrix_order(&self, n: u64) -> Result<bool, ArithmeticError> {
        Ok(SupernaturalNumber::from_natural(n)?.divides(&self.steinitz))
    }

    /// `M_k(A)`.
    pub fn matrix_over(&self, k: u64) -> Result<Self, ArithmeticError> {
        Ok(SupernaturalNumber::from_natural(k)?
            .mul(&self.steinitz)
            .into())
    }

    pub fn tensor(&self, other: &Self) -> Self {
        self.steinitz.mul(&other.steinitz).into()
    }

    /// The corner `eAe` for an idempotent `e` of relative rank `r`.
    pub fn corner(&self, r: &PositiveRational) -> Result<Self, ArithmeticError> {
        if r.cmp_one() == Ordering::Greater {
            return Err(ArithmeticError::RankAboveOne(r.to_string()));
        }
        Ok(self.steinitz.scale(r)?.into())
    }

    /// The centralizer `C` of a unital `M_n(F) ⊂ A`, so that `A ≅ M_n(C)`.
    pub fn decompose_matrix_factor(&self, n: u64) -> Result<Self, ArithmeticError> {
        let factors = TrialDivision::default().factor(n)?;
        self.steinitz
            .scale_by_factors(&[], &factors)
            .map(Self::from)
            .ok_or_else(|| ArithmeticError::NotADivisor {
                divisor: n,
                value: self.steinitz.to_string(),
            })
    }

    /// Invariants `q · st(A)` of the Morita class of `A`, for reduced
    /// `q = m/n` with `m, n ≤ bound`, in `(n, m)` order with duplicates
    /// removed (first occurrence kept).
    pub fn morita_class(&self, bound: u64) -> Vec<SupernaturalNumber> {
        let td = TrialDivision::default();
        let factors: Vec<Vec<(u64, u32)>> = (1..=bound)
            .map(|k| td.factor(k).expect("small integers factor"))
            .collect();
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for n in 1..=bound {
            for m in 1..=bound {
                if m.gcd(&n) != 1 {
                    continue;
                }
                let fm = &factors[(m - 1) as usize];
                let fn_ = &factors[(n - 1) as usize];
                if let Some(s) = self.steinitz.scale_by_factors(fm, fn_) {
                    if seen.insert(s.clone()) {
                        out.push(s);
                    }
                }
            }
        }
        out
    }
}

pub fn are_isomorphic(a: &AlgebraDescriptor, b: &AlgebraDescriptor) -> bool {
    a.steinitz == b.steinitz
}

/// `st(B)/st(A)` when the two algebras are Morita equivalent.
pub fn morita_ratio(a: &AlgebraDescriptor, b: &AlgebraDescriptor) -> Option<PositiveRational> {
    a.steinitz.rationally_connected(&b.steinitz)
}

pub fn are_morita_equivalent(a: &AlgebraDescriptor, b: &AlgebraDescriptor) -> bool {
    a.steinitz.ratio_factors(&b.steinitz).is_some()
}

/// The reduced pair `(k, l)` with `M_k(A) ≅ M_l(B)`. Any common multiple
/// `(ck, cl)` is also a witness.
pub fn morita_witness(a: &AlgebraDescriptor, b: &AlgebraDescriptor) -> Option<MoritaWitness> {
    let factors = a.steinitz.ratio_factors(&b.steinitz)?;
    let mut k_factors = Vec::new();
    let mut l_factors = Vec::new();
    for (p, d) in factors {
        let e = u32::try_from(d.unsigned_abs()).expect("exponent gap too large");
        match d.cmp(&0) {
            Ordering::Greater => k_factors.push((p, e)),
            Ordering::Less => l_factors.push((p, e)),
            Ordering::Equal => {}
        }
    }
    let product = |fs: &[(u64, u32)]| {
        fs.iter().fold(BigUint::from(1u32), |acc, &(p, e)| {
            acc * BigUint::from(p).pow(e)
        })
    };
    let k = product(&k_factors);
    let l = product(&l_factors);
    let ratio = PositiveRational::new(k.clone(), l.clone()).expect("positive products");
    Some(MoritaWitness {
        k,
        l,
        ratio,
        k_steinitz: SupernaturalNumber::from_factorization(&k_factors),
        l_steinitz: SupernaturalNumber::from_factorization(&l_factors),
    })
}

/// Compares `st(A)/st(B)` with 1.
pub fn proper_corner_compare(a: &AlgebraDescriptor, b: &AlgebraDescriptor) -> CornerOrdering {
    match morita_ratio(a, b) {
        None => CornerOrdering::Incomparable,
        // The ratio is st(B)/st(A), so st(A)/st(B) < 1 iff it exceeds 1.
        Some(q) => match q.cmp_one() {
            Ordering::Greater => CornerOrdering::Less,
            Ordering::Equal => CornerOrdering::Equal,
            Ordering::Less => CornerOrdering::Greater,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(text: &str) -> AlgebraDescriptor {
        AlgebraDescriptor::new(text.parse().unwrap())
    }

    fn q(m: u64, n: u64) -> PositiveRational {
        PositiveRational::new(m, n).unwrap()
    }

    #[test]
    fn isomorphism() {
        assert!(are_isomorphic(&alg("2^inf"), &alg("2^inf")));
        assert!(!are_isomorphic(&alg("2^inf"), &alg("2^inf*3")));
    }

    #[test]
    fn lcm_of_doubling_chain_is_two_to_infinity() {
        // Every prefix 2, 4, ..., 2^20 is a natural number; the chain itself is
        // unbounded, and its limit in the eventually-constant representation is
        // the unique number all prefixes divide with exponent of 2 exceeding
        // every finite bound.
        let mut acc = SupernaturalNumber::one();
        for k in 1..=20u32 {
            acc = acc.lcm(&SupernaturalNumber::from_natural(1 << k).unwrap());
            assert_eq!(acc.exponent_of(2), crate::Exponent::Finite(u64::from(k)));
            assert!(acc.divides(&alg("2^inf").steinitz));
        }
        let limit = acc.lcm(&alg("2^inf").steinitz);
        assert!(are_isomorphic(&limit.into(), &alg("2^inf")));
    }

    #[test]
    fn morita_equivalence() {
        assert!(are_morita_equivalent(&alg("3*2^inf"), &alg("5*2^inf")));
        assert_eq!(
            morita_ratio(&alg("3*2^inf"), &alg("5*2^inf")),
            Some(q(5, 3))
        );
        assert!(!are_morita_equivalent(&alg("2^inf"), &alg("3^inf")));
        assert_eq!(morita_ratio(&alg("2*3"), &alg("5*7")), Some(q(35, 6)));
    }

    #[test]
    fn matrix_and_tensor_constructions() {
        assert_eq!(alg("2^inf").matrix_over(3).unwrap(), alg("3*2^inf"));
        assert_eq!(alg("7^inf*3").matrix_over(1).unwrap(), alg("7^inf*3"));
        assert_eq!(alg("2").matrix_over(6).unwrap(), alg("2^2*3"));
        assert!(alg("2").matrix_over(0).is_err());
        assert_eq!(alg("2^inf").tensor(&alg("3^inf")), alg("2^inf*3^inf"));
        assert_eq!(
            alg("rest^1").tensor(&AlgebraDescriptor::field()),
            alg("rest^1")
        );
        assert_eq!(alg("2^2").tensor(&alg("2*3")), alg("2^3*3"));
    }

    #[test]
    fn corners() {
        assert_eq!(alg("2^inf").corner(&q(3, 4)).unwrap(), alg("3*2^inf"));
        let a = alg("rest^1*5^inf");
        assert_eq!(a.corner(&PositiveRational::one()).unwrap(), a);
        assert!(matches!(
            alg("2*3").corner(&q(1, 5)),
            Err(ArithmeticError::DenominatorDoesNotDivide { .. })
        ));
        assert!(matches!(
            alg("2^inf").corner(&q(5, 4)),
            Err(ArithmeticError::RankAboveOne(_))
        ));
    }

    #[test]
    fn witnesses() {
        let (a, b) = (alg("3*2^inf"), alg("5*2^inf"));
        let w = morita_witness(&a, &b).unwrap();
        assert_eq!(
            (w.k.clone(), w.l.clone()),
            (BigUint::from(5u32), BigUint::from(3u32))
        );
        assert!(w.holds_for(&a, &b));
        let (ma, mb) = w.amplify(&a, &b);
        assert!(are_isomorphic(&ma, &mb));
        assert_eq!(ma, a.matrix_over(5).unwrap());

        let w = morita_witness(&a, &a).unwrap();
        assert_eq!((w.k, w.l), (BigUint::from(1u32), BigUint::from(1u32)));

        let w = morita_witness(&alg("2*3"), &alg("5*7")).unwrap();
        assert_eq!((w.k, w.l), (BigUint::from(35u32), BigUint::from(6u32)));

        assert!(morita_witness(&alg("2^inf"), &alg("3^inf")).is_none());
    }

    #[test]
    fn witness_is_minimal_by_brute_force() {
        let (a, b) = (alg("2*3"), alg("5*7"));
        let mut found = None;
        'outer: for k in 1..=100u64 {
            for l in 1..=100u64 {
                if a.matrix_over(k).unwrap() == b.matrix_over(l).unwrap() {
                    found = Some((k, l));
                    break 'outer;
                }
            }
        }
        assert_eq!(found, Some((35, 6)));
    }

    #[test]
    fn corner_ordering() {
        assert_eq!(
            proper_corner_compare(&alg("3*2^inf"), &alg("5*2^inf")),
            CornerOrdering::Less
        );
        assert_eq!(
            proper_corner_compare(&alg("5*2^inf"), &alg("3*2^inf")),
            CornerOrdering::Greater
        );
        assert_eq!(
            proper_corner_compare(&alg("rest^1"), &alg("rest^1")),
            CornerOrdering::Equal
        );
        assert_eq!(
            proper_corner_compare(&alg("2^inf"), &alg("3^inf")),
            CornerOrdering::Incomparable
        );
    }

    #[test]
    fn decomposition() {
        assert_eq!(
            alg("2^inf").decompose_matrix_factor(4).unwrap(),
            alg("2^inf")
        );
        assert_eq!(alg("2^2*3").decompose_matrix_factor(3).unwrap(), alg("2^2"));
        assert!(matches!(
            alg("3^inf*5").decompose_matrix_factor(2),
            Err(ArithmeticError::NotADivisor { divisor: 2, .. })
        ));
        let c = alg("2^2*3").decompose_matrix_factor(6).unwrap();
        assert_eq!(c.matrix_over(6).unwrap(), alg("2^2*3"));
    }

    #[test]
    fn class_enumeration() {
        assert_eq!(alg("2^inf").morita_class(2), vec![alg("2^inf").steinitz]);
        let s = |t: &str| -> SupernaturalNumber { t.parse().unwrap() };
        // (n, m) order: 1/1, 2/1, 1/2.
        assert_eq!(alg("2").morita_class(2), vec![s("2"), s("2^2"), s("1")]);
    }

    #[test]
    fn class_enumeration_matches_direct_listing() {
        let a = alg("3^inf*2");
        let mut direct: Vec<SupernaturalNumber> = Vec::new();
        for n in 1..=3u64 {
            for m in 1..=3u64 {
                if m.gcd(&n) != 1 {
                    continue;
                }
                if let Ok(s) = a.steinitz().scale(&q(m, n)) {
                    if !direct.contains(&s) {
                        direct.push(s);
                    }
                }
            }
        }
        // 3-power scalings collapse into 3^inf; only the power of 2 varies:
        // 2^0 (q = 1/2), 2^1, 2^2 (q = 2/1).
        assert_eq!(direct.len(), 3);
        assert_eq!(a.morita_class(3), direct);
    }
}
