use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::idempotent::{
    corner_dimension, exact_rank, random_idempotent, relative_rank, Idempotent,
};
use super::matrix::Matrix;
use super::report::{Check, Report};
use super::TowerError;
use crate::morita::{proper_corner_compare, AlgebraDescriptor, CornerOrdering};
use crate::rational::PositiveRational;
use crate::supernatural::SupernaturalNumber;

/// Largest stage order used in rank checks.
pub const RANK_ORDER_CAP: u64 = 96;

/// Stages up to this order also get the `e·E_ij·e` span check.
const CORNER_SPAN_CAP: usize = 12;

/// A chain of matrix orders `n_1 | n_2 | … | n_t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tower {
    orders: Vec<u64>,
}

impl Tower {
    pub fn new(orders: Vec<u64>) -> Result<Self, TowerError> {
        let valid = !orders.is_empty()
            && orders.iter().all(|&n| n > 0)
            && orders.windows(2).all(|w| w[1] % w[0] == 0);
        if !valid {
            return Err(TowerError::InvalidTower(orders));
        }
        Ok(Tower { orders })
    }

    /// From a first order and the successive multiplicities `k_i = n_{i+1}/n_i`.
    pub fn from_multiplicities(first: u64, multiplicities: &[u64]) -> Result<Self, TowerError> {
        let mut orders = vec![first];
        for &k in multiplicities {
            let last = *orders.last().expect("nonempty");
            let next = last
                .checked_mul(k)
                .ok_or_else(|| TowerError::InvalidTower(orders.clone()))?;
            orders.push(next);
        }
        Tower::new(orders)
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn multiplicities(&self) -> Vec<u64> {
        self.orders.windows(2).map(|w| w[1] / w[0]).collect()
    }

    /// The largest order, which is also the lcm of all of them.
    pub fn top(&self) -> u64 {
        *self.orders.last().expect("nonempty")
    }
}

/// `r · n` as an integer, if it is one.
fn scaled_order(r: &PositiveRational, n: u64) -> Option<u64> {
    let (q, rem) = (BigUint::from(n) * r.numerator()).div_rem(r.denominator());
    if rem == BigUint::from(0u32) {
        q.to_u64()
    } else {
        None
    }
}

fn stage_checks(report: &mut Report, e: &Matrix, r: &PositiveRational, order: u64) -> u64 {
    let rank = exact_rank(e) as u64;
    let expected_rank = scaled_order(r, order).expect("denominator divides every stage");
    report.push(Check::new("idempotent", order, true, e.is_idempotent()));
    report.push(Check::new("relative-rank", order, r, relative_rank(e)));
    report.push(Check::new("corner-order", order, expected_rank, rank));
    if e.order() <= CORNER_SPAN_CAP {
        if let Ok(idem) = Idempotent::new(e.clone()) {
            report.push(Check::new(
                "corner-dimension",
                order,
                expected_rank * expected_rank,
                corner_dimension(&idem),
            ));
        }
    }
    rank
}

/// Realizes an idempotent of relative rank `r` at the first stage of `tower`,
/// pushes it up the tower and checks at every stage that its relative rank is
/// still `r` and that its corner is `M_{r·n_i}`. Finally compares the lcm of
/// the observed corner orders, completed by the centralizer of the top stage,
/// with the symbolic corner of `st`.
pub fn verify_lemma2(
    st: &SupernaturalNumber,
    tower: &Tower,
    r: &PositiveRational,
    seed: u64,
) -> Result<Report, TowerError> {
    if r.cmp_one().is_gt() {
        return Err(TowerError::Precondition(format!(
            "relative rank {r} exceeds 1"
        )));
    }
    let first = tower.orders()[0];
    let first_rank = scaled_order(r, first).ok_or_else(|| {
        TowerError::Precondition(format!("denominator of {r} does not divide {first}"))
    })?;
    let top = tower.top();
    if top > RANK_ORDER_CAP {
        return Err(TowerError::CapExceeded {
            order: top as usize,
            cap: RANK_ORDER_CAP as usize,
        });
    }
    let top_st = SupernaturalNumber::from_natural(top)?;
    if !top_st.divides(st) {
        return Err(TowerError::Precondition(format!(
            "tower order {top} does not divide {st}"
        )));
    }

    let mut report = Report::default();
    let mut e = random_idempotent(first as usize, first_rank as usize, seed)?
        .matrix()
        .clone();
    let mut observed = SupernaturalNumber::one();
    let multiplicities = tower.multiplicities();
    for (i, &order) in tower.orders().iter().enumerate() {
        let rank = stage_checks(&mut report, &e, r, order);
        observed = observed.lcm(&SupernaturalNumber::from_natural(rank.max(1))?);
        if let Some(&k) = multiplicities.get(i) {
            e = e.embed(k as usize);
        }
    }

    report.push(Check::new("corner-lcm", top, top_st.scale(r)?, &observed));
    let a = AlgebraDescriptor::new(st.clone());
    let centralizer = a.decompose_matrix_factor(top)?;
    report.push(Check::new(
        "symbolic-corner",
        top,
        a.corner(r)?,
        observed.mul(centralizer.steinitz()),
    ));
    Ok(report)
}

/// Builds `e = diag(I_m, 0) ⊗ I_c` in `M_n(M_c) = M_{nc}` for coprime
/// `m < n`, and checks that its relative rank is `m/n`, that its corner is
/// `M_{mc}`, and that the descriptor chain `corner(M_n(C), m/n) = M_m(C)`
/// holds with `st(C) = c`.
pub fn lemma3_witness(m: u64, n: u64, stage_order: u64) -> Result<Report, TowerError> {
    if m == 0 || m >= n {
        return Err(TowerError::Precondition(format!(
            "need 0 < m < n, got m={m} n={n}"
        )));
    }
    if m.gcd(&n) != 1 {
        return Err(TowerError::Precondition(format!(
            "{m} and {n} are not coprime"
        )));
    }
    if stage_order == 0 {
        return Err(TowerError::Precondition(
            "stage order must be positive".into(),
        ));
    }
    let order = n
        .checked_mul(stage_order)
        .filter(|&o| o <= RANK_ORDER_CAP)
        .ok_or(TowerError::CapExceeded {
            order: usize::MAX,
            cap: RANK_ORDER_CAP as usize,
        })?;

    let e = Matrix::projector(n as usize, m as usize).kron(&Matrix::identity(stage_order as usize));
    let ratio = PositiveRational::new(m, n)?;
    let mut report = Report::default();
    stage_checks(&mut report, &e, &ratio, order);

    let c = AlgebraDescriptor::new(SupernaturalNumber::from_natural(stage_order)?);
    let whole = c.matrix_over(n)?;
    let corner = whole.corner(&ratio)?;
    let expected = c.matrix_over(m)?;
    report.push(Check::new("symbolic-chain", order, &expected, &corner));
    report.push(Check::new(
        "proper-corner",
        order,
        CornerOrdering::Less,
        proper_corner_compare(&corner, &whole),
    ));
    Ok(report)
}
