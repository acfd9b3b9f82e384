use std::fmt;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::linalg::{image_and_kernel, inverse, rank, rank_of_rows};
use super::matrix::Matrix;
use super::TowerError;
use crate::rational::PositiveRational;

/// Default cap on the order for [`is_full_idempotent`]; the span computation
/// works with `n⁴` products of length `n²`.
pub const FULLNESS_ORDER_CAP: usize = 6;

/// `rank(a)/n`, which lies in `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RelativeRank {
    Zero,
    Positive(PositiveRational),
}

impl RelativeRank {
    pub fn from_counts(rank: usize, order: usize) -> Self {
        if rank == 0 {
            RelativeRank::Zero
        } else {
            RelativeRank::Positive(
                PositiveRational::new(rank as u64, order as u64).expect("positive order"),
            )
        }
    }

    pub fn positive(&self) -> Option<&PositiveRational> {
        match self {
            RelativeRank::Zero => None,
            RelativeRank::Positive(q) => Some(q),
        }
    }
}

impl PartialEq<PositiveRational> for RelativeRank {
    fn eq(&self, other: &PositiveRational) -> bool {
        self.positive() == Some(other)
    }
}

impl fmt::Display for RelativeRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelativeRank::Zero => f.write_str("0"),
            RelativeRank::Positive(q) => q.fmt(f),
        }
    }
}

pub fn exact_rank(a: &Matrix) -> usize {
    rank(a)
}

pub fn relative_rank(a: &Matrix) -> RelativeRank {
    RelativeRank::from_counts(rank(a), a.order())
}

/// A matrix `e` with `e·e = e`, together with its rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Idempotent {
    matrix: Matrix,
    rank: usize,
}

impl Idempotent {
    pub fn new(matrix: Matrix) -> Result<Self, TowerError> {
        if !matrix.is_idempotent() {
            return Err(TowerError::NotIdempotent);
        }
        let rank = rank(&matrix);
        Ok(Idempotent { matrix, rank })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn order(&self) -> usize {
        self.matrix.order()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn relative_rank(&self) -> RelativeRank {
        RelativeRank::from_counts(self.rank, self.order())
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0
    }

    /// Image under the unital embedding `M_n → M_{nk}`. Ranks multiply by `k`.
    pub fn embed(&self, k: usize) -> Idempotent {
        Idempotent {
            matrix: self.matrix.embed(k),
            rank: self.rank * k,
        }
    }
}

/// A random unimodular integer matrix with entries in `[-3, 3]`, and its
/// inverse.
///
/// Built from a random permutation by random elementary row operations,
/// keeping only operations that respect the entry bound.
pub fn random_unimodular(n: usize, rng: &mut impl Rng) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    const ENTRY_BOUND: i64 = 3;
    const INVERSE_BOUND: i64 = 1 << 20;

    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let mut p = vec![vec![0i64; n]; n];
    let mut p_inv = vec![vec![0i64; n]; n];
    for (i, &j) in perm.iter().enumerate() {
        p[i][j] = 1;
        p_inv[j][i] = 1;
    }
    if n < 2 {
        return (p, p_inv);
    }
    for _ in 0..4 * n * n {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n - 1);
        let j = if j >= i { j + 1 } else { j };
        let c = if rng.gen_bool(0.5) { 1 } else { -1 } * rng.gen_range(1..=2);
        // P ← E·P with E = I + c·E_ij; P⁻¹ ← P⁻¹·E⁻¹, E⁻¹ = I − c·E_ij.
        let row_ok = (0..n).all(|t| (p[i][t] + c * p[j][t]).abs() <= ENTRY_BOUND);
        let col_ok = (0..n).all(|t| (p_inv[t][j] - c * p_inv[t][i]).abs() <= INVERSE_BOUND);
        if !(row_ok && col_ok) {
            continue;
        }
        for t in 0..n {
            p[i][t] += c * p[j][t];
            p_inv[t][j] -= c * p_inv[t][i];
        }
    }
    (p, p_inv)
}

/// `P · diag(I_r, 0) · P⁻¹` for a seeded random unimodular `P`.
pub fn random_idempotent(n: usize, r: usize, seed: u64) -> Result<Idempotent, TowerError> {
    if r > n {
        return Err(TowerError::RankExceedsOrder { rank: r, order: n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (p, p_inv) = random_unimodular(n, &mut rng);
    let p = Matrix::from_integers(&p);
    let p_inv = Matrix::from_integers(&p_inv);
    let matrix = &(&p * &Matrix::projector(n, r)) * &p_inv;
    debug_assert!(matrix.is_idempotent());
    Ok(Idempotent { matrix, rank: r })
}

/// Dimension of the span of the given matrices, as vectors of length `n²`.
pub fn span_dimension<'a>(matrices: impl IntoIterator<Item = &'a Matrix>) -> usize {
    rank_of_rows(matrices.into_iter().map(Matrix::as_vector))
}

/// `dim(e·M_n·e)`, from the spanning set `{e·E_ij·e}`.
pub fn corner_dimension(e: &Idempotent) -> usize {
    let n = e.order();
    let spanning: Vec<Matrix> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| &(e.matrix() * &Matrix::unit(n, i, j)) * e.matrix())
        .collect();
    span_dimension(&spanning)
}

/// Whether `M_n·e·M_n = M_n`, decided by spanning `{E_ij·e·E_kl}`.
pub fn is_full_idempotent(e: &Idempotent, cap: usize) -> Result<bool, TowerError> {
    let n = e.order();
    if n > cap {
        return Err(TowerError::CapExceeded { order: n, cap });
    }
    let units: Vec<Matrix> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| Matrix::unit(n, i, j))
        .collect();
    let left: Vec<Matrix> = units.iter().map(|x| x * e.matrix()).collect();
    let products: Vec<Matrix> = left
        .iter()
        .flat_map(|xe| units.iter().map(move |y| xe * y))
        .filter(|m| !m.is_zero())
        .collect();
    Ok(span_dimension(&products) == n * n)
}

/// An explicit algebra isomorphism `e·M_n·e ≅ M_r`.
///
/// `change` is a `P` with `P·e·P⁻¹ = diag(I_r, 0)`; the isomorphism sends `x`
/// to the leading `r × r` block of `P·x·P⁻¹`.
#[derive(Debug, Clone)]
pub struct CornerIsomorphism {
    rank: usize,
    change: Matrix,
    change_inv: Matrix,
}

impl CornerIsomorphism {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `r²`, the dimension of `M_r`.
    pub fn corner_dimension(&self) -> usize {
        self.rank * self.rank
    }

    pub fn change_of_basis(&self) -> (&Matrix, &Matrix) {
        (&self.change, &self.change_inv)
    }

    pub fn apply(&self, x: &Matrix) -> Matrix {
        (&(&self.change * x) * &self.change_inv).leading_block(self.rank)
    }

    /// Inverse map `M_r → e·M_n·e`.
    pub fn lift(&self, y: &Matrix) -> Matrix {
        let padded = y.pad_to(self.change.order());
        &(&self.change_inv * &padded) * &self.change
    }

    /// Checks the map on the spanning set `{e·E_ij·e}` of the corner:
    /// it is multiplicative on all pairs of a basis drawn from that set, its
    /// images span `M_r`, and `lift` inverts it.
    pub fn verify(&self, e: &Idempotent) -> CornerCheck {
        let n = e.order();
        let mut basis: Vec<Matrix> = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let x = &(e.matrix() * &Matrix::unit(n, i, j)) * e.matrix();
                let mut candidate = basis.clone();
                candidate.push(x.clone());
                if span_dimension(&candidate) > basis.len() {
                    basis.push(x);
                }
            }
        }
        let images: Vec<Matrix> = basis.iter().map(|x| self.apply(x)).collect();
        let multiplicative = basis.iter().zip(&images).all(|(x, fx)| {
            basis
                .iter()
                .zip(&images)
                .all(|(y, fy)| self.apply(&(x * y)) == fx * fy)
        });
        let inverts = basis.iter().zip(&images).all(|(x, fx)| &self.lift(fx) == x);
        CornerCheck {
            corner_dimension: basis.len(),
            image_dimension: span_dimension(&images),
            multiplicative,
            inverts,
            unital: self.apply(e.matrix()) == Matrix::identity(self.rank),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerCheck {
    /// `dim(e·M_n·e)` measured from the spanning set.
    pub corner_dimension: usize,
    pub image_dimension: usize,
    pub multiplicative: bool,
    pub inverts: bool,
    pub unital: bool,
}

impl CornerCheck {
    pub fn passed(&self, rank: usize) -> bool {
        self.corner_dimension == rank * rank
            && self.image_dimension == rank * rank
            && self.multiplicative
            && self.inverts
            && self.unital
    }
}

pub fn corner_isomorphism(e: &Idempotent) -> Result<CornerIsomorphism, TowerError> {
    if e.is_zero() {
        return Err(TowerError::ZeroIdempotent);
    }
    let n = e.order();
    let (image, kernel) = image_and_kernel(e.matrix());
    // Columns: a basis of im(e) followed by a basis of ker(e).
    let columns: Vec<Vec<BigRational>> = image.into_iter().chain(kernel).collect();
    let q = Matrix::from_fn(n, |i, j| columns[j][i].clone());
    let q_inv = inverse(&q).ok_or(TowerError::NotIdempotent)?;
    debug_assert!({
        let d = &(&q_inv * e.matrix()) * &q;
        d == Matrix::projector(n, e.rank())
    });
    Ok(CornerIsomorphism {
        rank: e.rank(),
        change: q_inv,
        change_inv: q,
    })
}

/// Random element of `e·M_n·e`: `e·X·e` for an integer `X` with entries in `[-5, 5]`.
pub fn random_corner_element(e: &Idempotent, rng: &mut impl Rng) -> Matrix {
    let n = e.order();
    let x = Matrix::from_fn(n, |_, _| {
        BigRational::from_integer(rng.gen_range(-5i64..=5).into())
    });
    &(e.matrix() * &x) * e.matrix()
}

/// Random integer matrix of order `n` and entries in `[-2, 2]`, biased towards
/// low rank by zeroing a random set of rows and duplicating others.
pub fn random_integer_matrix(n: usize, rng: &mut impl Rng) -> Matrix {
    let mut rows: Vec<Vec<i64>> = (0..n)
        .map(|_| (0..n).map(|_| rng.gen_range(-2..=2)).collect())
        .collect();
    if n > 1 {
        for _ in 0..rng.gen_range(0..n) {
            let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
            match rng.gen_range(0..3) {
                0 => rows[i] = vec![0; n],
                1 => rows[i] = rows[j].clone(),
                _ => {
                    let k = rng.gen_range(0..n);
                    rows[i] = rows[j].iter().zip(&rows[k]).map(|(a, b)| a - b).collect();
                }
            }
        }
    }
    Matrix::from_integers(&rows)
}
