use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A square matrix over the rationals, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    order: usize,
    entries: Vec<BigRational>,
}

impl Matrix {
    pub fn zeros(order: usize) -> Self {
        Matrix {
            order,
            entries: vec![BigRational::zero(); order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            m.entries[i * order + i] = BigRational::one();
        }
        m
    }

    /// Matrix unit `E_ij`.
    pub fn unit(order: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(order);
        m.entries[i * order + j] = BigRational::one();
        m
    }

    pub fn diagonal<T: Into<BigInt> + Copy>(diag: &[T]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n);
        for (i, &d) in diag.iter().enumerate() {
            m.entries[i * n + i] = BigRational::from_integer(d.into());
        }
        m
    }

    /// `diag(1, …, 1, 0, …, 0)` with `rank` ones.
    pub fn projector(order: usize, rank: usize) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..rank.min(order) {
            m.entries[i * order + i] = BigRational::one();
        }
        m
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let entries = (0..order * order)
            .map(|k| f(k / order, k % order))
            .collect();
        Matrix { order, entries }
    }

    /// Panics unless `rows` is square.
    pub fn from_integers<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self::from_fn(n, |i, j| BigRational::from_integer(rows[i][j].into()))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.order + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigRational) {
        self.entries[i * self.order + j] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigRational]> {
        self.entries.chunks(self.order.max(1)).take(self.order)
    }

    /// Entries in row-major order, as a vector of length `order²`.
    pub fn as_vector(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_idempotent(&self) -> bool {
        &(self * self) == self
    }

    /// Leading `size × size` block.
    pub fn leading_block(&self, size: usize) -> Matrix {
        Matrix::from_fn(size, |i, j| self.get(i, j).clone())
    }

    /// Places `self` in the top-left corner of a zero matrix of order `order`.
    pub fn pad_to(&self, order: usize) -> Matrix {
        let mut m = Matrix::zeros(order);
        for i in 0..self.order {
            for j in 0..self.order {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        m
    }

    /// Unital embedding `M_n → M_{nk}`: `k` diagonal copies of `self`,
    /// i.e. `I_k ⊗ self`.
    pub fn embed(&self, k: usize) -> Matrix {
        Matrix::identity(k).kron(self)
    }

    /// Kronecker product; `(a ⊗ b)[(i, k), (j, l)] = a[i, j] · b[k, l]`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (n, m) = (self.order, other.order);
        let mut out = Matrix::zeros(n * m);
        for i in 0..n {
            for j in 0..n {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..m {
                    for l in 0..m {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * m + k, j * m + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.order, rhs.order, "order mismatch");
        let n = self.order;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for l in 0..n {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(l, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.order, rhs.order, "order mismatch");
        Matrix {
            order: self.order,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.order, rhs.order, "order mismatch");
        Matrix {
            order: self.order,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}
