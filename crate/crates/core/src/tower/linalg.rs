//! Exact elimination over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::Matrix;

/// Scales a rational row to a primitive integer row (content 1).
fn integer_row(row: &[BigRational]) -> Vec<BigInt> {
    let denom = row
        .iter()
        .filter(|x| !x.is_zero())
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut out: Vec<BigInt> = row
        .iter()
        .map(|x| x.numer() * (&denom / x.denom()))
        .collect();
    make_primitive(&mut out);
    out
}

fn make_primitive(row: &mut [BigInt]) {
    let content = row
        .iter()
        .filter(|x| !x.is_zero())
        .fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !content.is_zero() && !content.is_one() {
        for x in row.iter_mut() {
            *x /= &content;
        }
    }
}

/// Rank of a rectangular system of rows.
///
/// Fraction-free elimination: rows are cleared to integers, eliminated with
/// `row ← pivot·row − c·pivot_row`, and kept primitive by dividing out their
/// content. Rows that already vanish in the pivot column are left alone, which
/// keeps block-structured inputs cheap.
pub fn rank_of_rows<'a, I>(rows: I) -> usize
where
    I: IntoIterator<Item = &'a [BigRational]>,
{
    let mut rows: Vec<Vec<BigInt>> = rows
        .into_iter()
        .map(integer_row)
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows.len() {
            break;
        }
        // Smallest nonzero pivot in this column.
        let pivot = (rank..rows.len())
            .filter(|&i| !rows[i][col].is_zero())
            .min_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()));
        let Some(p) = pivot else { continue };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let pivot_val = &pivot_row[col];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let g = pivot_val.gcd(&row[col]);
            let a = pivot_val / &g;
            let b = &row[col] / &g;
            for j in col..cols {
                let updated = &a * &row[j] - &b * &pivot_row[j];
                row[j] = updated;
            }
            make_primitive(row);
        }
        rank += 1;
    }
    rank
}

pub fn rank(m: &Matrix) -> usize {
    rank_of_rows(m.rows())
}

/// Reduced row echelon form; returns the reduced rows and pivot columns.
pub fn rref(rows: &[Vec<BigRational>]) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let mut rows: Vec<Vec<BigRational>> = rows.to_vec();
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let c = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= &c * y;
            }
        }
        pivots.push(col);
        r += 1;
    }
    (rows, pivots)
}

pub fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.order();
    if n == 0 {
        return Some(Matrix::zeros(0));
    }
    let augmented: Vec<Vec<BigRational>> = m
        .rows()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.to_vec();
            r.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r
        })
        .collect();
    let (reduced, pivots) = rref(&augmented);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(Matrix::from_fn(n, |i, j| reduced[i][n + j].clone()))
}

/// Bases of the column space (as pivot columns of `m`) and of the kernel.
pub fn image_and_kernel(m: &Matrix) -> (Vec<Vec<BigRational>>, Vec<Vec<BigRational>>) {
    let n = m.order();
    let rows: Vec<Vec<BigRational>> = m.rows().map(<[_]>::to_vec).collect();
    let (reduced, pivots) = rref(&rows);
    let image = pivots
        .iter()
        .map(|&c| (0..n).map(|i| m.get(i, c).clone()).collect())
        .collect();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let kernel = free
        .iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); n];
            v[f] = BigRational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -reduced[r][f].clone();
            }
            v
        })
        .collect();
    (image, kernel)
}
