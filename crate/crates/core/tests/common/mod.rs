//! Generators and independent oracles shared by the integration tests.
//!
//! The oracles here deliberately avoid the library's elimination code: ranks
//! come from plain Gaussian elimination over `BigRational` (or from minors for
//! tiny matrices).

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::Rng;
use steinitz::tower::Matrix;
use steinitz::{Exponent, PositiveRational, SupernaturalNumber};

pub const SMALL_PRIMES: [u64; 8] = [2, 3, 5, 7, 11, 13, 17, 19];

fn exponent_from(code: u8) -> Exponent {
    match code {
        0..=5 => Exponent::Finite(u64::from(code)),
        _ => Exponent::Infinite,
    }
}

/// Random supernatural number mixing finite and infinite exponents and
/// `rest` defaults.
pub fn random_supernatural(rng: &mut impl Rng) -> SupernaturalNumber {
    let default = match rng.gen_range(0..6) {
        0 => Exponent::Finite(1),
        1 => Exponent::Infinite,
        _ => Exponent::ZERO,
    };
    let count = rng.gen_range(0..=4);
    let mut primes = SMALL_PRIMES.to_vec();
    let mut parts = Vec::new();
    for _ in 0..count {
        let p = primes.remove(rng.gen_range(0..primes.len()));
        parts.push((p, exponent_from(rng.gen_range(0..8))));
    }
    SupernaturalNumber::from_parts(default, parts).unwrap()
}

/// Random positive rational over small primes.
pub fn random_ratio(rng: &mut impl Rng) -> PositiveRational {
    let mut num = 1u64;
    let mut den = 1u64;
    for &p in &SMALL_PRIMES[..5] {
        match rng.gen_range(0..4) {
            0 => num *= p.pow(rng.gen_range(1..3)),
            1 => den *= p.pow(rng.gen_range(1..3)),
            _ => {}
        }
    }
    PositiveRational::new(num, den).unwrap()
}

/// A random multiple of `base` by a rational, when that is defined; otherwise
/// an unrelated random number.
pub fn random_relative(base: &SupernaturalNumber, rng: &mut impl Rng) -> SupernaturalNumber {
    if rng.gen_bool(0.75) {
        for _ in 0..8 {
            if let Ok(s) = base.scale(&random_ratio(rng)) {
                return s;
            }
        }
    }
    random_supernatural(rng)
}

pub fn arb_exponent() -> impl Strategy<Value = Exponent> {
    prop_oneof![
        4 => (0u64..6).prop_map(Exponent::Finite),
        1 => Just(Exponent::Infinite),
    ]
}

pub fn arb_supernatural() -> impl Strategy<Value = SupernaturalNumber> {
    let default = prop_oneof![
        4 => Just(Exponent::ZERO),
        1 => Just(Exponent::Finite(1)),
        1 => Just(Exponent::Infinite),
    ];
    let exceptions =
        proptest::sample::subsequence(SMALL_PRIMES.to_vec(), 0..=5).prop_flat_map(|ps| {
            let n = ps.len();
            (Just(ps), proptest::collection::vec(arb_exponent(), n))
        });
    (default, exceptions).prop_map(|(d, (ps, es))| {
        SupernaturalNumber::from_parts(d, ps.into_iter().zip(es)).unwrap()
    })
}

pub fn arb_ratio() -> impl Strategy<Value = PositiveRational> {
    (1u64..=60, 1u64..=60).prop_map(|(m, n)| PositiveRational::new(m, n).unwrap())
}

pub fn q(m: u64, n: u64) -> PositiveRational {
    PositiveRational::new(m, n).unwrap()
}

/// Rank by textbook Gaussian elimination over the rationals.
pub fn oracle_rank_rows(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let (top, below) = rows.split_at_mut(rank + 1);
        let pivot = &top[rank];
        for row in below.iter_mut().filter(|row| !row[c].is_zero()) {
            let f = &row[c] / &pivot[c];
            for (x, y) in row[c..].iter_mut().zip(&pivot[c..]) {
                *x -= &f * y;
            }
        }
        rank += 1;
    }
    rank
}

pub fn oracle_rank(m: &Matrix) -> usize {
    oracle_rank_rows(m.rows().map(<[_]>::to_vec).collect())
}

/// Determinant by Laplace expansion along the first row.
fn det(m: &[Vec<BigRational>]) -> BigRational {
    match m.len() {
        0 => BigRational::one(),
        1 => m[0][0].clone(),
        n => (0..n)
            .filter(|&j| !m[0][j].is_zero())
            .map(|j| {
                let minor: Vec<Vec<BigRational>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * det(&minor);
                if j % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .fold(BigRational::zero(), |a, b| a + b),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Rank as the size of the largest nonvanishing minor (orders ≤ 6).
pub fn minor_rank(m: &Matrix) -> usize {
    let n = m.order();
    for k in (1..=n).rev() {
        for rows in subsets(n, k) {
            for cols in subsets(n, k) {
                let sub: Vec<Vec<BigRational>> = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&j| m.get(i, j).clone()).collect())
                    .collect();
                if !det(&sub).is_zero() {
                    return k;
                }
            }
        }
    }
    0
}

/// `dim span{e·E_ij·e}` computed entry by entry: `(e·E_ij·e)[a][b] = e[a][i]·e[j][b]`.
pub fn oracle_corner_dimension(e: &Matrix) -> usize {
    let n = e.order();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut v = Vec::with_capacity(n * n);
            for a in 0..n {
                for b in 0..n {
                    v.push(e.get(a, i) * e.get(j, b));
                }
            }
            rows.push(v);
        }
    }
    oracle_rank_rows(rows)
}

pub fn int_matrix(rows: &[Vec<i64>]) -> Matrix {
    Matrix::from_integers(rows)
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational connectedness decided from exponents alone: equal defaults, and
/// wherever the exponents differ both must be finite. Returns `t/s` as
/// `(numerator, denominator)`.
pub fn oracle_connected(
    s: &SupernaturalNumber,
    t: &SupernaturalNumber,
) -> Option<(num_bigint::BigUint, num_bigint::BigUint)> {
    use num_bigint::BigUint;
    if s.default_exponent() != t.default_exponent() {
        return None;
    }
    let mut primes: Vec<u64> = s
        .exceptions()
        .iter()
        .chain(t.exceptions())
        .map(|&(p, _)| p)
        .collect();
    primes.sort_unstable();
    primes.dedup();
    let (mut num, mut den) = (BigUint::one(), BigUint::one());
    for p in primes {
        match (s.exponent_of(p), t.exponent_of(p)) {
            (a, b) if a == b => {}
            (Exponent::Finite(a), Exponent::Finite(b)) if b > a => {
                num *= BigUint::from(p).pow((b - a) as u32)
            }
            (Exponent::Finite(a), Exponent::Finite(b)) => {
                den *= BigUint::from(p).pow((a - b) as u32)
            }
            _ => return None,
        }
    }
    Some((num, den))
}

/// Subcommand invocations with their expected exit code and, when fixed,
/// their expected standard output.
pub fn exit_code_matrix() -> Vec<(Vec<&'static str>, u8, Option<&'static str>)> {
    vec![
        (vec!["parse", "2^inf*3^5*7"], 0, Some("2^inf*3^5*7\n")),
        (vec!["parse", "rest^1*2^0"], 0, Some("2^0*rest^1\n")),
        (vec!["parse", " 7 * 2 ^ inf "], 0, Some("2^inf*7\n")),
        (vec!["parse", "4^2"], 2, None),
        (vec!["parse", "2^3*2"], 2, None),
        (vec!["parse", "rest^1*rest^2"], 2, None),
        (vec!["parse", "2*"], 2, None),
        (vec!["parse", ""], 2, None),
        (vec!["parse", "12"], 2, None),
        (vec!["mul", "2^3", "3", "2^inf"], 0, Some("2^inf*3\n")),
        (vec!["lcm", "2^2*3", "2*3^2"], 0, Some("2^2*3^2\n")),
        (vec!["gcd", "2^2*3", "2*3^2"], 0, Some("2*3\n")),
        (vec!["gcd", "2^2*3", "x"], 2, None),
        (vec!["divides", "2*3", "2^inf*3"], 0, Some("YES\n")),
        (vec!["divides", "3^2", "2^inf*3"], 1, Some("NO\n")),
        (vec!["locally-finite", "rest^1"], 0, Some("YES\n")),
        (vec!["locally-finite", "2^inf"], 1, Some("NO\n")),
        (vec!["iso", "2^inf*3", "3*2^inf"], 0, Some("YES\n")),
        (vec!["iso", "2^inf", "3^inf"], 1, Some("NO\n")),
        (
            vec!["morita", "3*2^inf", "5*2^inf"],
            0,
            Some("YES ratio=5/3\n"),
        ),
        (vec!["morita", "2^inf", "3^inf"], 1, Some("NO\n")),
        (vec!["morita", "2^inf", "6^inf"], 2, None),
        (vec!["ratio", "2^2", "2*3"], 0, Some("3/2\n")),
        (vec!["ratio", "rest^1", "1"], 1, Some("NO\n")),
        (vec!["witness", "2*3", "5*7"], 0, Some("YES k=35 l=6\n")),
        (vec!["witness", "2^inf", "3^inf"], 1, Some("NO\n")),
        (vec!["corner", "2^inf", "3/4"], 0, Some("2^inf*3\n")),
        (vec!["corner", "3", "1/2"], 2, None),
        (vec!["corner", "2^inf", "3/2"], 2, None),
        (vec!["corner", "2^inf", "0/1"], 2, None),
        (vec!["decompose", "2^inf*3", "6"], 0, Some("2^inf\n")),
        (vec!["decompose", "2^inf", "3"], 2, None),
        (
            vec!["enumerate", "2^inf", "--bound", "1"],
            0,
            Some("2^inf\n"),
        ),
        (vec!["compare", "2^inf", "3*2^inf"], 0, Some("LESS\n")),
        (vec!["compare", "3*2^inf", "2^inf"], 0, Some("GREATER\n")),
        (vec!["compare", "2^inf", "2^inf"], 0, Some("EQUAL\n")),
        (vec!["compare", "2^inf", "3^inf"], 1, Some("INCOMPARABLE\n")),
        (vec!["verify", "--max-order", "0"], 2, None),
        (vec!["frobnicate"], 2, None),
        (vec!["iso", "2"], 2, None),
        (vec![], 2, None),
    ]
}

/// Runs the built binary and checks one row of [`exit_code_matrix`].
pub fn check_invocation(
    bin: &str,
    args: &[&str],
    code: u8,
    stdout: Option<&str>,
) -> Result<(), String> {
    let out = std::process::Command::new(bin)
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    let got = out.status.code();
    if got != Some(i32::from(code)) {
        return Err(format!("{args:?}: exit {got:?}, expected {code}"));
    }
    let text = String::from_utf8_lossy(&out.stdout);
    if let Some(expected) = stdout {
        if text != expected {
            return Err(format!("{args:?}: stdout {text:?}, expected {expected:?}"));
        }
    }
    if code == 2 && out.stderr.is_empty() {
        return Err(format!("{args:?}: no message on stderr"));
    }
    Ok(())
}
