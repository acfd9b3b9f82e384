//! Seeded verification suite behind `steinitz verify`.
//!
//! Each section draws its trials from a ChaCha stream keyed by the suite
//! seed, the section and the trial index, so any trial can be replayed on its
//! own. Trials run in parallel and are merged back in index order.

use num_integer::Integer;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::idempotent::{
    corner_dimension, corner_isomorphism, exact_rank, is_full_idempotent, random_corner_element,
    random_idempotent, random_integer_matrix, relative_rank, FULLNESS_ORDER_CAP,
};
use super::report::{Check, Report};
use super::verify::{lemma3_witness, verify_lemma2, Tower, RANK_ORDER_CAP};
use crate::rational::PositiveRational;
use crate::supernatural::SupernaturalNumber;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Largest matrix order any trial may build (at most 96).
    pub max_order: u64,
    pub tower_trials: usize,
    pub diagonal_cases: usize,
    pub corner_trials: usize,
    pub corner_pairs: usize,
    pub kron_pairs: usize,
    pub embed_trials: usize,
    pub fullness_per_order: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            max_order: RANK_ORDER_CAP,
            tower_trials: 100,
            diagonal_cases: 50,
            corner_trials: 20,
            corner_pairs: 20,
            kron_pairs: 200,
            embed_trials: 100,
            fullness_per_order: 50,
        }
    }
}

/// Independent generator for trial `index` of section `section`.
pub(crate) fn trial_rng(seed: u64, section: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((section << 32) | index as u64);
    rng
}

fn parallel<F>(count: usize, trial: F) -> Report
where
    F: Fn(usize) -> Report + Sync + Send,
{
    let parts: Vec<Report> = (0..count).into_par_iter().map(trial).collect();
    let mut report = Report::default();
    for part in parts {
        report.extend(part);
    }
    report
}

fn failure(name: &str, stage: u64, err: impl ToString) -> Report {
    let mut r = Report::default();
    r.push(Check::new(
        name,
        stage,
        "ok",
        err.to_string().replace(' ', "_"),
    ));
    r
}

/// Extra factor multiplied into the top order to form the descriptor's `st`.
fn random_cofactor(rng: &mut impl Rng) -> SupernaturalNumber {
    const CHOICES: [&str; 6] = [
        "1",
        "2^inf",
        "rest^1",
        "3^inf*5",
        "rest^inf",
        "2^inf*3^inf*7",
    ];
    CHOICES[rng.gen_range(0..CHOICES.len())]
        .parse()
        .expect("valid literal")
}

/// A random tower with `n_1 ≤ 24`, depth `≤ 3`, multiplicities `≤ 4`, top `≤ max_order`.
pub(crate) fn random_tower(rng: &mut impl Rng, max_order: u64) -> Tower {
    let first = rng.gen_range(1..=24.min(max_order));
    let depth = rng.gen_range(1..=3);
    let mut orders = vec![first];
    for _ in 1..depth {
        let last = *orders.last().expect("nonempty");
        let room = (max_order / last).min(4);
        if room < 1 {
            break;
        }
        orders.push(last * rng.gen_range(1..=room));
    }
    Tower::new(orders).expect("divisibility chain by construction")
}

fn tower_trial(cfg: &SuiteConfig, t: usize) -> Report {
    let mut rng = trial_rng(cfg.seed, 1, t);
    let tower = random_tower(&mut rng, cfg.max_order);
    let first = tower.orders()[0];
    let r = PositiveRational::new(rng.gen_range(1..=first), first).expect("positive");
    let top = SupernaturalNumber::from_natural(tower.top()).expect("positive");
    let st = top.mul(&random_cofactor(&mut rng));
    let seed = rng.gen();
    match verify_lemma2(&st, &tower, &r, seed) {
        Ok(report) => report,
        Err(e) => failure("setup", first, e),
    }
    .prefixed(&format!("tower[{t}]"))
}

/// All coprime `(m, n)` with `1 ≤ m < n ≤ 8`.
pub(crate) fn coprime_pairs() -> Vec<(u64, u64)> {
    (2..=8u64)
        .flat_map(|n| (1..n).filter(move |m| m.gcd(&n) == 1).map(move |m| (m, n)))
        .collect()
}

fn diagonal_case(cfg: &SuiteConfig, t: usize) -> Report {
    let pairs = coprime_pairs();
    let (m, n) = pairs[t % pairs.len()];
    let mut rng = trial_rng(cfg.seed, 2, t);
    let max_stage = (cfg.max_order / n).clamp(1, 6);
    let stage = rng.gen_range(1..=max_stage);
    match lemma3_witness(m, n, stage) {
        Ok(report) => report,
        Err(e) => failure("setup", n * stage, e),
    }
    .prefixed(&format!("diagonal[{t}]"))
}

fn corner_trial(cfg: &SuiteConfig, t: usize) -> Report {
    let mut rng = trial_rng(cfg.seed, 3, t);
    let n = rng.gen_range(1..=8.min(cfg.max_order) as usize);
    let r = rng.gen_range(1..=n);
    let stage = n as u64;
    let mut report = Report::default();
    let e = match random_idempotent(n, r, rng.gen()) {
        Ok(e) => e,
        Err(err) => return failure("setup", stage, err).prefixed(&format!("corner[{t}]")),
    };
    report.push(Check::new(
        "corner-dimension",
        stage,
        r * r,
        corner_dimension(&e),
    ));
    match corner_isomorphism(&e) {
        Ok(iso) => {
            let check = iso.verify(&e);
            report.push(Check::new("corner-iso-basis", stage, true, check.passed(r)));
            let good = (0..cfg.corner_pairs)
                .filter(|_| {
                    let x = random_corner_element(&e, &mut rng);
                    let y = random_corner_element(&e, &mut rng);
                    iso.apply(&(&x * &y)) == &iso.apply(&x) * &iso.apply(&y)
                })
                .count();
            report.push(Check::new(
                "corner-iso-multiplicative",
                stage,
                cfg.corner_pairs,
                good,
            ));
        }
        Err(err) => report.extend(failure("corner-iso", stage, err)),
    }
    report.prefixed(&format!("corner[{t}]"))
}

fn kron_trial(cfg: &SuiteConfig, t: usize) -> Report {
    let mut rng = trial_rng(cfg.seed, 4, t);
    let side = 6.min(cfg.max_order) as usize;
    let a = random_integer_matrix(rng.gen_range(1..=side), &mut rng);
    let b = random_integer_matrix(rng.gen_range(1..=side), &mut rng);
    let product = a.kron(&b);
    let mut report = Report::default();
    report.push(Check::new(
        "kron-rank",
        product.order() as u64,
        exact_rank(&a) * exact_rank(&b),
        exact_rank(&product),
    ));
    report.prefixed(&format!("kron[{t}]"))
}

fn embed_trial(cfg: &SuiteConfig, t: usize) -> Report {
    let mut rng = trial_rng(cfg.seed, 5, t);
    let n = rng.gen_range(1..=6.min(cfg.max_order) as usize);
    let k = rng.gen_range(1..=4.min(cfg.max_order as usize / n).max(1));
    let a = random_integer_matrix(n, &mut rng);
    let b = random_integer_matrix(n, &mut rng);
    let (ea, eb) = (a.embed(k), b.embed(k));
    let stage = (n * k) as u64;
    let mut report = Report::default();
    report.push(Check::new(
        "embed-rank",
        stage,
        k * exact_rank(&a),
        exact_rank(&ea),
    ));
    report.push(Check::new(
        "embed-relative-rank",
        stage,
        relative_rank(&a),
        relative_rank(&ea),
    ));
    report.push(Check::new(
        "embed-multiplicative",
        stage,
        true,
        (&a * &b).embed(k) == &ea * &eb,
    ));
    report.push(Check::new(
        "embed-additive",
        stage,
        true,
        (&a + &b).embed(k) == &ea + &eb,
    ));
    report.prefixed(&format!("embed[{t}]"))
}

fn fullness_trial(cfg: &SuiteConfig, t: usize) -> Report {
    let n = 1 + t / cfg.fullness_per_order.max(1);
    let mut rng = trial_rng(cfg.seed, 6, t);
    let r = rng.gen_range(0..=n);
    let stage = n as u64;
    let report = match random_idempotent(n, r, rng.gen()) {
        Ok(e) => match is_full_idempotent(&e, FULLNESS_ORDER_CAP) {
            Ok(full) => {
                let mut rep = Report::default();
                rep.push(Check::new("full-iff-nonzero", stage, r > 0, full));
                rep
            }
            Err(err) => failure("full-iff-nonzero", stage, err),
        },
        Err(err) => failure("setup", stage, err),
    };
    report.prefixed(&format!("fullness[{t}]"))
}

/// Runs every section and merges the reports in a fixed order.
pub fn run_suite(cfg: &SuiteConfig) -> Report {
    let cfg = SuiteConfig {
        max_order: cfg.max_order.clamp(1, RANK_ORDER_CAP),
        ..cfg.clone()
    };
    let fullness_orders = 5.min(cfg.max_order as usize);
    let mut report = Report::default();
    report.extend(parallel(cfg.tower_trials, |t| tower_trial(&cfg, t)));
    if cfg.max_order >= 2 {
        report.extend(parallel(cfg.diagonal_cases, |t| diagonal_case(&cfg, t)));
    }
    report.extend(parallel(cfg.corner_trials, |t| corner_trial(&cfg, t)));
    report.extend(parallel(cfg.kron_pairs, |t| kron_trial(&cfg, t)));
    report.extend(parallel(cfg.embed_trials, |t| embed_trial(&cfg, t)));
    report.extend(parallel(cfg.fullness_per_order * fullness_orders, |t| {
        fullness_trial(&cfg, t)
    }));
    report
}
