//! Finite matrix towers over the rationals.
//!
//! A tower `M_{n_1} ⊂ M_{n_2} ⊂ …` with `n_i | n_{i+1}` and block-diagonal
//! unital embeddings is a finite piece of a unital locally matrix algebra.
//! This module computes exact ranks, idempotent corners and tensor products
//! at each stage and reports whether the stage-level data agrees with the
//! supernatural bookkeeping in [`crate::morita`].

mod idempotent;
pub mod linalg;
mod matrix;
mod report;
mod suite;
mod verify;

use thiserror::Error;

use crate::error::ArithmeticError;

pub use idempotent::{
    corner_dimension, corner_isomorphism, exact_rank, is_full_idempotent, random_corner_element,
    random_idempotent, random_integer_matrix, random_unimodular, relative_rank, span_dimension,
    CornerCheck, CornerIsomorphism, Idempotent, RelativeRank, FULLNESS_ORDER_CAP,
};
pub use matrix::Matrix;
pub use report::{Check, Report};
pub use suite::{run_suite, SuiteConfig};
pub use verify::{lemma3_witness, verify_lemma2, Tower, RANK_ORDER_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TowerError {
    #[error("matrix is not idempotent")]
    NotIdempotent,
    #[error("the zero idempotent has no corner isomorphism")]
    ZeroIdempotent,
    #[error("rank {rank} exceeds order {order}")]
    RankExceedsOrder { rank: usize, order: usize },
    #[error("order {order} exceeds the cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("tower orders must be positive and each must divide the next: {0:?}")]
    InvalidTower(Vec<u64>),
    #[error("{0}")]
    Precondition(String),
    #[error(transparent)]
    Arithmetic(#[from] ArithmeticError),
}
