//! Steinitz-number calculus for unital locally matrix algebras.
//!
//! * [`supernatural`]: exact arithmetic on supernatural numbers `∏ p^{r_p}`.
//! * [`morita`]: isomorphism and Morita equivalence of countable-dimensional
//!   algebras through their Steinitz invariant, with corners, witnesses and
//!   class enumeration.
//! * [`tower`]: explicit exact matrices over the rationals that realize the
//!   embeddings, ranks, corners and tensor products behind those rules.
//! * [`text`] and [`cli`]: the textual expression format and the command line.

pub mod cli;
pub mod error;
pub mod factor;
pub mod morita;
pub mod rational;
pub mod supernatural;
pub mod text;
pub mod tower;

pub use error::ArithmeticError;
pub use factor::TrialDivision;
pub use morita::{AlgebraDescriptor, CornerOrdering, MoritaWitness};
pub use rational::PositiveRational;
pub use supernatural::{Exponent, SupernaturalNumber};
pub use text::{format_steinitz, parse_steinitz, ParseError};
