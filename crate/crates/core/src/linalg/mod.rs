//! Exact linear algebra over the integers, the rationals and prime fields.
//!
//! Nothing in this module uses floating point.

mod hnf;
mod lattice;
mod lll;
mod matrix;
mod modular;
mod rational;

pub use hnf::{hermite_form, hnf_with_transform, nullspace_lattice, HnfResult};
pub use lattice::LatticeBasis;
pub use lll::{lll_reduce, LLL_DELTA};
pub use matrix::{IntegerMatrix, RationalMatrix};
pub use modular::{is_prime, ModularRank, RowOutcome};
pub use rational::{rational_rank, rcf, rcf_nullspace, Rcf};
