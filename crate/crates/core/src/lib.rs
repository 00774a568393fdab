//! Exact computation of the polynomial identities satisfied by n-ary
//! intermolecular recombination.
//!
//! The pipeline has four layers:
//!
//! * [`algebra`]: multilinear monomials for a completely symmetric n-ary
//!   operation, their canonical ("straightened") form, association types,
//!   variable permutations and sparse integer combinations.
//! * [`expansion`]: the recombination operation itself, acting on slot
//!   tuples, and the expansion matrix whose nullspace is the space of
//!   identities in a given degree.
//! * [`linalg`]: exact rational row reduction, Hermite normal form with a
//!   unimodular transform, integral LLL reduction and rank modulo a prime.
//! * [`identities`]: symmetric-group module ranks, generator sieving,
//!   lifting identities to higher degree and the closure test that decides
//!   whether a degree has new identities.
//!
//! [`nullspace`] chooses between the canonical and the LLL-reduced basis.
//! [`io`] holds the text formats and [`golden`] the bundled reference data;
//! [`reproduce`] ties everything together into pass/fail report tables.

pub mod algebra;
pub mod error;
pub mod expansion;
pub mod golden;
pub mod identities;
pub mod io;
pub mod linalg;
pub mod nullspace;
pub mod reproduce;

pub use error::{Error, Result};

/// Caps the worker threads used for orbit generation and matrix building.
/// Must be called before any parallel work; later calls fail.
pub fn init_thread_pool(threads: usize) -> std::result::Result<(), rayon::ThreadPoolBuildError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
}
