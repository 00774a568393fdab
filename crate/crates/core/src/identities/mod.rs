//! Identities as symmetric-group modules: ranks of orbit spans, generator
//! sieving, lifting to higher degree and the closure test.

mod closure;
mod lift;
mod rewrite;
mod sieve;
mod span;

pub use closure::{
    expansion_rank_mod_p, new_identity_test, new_identity_test_with, ClosureMode, ClosureProgress,
    ClosureReport, Verdict, DEFAULT_SEED,
};
pub use lift::{lift_identity, LiftRecipe, LiftedConsequence};
pub use rewrite::rewrite_second_type;
pub use sieve::{generator_sieve, single_generators, Generator};
pub use span::{module_rank, ModuleSpan};
