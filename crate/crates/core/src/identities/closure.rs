use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{lift_identity, LiftedConsequence, ModuleSpan};
use crate::algebra::{IdentityCombination, Permutation};
use crate::expansion::{build_expansion_matrix, evaluate_identity, ExpansionMatrix};
use crate::linalg::ModularRank;
use crate::{Error, Result};

/// Seed used by the certify mode unless one is given.
pub const DEFAULT_SEED: u64 = 20_240_601;

const SAMPLE_BATCH: usize = 2048;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureMode {
    /// Full orbit of every consequence, in order; yields the dimension
    /// after each one.
    Exact,
    /// Random (consequence, permutation) pairs until the span fills the
    /// nullspace or `max_samples` is hit.
    Certify { seed: u64, max_samples: usize },
}

impl ClosureMode {
    pub fn certify(seed: u64) -> Self {
        ClosureMode::Certify {
            seed,
            max_samples: 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The consequences span the whole nullspace.
    NoNewIdentities,
    /// Their span is smaller than the nullspace (exact mode only).
    NewIdentities,
    /// Sampling stopped before the span filled the nullspace.
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::NoNewIdentities => "no new identities",
            Verdict::NewIdentities => "new identities",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug)]
pub struct ClosureReport {
    pub arity: usize,
    pub degree: usize,
    pub prime: u32,
    pub expansion_rank: usize,
    pub nullspace_dim: usize,
    pub consequences: Vec<LiftedConsequence>,
    /// Span dimension after each consequence (exact mode). Once the span
    /// fills the nullspace the remaining orbits cannot add anything and
    /// are not generated.
    pub cumulative_dims: Vec<usize>,
    pub span_dim: usize,
    /// Rows offered to the span.
    pub rows: usize,
    pub verdict: Verdict,
}

/// Progress callback payload.
#[derive(Clone, Copy, Debug)]
pub struct ClosureProgress {
    pub rows: usize,
    pub rank: usize,
    pub target: usize,
}

/// Rank of the expansion matrix over `F_p`.
pub fn expansion_rank_mod_p(e: &ExpansionMatrix, p: u32) -> Result<usize> {
    let mut acc = ModularRank::new(p, e.column_count())?;
    for row in e.rows() {
        acc.add_sparse(
            row.iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(j, &x)| (j, x as i64)),
        )?;
    }
    Ok(acc.rank())
}

/// Decides whether degree `degree` has identities beyond the consequences
/// of `known`, which must have degree `degree - (arity - 1)`.
pub fn new_identity_test(
    arity: usize,
    degree: usize,
    known: &[IdentityCombination],
    p: u32,
    mode: ClosureMode,
) -> Result<ClosureReport> {
    new_identity_test_with(arity, degree, known, p, mode, &mut |_| {})
}

pub fn new_identity_test_with(
    arity: usize,
    degree: usize,
    known: &[IdentityCombination],
    p: u32,
    mode: ClosureMode,
    progress: &mut dyn FnMut(ClosureProgress),
) -> Result<ClosureReport> {
    if known
        .iter()
        .any(|id| id.arity() != arity || id.degree() + arity - 1 != degree)
    {
        return Err(Error::MixedDegree);
    }
    let e = build_expansion_matrix(arity, degree)?;
    let expansion_rank = expansion_rank_mod_p(&e, p)?;
    let basis = e.into_basis();
    let nullspace_dim = basis.len() - expansion_rank;

    let mut consequences = Vec::new();
    for id in known {
        consequences.extend(lift_identity(id)?);
    }
    for c in &consequences {
        if !evaluate_identity(&c.result)?.is_zero() {
            return Err(Error::NotAnIdentity(format!(
                "{} of {}",
                c.recipe, c.result
            )));
        }
    }
    let results: Vec<&IdentityCombination> = consequences
        .iter()
        .map(|c| &c.result)
        .filter(|r| !r.is_empty())
        .collect();

    let mut span = ModuleSpan::new(&basis, p)?;
    let mut cumulative_dims = Vec::new();
    let verdict = match mode {
        ClosureMode::Exact => {
            for c in &consequences {
                if span.rank() < nullspace_dim && !c.result.is_empty() {
                    span.add_orbit_until(&c.result, Some(nullspace_dim))?;
                }
                cumulative_dims.push(span.rank());
                progress(ClosureProgress {
                    rows: span.rows_offered(),
                    rank: span.rank(),
                    target: nullspace_dim,
                });
            }
            if span.rank() == nullspace_dim {
                Verdict::NoNewIdentities
            } else {
                Verdict::NewIdentities
            }
        }
        ClosureMode::Certify { seed, max_samples } => {
            let max_samples = if max_samples == 0 {
                100 * nullspace_dim + 10_000
            } else {
                max_samples
            };
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut images: Vec<usize> = (0..degree).collect();
            while span.rank() < nullspace_dim
                && span.rows_offered() < max_samples
                && !results.is_empty()
            {
                let batch = SAMPLE_BATCH.min(max_samples - span.rows_offered());
                let samples: Vec<(usize, Permutation)> = (0..batch)
                    .map(|_| {
                        let k = rng.gen_range(0..results.len());
                        images.shuffle(&mut rng);
                        (
                            k,
                            Permutation::from_images(images.clone())
                                .expect("shuffle is a permutation"),
                        )
                    })
                    .collect();
                let rows: Vec<Vec<(usize, i64)>> = samples
                    .par_iter()
                    .map(|(k, s)| span.permuted_row(results[*k], s))
                    .collect();
                for row in rows {
                    span.add_row(&row)?;
                    if span.rank() >= nullspace_dim {
                        break;
                    }
                }
                progress(ClosureProgress {
                    rows: span.rows_offered(),
                    rank: span.rank(),
                    target: nullspace_dim,
                });
            }
            if span.rank() == nullspace_dim {
                Verdict::NoNewIdentities
            } else {
                Verdict::Inconclusive
            }
        }
    };
    Ok(ClosureReport {
        arity,
        degree,
        prime: p,
        expansion_rank,
        nullspace_dim,
        consequences,
        cumulative_dims,
        span_dim: span.rank(),
        rows: span.rows_offered(),
        verdict,
    })
}
