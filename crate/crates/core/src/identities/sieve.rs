use super::ModuleSpan;
use crate::algebra::{IdentityCombination, MonomialBasis};
use crate::{Error, Result};

/// An identity that enlarged the module spanned by its predecessors.
#[derive(Clone, Debug)]
pub struct Generator {
    /// One-based position in the input list.
    pub position: usize,
    pub identity: IdentityCombination,
    pub squared_norm: i64,
    /// Module rank after adding this generator's orbit.
    pub cumulative_rank: usize,
}

/// Walks `vectors` (nullspace coordinates over `basis`, usually sorted by
/// norm) and keeps each one whose permutations enlarge the span of those
/// kept so far. Stops once the span has dimension `vectors.len()`, which
/// for a nullspace basis means the whole nullspace is generated.
///
/// A vector already in the span is skipped without touching its orbit,
/// since the span is closed under permutations.
pub fn generator_sieve(
    basis: &MonomialBasis,
    vectors: &[Vec<i64>],
    p: u32,
) -> Result<Vec<Generator>> {
    let target = vectors.len();
    let mut span = ModuleSpan::new(basis, p)?;
    let mut out = Vec::new();
    for (k, v) in vectors.iter().enumerate() {
        if span.rank() >= target {
            break;
        }
        if v.len() != basis.len() {
            return Err(Error::SizeMismatch {
                expected: basis.len(),
                found: v.len(),
            });
        }
        let id = basis.combination(v)?;
        if span.contains(&id)? {
            continue;
        }
        span.add_orbit(&id)?;
        out.push(Generator {
            position: k + 1,
            squared_norm: id.squared_norm(),
            identity: id,
            cumulative_rank: span.rank(),
        });
    }
    Ok(out)
}

/// One-based positions of the vectors whose permutations alone span a
/// module of dimension `vectors.len()`.
pub fn single_generators(
    basis: &MonomialBasis,
    vectors: &[Vec<i64>],
    p: u32,
) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for (k, v) in vectors.iter().enumerate() {
        let id = basis.combination(v)?;
        let mut span = ModuleSpan::new(basis, p)?;
        if span.add_orbit_until(&id, Some(vectors.len()))? == vectors.len() {
            out.push(k + 1);
        }
    }
    Ok(out)
}
