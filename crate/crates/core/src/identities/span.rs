use std::collections::HashSet;

use rayon::prelude::*;

use crate::algebra::{IdentityCombination, MonomialBasis, Permutation};
use crate::linalg::{ModularRank, RowOutcome};
use crate::{Error, Result};

// Permutations handed to the thread pool at a time.
const CHUNK: usize = 4096;

/// The span, modulo a prime, of all variable permutations of a set of
/// identities of one degree.
///
/// Rows are deduplicated before elimination: each permuted identity is
/// reduced mod p, scaled so its first coefficient is 1 and remembered, so
/// an orbit with a large stabilizer costs one elimination per distinct
/// image.
pub struct ModuleSpan<'a> {
    basis: &'a MonomialBasis,
    acc: ModularRank,
    // packed (column << 8 | residue) per term
    seen: HashSet<Box<[u32]>>,
    rows_offered: usize,
}

impl<'a> ModuleSpan<'a> {
    pub fn new(basis: &'a MonomialBasis, p: u32) -> Result<Self> {
        if basis.len() >= 1 << 24 {
            return Err(Error::Overflow);
        }
        Ok(ModuleSpan {
            basis,
            acc: ModularRank::new(p, basis.len())?,
            seen: HashSet::new(),
            rows_offered: 0,
        })
    }

    pub fn basis(&self) -> &MonomialBasis {
        self.basis
    }

    pub fn prime(&self) -> u32 {
        self.acc.prime()
    }

    pub fn rank(&self) -> usize {
        self.acc.rank()
    }

    /// Rows offered so far, duplicates included.
    pub fn rows_offered(&self) -> usize {
        self.rows_offered
    }

    /// Distinct rows (up to scaling mod p) offered so far.
    pub fn distinct_rows(&self) -> usize {
        self.seen.len()
    }

    fn key(&self, row: &[(usize, i64)]) -> Box<[u32]> {
        let p = self.prime() as i64;
        let mut terms: Vec<(u32, u32)> = row
            .iter()
            .map(|&(c, v)| (c as u32, v.rem_euclid(p) as u32))
            .filter(|&(_, v)| v != 0)
            .collect();
        terms.sort_unstable();
        if let Some(&(_, lead)) = terms.first() {
            let inv = inverse(lead, self.prime());
            for t in &mut terms {
                t.1 = t.1 * inv % self.prime();
            }
        }
        terms.into_iter().map(|(c, v)| c << 8 | v).collect()
    }

    /// Adds one row, given as (column, coefficient) pairs.
    pub fn add_row(&mut self, row: &[(usize, i64)]) -> Result<RowOutcome> {
        self.rows_offered += 1;
        let key = self.key(row);
        if key.is_empty() || !self.seen.insert(key) {
            return Ok(RowOutcome::Absorbed);
        }
        self.acc.add_sparse(row.iter().copied())
    }

    fn check(&self, id: &IdentityCombination) -> Result<()> {
        if id.arity() != self.basis.arity() || id.degree() != self.basis.degree() {
            return Err(Error::MixedDegree);
        }
        Ok(())
    }

    /// Adds a single identity, without its permutations.
    pub fn add_identity(&mut self, id: &IdentityCombination) -> Result<RowOutcome> {
        let row = self.basis.sparse_vector(id)?;
        self.add_row(&row)
    }

    /// Whether the identity already lies in the span.
    pub fn contains(&self, id: &IdentityCombination) -> Result<bool> {
        let row = self.basis.sparse_vector(id)?;
        self.acc.contains_sparse(row)
    }

    /// Row of `sigma` applied to `id`.
    pub fn permuted_row(&self, id: &IdentityCombination, sigma: &Permutation) -> Vec<(usize, i64)> {
        let mut row: Vec<(usize, i64)> = id
            .terms()
            .map(|(m, c)| {
                (
                    self.basis
                        .index_of(&m.permute(sigma))
                        .expect("permuted monomial lies in the basis"),
                    c,
                )
            })
            .collect();
        row.sort_unstable();
        row
    }

    /// Adds `sigma . id` for every permutation `sigma` of the variables,
    /// in lexicographic order, stopping early once the rank reaches
    /// `stop_at`. Returns the rank.
    pub fn add_orbit_until(
        &mut self,
        id: &IdentityCombination,
        stop_at: Option<usize>,
    ) -> Result<usize> {
        self.check(id)?;
        let mut perms = Permutation::all(self.basis.degree());
        loop {
            if stop_at.is_some_and(|t| self.rank() >= t) {
                break;
            }
            let chunk: Vec<Permutation> = perms.by_ref().take(CHUNK).collect();
            if chunk.is_empty() {
                break;
            }
            let rows: Vec<Vec<(usize, i64)>> =
                chunk.par_iter().map(|s| self.permuted_row(id, s)).collect();
            for row in rows {
                self.add_row(&row)?;
                if stop_at.is_some_and(|t| self.rank() >= t) {
                    break;
                }
            }
        }
        Ok(self.rank())
    }

    pub fn add_orbit(&mut self, id: &IdentityCombination) -> Result<usize> {
        self.add_orbit_until(id, None)
    }
}

fn inverse(a: u32, p: u32) -> u32 {
    (1..p)
        .find(|x| a * x % p == 1)
        .expect("nonzero residue mod a prime")
}

/// Dimension over `F_p` of the span of all permutations of `ids`.
///
/// An empty list has rank 0.
pub fn module_rank(ids: &[IdentityCombination], p: u32) -> Result<usize> {
    let Some(first) = ids.first() else {
        return Ok(0);
    };
    if ids
        .iter()
        .any(|id| (id.arity(), id.degree()) != (first.arity(), first.degree()))
    {
        return Err(Error::MixedDegree);
    }
    let basis = MonomialBasis::new(first.arity(), first.degree())?;
    let mut span = ModuleSpan::new(&basis, p)?;
    for id in ids {
        span.add_orbit(id)?;
    }
    Ok(span.rank())
}
