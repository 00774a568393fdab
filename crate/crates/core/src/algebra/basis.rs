use std::collections::HashMap;
use std::ops::Range;

use super::{
    enumerate_canonical_types, enumerate_monomials, AssociationType, IdentityCombination, Monomial,
};
use crate::error::{Error, Result};

/// The ordered monomial basis of one degree: all association types in
/// canonical order, each followed by its monomials in lexicographic order.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    arity: usize,
    degree: usize,
    types: Vec<AssociationType>,
    type_starts: Vec<usize>,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialBasis {
    pub fn new(arity: usize, degree: usize) -> Result<Self> {
        let types = enumerate_canonical_types(arity, degree)?;
        let mut monomials = Vec::new();
        let mut type_starts = Vec::with_capacity(types.len() + 1);
        for t in &types {
            type_starts.push(monomials.len());
            monomials.extend(enumerate_monomials(t));
        }
        type_starts.push(monomials.len());
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        Ok(MonomialBasis {
            arity,
            degree,
            types,
            type_starts,
            monomials,
            index,
        })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn types(&self) -> &[AssociationType] {
        &self.types
    }

    /// Column range occupied by type `t`.
    pub fn type_range(&self, t: usize) -> Range<usize> {
        self.type_starts[t]..self.type_starts[t + 1]
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn monomial(&self, i: usize) -> &Monomial {
        &self.monomials[i]
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    fn check(&self, id: &IdentityCombination) -> Result<()> {
        if id.arity() != self.arity || id.degree() != self.degree {
            return Err(Error::MixedDegree);
        }
        Ok(())
    }

    /// `(column, coefficient)` pairs in increasing column order.
    pub fn sparse_vector(&self, id: &IdentityCombination) -> Result<Vec<(usize, i64)>> {
        self.check(id)?;
        let mut out: Vec<(usize, i64)> = id.terms().map(|(m, c)| (self.index[m], c)).collect();
        out.sort_unstable();
        Ok(out)
    }

    pub fn dense_vector(&self, id: &IdentityCombination) -> Result<Vec<i64>> {
        let mut out = vec![0; self.len()];
        for (j, c) in self.sparse_vector(id)? {
            out[j] = c;
        }
        Ok(out)
    }

    pub fn combination(&self, coefficients: &[i64]) -> Result<IdentityCombination> {
        if coefficients.len() != self.len() {
            return Err(Error::SizeMismatch {
                expected: self.len(),
                found: coefficients.len(),
            });
        }
        let mut id = IdentityCombination::new(self.arity, self.degree)?;
        for (m, &c) in self.monomials.iter().zip(coefficients) {
            id.add_unchecked(c, m.clone());
        }
        Ok(id)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn column_counts_match_closed_forms() {
        let b = MonomialBasis::new(3, 7).unwrap();
        assert_eq!(b.len(), 280);
        assert_eq!(b.type_range(1), 210..280);
        for (t, ty) in b.types().iter().enumerate() {
            assert_eq!(b.type_range(t).len() as u64, ty.monomial_count());
        }
        assert!(b.monomials().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn vectors_round_trip() {
        let b = MonomialBasis::new(2, 4).unwrap();
        let coeffs: Vec<i64> = (0..15).map(|i| i % 3 - 1).collect();
        let id = b.combination(&coeffs).unwrap();
        assert_eq!(b.dense_vector(&id).unwrap(), coeffs);
    }
}
