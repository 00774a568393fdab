use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use super::{check_degree, Monomial, Permutation};
use crate::error::{Error, Result};

/// A sparse integer combination of canonical monomials of one degree.
///
/// Zero coefficients are never stored; iteration follows the global
/// monomial order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IdentityCombination {
    arity: usize,
    degree: usize,
    terms: BTreeMap<Monomial, i64>,
}

impl IdentityCombination {
    pub fn new(arity: usize, degree: usize) -> Result<Self> {
        check_degree(arity, degree)?;
        Ok(IdentityCombination {
            arity,
            degree,
            terms: BTreeMap::new(),
        })
    }

    pub fn from_terms(
        arity: usize,
        degree: usize,
        terms: impl IntoIterator<Item = (i64, Monomial)>,
    ) -> Result<Self> {
        let mut out = Self::new(arity, degree)?;
        for (c, m) in terms {
            out.add_term(c, m)?;
        }
        Ok(out)
    }

    pub fn add_term(&mut self, coeff: i64, m: Monomial) -> Result<()> {
        if m.arity() != self.arity {
            return Err(Error::WrongArity {
                expected: self.arity,
                found: m.arity(),
            });
        }
        if m.degree() != self.degree {
            return Err(Error::SizeMismatch {
                expected: self.degree,
                found: m.degree(),
            });
        }
        if let Some(v) = m.leaves().into_iter().find(|v| v.index() >= self.degree) {
            return Err(Error::VariableOutOfRange {
                variable: v.to_string(),
                degree: self.degree,
            });
        }
        self.add_unchecked(coeff, m);
        Ok(())
    }

    pub(crate) fn add_unchecked(&mut self, coeff: i64, m: Monomial) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> + '_ {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coefficient(&self, m: &Monomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn squared_norm(&self) -> i64 {
        self.terms.values().map(|c| c * c).sum()
    }

    /// Relabels every variable by `sigma`, re-straightening and merging.
    pub fn apply_permutation(&self, sigma: &Permutation) -> Result<Self> {
        if sigma.len() != self.degree {
            return Err(Error::SizeMismatch {
                expected: self.degree,
                found: sigma.len(),
            });
        }
        let mut out = IdentityCombination {
            terms: BTreeMap::new(),
            ..*self
        };
        for (m, &c) in &self.terms {
            out.add_unchecked(c, m.permute(sigma));
        }
        Ok(out)
    }

    /// Flips the sign so the first term (smallest monomial) is positive.
    pub fn normalized(mut self) -> Self {
        if self.terms.values().next().is_some_and(|&c| c < 0) {
            self.terms.values_mut().for_each(|c| *c = -*c);
        }
        self
    }

    pub fn scaled(mut self, factor: i64) -> Self {
        if factor == 0 {
            self.terms.clear();
        } else {
            self.terms.values_mut().for_each(|c| *c *= factor);
        }
        self
    }

    /// `self - other`.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        if (self.arity, self.degree) != (other.arity, other.degree) {
            return Err(Error::MixedDegree);
        }
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_unchecked(-c, m.clone());
        }
        Ok(out)
    }
}

impl fmt::Display for IdentityCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, &c)) in self.terms.iter().enumerate() {
            let sign = if c < 0 {
                "-"
            } else if i > 0 {
                "+"
            } else {
                ""
            };
            if i > 0 {
                f.write_str(" ")?;
            }
            match c.abs() {
                1 => write!(f, "{sign}{m}")?,
                a => write!(f, "{sign}{a}{m}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> Monomial {
        Monomial::parse(s, 3).unwrap()
    }

    #[test]
    fn merges_and_drops_zeros() {
        let mut id = IdentityCombination::new(3, 5).unwrap();
        id.add_term(2, m("[[a,b,c],d,e]")).unwrap();
        id.add_term(-2, m("[[b,a,c],e,d]")).unwrap();
        assert!(id.is_empty());
        assert!(id.add_term(1, m("[a,b,c]")).is_err());
    }

    #[test]
    fn swap_inside_symmetric_slot_is_trivial() {
        let id = IdentityCombination::from_terms(3, 5, [(1, m("[[a,b,c],d,e]"))]).unwrap();
        let swap = Permutation::transposition(5, 0, 1);
        assert_eq!(id.apply_permutation(&swap).unwrap(), id);
        assert_eq!(id.apply_permutation(&Permutation::identity(5)).unwrap(), id);
        assert!(id.apply_permutation(&Permutation::identity(4)).is_err());
    }

    #[test]
    fn normalization_makes_leading_positive() {
        let id = IdentityCombination::from_terms(
            3,
            5,
            [(-1, m("[[a,b,c],d,e]")), (3, m("[[a,b,d],c,e]"))],
        )
        .unwrap()
        .normalized();
        assert_eq!(id.to_string(), "[[a,b,c],d,e] -3[[a,b,d],c,e]");
        assert_eq!(id.squared_norm(), 10);
    }
}
