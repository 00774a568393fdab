//! Monomials of a completely symmetric n-ary operation.

mod basis;
mod combination;
mod monomial;
mod permutation;
mod shape;
mod slot;

pub use basis::MonomialBasis;
pub use combination::IdentityCombination;
pub use monomial::{straighten, Monomial, Tree};
pub use permutation::{Permutation, Permutations};
pub use shape::{enumerate_canonical_types, enumerate_monomials, AssociationType};
pub use slot::{order_slot_tuples, slot_tuple_count, SlotTuple};

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported number of variables; letters run `a..=z`.
pub const MAX_VARIABLES: usize = 26;

/// A variable, stored as a dense 0-based index and displayed as a letter.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Variable(u8);

impl Variable {
    pub fn new(index: usize) -> Self {
        assert!(index < MAX_VARIABLES, "variable index {index} out of range");
        Variable(index as u8)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn letter(self) -> char {
        (b'a' + self.0) as char
    }

    pub fn from_letter(c: char) -> Option<Self> {
        c.is_ascii_lowercase().then(|| Variable(c as u8 - b'a'))
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Checks that `degree = k * (arity - 1) + 1` for some `k >= 0`.
pub fn check_degree(arity: usize, degree: usize) -> Result<()> {
    if arity < 2 {
        return Err(Error::InvalidArity(arity));
    }
    if degree == 0 || !(degree - 1).is_multiple_of(arity - 1) || degree > MAX_VARIABLES {
        return Err(Error::InvalidDegree { arity, degree });
    }
    Ok(())
}

/// Number of operation applications in a monomial of this degree.
pub fn operation_count(arity: usize, degree: usize) -> usize {
    (degree - 1) / (arity - 1)
}

pub(crate) fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}
