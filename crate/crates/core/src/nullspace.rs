//! Integer bases of the space of identities in one degree.

use std::fmt;
use std::str::FromStr;

use crate::expansion::ExpansionMatrix;
use crate::linalg::{lll_reduce, nullspace_lattice, rcf_nullspace, LatticeBasis};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NullspaceMethod {
    /// One primitive vector per free column of the row canonical form.
    Rcf,
    /// Kernel rows of the Hermite transform of `E^t`, then LLL.
    HnfLll,
}

impl FromStr for NullspaceMethod {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "rcf" => Ok(NullspaceMethod::Rcf),
            "hnf-lll" => Ok(NullspaceMethod::HnfLll),
            _ => Err(format!("unknown method `{s}` (expected rcf or hnf-lll)")),
        }
    }
}

impl fmt::Display for NullspaceMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NullspaceMethod::Rcf => "rcf",
            NullspaceMethod::HnfLll => "hnf-lll",
        })
    }
}

/// A basis of the identities of the matrix's degree, in coordinates over
/// its monomial basis. Rows are in the order the method produces them.
pub fn nullspace_basis(e: &ExpansionMatrix, method: NullspaceMethod) -> Result<LatticeBasis> {
    let m = e.to_integer_matrix();
    match method {
        NullspaceMethod::Rcf => Ok(rcf_nullspace(&m)),
        NullspaceMethod::HnfLll => lll_reduce(&nullspace_lattice(&m)),
    }
}
