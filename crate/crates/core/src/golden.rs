//! Reference data bundled with the crate: matrices, bases, norm lists,
//! identities and expected numbers. Tests and the reproduction harness
//! take every expected value from here.

use std::sync::OnceLock;

use serde::Deserialize;

use crate::algebra::IdentityCombination;
use crate::expansion::SlotCombination;
use crate::io::{parse_identity, parse_matrix, parse_slot_combination};
use crate::linalg::IntegerMatrix;
use crate::{Error, Result};

macro_rules! data {
    ($path:literal) => {
        include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/data/", $path))
    };
}

#[derive(Clone, Debug, Deserialize)]
pub struct ReferenceValues {
    pub prime: u32,
    pub cross_check_prime: u32,
    pub binary: BinaryValues,
    pub ternary5: Ternary5Values,
    pub ternary7: Ternary7Values,
    pub ternary9: Ternary9Values,
}

#[derive(Clone, Debug, Deserialize)]
pub struct BinaryValues {
    pub arity: usize,
    pub degree: usize,
    pub type_counts: Vec<usize>,
    pub slot_tuples: usize,
    pub rank: usize,
    pub nullspace_dim: usize,
    pub canonical_norms: Vec<u64>,
    pub reduced_norm_target: u64,
    pub reduced_norm_bound: u64,
    pub recombination_module_rank: usize,
    pub single_generator_rank: usize,
    pub single_generator_norm: u64,
    pub single_generator_positions: Vec<usize>,
    pub degree5_types: usize,
    pub rewrite_terms: usize,
    pub second_type_monomial: String,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Ternary5Values {
    pub arity: usize,
    pub degree: usize,
    pub type_counts: Vec<usize>,
    pub rows: usize,
    pub rank: usize,
    pub nullspace_dim: usize,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Ternary7Values {
    pub arity: usize,
    pub degree: usize,
    pub type_counts: Vec<usize>,
    pub rows: usize,
    pub rank: usize,
    pub nullspace_dim: usize,
    pub column_mass: i64,
    pub type1_distinct_triples: usize,
    pub type2_distinct_triples: usize,
    pub module_rank_p: usize,
    pub module_rank_q: usize,
    pub module_rank_pq: usize,
    pub module_rank_r: usize,
    pub module_rank_ijk: usize,
    pub canonical_generator_norms: Vec<u64>,
    pub reduced_generator_norms: Vec<u64>,
    pub reduced_max_norm: u64,
    pub rewrite_terms: usize,
    pub second_type_monomial: String,
    pub type1_representative: String,
    pub type2_representative: String,
    pub canonical_generator_positions: Vec<usize>,
    pub reduced_generator_positions: Vec<usize>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Ternary9Values {
    pub arity: usize,
    pub degree: usize,
    pub type_counts: Vec<usize>,
    pub rows: usize,
    pub columns: usize,
    pub rank: usize,
    pub nullspace_dim: usize,
    pub lifted_consequences: usize,
    pub cumulative_dims: Vec<usize>,
}

/// The expected values, parsed once.
pub fn reference_values() -> &'static ReferenceValues {
    static VALUES: OnceLock<ReferenceValues> = OnceLock::new();
    VALUES.get_or_init(|| {
        toml::from_str(data!("reference_values.toml"))
            .expect("bundled reference_values.toml is valid")
    })
}

/// A bundled integer matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GoldenMatrix {
    /// Expansion matrix for arity 2, degree 4.
    BinaryExpansion,
    /// Its row canonical form, zero rows dropped.
    BinaryRcf,
    /// Nullspace basis read off the row canonical form, one vector per row.
    BinaryCanonicalBasis,
    /// Nonzero rows of the Hermite form of the transposed expansion matrix.
    BinaryHnf,
    /// Unimodular transform of that Hermite form.
    BinaryTransform,
    /// The transform with its kernel rows LLL-reduced.
    BinaryReducedTransform,
    /// Ten rows of the arity 3, degree 5 expansion matrix forming a
    /// nonsingular block.
    Ternary5Submatrix,
}

impl GoldenMatrix {
    fn text(self) -> &'static str {
        match self {
            GoldenMatrix::BinaryExpansion => data!("binary_expansion.txt"),
            GoldenMatrix::BinaryRcf => data!("binary_rcf.txt"),
            GoldenMatrix::BinaryCanonicalBasis => data!("binary_canonical_basis.txt"),
            GoldenMatrix::BinaryHnf => data!("binary_hnf.txt"),
            GoldenMatrix::BinaryTransform => data!("binary_transform.txt"),
            GoldenMatrix::BinaryReducedTransform => data!("binary_reduced_transform.txt"),
            GoldenMatrix::Ternary5Submatrix => data!("ternary5_submatrix.txt"),
        }
    }

    pub fn load(self) -> IntegerMatrix {
        parse_matrix(self.text()).expect("bundled matrix parses")
    }
}

fn numbers(text: &str) -> Vec<u64> {
    text.split_whitespace()
        .map(|x| x.parse().expect("bundled number list parses"))
        .collect()
}

/// One-based row numbers of [`GoldenMatrix::Ternary5Submatrix`] within the
/// full expansion matrix.
pub fn ternary5_submatrix_rows() -> Vec<usize> {
    numbers(data!("ternary5_submatrix_rows.txt"))
        .into_iter()
        .map(|x| x as usize)
        .collect()
}

/// Sorted squared norms of the degree 7 canonical nullspace basis.
pub fn ternary7_canonical_norms() -> Vec<u64> {
    numbers(data!("ternary7_canonical_norms.txt"))
}

/// Sorted squared norms of the degree 7 LLL-reduced basis.
pub fn ternary7_reduced_norms() -> Vec<u64> {
    numbers(data!("ternary7_reduced_norms.txt"))
}

/// Expansion of the representative monomial of each degree 7 type.
pub fn ternary7_type_expansions() -> [SlotCombination; 2] {
    let load = |t| {
        parse_slot_combination(t)
            .expect("bundled slot file parses")
            .2
    };
    [
        load(data!("ternary7_type1_expansion.txt")),
        load(data!("ternary7_type2_expansion.txt")),
    ]
}

/// A bundled identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GoldenIdentity {
    /// The degree 4 identity of binary recombination.
    BinaryRecombination,
    /// A short alternative degree 4 generator; it rewrites the second
    /// binary association type.
    BinaryReduced,
    TernaryI,
    TernaryJ,
    TernaryK,
    TernaryP,
    TernaryQ,
    /// The ternary degree 7 generator.
    TernaryR,
    /// Second ternary type minus its expression in the first type.
    TernarySecondTypeRewrite,
}

impl GoldenIdentity {
    pub const ALL: [GoldenIdentity; 9] = [
        GoldenIdentity::BinaryRecombination,
        GoldenIdentity::BinaryReduced,
        GoldenIdentity::TernaryI,
        GoldenIdentity::TernaryJ,
        GoldenIdentity::TernaryK,
        GoldenIdentity::TernaryP,
        GoldenIdentity::TernaryQ,
        GoldenIdentity::TernaryR,
        GoldenIdentity::TernarySecondTypeRewrite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GoldenIdentity::BinaryRecombination => "binary-recombination",
            GoldenIdentity::BinaryReduced => "binary-reduced",
            GoldenIdentity::TernaryI => "I",
            GoldenIdentity::TernaryJ => "J",
            GoldenIdentity::TernaryK => "K",
            GoldenIdentity::TernaryP => "P",
            GoldenIdentity::TernaryQ => "Q",
            GoldenIdentity::TernaryR => "R",
            GoldenIdentity::TernarySecondTypeRewrite => "second-type-rewrite",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|g| g.name().eq_ignore_ascii_case(name))
            .ok_or_else(|| Error::parse(0, format!("unknown identity `{name}`")))
    }

    pub fn text(self) -> &'static str {
        match self {
            GoldenIdentity::BinaryRecombination => data!("identities/binary_recombination.txt"),
            GoldenIdentity::BinaryReduced => data!("identities/binary_reduced.txt"),
            GoldenIdentity::TernaryI => data!("identities/ternary_i.txt"),
            GoldenIdentity::TernaryJ => data!("identities/ternary_j.txt"),
            GoldenIdentity::TernaryK => data!("identities/ternary_k.txt"),
            GoldenIdentity::TernaryP => data!("identities/ternary_p.txt"),
            GoldenIdentity::TernaryQ => data!("identities/ternary_q.txt"),
            GoldenIdentity::TernaryR => data!("identities/ternary_r.txt"),
            GoldenIdentity::TernarySecondTypeRewrite => {
                data!("identities/ternary_second_type_rewrite.txt")
            }
        }
    }

    pub fn load(self) -> IdentityCombination {
        parse_identity(self.text()).expect("bundled identity parses")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn everything_loads() {
        let v = reference_values();
        assert!(v.prime < 256 && v.cross_check_prime < 256);
        for g in GoldenIdentity::ALL {
            assert!(!g.load().is_empty(), "{}", g.name());
            assert_eq!(GoldenIdentity::from_name(g.name()).unwrap(), g);
        }
        assert_eq!(
            GoldenMatrix::BinaryExpansion.load().rows(),
            v.binary.slot_tuples
        );
        assert_eq!(
            GoldenMatrix::BinaryCanonicalBasis.load().rows(),
            v.binary.nullspace_dim
        );
        assert_eq!(ternary7_canonical_norms().len(), v.ternary7.nullspace_dim);
        assert_eq!(ternary7_reduced_norms().len(), v.ternary7.nullspace_dim);
        assert_eq!(ternary5_submatrix_rows().len(), v.ternary5.rank);
        let [t1, t2] = ternary7_type_expansions();
        assert_eq!(
            (t1.len(), t2.len()),
            (
                v.ternary7.type1_distinct_triples,
                v.ternary7.type2_distinct_triples
            )
        );
    }
}
