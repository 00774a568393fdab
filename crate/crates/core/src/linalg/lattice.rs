use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::{hermite_form, rational_rank, rcf, IntegerMatrix, RationalMatrix};
use crate::{Error, Result};

/// A finite list of integer vectors, viewed as generators of a lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBasis {
    dim: usize,
    rows: Vec<Vec<BigInt>>,
}

impl LatticeBasis {
    /// # Panics
    /// If a row does not have `dim` entries.
    pub fn new(dim: usize, rows: Vec<Vec<BigInt>>) -> Self {
        assert!(
            rows.iter().all(|r| r.len() == dim),
            "row length differs from dimension"
        );
        LatticeBasis { dim, rows }
    }

    pub fn from_i64(dim: usize, rows: &[Vec<i64>]) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::SizeMismatch {
                expected: dim,
                found: r.len(),
            });
        }
        Ok(Self::new(
            dim,
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        ))
    }

    pub fn from_matrix(m: &IntegerMatrix) -> Self {
        Self::new(m.cols(), m.row_vecs())
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Length of each vector.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<BigInt>> {
        self.rows
    }

    pub fn to_matrix(&self) -> IntegerMatrix {
        IntegerMatrix::from_rows(self.dim, &self.rows).expect("rows have uniform length")
    }

    pub fn squared_norms(&self) -> Vec<BigInt> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|x| x * x).sum())
            .collect()
    }

    pub fn squared_norms_u64(&self) -> Result<Vec<u64>> {
        self.squared_norms()
            .iter()
            .map(|n| n.to_u64().ok_or(Error::Overflow))
            .collect()
    }

    /// Rows reordered by increasing squared norm. Ties keep their order.
    pub fn sorted_by_norm(&self) -> Self {
        let norms = self.squared_norms();
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by(|&a, &b| norms[a].cmp(&norms[b]));
        Self::new(
            self.dim,
            order.into_iter().map(|i| self.rows[i].clone()).collect(),
        )
    }

    pub fn to_i64_rows(&self) -> Result<Vec<Vec<i64>>> {
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| x.to_i64().ok_or(Error::Overflow))
                    .collect()
            })
            .collect()
    }

    /// Nonzero rows of the Hermite normal form: a canonical basis of the
    /// lattice spanned by the rows.
    pub fn hermite_basis(&self) -> IntegerMatrix {
        if self.is_empty() {
            return IntegerMatrix::zeros(0, self.dim);
        }
        hermite_form(&self.to_matrix())
    }

    /// Rational coordinates of each vector with respect to the rows.
    /// `None` if the rows are dependent or some vector is outside their
    /// span.
    pub fn coordinates(&self, vs: &[Vec<BigInt>]) -> Option<Vec<Vec<BigRational>>> {
        let r = self.len();
        if vs.iter().any(|v| v.len() != self.dim) {
            return None;
        }
        // columns: the basis vectors, then the targets
        let mut m = IntegerMatrix::zeros(self.dim, r + vs.len());
        for (j, v) in self.rows.iter().chain(vs).enumerate() {
            for (i, x) in v.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        let f = rcf(&RationalMatrix::from_integer(&m));
        if f.pivots != (0..r).collect::<Vec<_>>() {
            return None;
        }
        Some(
            (0..vs.len())
                .map(|j| (0..r).map(|i| f.matrix.get(i, r + j).clone()).collect())
                .collect(),
        )
    }

    /// Whether both lists generate the same lattice.
    pub fn same_lattice(&self, other: &LatticeBasis) -> bool {
        if self.dim != other.dim {
            return false;
        }
        if self.len() == other.len() {
            if let Some(inside) = self.coordinates(&other.rows) {
                return all_integral(&inside) && other.contains_all(&self.rows);
            }
        }
        self.hermite_basis() == other.hermite_basis()
    }

    /// Whether `v` is an integer combination of the rows.
    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.contains_all(std::slice::from_ref(&v.to_vec()))
    }

    /// Whether every vector is an integer combination of the rows.
    pub fn contains_all(&self, vs: &[Vec<BigInt>]) -> bool {
        if vs.iter().any(|v| v.len() != self.dim) {
            return false;
        }
        if let Some(x) = self.coordinates(vs) {
            return all_integral(&x);
        }
        if self.rank() == self.len() {
            // independent rows, so some vector lies outside the span
            return false;
        }
        let h = self.hermite_basis();
        vs.iter().all(|v| reduces_to_zero(&h, v))
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        if self.is_empty() {
            return 0;
        }
        rational_rank(&self.to_matrix())
    }
}

fn all_integral(x: &[Vec<BigRational>]) -> bool {
    x.iter().flatten().all(|q| q.is_integer())
}

fn reduces_to_zero(h: &IntegerMatrix, v: &[BigInt]) -> bool {
    let mut v = v.to_vec();
    for i in 0..h.rows() {
        let row = h.row(i);
        let p = row
            .iter()
            .position(|x| !x.is_zero())
            .expect("hermite rows are nonzero");
        let (q, r) = v[p].div_rem(&row[p]);
        if !r.is_zero() {
            return false;
        }
        if !q.is_zero() {
            for (x, y) in v.iter_mut().zip(row) {
                *x -= &q * y;
            }
        }
    }
    v.iter().all(Zero::is_zero)
}
