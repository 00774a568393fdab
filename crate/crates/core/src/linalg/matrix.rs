use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have `cols` entries.
    pub fn from_rows<T: Into<BigInt> + Clone>(cols: usize, rows: &[Vec<T>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::SizeMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r.iter().cloned().map(Into::into));
        }
        Ok(IntegerMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [BigInt] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        self.row_mut(i).iter_mut().for_each(|x| *x = -&*x);
    }

    /// `row[target] -= q * row[source]`.
    pub fn sub_mul_row(&mut self, target: usize, source: usize, q: &BigInt) {
        if q.is_zero() || target == source {
            return;
        }
        let c = self.cols;
        let (t, s) = if target < source {
            let (lo, hi) = self.data.split_at_mut(source * c);
            (&mut lo[target * c..(target + 1) * c], &hi[..c])
        } else {
            let (lo, hi) = self.data.split_at_mut(target * c);
            (&mut hi[..c], &lo[source * c..(source + 1) * c])
        };
        for (x, y) in t.iter_mut().zip(s) {
            if !y.is_zero() {
                *x -= q * y;
            }
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntegerMatrix) -> Result<IntegerMatrix> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::SizeMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn is_zero_row(&self, i: usize) -> bool {
        self.row(i).iter().all(Zero::is_zero)
    }

    /// Submatrix of the given rows, in the given order.
    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &i in rows {
            data.extend_from_slice(self.row(i));
        }
        IntegerMatrix {
            rows: rows.len(),
            cols: self.cols,
            data,
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::SizeMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            let pivot = a.get(k, k).clone();
            for i in k + 1..n {
                let aik = a.get(i, k).clone();
                for j in k + 1..n {
                    let v = (&pivot * a.get(i, j) - &aik * a.get(k, j)).div_floor(&prev);
                    a.set(i, j, v);
                }
                a.set(i, k, BigInt::zero());
            }
            prev = pivot;
        }
        Ok(sign * a.get(n - 1, n - 1).clone())
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.data.iter().map(|x| x.abs()).max().unwrap_or_default()
    }

    pub fn to_i64_rows(&self) -> Result<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| x.to_i64().ok_or(Error::Overflow))
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn from_integer(m: &IntegerMatrix) -> Self {
        RationalMatrix {
            rows: m.rows,
            cols: m.cols,
            data: m
                .data
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_integer(&IntegerMatrix::identity(n))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub(crate) fn row_mut(&mut self, i: usize) -> &mut [BigRational] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// `row[target] -= q * row[source]`, touching only columns `from..`.
    pub(crate) fn sub_mul_row(
        &mut self,
        target: usize,
        source: usize,
        q: &BigRational,
        from: usize,
    ) {
        let c = self.cols;
        for j in from..c {
            let s = &self.data[source * c + j];
            if !s.is_zero() {
                let delta = q * s;
                self.data[target * c + j] -= delta;
            }
        }
    }

    /// The matrix as integers, if every entry is integral.
    pub fn to_integer(&self) -> Option<IntegerMatrix> {
        let data = self
            .data
            .iter()
            .map(|x| x.is_integer().then(|| x.to_integer()))
            .collect::<Option<Vec<_>>>()?;
        Some(IntegerMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bareiss_determinant() {
        let m =
            IntegerMatrix::from_rows(3, &[vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 2]]).unwrap();
        assert_eq!(m.determinant().unwrap(), BigInt::from(6));
        let m = IntegerMatrix::from_rows(2, &[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(m.determinant().unwrap(), BigInt::from(-1));
        let m = IntegerMatrix::from_rows(2, &[vec![1, 2], vec![2, 4]]).unwrap();
        assert!(m.determinant().unwrap().is_zero());
    }

    #[test]
    fn transpose_and_product() {
        let m = IntegerMatrix::from_rows(3, &[vec![1, 2, 3], vec![4, 5, 6]]).unwrap();
        let p = m.mul(&m.transpose()).unwrap();
        assert_eq!(p.to_i64_rows().unwrap(), vec![vec![14, 32], vec![32, 77]]);
        assert!(m.mul(&m).is_err());
    }
}
