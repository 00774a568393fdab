use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{IntegerMatrix, LatticeBasis, RationalMatrix};

/// Row canonical (reduced row echelon) form.
#[derive(Clone, Debug)]
pub struct Rcf {
    pub matrix: RationalMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Rcf {
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.matrix.cols()];
        self.pivots.iter().for_each(|&j| is_pivot[j] = true);
        (0..self.matrix.cols()).filter(|&j| !is_pivot[j]).collect()
    }
}

/// Gauss-Jordan elimination over the rationals.
pub fn rcf(m: &RationalMatrix) -> Rcf {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for j in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.get(i, j).is_zero()) else {
            continue;
        };
        a.swap_rows(p, r);
        let inv = a.get(r, j).recip();
        if !inv.is_one() {
            a.row_mut(r)[j..].iter_mut().for_each(|x| *x *= &inv);
        }
        for i in 0..rows {
            if i != r && !a.get(i, j).is_zero() {
                let q = a.get(i, j).clone();
                a.sub_mul_row(i, r, &q, j);
            }
        }
        pivots.push(j);
        r += 1;
    }
    Rcf {
        matrix: a,
        rank: r,
        pivots,
    }
}

/// The canonical nullspace basis: one vector per free column (in column
/// order), with that free variable set to 1 and the others to 0, cleared
/// of denominators and divided by the gcd of its entries.
///
/// This spans the rational nullspace but need not be a lattice basis of
/// the integer nullspace.
pub fn rcf_nullspace(m: &IntegerMatrix) -> LatticeBasis {
    let r = rcf(&RationalMatrix::from_integer(m));
    let free = r.free_columns();
    let rows = free
        .iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); m.cols()];
            v[f] = BigRational::one();
            for (i, &p) in r.pivots.iter().enumerate() {
                v[p] = -r.matrix.get(i, f).clone();
            }
            primitive(&v)
        })
        .collect();
    LatticeBasis::new(m.cols(), rows)
}

fn primitive(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if gcd.is_zero() || gcd.is_one() {
        ints
    } else {
        ints.into_iter().map(|x| x / &gcd).collect()
    }
}

/// Exact rank over the rationals.
pub fn rational_rank(m: &IntegerMatrix) -> usize {
    rcf(&RationalMatrix::from_integer(m)).rank
}
