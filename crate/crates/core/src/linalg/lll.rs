// Index loops mirror the 1-based recurrences they implement.
#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::LatticeBasis;
use crate::{Error, Result};

/// The Lovász constant, as the pair (numerator, denominator).
pub const LLL_DELTA: (u32, u32) = (3, 4);

// b_k <- b_k - q b_l when |lambda_{k,l}| > d_l / 2.
fn reduce(k: usize, l: usize, b: &mut [Vec<BigInt>], d: &[BigInt], lam: &mut [Vec<BigInt>]) {
    let two_lam: BigInt = &lam[k][l] * 2;
    if two_lam.abs() <= d[l] {
        return;
    }
    // nearest integer to lambda / d, ties rounded up
    let q = (&two_lam + &d[l]).div_floor(&(&d[l] * 2));
    let (lo, hi) = b.split_at_mut(k);
    for (x, y) in hi[0].iter_mut().zip(&lo[l]) {
        if !y.is_zero() {
            *x -= &q * y;
        }
    }
    lam[k][l] -= &q * &d[l];
    for i in 1..l {
        let t = &q * &lam[l][i];
        lam[k][i] -= t;
    }
}

fn swap(k: usize, kmax: usize, b: &mut [Vec<BigInt>], d: &mut [BigInt], lam: &mut [Vec<BigInt>]) {
    b.swap(k, k - 1);
    for j in 1..k - 1 {
        let t = std::mem::take(&mut lam[k][j]);
        lam[k][j] = std::mem::replace(&mut lam[k - 1][j], t);
    }
    let l = lam[k][k - 1].clone();
    let big = (&d[k - 2] * &d[k] + &l * &l) / &d[k - 1];
    for i in k + 1..=kmax {
        let t = lam[i][k].clone();
        lam[i][k] = (&d[k] * &lam[i][k - 1] - &l * &t) / &d[k - 1];
        lam[i][k - 1] = (&big * &t + &l * &lam[i][k]) / &d[k];
    }
    d[k - 1] = big;
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .sum()
}

/// LLL reduction with all arithmetic in the integers (Gram determinants
/// `d_i` and scaled coefficients `lambda_{k,j}`), Lovász constant 3/4.
///
/// The input rows must be linearly independent; otherwise
/// [`Error::DependentRows`] is returned.
pub fn lll_reduce(basis: &LatticeBasis) -> Result<LatticeBasis> {
    let n = basis.len();
    if n == 0 {
        return Ok(basis.clone());
    }
    let (num, den) = (BigInt::from(LLL_DELTA.0), BigInt::from(LLL_DELTA.1));
    // 1-based; index 0 is a dummy row
    let mut b: Vec<Vec<BigInt>> = std::iter::once(Vec::new())
        .chain(basis.rows().iter().cloned())
        .collect();
    let mut d = vec![BigInt::zero(); n + 1];
    let mut lam = vec![vec![BigInt::zero(); n + 1]; n + 1];
    d[0] = BigInt::from(1);
    d[1] = dot(&b[1], &b[1]);
    if d[1].is_zero() {
        return Err(Error::DependentRows);
    }
    let mut k = 2;
    let mut kmax = 1;
    while k <= n {
        if k > kmax {
            kmax = k;
            for j in 1..=k {
                let mut u = dot(&b[k], &b[j]);
                for i in 1..j {
                    u = (&d[i] * &u - &lam[k][i] * &lam[j][i]) / &d[i - 1];
                }
                if j < k {
                    lam[k][j] = u;
                } else {
                    if u.is_zero() {
                        return Err(Error::DependentRows);
                    }
                    d[k] = u;
                }
            }
        }
        loop {
            reduce(k, k - 1, &mut b, &d, &mut lam);
            // den * d_k d_{k-2} < num * d_{k-1}^2 - den * lambda^2
            let lhs = &den * &d[k] * &d[k - 2];
            let rhs = &num * &d[k - 1] * &d[k - 1] - &den * &lam[k][k - 1] * &lam[k][k - 1];
            if lhs < rhs {
                swap(k, kmax, &mut b, &mut d, &mut lam);
                k = (k - 1).max(2);
            } else {
                break;
            }
        }
        for l in (1..k - 1).rev() {
            reduce(k, l, &mut b, &d, &mut lam);
        }
        k += 1;
    }
    b.remove(0);
    Ok(LatticeBasis::new(basis.dim(), b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn textbook_example() {
        let l = LatticeBasis::from_i64(3, &[vec![1, 1, 1], vec![-1, 0, 2], vec![3, 5, 6]]).unwrap();
        let r = lll_reduce(&l).unwrap();
        assert!(r.same_lattice(&l));
        assert_eq!(
            r.to_i64_rows().unwrap(),
            vec![vec![0, 1, 0], vec![1, 0, 1], vec![-1, 0, 2]]
        );
    }

    #[test]
    fn dependent_rows_rejected() {
        let l = LatticeBasis::from_i64(2, &[vec![1, 2], vec![2, 4]]).unwrap();
        assert!(matches!(lll_reduce(&l), Err(Error::DependentRows)));
    }

    #[test]
    fn reduces_skewed_basis() {
        let l = LatticeBasis::from_i64(2, &[vec![1, 0], vec![1000, 1]]).unwrap();
        let r = lll_reduce(&l).unwrap();
        assert!(r.same_lattice(&l));
        assert_eq!(r.squared_norms_u64().unwrap(), vec![1, 1]);
    }
}
