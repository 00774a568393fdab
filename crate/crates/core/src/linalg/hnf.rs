use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{IntegerMatrix, LatticeBasis};

/// Row-style Hermite normal form `H = U M` with `U` unimodular.
#[derive(Clone, Debug)]
pub struct HnfResult {
    pub h: IntegerMatrix,
    pub u: IntegerMatrix,
    pub rank: usize,
    /// Pivot column of each nonzero row of `h`, strictly increasing.
    pub pivots: Vec<usize>,
}

impl HnfResult {
    /// Checks the four defining conditions of the Hermite normal form.
    pub fn is_hermite(&self) -> bool {
        let h = &self.h;
        for (i, &j) in self.pivots.iter().enumerate() {
            if h.row(i)[..j].iter().any(|x| !x.is_zero()) || !h.get(i, j).is_positive() {
                return false;
            }
            if (0..i).any(|k| h.get(k, j).is_negative() || h.get(k, j) >= h.get(i, j)) {
                return false;
            }
        }
        self.pivots.windows(2).all(|w| w[0] < w[1])
            && (self.rank..h.rows()).all(|i| h.is_zero_row(i))
    }

    /// The nonzero rows of `h`.
    pub fn nonzero_rows(&self) -> IntegerMatrix {
        self.h.select_rows(&(0..self.rank).collect::<Vec<_>>())
    }
}

// Rounded quotient: remainder lies in [-|b|/2, |b|/2].
fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    let (q, r) = a.div_mod_floor(b);
    // floor remainder carries the sign of b, so stepping up moves it toward zero
    if (&r * &two).abs() > b.abs() {
        q + 1
    } else {
        q
    }
}

/// Hermite normal form with transform, by Euclidean row reduction column
/// by column. Entries above each pivot are reduced into `[0, pivot)` as
/// soon as the pivot is fixed.
pub fn hnf_with_transform(m: &IntegerMatrix) -> HnfResult {
    let (h, u, rank, pivots) = reduce(m, true);
    HnfResult {
        h,
        u: u.expect("transform tracked"),
        rank,
        pivots,
    }
}

/// Nonzero rows of the Hermite normal form, without the transform. Much
/// cheaper than [`hnf_with_transform`] when the transform would have large
/// entries.
pub fn hermite_form(m: &IntegerMatrix) -> IntegerMatrix {
    let (h, _, rank, _) = reduce(m, false);
    h.select_rows(&(0..rank).collect::<Vec<_>>())
}

fn reduce(
    m: &IntegerMatrix,
    track: bool,
) -> (IntegerMatrix, Option<IntegerMatrix>, usize, Vec<usize>) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = track.then(|| IntegerMatrix::identity(rows));
    let mut pivots = Vec::new();
    let mut r = 0;
    for j in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let best = (r..rows)
                .filter(|&i| !a.get(i, j).is_zero())
                .min_by(|&x, &y| a.get(x, j).abs().cmp(&a.get(y, j).abs()));
            let Some(b) = best else { break };
            a.swap_rows(b, r);
            if let Some(u) = u.as_mut() {
                u.swap_rows(b, r);
            }
            let mut cleared = true;
            for i in r + 1..rows {
                if a.get(i, j).is_zero() {
                    continue;
                }
                let q = round_div(a.get(i, j), a.get(r, j));
                a.sub_mul_row(i, r, &q);
                if let Some(u) = u.as_mut() {
                    u.sub_mul_row(i, r, &q);
                }
                cleared &= a.get(i, j).is_zero();
            }
            if cleared {
                break;
            }
        }
        if a.get(r, j).is_zero() {
            continue;
        }
        if a.get(r, j).is_negative() {
            a.negate_row(r);
            if let Some(u) = u.as_mut() {
                u.negate_row(r);
            }
        }
        let pivot = a.get(r, j).clone();
        for i in 0..r {
            let q = a.get(i, j).div_floor(&pivot);
            if !q.is_zero() {
                a.sub_mul_row(i, r, &q);
                if let Some(u) = u.as_mut() {
                    u.sub_mul_row(i, r, &q);
                }
            }
        }
        pivots.push(j);
        r += 1;
    }
    (a, u, r, pivots)
}

/// A lattice basis of `{x in Z^n : M x = 0}`: the rows of the HNF
/// transform of `M^t` that map to zero rows.
pub fn nullspace_lattice(m: &IntegerMatrix) -> LatticeBasis {
    let hnf = hnf_with_transform(&m.transpose());
    let rows = (hnf.rank..hnf.u.rows())
        .map(|i| hnf.u.row(i).to_vec())
        .collect();
    LatticeBasis::new(m.cols(), rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(rows: &[Vec<i64>]) -> IntegerMatrix {
        IntegerMatrix::from_rows(rows[0].len(), rows).unwrap()
    }

    fn check(m: &IntegerMatrix) -> HnfResult {
        let r = hnf_with_transform(m);
        assert_eq!(r.u.mul(m).unwrap(), r.h);
        assert_eq!(r.u.determinant().unwrap().abs(), BigInt::from(1));
        assert!(r.is_hermite());
        r
    }

    #[test]
    fn identity_and_zero() {
        let r = check(&IntegerMatrix::identity(3));
        assert_eq!(r.h, IntegerMatrix::identity(3));
        assert_eq!(r.u, IntegerMatrix::identity(3));
        let r = check(&IntegerMatrix::zeros(3, 2));
        assert_eq!(r.rank, 0);
        assert_eq!(r.u, IntegerMatrix::identity(3));
    }

    #[test]
    fn small_example() {
        let r = check(&int(&[
            vec![2, 3, 6, 2],
            vec![5, 6, 1, 6],
            vec![8, 3, 1, 1],
        ]));
        assert_eq!(r.rank, 3);
        let r = check(&int(&[vec![4, 6], vec![6, 9], vec![2, 3]]));
        assert_eq!(r.nonzero_rows().to_i64_rows().unwrap(), vec![vec![2, 3]]);
    }

    #[test]
    fn negative_pivots_terminate() {
        assert_eq!(
            round_div(&BigInt::from(-77), &BigInt::from(-44)),
            BigInt::from(2)
        );
        assert_eq!(
            round_div(&BigInt::from(5), &BigInt::from(-3)),
            BigInt::from(-2)
        );
        let r = check(&int(&[
            vec![6, -4, -1, 0],
            vec![3, -6, -4, -6],
            vec![6, 6, -6, 3],
            vec![4, -3, -6, -4],
        ]));
        assert_eq!(r.rank, 4);
    }

    #[test]
    fn kernel_of_invertible_is_empty() {
        let m = int(&[vec![2, 1], vec![1, 1]]);
        assert!(nullspace_lattice(&m).is_empty());
    }

    #[test]
    fn kernel_lattice_is_saturated() {
        // x + 2y + 4z = 0 has lattice basis e.g. (-2,1,0), (0,-2,1)
        let m = int(&[vec![2, 4, 8]]);
        let k = nullspace_lattice(&m);
        assert_eq!(k.len(), 2);
        assert!(k.contains(&[BigInt::from(0), BigInt::from(-2), BigInt::from(1)]));
        assert!(k.contains(&[BigInt::from(-2), BigInt::from(1), BigInt::from(0)]));
    }
}
