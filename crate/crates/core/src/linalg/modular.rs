//! Incremental rank over a small prime field.
//!
//! The accumulator keeps its rows in reduced row echelon form and stores
//! only the entries in non-pivot columns, since the pivot columns form an
//! identity block. Testing a sparse row then costs one pass over the
//! remaining free columns per pivot it touches, and that width shrinks as
//! the rank grows.

use crate::{Error, Result};

/// Largest prime accepted; entries are stored as `u8`.
pub const MAX_PRIME: u32 = 251;

const NONE: u32 = u32::MAX;

pub fn is_prime(p: u32) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowOutcome {
    Absorbed,
    RankIncreased,
}

#[derive(Clone, Debug)]
pub struct ModularRank {
    p: u32,
    width: usize,
    // original column -> row holding its pivot, or NONE
    pivot_row: Vec<u32>,
    // original column -> storage position, or NONE once it is a pivot
    slot: Vec<u32>,
    // storage position -> original column, or NONE if dead
    live: Vec<u32>,
    dead: usize,
    data: Vec<u8>,
    pivots: Vec<usize>,
    // multiplier for the 16-bit Barrett step
    m16: u32,
}

impl ModularRank {
    pub fn new(p: u32, width: usize) -> Result<Self> {
        if !is_prime(p) || p > MAX_PRIME {
            return Err(Error::InvalidPrime(p));
        }
        Ok(ModularRank {
            p,
            width,
            pivot_row: vec![NONE; width],
            slot: (0..width as u32).collect(),
            live: (0..width as u32).collect(),
            dead: 0,
            data: Vec::new(),
            pivots: Vec::new(),
            m16: (1 << 16) / p,
        })
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Pivot column of each stored row, in insertion order.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn stride(&self) -> usize {
        self.live.len()
    }

    fn residue(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    /// Residual of `entries` modulo the current span, over storage
    /// positions. `entries` are (column, value) pairs; repeats add up.
    fn residual<I>(&self, entries: I) -> Result<Vec<u8>>
    where
        I: IntoIterator<Item = (usize, i64)>,
    {
        let p = self.p;
        let stride = self.stride();
        let mut acc = vec![0u32; stride];
        let mut coeffs = vec![];
        for (c, v) in entries {
            if c >= self.width {
                return Err(Error::SizeMismatch {
                    expected: self.width,
                    found: c + 1,
                });
            }
            let v = self.residue(v);
            if v == 0 {
                continue;
            }
            match self.pivot_row[c] {
                NONE => {
                    let s = self.slot[c] as usize;
                    acc[s] = (acc[s] + v) % p;
                }
                r => coeffs.push((r as usize, v)),
            }
        }
        coeffs.sort_unstable();
        coeffs.dedup_by(|b, a| {
            if a.0 == b.0 {
                a.1 = (a.1 + b.1) % p;
                true
            } else {
                false
            }
        });
        // each pass adds < p^2; flush well before u32 overflow
        let flush = (u32::MAX / (p * p)) as usize - 1;
        for (k, &(r, c)) in coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let neg = p - c;
            let row = &self.data[r * stride..(r + 1) * stride];
            for (a, &b) in acc.iter_mut().zip(row) {
                *a += neg * b as u32;
            }
            if (k + 1) % flush == 0 {
                acc.iter_mut().for_each(|a| *a %= p);
            }
        }
        Ok(acc.into_iter().map(|a| (a % p) as u8).collect())
    }

    fn first_live_nonzero(&self, residual: &[u8]) -> Option<usize> {
        residual
            .iter()
            .enumerate()
            .position(|(s, &x)| x != 0 && self.live[s] != NONE)
    }

    /// Whether the row lies in the current span.
    pub fn contains_sparse<I>(&self, entries: I) -> Result<bool>
    where
        I: IntoIterator<Item = (usize, i64)>,
    {
        let res = self.residual(entries)?;
        Ok(self.first_live_nonzero(&res).is_none())
    }

    pub fn contains_dense(&self, row: &[i64]) -> Result<bool> {
        self.check_len(row.len())?;
        self.contains_sparse(row.iter().copied().enumerate())
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.width {
            return Err(Error::SizeMismatch {
                expected: self.width,
                found: len,
            });
        }
        Ok(())
    }

    pub fn add_dense(&mut self, row: &[i64]) -> Result<RowOutcome> {
        self.check_len(row.len())?;
        self.add_sparse(row.iter().copied().enumerate())
    }

    /// Adds a row given as (column, value) pairs.
    pub fn add_sparse<I>(&mut self, entries: I) -> Result<RowOutcome>
    where
        I: IntoIterator<Item = (usize, i64)>,
    {
        let mut res = self.residual(entries)?;
        let Some(s) = self.first_live_nonzero(&res) else {
            return Ok(RowOutcome::Absorbed);
        };
        self.insert(&mut res, s);
        Ok(RowOutcome::RankIncreased)
    }

    fn inverse(&self, a: u32) -> u32 {
        // Fermat
        let (mut base, mut e, mut out) = (a % self.p, self.p - 2, 1u32);
        while e > 0 {
            if e & 1 == 1 {
                out = out * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        out
    }

    fn insert(&mut self, res: &mut [u8], s: usize) {
        let p = self.p;
        let stride = self.stride();
        let inv = self.inverse(res[s] as u32);
        for x in res.iter_mut() {
            *x = (*x as u32 * inv % p) as u8;
        }
        // dead positions may hold junk from the reduction; clear them
        for (x, &c) in res.iter_mut().zip(&self.live) {
            if c == NONE {
                *x = 0;
            }
        }
        let nz: Vec<u32> = (0..stride as u32)
            .filter(|&j| res[j as usize] != 0)
            .collect();
        let dense = nz.len() * 4 > stride;
        let m16 = self.m16;
        let p16 = p as u16;
        for row in self.data.chunks_exact_mut(stride) {
            let f = row[s] as u16;
            if f == 0 {
                continue;
            }
            let neg = p16 - f;
            // t < p + p^2 < 2^16; Barrett leaves a remainder below 2p
            let step = |x: &mut u8, y: u8| {
                let t = *x as u16 + neg * y as u16;
                let q = ((t as u32 * m16) >> 16) as u16;
                let r = t - q * p16;
                *x = if r >= p16 { r - p16 } else { r } as u8;
            };
            if dense {
                for (x, &y) in row.iter_mut().zip(res.iter()) {
                    step(x, y);
                }
            } else {
                for &j in &nz {
                    step(&mut row[j as usize], res[j as usize]);
                }
            }
        }
        let col = self.live[s] as usize;
        self.live[s] = NONE;
        self.slot[col] = NONE;
        self.pivot_row[col] = self.pivots.len() as u32;
        self.pivots.push(col);
        self.data.extend_from_slice(res);
        self.dead += 1;
        if self.dead * 4 > stride && self.dead >= 64 {
            self.compact();
        }
    }

    fn compact(&mut self) {
        let old = self.stride();
        let keep: Vec<usize> = (0..old).filter(|&s| self.live[s] != NONE).collect();
        let mut data = Vec::with_capacity(self.pivots.len() * keep.len());
        for row in self.data.chunks_exact(old) {
            data.extend(keep.iter().map(|&s| row[s]));
        }
        self.data = data;
        self.live = keep.iter().map(|&s| self.live[s]).collect();
        for (s, &c) in self.live.iter().enumerate() {
            self.slot[c as usize] = s as u32;
        }
        self.dead = 0;
    }

    /// The stored basis, as dense rows of residues in `[0, p)`. Row `i`
    /// has a 1 in column `pivots()[i]` and 0 in every other pivot column.
    pub fn basis_rows(&self) -> Vec<Vec<u8>> {
        let stride = self.stride();
        self.data
            .chunks_exact(stride.max(1))
            .take(self.rank())
            .zip(&self.pivots)
            .map(|(row, &pc)| {
                let mut out = vec![0u8; self.width];
                out[pc] = 1;
                for (s, &c) in self.live.iter().enumerate() {
                    if c != NONE {
                        out[c as usize] = row[s];
                    }
                }
                out
            })
            .collect()
    }
}
