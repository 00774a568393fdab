use std::fmt;

use super::Variable;
use crate::error::{Error, Result};

/// A bijection on variable indices `0..len`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(len: usize) -> Self {
        Permutation {
            images: (0..len).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::NotPermutation(images));
            }
        }
        Ok(Permutation { images })
    }

    /// The transposition swapping `i` and `j`.
    pub fn transposition(len: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(len);
        p.images.swap(i, j);
        p
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn apply(&self, v: Variable) -> Variable {
        Variable::new(self.images[v.index()])
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// Every permutation of `0..len`, in lexicographic order of images.
    pub fn all(len: usize) -> Permutations {
        Permutations {
            next: Some((0..len).collect()),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: String = self
            .images
            .iter()
            .map(|&i| Variable::new(i).letter())
            .collect();
        write!(f, "({letters})")
    }
}

/// Lexicographic iterator over a symmetric group.
#[derive(Clone, Debug)]
pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { images: current })
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_enumeration() {
        let all: Vec<_> = Permutation::all(3).map(|p| p.images().to_vec()).collect();
        assert_eq!(
            all,
            vec![
                vec![0, 1, 2],
                vec![0, 2, 1],
                vec![1, 0, 2],
                vec![1, 2, 0],
                vec![2, 0, 1],
                vec![2, 1, 0]
            ]
        );
        assert_eq!(Permutation::all(7).count(), 5040);
        assert_eq!(Permutation::all(0).count(), 1);
    }

    #[test]
    fn composition_and_inverse() {
        let s = Permutation::from_images(vec![1, 2, 0]).unwrap();
        let t = Permutation::transposition(3, 0, 1);
        assert_eq!(s.compose(&t).images(), &[2, 1, 0]);
        assert_eq!(s.compose(&s.inverse()), Permutation::identity(3));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
    }
}
