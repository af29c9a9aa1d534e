//! Permutations of `{0, …, degree-1}` stored as image arrays.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection on `{0, …, degree-1}`; `images[i]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    /// Validates that `images` is a bijection on its index range.
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::NotAPermutation(images));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles, e.g. `&[&[0, 1], &[2, 3]]`.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                let (ai, bi) = (a as usize, b as usize);
                if ai >= degree || bi >= degree || touched[ai] {
                    return Err(Error::NotAPermutation(cycle.to_vec()));
                }
                touched[ai] = true;
                images[ai] = b;
            }
        }
        Perm::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Perm { images }
    }

    /// `self ∘ other`: `other` acts first.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        compose(self, other)
    }
}

/// `result[i] = p[q[i]]`, i.e. `q` is applied first.
pub fn compose(p: &Perm, q: &Perm) -> Result<Perm> {
    if p.degree() != q.degree() {
        return Err(Error::DegreeMismatch {
            expected: p.degree(),
            found: q.degree(),
        });
    }
    Ok(Perm {
        images: q.images.iter().map(|&i| p.images[i as usize]).collect(),
    })
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{}", self)
    }
}

/// Cycle notation; the identity prints as `()`.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut any = false;
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            any = true;
            write!(f, "({}", start)?;
            seen[start] = true;
            let mut i = self.apply(start);
            while i != start {
                write!(f, " {}", i)?;
                seen[i] = true;
                i = self.apply(i);
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}
