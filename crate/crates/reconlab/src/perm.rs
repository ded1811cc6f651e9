//! Permutations of a dense vertex base `{0, …, n-1}`.

use crate::error::{Error, Result};
use crate::graph::{VertexId, VertexSet};

/// A bijection on `{0, …, n-1}`, stored as its image table.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<VertexId>,
}

impl Permutation {
    /// Builds a permutation from `images[x] = π(x)`, rejecting non-bijections.
    pub fn from_images(images: Vec<VertexId>) -> Result<Self> {
        let n = images.len();
        let mut seen = 0u64;
        if n > VertexSet::MAX_BASE {
            return Err(Error::CapExceeded {
                what: "permutation base",
                requested: n,
                cap: VertexSet::MAX_BASE,
            });
        }
        for &y in &images {
            if y >= n {
                return Err(Error::VertexOutOfRange { vertex: y, n });
            }
            if seen & (1 << y) != 0 {
                return Err(Error::InvalidStructure(format!(
                    "duplicate image {y} in permutation"
                )));
            }
            seen |= 1 << y;
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// π(x). Panics if `x` is out of range.
    pub fn image(&self, x: VertexId) -> VertexId {
        self.images[x]
    }

    pub fn images(&self) -> &[VertexId] {
        &self.images
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Self {
            images: (0..self.n()).map(|x| self.images[other.images[x]]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Self { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// Elementwise image of a vertex set.
    pub fn map_set(&self, s: VertexSet) -> VertexSet {
        s.iter().map(|v| self.images[v]).collect()
    }

    /// All `n!` permutations of `{0, …, n-1}` in lexicographic image order.
    ///
    /// Intended for exhaustive checks at small `n`; the caller is responsible
    /// for keeping `n` sane.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        use itertools::Itertools;
        (0..n).permutations(n).map(|images| Permutation { images })
    }
}
