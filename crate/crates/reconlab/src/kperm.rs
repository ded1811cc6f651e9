//! Permutations of the size-(n-1) vertex subsets and their lifting to
//! vertex permutations.
//!
//! A size-(n-1) subset of `{0, …, n-1}` is identified by its excluded
//! vertex, so a subset permutation is stored as the map on excluded
//! vertices: `s(E∖{x}) = E∖{images[x]}`. Lifting then reads the image table
//! directly; the set-level operations ([`SubsetPermutation::image_set`],
//! [`lift_intersection`], [`induces`]) still compute with explicit masks so
//! the arithmetic shortcut stays checkable against them.

use crate::canon::{Canonize, Certificate};
use crate::deck::Deck;
use crate::error::{Error, Result};
use crate::graph::{check_same_kind, VertexId, VertexSet};
use crate::perm::Permutation;

/// Exhaustive enumeration cap: there are n! subset permutations.
pub const SUBSET_PERM_ENUM_MAX_N: usize = 6;

/// A bijection on the `n` subsets of size `n-1`, keyed by excluded vertex.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SubsetPermutation {
    images: Vec<VertexId>,
}

impl SubsetPermutation {
    /// `images[x] = y` means the subset excluding `x` maps to the subset
    /// excluding `y`. Bijectivity on subsets is bijectivity of `images`.
    pub fn from_excluded_images(images: Vec<VertexId>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::EmptyStructure);
        }
        // Reuse the permutation validator.
        Permutation::from_images(images.clone())?;
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::from_excluded_images((0..n).collect())
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// The excluded vertex of the image of the subset excluding `x`.
    pub fn excluded_image(&self, x: VertexId) -> VertexId {
        self.images[x]
    }

    pub fn excluded_images(&self) -> &[VertexId] {
        &self.images
    }

    /// Set-level action: the image of a size-(n-1) subset.
    pub fn image_set(&self, chi: VertexSet) -> Result<VertexSet> {
        let n = self.n();
        if !chi.is_subset_of(VertexSet::full(n)) {
            return Err(Error::SubsetOutOfRange {
                mask: chi.bits(),
                n,
            });
        }
        let excluded = chi.complement(n).only_element().ok_or_else(|| {
            Error::InvalidStructure(format!(
                "subset {:#b} does not have size n-1",
                chi.bits()
            ))
        })?;
        Ok(VertexSet::full(n).without(self.images[excluded]))
    }

    /// `self ∘ other` on subsets: first `other`, then `self`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Self::from_excluded_images(
            (0..self.n()).map(|x| self.images[other.images[x]]).collect(),
        )
    }
}

/// The vertex permutation `σ̃` with `σ̃(x)` the unique element of
/// `E ∖ s(E∖{x})`. With the excluded-vertex representation this is the
/// image table itself; complementation always yields a singleton.
pub fn lift(s: &SubsetPermutation) -> Permutation {
    Permutation::from_images(s.excluded_images().to_vec())
        .expect("subset permutation image tables are bijections")
}

/// The intersection `⋂_{j ≠ x} s(E∖{j})`, computed with explicit masks.
/// For a finite base this is always the singleton `{lift(s)(x)}`; the sweep
/// in [`crate::verify::verify_theorem1`] checks exactly that.
pub fn lift_intersection(s: &SubsetPermutation, x: VertexId) -> Result<VertexSet> {
    let n = s.n();
    if x >= n {
        return Err(Error::VertexOutOfRange { vertex: x, n });
    }
    let full = VertexSet::full(n);
    let mut acc = full;
    for j in (0..n).filter(|&j| j != x) {
        acc = acc.intersect(s.image_set(full.without(j))?);
    }
    Ok(acc)
}

/// Whether `p` acts like `s` on every size-(n-1) subset, checked set by set.
pub fn induces(p: &Permutation, s: &SubsetPermutation) -> Result<bool> {
    if p.n() != s.n() {
        return Err(Error::SizeMismatch {
            left: p.n(),
            right: s.n(),
        });
    }
    let full = VertexSet::full(s.n());
    for x in 0..s.n() {
        let chi = full.without(x);
        if p.map_set(chi) != s.image_set(chi)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All `n!` subset permutations, in lexicographic order of their excluded
/// image tables. Errors above [`SUBSET_PERM_ENUM_MAX_N`].
pub fn enumerate_subset_permutations(
    n: usize,
) -> Result<impl Iterator<Item = SubsetPermutation>> {
    if n == 0 {
        return Err(Error::EmptyStructure);
    }
    if n > SUBSET_PERM_ENUM_MAX_N {
        return Err(Error::CapExceeded {
            what: "subset permutation enumeration",
            requested: n,
            cap: SUBSET_PERM_ENUM_MAX_N,
        });
    }
    Ok(Permutation::all(n).map(|p| SubsetPermutation {
        images: p.images().to_vec(),
    }))
}

/// Whether `s` carries every card of `a` onto an isomorphic card of `b`:
/// `canonical_form(a|χ) = canonical_form(b|s(χ))` for every size-(n-1)
/// subset `χ`.
pub fn is_measure_preserving<T: Canonize>(
    s: &SubsetPermutation,
    a: &T,
    b: &T,
) -> Result<bool> {
    check_same_kind(a.kind(), b.kind())?;
    if a.n() != s.n() {
        return Err(Error::SizeMismatch {
            left: a.n(),
            right: s.n(),
        });
    }
    let cards_a = Deck::by_deleted_vertex(a)?;
    let cards_b = Deck::by_deleted_vertex(b)?;
    Ok(preserves_cards(s, &cards_a, &cards_b))
}

/// Card-level form of [`is_measure_preserving`] for callers that already
/// hold per-vertex card certificates.
pub fn preserves_cards(
    s: &SubsetPermutation,
    cards_a: &[Certificate],
    cards_b: &[Certificate],
) -> bool {
    (0..s.n()).all(|x| cards_a[x] == cards_b[s.excluded_image(x)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimpleGraph;

    /// The worked 3-cycle: {0,1}→{1,2}, {1,2}→{0,2}, {0,2}→{0,1}.
    /// In excluded-vertex form: 2→0, 0→1, 1→2.
    fn three_cycle() -> SubsetPermutation {
        SubsetPermutation::from_excluded_images(vec![1, 2, 0]).unwrap()
    }

    #[test]
    fn worked_example_lifts_to_three_cycle() {
        let s = three_cycle();
        // Check the stated subset images hold at the set level.
        let img = |m: &[usize]| s.image_set(VertexSet::from_iter(m.iter().copied())).unwrap();
        assert_eq!(img(&[0, 1]), VertexSet::from_iter([1, 2]));
        assert_eq!(img(&[1, 2]), VertexSet::from_iter([0, 2]));
        assert_eq!(img(&[0, 2]), VertexSet::from_iter([0, 1]));
        let lifted = lift(&s);
        assert_eq!(lifted.images(), &[1, 2, 0]);
        for x in 0..3 {
            let chi = VertexSet::full(3).without(x);
            assert_eq!(lifted.map_set(chi), s.image_set(chi).unwrap());
        }
    }

    #[test]
    fn identity_lifts_to_identity() {
        for n in 1..=5 {
            let s = SubsetPermutation::identity(n).unwrap();
            assert!(lift(&s).is_identity());
            for x in 0..n {
                assert_eq!(
                    lift_intersection(&s, x).unwrap(),
                    VertexSet::singleton(x)
                );
            }
        }
    }

    #[test]
    fn worked_example_intersection() {
        // ⋂_{j≠2} s(E∖{j}) = {1,2} ∖ ... = {0,2} ∩ {0,1}? Recompute honestly:
        // s(E∖{0}) = E∖{1} = {0,2}; s(E∖{1}) = E∖{2} = {0,1}; meet = {0}.
        let s = three_cycle();
        assert_eq!(lift_intersection(&s, 2).unwrap(), VertexSet::singleton(0));
        assert_eq!(lift(&s).image(2), 0);
    }

    #[test]
    fn set_based_lift_oracle() {
        // The arithmetic lift must match an explicit set computation:
        // σ̃(x) = the unique member of E ∖ s(E∖{x}).
        for n in 1..=4 {
            for s in enumerate_subset_permutations(n).unwrap() {
                let lifted = lift(&s);
                for x in 0..n {
                    let full = VertexSet::full(n);
                    let image = s.image_set(full.without(x)).unwrap();
                    let residue = image.complement(n).only_element().unwrap();
                    assert_eq!(lifted.image(x), residue);
                }
            }
        }
    }

    #[test]
    fn intersection_is_singleton_of_lift() {
        for n in 2..=5 {
            for s in enumerate_subset_permutations(n).unwrap() {
                let lifted = lift(&s);
                for x in 0..n {
                    assert_eq!(
                        lift_intersection(&s, x).unwrap(),
                        VertexSet::singleton(lifted.image(x))
                    );
                }
            }
        }
    }

    #[test]
    fn lift_is_a_group_homomorphism() {
        for n in [3, 4] {
            let all: Vec<_> = enumerate_subset_permutations(n).unwrap().collect();
            for s in &all {
                for t in &all {
                    let st = s.compose(t).unwrap();
                    assert_eq!(
                        lift(&st),
                        lift(s).compose(&lift(t)).unwrap(),
                        "lift must commute with composition"
                    );
                }
            }
        }
    }

    #[test]
    fn induces_accepts_lift_and_rejects_mismatch() {
        for n in 3..=5 {
            for s in enumerate_subset_permutations(n).unwrap() {
                assert!(induces(&lift(&s), &s).unwrap());
            }
        }
        let s = three_cycle();
        assert!(!induces(&Permutation::identity(3), &s).unwrap());
    }

    #[test]
    fn each_subset_permutation_has_a_unique_inducing_permutation() {
        for n in [3, 4] {
            for s in enumerate_subset_permutations(n).unwrap() {
                let count = Permutation::all(n)
                    .filter(|p| induces(p, &s).unwrap())
                    .count();
                assert_eq!(count, 1);
            }
        }
    }

    #[test]
    fn enumeration_counts_are_factorials() {
        assert_eq!(enumerate_subset_permutations(1).unwrap().count(), 1);
        assert_eq!(enumerate_subset_permutations(3).unwrap().count(), 6);
        assert_eq!(enumerate_subset_permutations(4).unwrap().count(), 24);
        assert!(enumerate_subset_permutations(7).is_err());
        assert!(enumerate_subset_permutations(0).is_err());
    }

    #[test]
    fn measure_preservation_examples() {
        let k3 = SimpleGraph::complete(3).unwrap();
        let p3 = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let id = SubsetPermutation::identity(3).unwrap();
        assert!(is_measure_preserving(&id, &k3, &k3).unwrap());
        for s in enumerate_subset_permutations(3).unwrap() {
            assert!(!is_measure_preserving(&s, &k3, &p3).unwrap());
        }
    }

    #[test]
    fn preserving_subset_permutation_exists_iff_hypomorphic() {
        // Exhaustive over labeled graph pairs on 3 vertices.
        let graphs: Vec<SimpleGraph> = (0u32..8)
            .map(|bits| {
                let pairs = [(0, 1), (0, 2), (1, 2)];
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| bits >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                SimpleGraph::from_edges(3, &edges).unwrap()
            })
            .collect();
        for a in &graphs {
            for b in &graphs {
                let exists = enumerate_subset_permutations(3)
                    .unwrap()
                    .any(|s| is_measure_preserving(&s, a, b).unwrap());
                let hypomorphic = crate::deck::are_hypomorphic(a, b).unwrap();
                assert_eq!(exists, hypomorphic);
            }
        }
    }

    #[test]
    fn vertex_to_subset_permutation_map_is_a_bijection() {
        for n in [3, 4, 5] {
            use std::collections::BTreeSet;
            let induced: BTreeSet<Vec<usize>> = Permutation::all(n)
                .map(|p| {
                    // The subset permutation induced by p, by excluded vertex.
                    (0..n)
                        .map(|x| {
                            let full = VertexSet::full(n);
                            p.map_set(full.without(x)).complement(n).only_element().unwrap()
                        })
                        .collect()
                })
                .collect();
            let factorial: usize = (1..=n).product();
            assert_eq!(induced.len(), factorial);
        }
    }
}
