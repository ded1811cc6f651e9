//! Isomorphism-type measures: the type of an induced substructure, per-size
//! type profiles, and the deck-level count vector.
//!
//! A type is identified by the representative's canonical certificate rather
//! than by an enumeration index, so the catalog is canonical and
//! run-independent. Counts are exact integers; no floating point anywhere.

use std::collections::BTreeMap;

use crate::canon::{canonical_form, Canonize, Certificate};
use crate::deck::{deck, Deck};
use crate::error::{Error, Result};
use crate::graph::{check_same_kind, VertexSet};

/// The isomorphism type of a size-`i` induced substructure.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TypeId {
    size: usize,
    certificate: Certificate,
}

impl TypeId {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn certificate(&self) -> &Certificate {
        &self.certificate
    }
}

/// Counts of each card type in the deck: the coordinates of a structure
/// over the basis of size-(n-1) types. The counts sum to `n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MeasureVector {
    n: usize,
    counts: BTreeMap<TypeId, usize>,
}

impl MeasureVector {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn counts(&self) -> &BTreeMap<TypeId, usize> {
        &self.counts
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }
}

/// The type of the substructure induced on `chi`.
pub fn measure<T: Canonize>(g: &T, chi: VertexSet) -> Result<TypeId> {
    let sub = g.induced(chi)?;
    Ok(TypeId {
        size: chi.len(),
        certificate: canonical_form(&sub)?,
    })
}

/// Card-type counts with multiplicity; the deck regrouped as a vector.
pub fn measure_vector<T: Canonize>(g: &T) -> Result<MeasureVector> {
    let d = deck(g)?;
    Ok(vector_from_deck(&d))
}

/// Regroups an existing deck into its count vector.
pub fn vector_from_deck(d: &Deck) -> MeasureVector {
    let mut counts: BTreeMap<TypeId, usize> = BTreeMap::new();
    for card in d.cards() {
        *counts
            .entry(TypeId {
                size: d.n().saturating_sub(1),
                certificate: card.clone(),
            })
            .or_insert(0) += 1;
    }
    MeasureVector { n: d.n(), counts }
}

/// Counts of induced types over all `C(n, i)` subsets of size `i`.
pub fn profile<T: Canonize>(g: &T, i: usize) -> Result<BTreeMap<TypeId, usize>> {
    if i == 0 || i > g.n() {
        return Err(Error::InvalidStructure(format!(
            "profile size {i} outside 1..={}",
            g.n()
        )));
    }
    let mut counts = BTreeMap::new();
    for chi in VertexSet::subsets_of_size(g.n(), i) {
        *counts.entry(measure(g, chi)?).or_insert(0) += 1;
    }
    Ok(counts)
}

/// Whether the two structures have identical measure vectors.
pub fn vectors_equal<T: Canonize>(a: &T, b: &T) -> Result<bool> {
    check_same_kind(a.kind(), b.kind())?;
    Ok(measure_vector(a)? == measure_vector(b)?)
}
