//! Vertex-deleted cards, decks, and (-1)-hypomorphy.
//!
//! A deck stores certificates, never raw cards: memory stays `O(n · |cert|)`
//! and comparison is multiset equality with full byte confirmation.

use crate::canon::{canonical_form, fnv128, Canonize, Certificate};
use crate::error::{Error, Result};
use crate::graph::{check_same_kind, VertexSet};

/// The multiset of canonical certificates of the `n` vertex-deleted cards.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Deck {
    n: usize,
    cards: Vec<Certificate>, // sorted by certificate bytes
}

impl Deck {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Cards sorted by certificate bytes; multiset order is irrelevant.
    pub fn cards(&self) -> &[Certificate] {
        &self.cards
    }

    /// Cards in vertex order: entry `x` certifies the card with vertex `x`
    /// deleted.
    pub fn by_deleted_vertex<T: Canonize>(g: &T) -> Result<Vec<Certificate>> {
        if g.n() == 0 {
            return Err(Error::EmptyStructure);
        }
        let full = VertexSet::full(g.n());
        (0..g.n())
            .map(|x| canonical_form(&g.induced(full.without(x))?))
            .collect()
    }
}

/// The deck of `g`: one card per vertex, each the certificate of the
/// structure induced on the other `n - 1` vertices.
pub fn deck<T: Canonize>(g: &T) -> Result<Deck> {
    let mut cards = Deck::by_deleted_vertex(g)?;
    cards.sort_unstable();
    Ok(Deck { n: g.n(), cards })
}

/// Whether the decks of `a` and `b` agree as multisets.
pub fn are_hypomorphic<T: Canonize>(a: &T, b: &T) -> Result<bool> {
    check_same_kind(a.kind(), b.kind())?;
    Ok(deck(a)? == deck(b)?)
}

/// Order-independent 128-bit digest of a deck: FNV over the sorted card
/// hashes. Equal decks hash equally; buckets are re-confirmed by exact
/// multiset comparison wherever it matters.
pub fn deck_hash(d: &Deck) -> u128 {
    let mut bytes = Vec::with_capacity(16 * d.cards.len());
    for c in &d.cards {
        bytes.extend_from_slice(&c.hash128().to_le_bytes());
    }
    fnv128(&bytes)
}
