//! A verification laboratory for finite graph reconstruction.
//!
//! The crate enumerates small structures (simple graphs, edge-colored
//! graphs, multigraph tuples, uniform hypergraphs) up to isomorphism,
//! computes vertex-deleted decks and measure vectors, lifts subset
//! permutations to vertex permutations, and runs exhaustive sweeps that
//! either confirm reconstruction claims on a bounded range or produce
//! serialized counterexamples.

pub mod canon;
pub mod deck;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod jsonio;
pub mod kperm;
pub mod measure;
pub mod perm;
pub mod verify;

pub use canon::{are_isomorphic, canonical_form, canonical_labeling, Certificate};
pub use deck::{are_hypomorphic, deck, deck_hash, Deck};
pub use enumerate::{
    all_colored, all_colored_with_vertex_colors, all_graphs, all_hypergraphs, all_multigraphs,
    random_graph, SplitMix64,
};
pub use error::{Error, Graph6Error, Result};
pub use graph::{
    fuse_multigraph, EdgeColoredGraph, MultiGraphTuple, SimpleGraph, Structure, StructureKind,
    UniformHypergraph, VertexId, VertexSet,
};
pub use graph6::{emit_graph6, emit_graph6_canonical, parse_graph6};
pub use jsonio::AnyStructure;
pub use kperm::{
    enumerate_subset_permutations, induces, is_measure_preserving, lift, lift_intersection,
    SubsetPermutation,
};
pub use measure::{measure, measure_vector, profile, vectors_equal, MeasureVector, TypeId};
pub use perm::Permutation;
pub use verify::{
    verify_lemma_l2, verify_matrix_corollary, verify_measure_theorem, verify_theorem1,
    verify_ulam, DiagonalMode, Report, SweepKind, Verdict,
};
