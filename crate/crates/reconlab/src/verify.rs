//! The experiment harness: each reconstruction claim becomes an exhaustive
//! sweep that counts checked instances and surfaces counterexamples.
//!
//! Sweeps never assume the claim they test: verdicts derive solely from
//! enumeration, and a refutation is a reportable outcome, serialized fully
//! enough to be checked by an independent implementation. Pairwise deck
//! comparisons are bucketed by deck hash first and re-confirmed exactly
//! inside buckets, so hash collisions cannot create or hide findings.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{are_isomorphic, Canonize};
use crate::deck::{deck, deck_hash, Deck};
use crate::enumerate::{
    all_colored, all_colored_with_vertex_colors, all_graphs, all_graphs_capped, all_hypergraphs,
    all_multigraphs, SIMPLE_ENUM_MAX_N,
};
use crate::error::{Error, Result};
use crate::graph::{EdgeColoredGraph, MultiGraphTuple, SimpleGraph, UniformHypergraph};
use crate::jsonio::AnyStructure;
use crate::kperm::{
    enumerate_subset_permutations, induces, lift, lift_intersection, preserves_cards,
    SubsetPermutation, SUBSET_PERM_ENUM_MAX_N,
};
use crate::measure::vector_from_deck;
use crate::perm::Permutation;

/// Largest base size for the subset-permutation lemma sweep; the cost is
/// (classes choose 2) · n!.
pub const LEMMA_L2_MAX_N: usize = 5;

/// Largest base size for the measure-theorem sweep.
pub const MEASURE_MAX_N: usize = 8;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Verified,
    Refuted,
    Partial,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Verified => write!(f, "verified"),
            Verdict::Refuted => write!(f, "refuted"),
            Verdict::Partial => write!(f, "partial"),
        }
    }
}

/// One finding: a pair of structures (or a lone witness object) violating
/// the sweep's claim, with enough context to re-check it independently.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Counterexample {
    pub a: serde_json::Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<serde_json::Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deck_hash: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_absent: Option<bool>,
}

/// Outcome of one sweep. `verdict` is `refuted` exactly when
/// `counterexamples` is nonempty; reports are reproducible modulo
/// `elapsed_ms`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Report {
    pub claim_id: String,
    pub parameters: BTreeMap<String, serde_json::Value>,
    pub instances_checked: u64,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed_ms: u64,
    pub verdict: Verdict,
}

impl Report {
    fn build(
        claim_id: &str,
        parameters: BTreeMap<String, serde_json::Value>,
        instances_checked: u64,
        counterexamples: Vec<Counterexample>,
        started: Instant,
    ) -> Self {
        let verdict = if !counterexamples.is_empty() {
            Verdict::Refuted
        } else if instances_checked > 0 {
            Verdict::Verified
        } else {
            Verdict::Partial
        };
        Report {
            claim_id: claim_id.to_string(),
            parameters,
            instances_checked,
            counterexamples,
            elapsed_ms: started.elapsed().as_millis() as u64,
            verdict,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// JSON with the wall-clock field zeroed: byte-identical across runs and
    /// thread counts for equal parameters.
    pub fn deterministic_json(&self) -> String {
        let mut copy = self.clone();
        copy.elapsed_ms = 0;
        serde_json::to_string_pretty(&copy).expect("reports serialize")
    }
}

fn params(entries: &[(&str, serde_json::Value)]) -> BTreeMap<String, serde_json::Value> {
    entries
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

/// Which structure family a deck sweep runs over.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SweepKind {
    Simple,
    Colored { k: usize },
    Multigraph { layers: usize },
    Hypergraph { m: usize },
}

// ---------------------------------------------------------------------------
// Subset-permutation lifting sweep
// ---------------------------------------------------------------------------

/// Exhaustively checks, for every one of the n! subset permutations `s`,
/// that the lifted vertex permutation induces `s` on every size-(n-1)
/// subset, that the intersection formula returns exactly the lift's image,
/// and that lifting is a bijection onto the vertex permutations (with a
/// full uniqueness cross-check).
pub fn verify_theorem1(n: usize) -> Result<Report> {
    let started = Instant::now();
    if n == 0 {
        return Err(Error::EmptyStructure);
    }
    if n > SUBSET_PERM_ENUM_MAX_N {
        return Err(Error::CapExceeded {
            what: "subset permutation sweep",
            requested: n,
            cap: SUBSET_PERM_ENUM_MAX_N,
        });
    }
    let subset_perms: Vec<SubsetPermutation> = enumerate_subset_permutations(n)?.collect();
    let vertex_perms: Vec<Permutation> = Permutation::all(n).collect();
    let mut counterexamples = Vec::new();
    let mut lifted_images: Vec<Vec<usize>> = Vec::with_capacity(subset_perms.len());

    for s in &subset_perms {
        let lifted = lift(s);
        let mut ok = induces(&lifted, s)?;
        for x in 0..n {
            ok &= lift_intersection(s, x)?.only_element() == Some(lifted.image(x));
        }
        // Exactly one vertex permutation induces s.
        let inducing = vertex_perms
            .iter()
            .filter(|p| induces(p, s).unwrap_or(false))
            .count();
        ok &= inducing == 1;
        if ok {
            lifted_images.push(lifted.images().to_vec());
        } else {
            counterexamples.push(Counterexample {
                a: serde_json::json!({
                    "kind": "subset_permutation",
                    "n": n,
                    "excluded_images": s.excluded_images(),
                }),
                b: Some(serde_json::json!({
                    "kind": "permutation",
                    "images": lifted.images(),
                })),
                deck_hash: None,
                witness_absent: None,
            });
        }
    }

    // The lift map must be a bijection onto the n! vertex permutations.
    lifted_images.sort_unstable();
    lifted_images.dedup();
    if counterexamples.is_empty() && lifted_images.len() != vertex_perms.len() {
        counterexamples.push(Counterexample {
            a: serde_json::json!({
                "kind": "lift_bijection_failure",
                "n": n,
                "distinct_lifts": lifted_images.len(),
                "vertex_permutations": vertex_perms.len(),
            }),
            b: None,
            deck_hash: None,
            witness_absent: None,
        });
    }

    Ok(Report::build(
        "theorem1",
        params(&[("n", n.into())]),
        subset_perms.len() as u64,
        counterexamples,
        started,
    ))
}

// ---------------------------------------------------------------------------
// Deck sweeps
// ---------------------------------------------------------------------------

/// Shared pairwise machinery: bucket representatives by deck hash, confirm
/// exact deck equality inside buckets, and report every hypomorphic pair
/// (representatives are pairwise non-isomorphic by construction; the
/// absence of a witness is still re-checked before reporting).
fn deck_sweep<T: Canonize>(
    reps: &[T],
    to_any: impl Fn(&T) -> AnyStructure + Sync,
) -> Result<(Vec<Counterexample>, Vec<Deck>)> {
    let decks: Vec<Deck> = reps
        .par_iter()
        .map(|g| deck(g))
        .collect::<Result<Vec<_>>>()?;
    let mut buckets: BTreeMap<u128, Vec<usize>> = BTreeMap::new();
    for (i, d) in decks.iter().enumerate() {
        buckets.entry(deck_hash(d)).or_default().push(i);
    }
    let mut counterexamples = Vec::new();
    for members in buckets.values() {
        for (a_pos, &i) in members.iter().enumerate() {
            for &j in &members[a_pos + 1..] {
                if decks[i] == decks[j] {
                    let witness = are_isomorphic(&reps[i], &reps[j])?;
                    if witness.is_some() {
                        // Two stream entries in one class would be an
                        // enumeration bug, not a finding.
                        return Err(Error::InvalidStructure(
                            "enumeration produced isomorphic representatives".into(),
                        ));
                    }
                    counterexamples.push(Counterexample {
                        a: to_any(&reps[i]).to_value()?,
                        b: Some(to_any(&reps[j]).to_value()?),
                        deck_hash: Some(format!("{:032x}", deck_hash(&decks[i]))),
                        witness_absent: Some(true),
                    });
                }
            }
        }
    }
    Ok((counterexamples, decks))
}

/// Exhaustive hypomorphy-implies-isomorphy sweep over one structure family.
pub fn verify_ulam(n: usize, kind: SweepKind) -> Result<Report> {
    let started = Instant::now();
    let (label, extra, counterexamples, count) = match kind {
        SweepKind::Simple => {
            let reps = all_graphs(n)?;
            let (cex, _) = deck_sweep(&reps, |g: &SimpleGraph| AnyStructure::from(g.clone()))?;
            ("simple", Vec::new(), cex, reps.len())
        }
        SweepKind::Colored { k } => {
            let reps = all_colored(n, k)?;
            let (cex, _) =
                deck_sweep(&reps, |g: &EdgeColoredGraph| AnyStructure::from(g.clone()))?;
            ("colored", vec![("colors", k.into())], cex, reps.len())
        }
        SweepKind::Multigraph { layers } => {
            let reps = all_multigraphs(n, layers)?;
            let (cex, _) =
                deck_sweep(&reps, |g: &MultiGraphTuple| AnyStructure::from(g.clone()))?;
            ("multigraph", vec![("layers", layers.into())], cex, reps.len())
        }
        SweepKind::Hypergraph { m } => {
            let reps = all_hypergraphs(n, m)?;
            let (cex, _) =
                deck_sweep(&reps, |g: &UniformHypergraph| AnyStructure::from(g.clone()))?;
            ("hypergraph", vec![("arity", m.into())], cex, reps.len())
        }
    };
    let mut p = vec![("n", serde_json::Value::from(n)), ("kind", label.into())];
    p.extend(extra);
    Ok(Report::build(
        "ulam",
        params(&p),
        count as u64,
        counterexamples,
        started,
    ))
}

/// [`verify_ulam`] for simple graphs with an explicit enumeration cap
/// (n = 9 is opt-in because the sweep canonicalizes ~2.5M cards).
pub fn verify_ulam_simple_capped(n: usize, cap: usize) -> Result<Report> {
    let started = Instant::now();
    let reps = all_graphs_capped(n, cap.max(SIMPLE_ENUM_MAX_N))?;
    let (counterexamples, _) =
        deck_sweep(&reps, |g: &SimpleGraph| AnyStructure::from(g.clone()))?;
    Ok(Report::build(
        "ulam",
        params(&[("n", n.into()), ("kind", "simple".into())]),
        reps.len() as u64,
        counterexamples,
        started,
    ))
}

// ---------------------------------------------------------------------------
// Measure-vector sweep
// ---------------------------------------------------------------------------

/// Checks that measure-vector equality and deck equality partition the
/// classes identically (they are the same data regrouped), and reports any
/// equal-vector pair — such a pair is non-isomorphic by construction.
pub fn verify_measure_theorem(n: usize) -> Result<Report> {
    let started = Instant::now();
    if n > MEASURE_MAX_N {
        return Err(Error::CapExceeded {
            what: "measure-theorem sweep",
            requested: n,
            cap: MEASURE_MAX_N,
        });
    }
    let reps = all_graphs(n)?;
    let (counterexamples, decks) =
        deck_sweep(&reps, |g: &SimpleGraph| AnyStructure::from(g.clone()))?;

    // Definitional cross-check: group by exact deck, group by exact vector,
    // require identical partitions of the index set.
    let mut by_deck: BTreeMap<Vec<(Vec<u8>, usize)>, Vec<usize>> = BTreeMap::new();
    let mut by_vector: BTreeMap<Vec<(Vec<u8>, usize)>, Vec<usize>> = BTreeMap::new();
    for (i, d) in decks.iter().enumerate() {
        let mut deck_key: Vec<(Vec<u8>, usize)> = Vec::new();
        for card in d.cards() {
            match deck_key.last_mut() {
                Some((bytes, count)) if bytes == card.bytes() => *count += 1,
                _ => deck_key.push((card.bytes().to_vec(), 1)),
            }
        }
        by_deck.entry(deck_key).or_default().push(i);
        let vector_key: Vec<(Vec<u8>, usize)> = vector_from_deck(d)
            .counts()
            .iter()
            .map(|(t, &c)| (t.certificate().bytes().to_vec(), c))
            .collect();
        by_vector.entry(vector_key).or_default().push(i);
    }
    let deck_groups: Vec<Vec<usize>> = by_deck.into_values().collect();
    let vector_groups: Vec<Vec<usize>> = by_vector.into_values().collect();
    if deck_groups != vector_groups {
        return Err(Error::InvalidStructure(
            "measure vectors and decks disagree as partitions".into(),
        ));
    }

    Ok(Report::build(
        "measure_theorem",
        params(&[("n", n.into())]),
        reps.len() as u64,
        counterexamples,
        started,
    ))
}

// ---------------------------------------------------------------------------
// Symmetric-matrix corollary sweep
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DiagonalMode {
    /// All diagonal entries equal: vertex colors are constant.
    Constant,
    /// Diagonal entries range over the full alphabet.
    Free,
}

impl DiagonalMode {
    pub fn label(self) -> &'static str {
        match self {
            DiagonalMode::Constant => "constant",
            DiagonalMode::Free => "free",
        }
    }
}

/// Sweep over symmetric matrices with entries in `{0, …, alphabet-1}`,
/// represented as edge-colored graphs whose vertex colors carry the
/// diagonal: if all principal submatrix decks agree, the matrices must be
/// permutation-congruent.
pub fn verify_matrix_corollary(
    n: usize,
    alphabet: usize,
    diagonal: DiagonalMode,
) -> Result<Report> {
    let started = Instant::now();
    let v = match diagonal {
        DiagonalMode::Constant => 1,
        DiagonalMode::Free => alphabet,
    };
    let reps = all_colored_with_vertex_colors(n, alphabet, v)?;
    let (counterexamples, _) =
        deck_sweep(&reps, |g: &EdgeColoredGraph| AnyStructure::from(g.clone()))?;
    Ok(Report::build(
        "matrix_corollary",
        params(&[
            ("n", n.into()),
            ("alphabet", alphabet.into()),
            ("diagonal", diagonal.label().into()),
        ]),
        reps.len() as u64,
        counterexamples,
        started,
    ))
}

// ---------------------------------------------------------------------------
// Measure-preserving subset permutation sweep
// ---------------------------------------------------------------------------

/// For every pair of classes admitting a measure-preserving subset
/// permutation (one matching each card of A to an isomorphic card of B),
/// asserts an isomorphism exists.
pub fn verify_lemma_l2(n: usize) -> Result<Report> {
    let started = Instant::now();
    if n == 0 {
        return Err(Error::EmptyStructure);
    }
    if n > LEMMA_L2_MAX_N {
        return Err(Error::CapExceeded {
            what: "measure-preservation sweep",
            requested: n,
            cap: LEMMA_L2_MAX_N,
        });
    }
    let reps = all_graphs(n)?;
    let cards: Vec<Vec<crate::canon::Certificate>> = reps
        .par_iter()
        .map(Deck::by_deleted_vertex)
        .collect::<Result<Vec<_>>>()?;
    let subset_perms: Vec<SubsetPermutation> = enumerate_subset_permutations(n)?.collect();

    let mut instances = 0u64;
    let mut counterexamples = Vec::new();
    for i in 0..reps.len() {
        for j in i..reps.len() {
            let mut preserving = false;
            for s in &subset_perms {
                instances += 1;
                if preserves_cards(s, &cards[i], &cards[j]) {
                    preserving = true;
                }
            }
            if preserving && are_isomorphic(&reps[i], &reps[j])?.is_none() {
                counterexamples.push(Counterexample {
                    a: AnyStructure::from(reps[i].clone()).to_value()?,
                    b: Some(AnyStructure::from(reps[j].clone()).to_value()?),
                    deck_hash: Some(format!("{:032x}", deck_hash(&deck(&reps[i])?))),
                    witness_absent: Some(true),
                });
            }
        }
    }

    Ok(Report::build(
        "lemma_l2",
        params(&[("n", n.into())]),
        instances,
        counterexamples,
        started,
    ))
}
