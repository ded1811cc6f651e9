//! Exhaustive generation of non-isomorphic structures for small parameters,
//! plus seeded random generation.
//!
//! Generation is vertex augmentation over canonical representatives: every
//! class on `t` vertices arises from some class on `t-1` vertices by
//! appending one vertex, so extending each representative in every possible
//! way and deduplicating by certificate visits each class exactly once. The
//! output is sorted by certificate bytes, which makes streams deterministic
//! across runs and thread counts. Unit and acceptance tests confirm the
//! stream against labeled brute-force dedup and against cycle-index class
//! counts.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::canon::{canonical_copy, Canonize, Certificate, CANON_MAX_N};
use crate::error::{Error, Result};
use crate::graph::{
    EdgeColoredGraph, MultiGraphTuple, SimpleGraph, UniformHypergraph, VertexSet, MAX_LAYERS,
};
use crate::perm::Permutation;

/// Default hard cap for [`all_graphs`]; 12346 classes at n = 8 and 274668
/// at n = 9 are the practical limits for full pairwise sweeps.
pub const SIMPLE_ENUM_MAX_N: usize = 9;

/// Bound on the labeled search space (`k^C(n,2) · v^n`, or `2^C(n,m)`)
/// accepted by the colored and hypergraph enumerators. Augmentation does far
/// less work than this, but the brute-force oracle used to validate the
/// streams has to stay enumerable in principle.
pub const LABELED_SPACE_LIMIT: u128 = 1 << 28;

fn pair_exponent(n: usize) -> u32 {
    (n * (n.saturating_sub(1)) / 2) as u32
}

fn dedup_level<T, F>(parents: &[T], extend: F) -> Vec<T>
where
    T: Canonize,
    F: Fn(&T, &mut Vec<T>) + Sync,
    T: Send + Sync,
{
    let merged: BTreeMap<Certificate, T> = parents
        .par_iter()
        .fold(BTreeMap::new, |mut acc, parent| {
            let mut children = Vec::new();
            extend(parent, &mut children);
            for child in children {
                let (cert, copy) =
                    canonical_copy(&child).expect("children stay within the canon cap");
                acc.entry(cert).or_insert(copy);
            }
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                a.entry(k).or_insert(v);
            }
            a
        });
    merged.into_values().collect()
}

/// One canonical representative per isomorphism class of simple graphs on
/// `n` vertices, sorted by certificate.
pub fn all_graphs(n: usize) -> Result<Vec<SimpleGraph>> {
    all_graphs_capped(n, SIMPLE_ENUM_MAX_N)
}

/// [`all_graphs`] with an explicit cap (still bounded by the canonical-form
/// cap).
pub fn all_graphs_capped(n: usize, cap: usize) -> Result<Vec<SimpleGraph>> {
    let cap = cap.min(CANON_MAX_N);
    if n > cap {
        return Err(Error::CapExceeded {
            what: "simple graph enumeration",
            requested: n,
            cap,
        });
    }
    let mut level = vec![SimpleGraph::empty(0)?];
    for t in 1..=n {
        level = dedup_level(&level, |parent: &SimpleGraph, out| {
            for bits in 0..(1u64 << (t - 1)) {
                out.push(
                    parent
                        .with_appended_vertex(VertexSet::from_bits(bits))
                        .expect("extension stays in range"),
                );
            }
        });
    }
    Ok(level)
}

/// One representative per class of edge-colored graphs with `k` pair colors
/// and constant vertex color.
pub fn all_colored(n: usize, k: usize) -> Result<Vec<EdgeColoredGraph>> {
    all_colored_with_vertex_colors(n, k, 1)
}

/// One representative per class of edge-colored graphs with `k` pair colors
/// and `v` vertex colors (free-diagonal mode when `v > 1`).
pub fn all_colored_with_vertex_colors(
    n: usize,
    k: usize,
    v: usize,
) -> Result<Vec<EdgeColoredGraph>> {
    // Validate the color parameters up front.
    EdgeColoredGraph::blank(0, k, v)?;
    let space = (k as u128)
        .checked_pow(pair_exponent(n))
        .and_then(|p| p.checked_mul((v as u128).checked_pow(n as u32)?));
    let feasible = matches!(space, Some(s) if s <= LABELED_SPACE_LIMIT) && n <= CANON_MAX_N;
    if !feasible {
        return Err(Error::CapExceeded {
            what: "colored graph enumeration",
            requested: n,
            cap: largest_feasible(|m| {
                (k as u128)
                    .checked_pow(pair_exponent(m))
                    .and_then(|p| p.checked_mul((v as u128).checked_pow(m as u32)?))
            }),
        });
    }
    let mut level = vec![EdgeColoredGraph::blank(0, k, v)?];
    for t in 1..=n {
        level = dedup_level(&level, |parent: &EdgeColoredGraph, out| {
            let mut pair_digits = vec![0u8; t - 1];
            loop {
                for vc in 0..v {
                    out.push(
                        parent
                            .with_appended_vertex(vc as u8, &pair_digits)
                            .expect("extension stays in range"),
                    );
                }
                // Odometer over base-k digit vectors.
                let mut i = 0;
                loop {
                    if i == t - 1 {
                        return;
                    }
                    pair_digits[i] += 1;
                    if usize::from(pair_digits[i]) < k {
                        break;
                    }
                    pair_digits[i] = 0;
                    i += 1;
                }
            }
        });
    }
    Ok(level)
}

/// One representative per class of `m`-uniform hypergraphs on `n` vertices.
pub fn all_hypergraphs(n: usize, m: usize) -> Result<Vec<UniformHypergraph>> {
    if m < 2 {
        return Err(Error::InvalidStructure(format!(
            "hyperedge arity {m} must be at least 2"
        )));
    }
    if n < m {
        return Err(Error::InvalidStructure(format!(
            "hypergraph enumeration requires n ≥ m, got n={n}, m={m}"
        )));
    }
    let subsets = binomial(n, m);
    if subsets > 28 || n > CANON_MAX_N {
        return Err(Error::CapExceeded {
            what: "hypergraph enumeration",
            requested: n,
            cap: largest_feasible(|t| {
                if t > CANON_MAX_N {
                    None
                } else {
                    Some(1u128 << binomial(t, m).min(127))
                }
            }),
        });
    }
    // Base level n = m: the single possible edge is present or absent.
    let full = VertexSet::full(m);
    let mut level = vec![
        UniformHypergraph::new(m, m, std::iter::empty())?,
        UniformHypergraph::new(m, m, [full])?,
    ];
    level.sort_by_key(|h| h.edge_count());
    for t in (m + 1)..=n {
        // New edges all contain the fresh vertex plus m-1 old ones.
        let stubs: Vec<VertexSet> = VertexSet::subsets_of_size(t - 1, m - 1).collect();
        level = dedup_level(&level, |parent: &UniformHypergraph, out| {
            for bits in 0..(1u64 << stubs.len()) {
                let mut edges: Vec<VertexSet> = parent.edges().to_vec();
                for (i, stub) in stubs.iter().enumerate() {
                    if bits >> i & 1 == 1 {
                        edges.push(stub.with(t - 1));
                    }
                }
                out.push(
                    UniformHypergraph::new(t, parent.arity(), edges)
                        .expect("extension stays in range"),
                );
            }
        });
    }
    Ok(level)
}

/// One representative per class of `layers`-tuples of simple graphs on `n`
/// vertices, derived from the fused edge-colored classes.
pub fn all_multigraphs(n: usize, layers: usize) -> Result<Vec<MultiGraphTuple>> {
    if layers == 0 || layers > MAX_LAYERS {
        return Err(Error::InvalidStructure(format!(
            "layer count {layers} outside 1..={MAX_LAYERS}"
        )));
    }
    all_colored(n, 1 << layers)?
        .iter()
        .map(|g| MultiGraphTuple::unfuse(g, layers))
        .collect()
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

fn largest_feasible(space: impl Fn(usize) -> Option<u128>) -> usize {
    let mut best = 0;
    for m in 0..=CANON_MAX_N {
        match space(m) {
            Some(s) if s <= LABELED_SPACE_LIMIT => best = m,
            _ => break,
        }
    }
    best
}

// ---------------------------------------------------------------------------
// Seeded randomness
// ---------------------------------------------------------------------------

/// SplitMix64: the 64-bit splittable generator with increment
/// `0x9E3779B97F4A7C15` and finalizer constants `0xBF58476D1CE4E5B9`,
/// `0x94D049BB133111EB` (Steele, Lea & Flood). Fixed here so seeded output
/// is reproducible forever; statistical quality is ample for test-case
/// generation.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform draw from `0..bound` by rejection; `bound` must be nonzero.
    pub fn below(&mut self, bound: u64) -> u64 {
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let draw = self.next_u64();
            if draw < zone {
                return draw % bound;
            }
        }
    }

    /// An independent child generator (split), advancing this one.
    pub fn split(&mut self) -> Self {
        Self::new(self.next_u64())
    }
}

/// Seeded Erdős–Rényi graph: each pair `(x, y)` with `x < y`, visited in
/// row-major order, is an edge iff the next draw is below `p · 2^64`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<SimpleGraph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    let mut rng = SplitMix64::new(seed);
    let threshold = (p * 18446744073709551616.0) as u128; // p · 2^64
    let mut edges = Vec::new();
    for x in 0..n {
        for y in (x + 1)..n {
            if (rng.next_u64() as u128) < threshold {
                edges.push((x, y));
            }
        }
    }
    SimpleGraph::from_edges(n, &edges)
}

/// Seeded uniform permutation (Fisher–Yates).
pub fn random_permutation(n: usize, rng: &mut SplitMix64) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.below(i as u64 + 1) as usize;
        images.swap(i, j);
    }
    Permutation::from_images(images).expect("shuffle of identity is a bijection")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;

    /// Independent class-count oracle: Burnside over all permutations,
    /// counting orbits of the labeled space under relabeling.
    fn burnside_simple(n: usize) -> u128 {
        burnside_colored(n, 2, 1)
    }

    fn burnside_colored(n: usize, k: usize, v: usize) -> u128 {
        let mut total: u128 = 0;
        let mut count: u128 = 0;
        for p in Permutation::all(n) {
            count += 1;
            let pair_cycles = cycles_on_pairs(&p);
            let vertex_cycles = cycles_on_vertices(&p);
            total += (k as u128).pow(pair_cycles) * (v as u128).pow(vertex_cycles);
        }
        total / count.max(1)
    }

    fn burnside_hypergraph(n: usize, m: usize) -> u128 {
        let subsets: Vec<VertexSet> = VertexSet::subsets_of_size(n, m).collect();
        let mut total: u128 = 0;
        let mut count: u128 = 0;
        for p in Permutation::all(n) {
            count += 1;
            total += 2u128.pow(cycles_on_subsets(&p, &subsets));
        }
        total / count.max(1)
    }

    fn cycles_on_vertices(p: &Permutation) -> u32 {
        let n = p.n();
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if !seen[start] {
                cycles += 1;
                let mut v = start;
                while !seen[v] {
                    seen[v] = true;
                    v = p.image(v);
                }
            }
        }
        cycles
    }

    fn cycles_on_pairs(p: &Permutation) -> u32 {
        let pairs: Vec<VertexSet> = VertexSet::subsets_of_size(p.n(), 2).collect();
        cycles_on_subsets(p, &pairs)
    }

    fn cycles_on_subsets(p: &Permutation, subsets: &[VertexSet]) -> u32 {
        let index: BTreeMap<VertexSet, usize> =
            subsets.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let mut seen = vec![false; subsets.len()];
        let mut cycles = 0;
        for start in 0..subsets.len() {
            if !seen[start] {
                cycles += 1;
                let mut i = start;
                while !seen[i] {
                    seen[i] = true;
                    i = index[&p.map_set(subsets[i])];
                }
            }
        }
        cycles
    }

    #[test]
    fn simple_counts_match_burnside_and_known_values() {
        let known = [1usize, 1, 2, 4, 11, 34, 156];
        for (n, &expected) in known.iter().enumerate() {
            let stream = all_graphs(n).unwrap();
            assert_eq!(stream.len(), expected, "n={n}");
            assert_eq!(burnside_simple(n), expected as u128, "n={n}");
        }
    }

    #[test]
    fn streams_have_no_duplicate_certificates() {
        let stream = all_graphs(6).unwrap();
        let mut certs: Vec<_> = stream
            .iter()
            .map(|g| canonical_form(g).unwrap())
            .collect();
        let before = certs.len();
        certs.sort();
        certs.dedup();
        assert_eq!(certs.len(), before);
        // Sorted output by certificate.
        let resorted: Vec<_> = {
            let mut v = certs.clone();
            v.sort();
            v
        };
        assert_eq!(certs, resorted);
    }

    #[test]
    fn brute_force_dedup_oracle_small_n() {
        // Enumerate every labeled graph, dedup by certificate, compare sets.
        for n in 0..=5 {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|j| (0..j).map(move |i| (i, j)))
                .collect();
            let mut brute: Vec<Certificate> = (0u64..1 << pairs.len())
                .map(|bits| {
                    let edges: Vec<_> = pairs
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| bits >> i & 1 == 1)
                        .map(|(_, &e)| e)
                        .collect();
                    canonical_form(&SimpleGraph::from_edges(n, &edges).unwrap()).unwrap()
                })
                .collect();
            brute.sort();
            brute.dedup();
            let stream: Vec<Certificate> = all_graphs(n)
                .unwrap()
                .iter()
                .map(|g| canonical_form(g).unwrap())
                .collect();
            assert_eq!(stream, brute, "n={n}");
        }
    }

    #[test]
    fn colored_counts() {
        assert_eq!(all_colored(2, 3).unwrap().len(), 3);
        // k=2 classes coincide with simple graphs.
        for n in 0..=5 {
            assert_eq!(
                all_colored(n, 2).unwrap().len(),
                all_graphs(n).unwrap().len(),
                "n={n}"
            );
        }
        for n in 0..=5 {
            assert_eq!(
                all_colored(n, 3).unwrap().len() as u128,
                burnside_colored(n, 3, 1),
                "n={n}"
            );
        }
        // Free vertex colors against the oracle.
        for n in 0..=4 {
            assert_eq!(
                all_colored_with_vertex_colors(n, 2, 2).unwrap().len() as u128,
                burnside_colored(n, 2, 2),
                "n={n}"
            );
        }
    }

    #[test]
    fn colored_brute_force_dedup_oracle() {
        // All labeled k=3 colorings on 4 vertices: 3^6 = 729.
        let n = 4;
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .collect();
        let mut brute: Vec<Certificate> = (0u32..729)
            .map(|mut code| {
                let mut edges = Vec::new();
                for &(x, y) in &pairs {
                    let c = (code % 3) as u8;
                    code /= 3;
                    edges.push((x, y, c));
                }
                canonical_form(&EdgeColoredGraph::new(n, 3, 1, &[0; 4], &edges).unwrap())
                    .unwrap()
            })
            .collect();
        brute.sort();
        brute.dedup();
        let stream: Vec<Certificate> = all_colored(n, 3)
            .unwrap()
            .iter()
            .map(|g| canonical_form(g).unwrap())
            .collect();
        assert_eq!(stream, brute);
    }

    #[test]
    fn hypergraph_counts() {
        assert_eq!(all_hypergraphs(3, 3).unwrap().len(), 2);
        assert_eq!(all_hypergraphs(4, 3).unwrap().len(), 5);
        for n in 4..=6 {
            assert_eq!(
                all_hypergraphs(n, 3).unwrap().len() as u128,
                burnside_hypergraph(n, 3),
                "n={n}"
            );
        }
        // m = 2 hypergraphs are simple graphs.
        for n in 2..=5 {
            assert_eq!(
                all_hypergraphs(n, 2).unwrap().len(),
                all_graphs(n).unwrap().len()
            );
        }
    }

    #[test]
    fn hypergraph_brute_force_dedup_oracle() {
        let n = 5;
        let triples: Vec<VertexSet> = VertexSet::subsets_of_size(n, 3).collect();
        let mut brute: Vec<Certificate> = (0u64..1 << triples.len())
            .map(|bits| {
                let edges: Vec<VertexSet> = triples
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| bits >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                canonical_form(&UniformHypergraph::new(n, 3, edges).unwrap()).unwrap()
            })
            .collect();
        brute.sort();
        brute.dedup();
        let stream: Vec<Certificate> = all_hypergraphs(n, 3)
            .unwrap()
            .iter()
            .map(|h| canonical_form(h).unwrap())
            .collect();
        assert_eq!(stream, brute);
    }

    #[test]
    fn multigraph_stream_matches_fused_colored_stream() {
        for n in 2..=4 {
            let tuples = all_multigraphs(n, 2).unwrap();
            let colored = all_colored(n, 4).unwrap();
            assert_eq!(tuples.len(), colored.len());
            for (t, c) in tuples.iter().zip(&colored) {
                assert_eq!(&t.fuse(), c);
            }
        }
    }

    #[test]
    fn caps_are_enforced() {
        assert!(matches!(
            all_graphs(SIMPLE_ENUM_MAX_N + 1),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            all_colored(7, 4),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            all_hypergraphs(9, 3),
            Err(Error::CapExceeded { .. })
        ));
        assert!(all_hypergraphs(2, 3).is_err());
    }

    #[test]
    fn random_graph_edge_probability_extremes() {
        let empty = random_graph(7, 0.0, 42).unwrap();
        assert_eq!(empty.edge_count(), 0);
        let complete = random_graph(7, 1.0, 42).unwrap();
        assert_eq!(complete.edge_count(), 21);
        assert!(random_graph(5, -0.1, 1).is_err());
        assert!(random_graph(5, 1.5, 1).is_err());
        assert!(random_graph(5, f64::NAN, 1).is_err());
    }

    #[test]
    fn random_graph_is_seed_deterministic() {
        let a = random_graph(10, 0.4, 777);
        let b = random_graph(10, 0.4, 777);
        assert_eq!(a.unwrap(), b.unwrap());
        assert_ne!(
            random_graph(10, 0.4, 777).unwrap(),
            random_graph(10, 0.4, 778).unwrap()
        );
    }

    #[test]
    fn random_permutation_is_uniformish_and_seeded() {
        let mut rng = SplitMix64::new(5);
        let p = random_permutation(8, &mut rng);
        let mut rng2 = SplitMix64::new(5);
        let q = random_permutation(8, &mut rng2);
        assert_eq!(p, q);
    }
}

