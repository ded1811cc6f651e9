//! Acceptance suite: one test per criterion, each ending with an explicit
//! pass line. Expected values are frozen from independent oracles: labeled
//! brute-force dedup, cycle-index (Burnside) class counts, and explicit
//! permutation search; hypergraph counterexample counts were additionally
//! confirmed by a from-scratch implementation in another language before
//! being pinned here.

use std::collections::BTreeMap;
use std::time::Instant;

use reconlab::canon::{canonical_form, Canonize, Certificate};
use reconlab::deck::{are_hypomorphic, deck, deck_hash};
use reconlab::enumerate::{
    all_colored, all_graphs, all_hypergraphs, all_multigraphs, random_graph, random_permutation,
    SplitMix64,
};
use reconlab::graph::{
    EdgeColoredGraph, MultiGraphTuple, SimpleGraph, Structure, VertexSet,
};
use reconlab::graph6::{emit_graph6, parse_graph6};
use reconlab::jsonio::AnyStructure;
use reconlab::kperm::{enumerate_subset_permutations, induces, lift, lift_intersection};
use reconlab::measure::{profile, vectors_equal};
use reconlab::perm::Permutation;
use reconlab::verify::{
    verify_lemma_l2, verify_matrix_corollary, verify_measure_theorem, verify_theorem1,
    verify_ulam, DiagonalMode, Report, SweepKind, Verdict,
};

// ---------------------------------------------------------------------------
// Independent oracles (no canonical forms involved)
// ---------------------------------------------------------------------------

fn factorial(n: usize) -> usize {
    (1..=n).product::<usize>().max(1)
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

/// Isomorphism class count by the cycle-index formula: the average over all
/// permutations of `alphabet^(cycles on m-subsets)`.
fn burnside_count(n: usize, m: usize, alphabet: u128) -> u128 {
    let subsets: Vec<VertexSet> = VertexSet::subsets_of_size(n, m).collect();
    let mut total = 0u128;
    for p in Permutation::all(n) {
        total += alphabet.pow(cycles_on_subsets(&p, &subsets));
    }
    total / factorial(n) as u128
}

/// Cycle-index count for pair colorings combined with vertex colorings.
fn burnside_vertex_and_pair_count(n: usize, pair_alphabet: u128, vertex_alphabet: u128) -> u128 {
    let pairs: Vec<VertexSet> = VertexSet::subsets_of_size(n, 2).collect();
    let singletons: Vec<VertexSet> = VertexSet::subsets_of_size(n, 1).collect();
    let mut total = 0u128;
    for p in Permutation::all(n) {
        total += pair_alphabet.pow(cycles_on_subsets(&p, &pairs))
            * vertex_alphabet.pow(cycles_on_subsets(&p, &singletons));
    }
    total / factorial(n) as u128
}

fn labeled_graphs(n: usize) -> Vec<SimpleGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << pairs.len())
        .map(|bits| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            SimpleGraph::from_edges(n, &edges).unwrap()
        })
        .collect()
}

/// Permutation-search isomorphism: independent of canonical labeling.
fn brute_isomorphic<T: Canonize>(a: &T, b: &T) -> bool {
    a.n() == b.n() && Permutation::all(a.n()).any(|p| a.apply(&p).unwrap() == *b)
}

// ---------------------------------------------------------------------------
// Criterion 1
// ---------------------------------------------------------------------------

#[test]
fn criterion_1_subset_permutation_lifting() {
    let started = Instant::now();
    for n in [3usize, 4, 5] {
        let report = verify_theorem1(n).unwrap();
        assert_eq!(report.instances_checked, factorial(n) as u64, "n={n}");
        assert_eq!(report.verdict, Verdict::Verified, "n={n}");
        assert!(report.counterexamples.is_empty());

        // Direct re-checks, not just the report: every subset permutation is
        // induced by its lift, intersections are the right singletons, and
        // lifting is injective onto all n! vertex permutations.
        let mut lifted = Vec::new();
        for s in enumerate_subset_permutations(n).unwrap() {
            let p = lift(&s);
            assert!(induces(&p, &s).unwrap());
            for x in 0..n {
                assert_eq!(
                    lift_intersection(&s, x).unwrap().only_element(),
                    Some(p.image(x))
                );
            }
            lifted.push(p.images().to_vec());
        }
        lifted.sort_unstable();
        lifted.dedup();
        assert_eq!(lifted.len(), factorial(n), "lift is a bijection at n={n}");
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs() < 5, "criterion 1 budget: {elapsed:?}");
    println!("acceptance criterion 1 (subset-permutation lifting, n=3..5): PASS");
}

// ---------------------------------------------------------------------------
// Criterion 2
// ---------------------------------------------------------------------------

#[test]
fn criterion_2_ulam_sweep_simple_graphs() {
    let expected_classes: &[(usize, u64)] = &[
        (3, 4),
        (4, 11),
        (5, 34),
        (6, 156),
        (7, 1044),
        (8, 12346),
    ];
    let started = Instant::now();
    for &(n, classes) in expected_classes {
        let report = verify_ulam(n, SweepKind::Simple).unwrap();
        assert_eq!(report.instances_checked, classes, "class count at n={n}");
        assert_eq!(report.counterexamples.len(), 0, "collisions at n={n}");
        assert_eq!(report.verdict, Verdict::Verified);
        // Cycle-index oracle for the class count.
        assert_eq!(burnside_count(n, 2, 2), classes as u128, "oracle at n={n}");
    }
    // Labeled brute-force dedup oracle: certificate sets over every labeled
    // graph must equal the enumerated stream, n ≤ 6.
    for n in 3..=6 {
        let mut brute: Vec<Certificate> = labeled_graphs(n)
            .iter()
            .map(|g| canonical_form(g).unwrap())
            .collect();
        brute.sort();
        brute.dedup();
        let stream: Vec<Certificate> = all_graphs(n)
            .unwrap()
            .iter()
            .map(|g| canonical_form(g).unwrap())
            .collect();
        assert_eq!(stream, brute, "dedup oracle at n={n}");
    }
    // The n = 2 control: exactly one hypomorphic non-isomorphic pair.
    let control = verify_ulam(2, SweepKind::Simple).unwrap();
    assert_eq!(control.counterexamples.len(), 1);
    assert_eq!(control.verdict, Verdict::Refuted);
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs() < 300,
        "criterion 2 budget (5 min at n=8): {elapsed:?}"
    );
    println!("acceptance criterion 2 (Ulam sweep, simple graphs n=3..8 + n=2 control): PASS");
}

// ---------------------------------------------------------------------------
// Criterion 3
// ---------------------------------------------------------------------------

#[test]
fn criterion_3_measure_theorem_suite() {
    for n in 3..=7 {
        let report = verify_measure_theorem(n).unwrap();
        assert_eq!(report.verdict, Verdict::Verified, "n={n}");
        assert!(report.counterexamples.is_empty(), "n={n}");
    }
    // One step past the criterion's range, at the sweep's cap.
    let at_cap = verify_measure_theorem(8).unwrap();
    assert_eq!(at_cap.verdict, Verdict::Verified);
    assert_eq!(at_cap.instances_checked, 12346);
    // Explicit pairwise equivalence on the smaller sizes: vector equality
    // and deck equality agree on every class pair.
    for n in 3..=5 {
        let reps = all_graphs(n).unwrap();
        for i in 0..reps.len() {
            for j in i..reps.len() {
                assert_eq!(
                    vectors_equal(&reps[i], &reps[j]).unwrap(),
                    are_hypomorphic(&reps[i], &reps[j]).unwrap(),
                    "n={n} pair ({i},{j})"
                );
            }
        }
    }
    // And on labeled relabelings: equal vectors for isomorphic labelings.
    let mut rng = SplitMix64::new(2024);
    for _ in 0..50 {
        let g = random_graph(6, 0.5, rng.next_u64()).unwrap();
        let p = random_permutation(6, &mut rng);
        assert!(vectors_equal(&g, &g.apply(&p).unwrap()).unwrap());
    }
    println!("acceptance criterion 3 (measure-vector theorem, n=3..7): PASS");
}

// ---------------------------------------------------------------------------
// Criterion 4
// ---------------------------------------------------------------------------

#[test]
fn criterion_4_multicolor_and_multigraph() {
    // Edge-colored sweeps, k = 3, n = 3..5; class counts against the
    // cycle-index oracle.
    for n in 3..=5 {
        let report = verify_ulam(n, SweepKind::Colored { k: 3 }).unwrap();
        assert_eq!(report.verdict, Verdict::Verified, "colored n={n}");
        assert_eq!(
            report.instances_checked as u128,
            burnside_count(n, 2, 3),
            "colored class count n={n}"
        );
    }
    // Two-layer multigraph sweeps at n = 3..4 run through fusion.
    for n in 3..=4 {
        let report = verify_ulam(n, SweepKind::Multigraph { layers: 2 }).unwrap();
        assert_eq!(report.verdict, Verdict::Verified, "multigraph n={n}");
        assert_eq!(
            report.instances_checked as u128,
            burnside_count(n, 2, 4),
            "tuple classes = fused colored classes at n={n}"
        );
    }
    // Fusion preserves isomorphism classes exactly, both directions, n = 3:
    // tuple isomorphism (permutation search over tuples) must coincide with
    // colored isomorphism of the fused graphs (permutation search as well).
    let tuples = all_multigraphs(3, 2).unwrap();
    assert_eq!(tuples.len(), 20);
    let mut rng = SplitMix64::new(7);
    let mut variants: Vec<MultiGraphTuple> = Vec::new();
    for t in &tuples {
        variants.push(t.clone());
        variants.push(t.apply(&random_permutation(3, &mut rng)).unwrap());
    }
    for a in &variants {
        for b in &variants {
            let tuple_iso = brute_isomorphic(a, b);
            let fused_iso = brute_isomorphic(&a.fuse(), &b.fuse());
            assert_eq!(tuple_iso, fused_iso);
        }
    }
    // Fusion commutes with relabeling and unfuse inverts fuse.
    for t in &tuples {
        for p in Permutation::all(3) {
            assert_eq!(
                t.apply(&p).unwrap().fuse(),
                t.fuse().apply(&p).unwrap()
            );
        }
        assert_eq!(MultiGraphTuple::unfuse(&t.fuse(), 2).unwrap(), *t);
    }
    println!("acceptance criterion 4 (k=3 colors n=3..5; 2-layer multigraphs n=3..4; fusion exactness): PASS");
}

// ---------------------------------------------------------------------------
// Criterion 5
// ---------------------------------------------------------------------------

#[test]
fn criterion_5_matrix_corollary() {
    for n in 3..=4 {
        for alphabet in [2usize, 3] {
            for diagonal in [DiagonalMode::Constant, DiagonalMode::Free] {
                let report = verify_matrix_corollary(n, alphabet, diagonal).unwrap();
                assert_eq!(
                    report.verdict,
                    Verdict::Verified,
                    "n={n} alphabet={alphabet} {diagonal:?}"
                );
                assert!(report.counterexamples.is_empty());
                let expected = match diagonal {
                    DiagonalMode::Constant => burnside_count(n, 2, alphabet as u128),
                    DiagonalMode::Free => {
                        burnside_vertex_and_pair_count(n, alphabet as u128, alphabet as u128)
                    }
                };
                assert_eq!(report.instances_checked as u128, expected);
            }
        }
        // The constant-diagonal alphabet-2 sweep must coincide exactly with
        // the simple-graph sweep at the same n.
        let matrix = verify_matrix_corollary(n, 2, DiagonalMode::Constant).unwrap();
        let simple = verify_ulam(n, SweepKind::Simple).unwrap();
        assert_eq!(matrix.instances_checked, simple.instances_checked);
        assert_eq!(
            matrix.counterexamples.len(),
            simple.counterexamples.len()
        );
        assert_eq!(matrix.verdict, simple.verdict);
        // Certificate-level coincidence: the k=2 constant-diagonal classes
        // embed the simple classes one-for-one.
        let colored_certs: Vec<Certificate> = all_colored(n, 2)
            .unwrap()
            .iter()
            .map(|g| canonical_form(g).unwrap())
            .collect();
        let embedded: Vec<Certificate> = all_graphs(n)
            .unwrap()
            .iter()
            .map(|g| canonical_form(&EdgeColoredGraph::from_simple(g)).unwrap())
            .collect();
        let mut embedded_sorted = embedded;
        embedded_sorted.sort();
        assert_eq!(colored_certs, embedded_sorted);
    }
    println!("acceptance criterion 5 (matrix corollary, alphabets 2-3, n=3..4, both diagonals): PASS");
}

// ---------------------------------------------------------------------------
// Criterion 6
// ---------------------------------------------------------------------------

#[test]
fn criterion_6_hypergraph_suite() {
    let started = Instant::now();
    // Frozen from enumeration and independently reconfirmed below: the
    // claim holds at n = 4 and fails from n = 5 on for 3-uniform
    // hypergraphs. A refuted verdict is a first-class outcome; what the
    // suite demands is that the reports are reproducible and that every
    // reported pair withstands independent checking.
    let expected: &[(usize, u64, usize, Verdict)] = &[
        (4, 5, 0, Verdict::Verified),
        (5, 34, 3, Verdict::Refuted),
        (6, 2136, 21, Verdict::Refuted),
    ];
    for &(n, classes, cex_count, verdict) in expected {
        let report = verify_ulam(n, SweepKind::Hypergraph { m: 3 }).unwrap();
        assert_eq!(report.instances_checked, classes, "classes at n={n}");
        assert_eq!(
            report.instances_checked as u128,
            burnside_count(n, 3, 2),
            "class-count oracle at n={n}"
        );
        assert_eq!(report.counterexamples.len(), cex_count, "n={n}");
        assert_eq!(report.verdict, verdict, "n={n}");

        // Reproducibility.
        let again = verify_ulam(n, SweepKind::Hypergraph { m: 3 }).unwrap();
        assert_eq!(report.deterministic_json(), again.deterministic_json());

        // Every serialized counterexample must be independently checkable:
        // re-parse both structures from the report, confirm equal decks and
        // non-isomorphism by explicit permutation search.
        for cex in &report.counterexamples {
            let a = AnyStructure::from_value(cex.a.clone()).unwrap();
            let b = AnyStructure::from_value(cex.b.clone().unwrap()).unwrap();
            let (a, b) = match (a, b) {
                (AnyStructure::Hypergraph(a), AnyStructure::Hypergraph(b)) => (a, b),
                other => panic!("expected hypergraph pair, got {other:?}"),
            };
            assert_eq!(deck(&a).unwrap(), deck(&b).unwrap());
            assert!(!brute_isomorphic(&a, &b));
            assert_eq!(
                cex.deck_hash.as_deref(),
                Some(format!("{:032x}", deck_hash(&deck(&a).unwrap())).as_str())
            );
            assert_eq!(cex.witness_absent, Some(true));
        }
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs() < 600,
        "criterion 6 budget (10 min at n=6): {elapsed:?}"
    );
    println!(
        "acceptance criterion 6 (3-uniform hypergraphs n=4..6): PASS \
         (verdicts: n=4 verified; n=5 refuted with 3 pairs; n=6 refuted with 21 pairs)"
    );
}

// ---------------------------------------------------------------------------
// Criterion 7 — property suites, runnable independently of the sweeps
// ---------------------------------------------------------------------------

#[test]
fn criterion_7a_certificate_relabeling_invariance() {
    // Exhaustive permutations for n ≤ 5 over every simple class, plus
    // colored and hypergraph classes at their caps.
    for n in 1..=5 {
        for g in all_graphs(n).unwrap() {
            let cert = canonical_form(&g).unwrap();
            for p in Permutation::all(n) {
                assert_eq!(canonical_form(&g.apply(&p).unwrap()).unwrap(), cert);
            }
        }
    }
    for g in all_colored(4, 3).unwrap() {
        let cert = canonical_form(&g).unwrap();
        for p in Permutation::all(4) {
            assert_eq!(canonical_form(&g.apply(&p).unwrap()).unwrap(), cert);
        }
    }
    for h in all_hypergraphs(5, 3).unwrap() {
        let cert = canonical_form(&h).unwrap();
        for p in Permutation::all(5) {
            assert_eq!(canonical_form(&h.apply(&p).unwrap()).unwrap(), cert);
        }
    }
    // 10³ random permutations on random graphs up to n = 10.
    let mut rng = SplitMix64::new(0xabcd);
    for trial in 0..1000 {
        let n = 6 + trial % 5;
        let g = random_graph(n, 0.2 + 0.15 * (trial % 5) as f64, rng.next_u64()).unwrap();
        let p = random_permutation(n, &mut rng);
        assert_eq!(
            canonical_form(&g).unwrap(),
            canonical_form(&g.apply(&p).unwrap()).unwrap()
        );
    }
    println!("acceptance criterion 7a (certificate relabeling invariance): PASS");
}

#[test]
fn criterion_7b_deck_edge_count_identity() {
    // Σ over cards of |E(card)| = (n-2)·|E(G)| on 10³ seeded random graphs.
    let mut rng = SplitMix64::new(0xbeef);
    for trial in 0..1000 {
        let n = 2 + trial % 9;
        let g = random_graph(n, 0.1 * (1 + trial % 9) as f64, rng.next_u64()).unwrap();
        let full = VertexSet::full(n);
        let card_edges: usize = (0..n)
            .map(|x| g.induced(full.without(x)).unwrap().edge_count())
            .sum();
        assert_eq!(card_edges, (n - 2) * g.edge_count(), "n={n}");
    }
    // And exhaustively over every labeled graph on up to 5 vertices.
    for n in 2..=5 {
        for g in labeled_graphs(n) {
            let full = VertexSet::full(n);
            let card_edges: usize = (0..n)
                .map(|x| g.induced(full.without(x)).unwrap().edge_count())
                .sum();
            assert_eq!(card_edges, (n - 2) * g.edge_count());
        }
    }
    println!("acceptance criterion 7b (deck edge-count identity, 10^3 random + exhaustive n<=5): PASS");
}

#[test]
fn criterion_7c_kelly_profile_equality() {
    // Every hypomorphic pair for n ≤ 6 has equal profiles at every size
    // i ≤ n-1. Class pairs cover the n = 2 collision; random relabelings
    // exercise the nontrivial labeled pairs.
    for n in 2..=6 {
        let reps = all_graphs(n).unwrap();
        let decks: Vec<_> = reps.iter().map(|g| deck(g).unwrap()).collect();
        for i in 0..reps.len() {
            for j in (i + 1)..reps.len() {
                if decks[i] == decks[j] {
                    for size in 1..n {
                        assert_eq!(
                            profile(&reps[i], size).unwrap(),
                            profile(&reps[j], size).unwrap(),
                            "hypomorphic pair ({i},{j}) at n={n}, profile size {size}"
                        );
                    }
                }
            }
        }
    }
    let mut rng = SplitMix64::new(0x5ca1e);
    for trial in 0..60 {
        let n = 4 + trial % 3;
        let g = random_graph(n, 0.5, rng.next_u64()).unwrap();
        let h = g.apply(&random_permutation(n, &mut rng)).unwrap();
        assert!(are_hypomorphic(&g, &h).unwrap());
        for size in 1..n {
            assert_eq!(profile(&g, size).unwrap(), profile(&h, size).unwrap());
        }
    }
    println!("acceptance criterion 7c (Kelly profile equality, n<=6): PASS");
}

#[test]
fn criterion_7d_witness_soundness() {
    // Every witness returned by the isomorphism test maps A exactly onto B.
    let mut rng = SplitMix64::new(0xd1ce);
    for trial in 0..200 {
        let n = 3 + trial % 6;
        let g = random_graph(n, 0.4, rng.next_u64()).unwrap();
        let p = random_permutation(n, &mut rng);
        let h = g.apply(&p).unwrap();
        let witness = reconlab::are_isomorphic(&g, &h)
            .unwrap()
            .expect("relabelings are isomorphic");
        assert_eq!(g.apply(&witness).unwrap(), h);
    }
    // Also through the kind-erased surface used by the CLI.
    let a = AnyStructure::parse_text("DQc").unwrap();
    if let AnyStructure::Simple(ref g) = a {
        let p = Permutation::from_images(vec![4, 0, 3, 1, 2]).unwrap();
        let b = AnyStructure::Simple(g.apply(&p).unwrap());
        let w = a.isomorphic_to(&b).unwrap().unwrap();
        if let AnyStructure::Simple(ref h) = b {
            assert_eq!(g.apply(&w).unwrap(), *h);
        }
    }
    println!("acceptance criterion 7d (witness soundness): PASS");
}

// ---------------------------------------------------------------------------
// Criterion 8
// ---------------------------------------------------------------------------

#[test]
fn criterion_8_graph6_round_trip() {
    // 1000-string valid corpus generated by an independent reference
    // implementation; each line is `g6|n|edge,edge,…`.
    let corpus = include_str!("data/graph6_corpus.txt");
    let mut checked = 0;
    for line in corpus.lines() {
        // Split from the right: the graph6 field may itself contain '|'.
        let mut parts = line.rsplitn(3, '|');
        let edge_field = parts.next().unwrap();
        let n: usize = parts.next().unwrap().parse().unwrap();
        let text = parts.next().unwrap();
        let g = parse_graph6(text).unwrap();
        assert_eq!(g.n(), n, "vertex count for {text:?}");
        let mut expected_edges: Vec<(usize, usize)> = if edge_field.is_empty() {
            Vec::new()
        } else {
            edge_field
                .split(',')
                .map(|e| {
                    let (u, v) = e.split_once('-').unwrap();
                    let (u, v): (usize, usize) = (u.parse().unwrap(), v.parse().unwrap());
                    (u.min(v), u.max(v))
                })
                .collect()
        };
        expected_edges.sort_unstable();
        assert_eq!(g.edges(), expected_edges, "edge list for {text:?}");
        assert_eq!(emit_graph6(&g).unwrap(), text, "round trip for {text:?}");
        checked += 1;
    }
    assert_eq!(checked, 1000);

    // Malformed corpus: structured errors, never a crash.
    let malformed = [
        "", "~", "~~", "~~~~~~", " ", "\t", "=", "B", "B_extra", "B_龍", "@@", "@_",
        "A", "AO", "A?trailing", "\u{7f}", "!", "Bw\n\nBw", "0x42", "Dly", "C",
    ];
    for text in malformed {
        match parse_graph6(text) {
            Err(reconlab::Error::Graph6(_)) => {}
            Ok(g) if emit_graph6(&g).unwrap() != text => {
                panic!("{text:?} decoded but does not round-trip")
            }
            Ok(_) => panic!("{text:?} unexpectedly valid"),
            Err(other) => panic!("{text:?} produced a non-graph6 error {other:?}"),
        }
    }
    // Random byte noise must come back as errors, not panics.
    let mut rng = SplitMix64::new(0x6666);
    for _ in 0..2000 {
        let len = (rng.next_u64() % 12) as usize;
        let bytes: Vec<u8> = (0..len).map(|_| (rng.next_u64() % 256) as u8).collect();
        if let Ok(text) = std::str::from_utf8(&bytes) {
            let _ = parse_graph6(text);
        }
    }
    println!("acceptance criterion 8 (graph6 round-trip + malformed corpus): PASS");
}

// ---------------------------------------------------------------------------
// Criterion 9
// ---------------------------------------------------------------------------

fn run_reports() -> Vec<Report> {
    vec![
        verify_theorem1(4).unwrap(),
        verify_ulam(5, SweepKind::Simple).unwrap(),
        verify_ulam(4, SweepKind::Colored { k: 3 }).unwrap(),
        verify_ulam(5, SweepKind::Hypergraph { m: 3 }).unwrap(),
        verify_ulam(3, SweepKind::Multigraph { layers: 2 }).unwrap(),
        verify_measure_theorem(5).unwrap(),
        verify_matrix_corollary(3, 3, DiagonalMode::Free).unwrap(),
        verify_lemma_l2(4).unwrap(),
    ]
}

#[test]
fn criterion_9_determinism() {
    // Same parameters, repeated runs: byte-identical reports (modulo the
    // wall-clock field, which deterministic_json() zeroes).
    let first: Vec<String> = run_reports().iter().map(Report::deterministic_json).collect();
    let second: Vec<String> = run_reports().iter().map(Report::deterministic_json).collect();
    assert_eq!(first, second);

    // Across thread counts: single-threaded and 4-thread pools must produce
    // identical bytes.
    let pool1 = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let pool4 = rayon::ThreadPoolBuilder::new()
        .num_threads(4)
        .build()
        .unwrap();
    let on_one: Vec<String> = pool1.install(|| run_reports().iter().map(Report::deterministic_json).collect());
    let on_four: Vec<String> = pool4.install(|| run_reports().iter().map(Report::deterministic_json).collect());
    assert_eq!(on_one, on_four);
    assert_eq!(first, on_one);

    // Through the CLI as well: identical stdout for --threads 1 vs 4 after
    // zeroing elapsed_ms, and bit-identical enumeration output.
    let bin = env!("CARGO_BIN_EXE_reconlab");
    let report_stdout = |threads: &str| -> serde_json::Value {
        let out = std::process::Command::new(bin)
            .args([
                "verify", "measure", "--n", "6", "--format", "json", "--threads", threads,
            ])
            .output()
            .unwrap();
        assert!(out.status.success());
        let mut v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        v["elapsed_ms"] = 0.into();
        v
    };
    assert_eq!(report_stdout("1"), report_stdout("4"));
    let enumerate_stdout = |threads: &str| -> Vec<u8> {
        let out = std::process::Command::new(bin)
            .args(["enumerate", "--n", "6", "--threads", threads])
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    assert_eq!(enumerate_stdout("1"), enumerate_stdout("3"));
    println!("acceptance criterion 9 (report determinism across runs and threads): PASS");
}

// ---------------------------------------------------------------------------
// CLI contract spot checks (exit codes and formats named in the interface)
// ---------------------------------------------------------------------------

#[test]
fn cli_exit_codes_and_formats() {
    let bin = env!("CARGO_BIN_EXE_reconlab");
    // verified claim → exit 0, JSON report parses with the right count.
    let out = std::process::Command::new(bin)
        .args(["verify", "theorem1", "--n", "4", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["instances_checked"], 24);

    // hypomorphic non-isomorphic pair → message + exit 2.
    let dir = std::env::temp_dir().join(format!("reconlab_cli_{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let a = dir.join("a.g6");
    let b = dir.join("b.g6");
    std::fs::write(&a, "A_").unwrap();
    std::fs::write(&b, "A?").unwrap();
    let out = std::process::Command::new(bin)
        .args(["hypomorphic", a.to_str().unwrap(), b.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).trim(),
        "hypomorphic, not isomorphic"
    );

    // deck prints n card certificates.
    let out = std::process::Command::new(bin)
        .args(["deck", "--in", a.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).lines().count(), 2);

    // Unknown flags → usage error, exit 1.
    let out = std::process::Command::new(bin)
        .args(["verify", "theorem1", "--frobnicate"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    // Internal cap error → exit 1.
    let out = std::process::Command::new(bin)
        .args(["verify", "theorem1", "--n", "40"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    // Refuted sweep → exit 2 with a CSV line.
    let out = std::process::Command::new(bin)
        .args(["verify", "ulam", "--n", "2", "--format", "csv"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stdout).contains("refuted"));
    let _ = std::fs::remove_dir_all(&dir);
    println!("cli contract: PASS");
}
