//! Canonical forms and isomorphism testing for every structure kind.
//!
//! The engine is individualization/refinement: iterated color refinement
//! (each vertex is re-colored by the sorted multiset of its incidences per
//! color class), then backtracking over the members of the first
//! non-singleton cell, taking the lexicographically least encoding over all
//! discrete partitions reached. Simple and auditable; entirely adequate for
//! the n ≤ 11 regimes the exhaustive sweeps run in.
//!
//! Two labeled structures of the same kind receive equal certificates
//! exactly when they are isomorphic: the search tree of a relabeled input is
//! the relabeled search tree, so the set of candidate encodings — and hence
//! the minimum — is unchanged.

use crate::error::{Error, Result};
use crate::graph::{
    EdgeColoredGraph, MultiGraphTuple, SimpleGraph, Structure, UniformHypergraph, VertexId,
    check_same_kind,
};
use crate::perm::Permutation;

/// Cap on the base size accepted by [`canonical_form`]; pathological inputs
/// above this would make the backtracking search factorially expensive.
pub const CANON_MAX_N: usize = 16;

const FNV128_OFFSET: u128 = 0x6c62272e07bb014262b821756295c58d;
const FNV128_PRIME: u128 = 0x0000000001000000000000000000013B;

/// 128-bit FNV-1a digest.
pub(crate) fn fnv128(bytes: &[u8]) -> u128 {
    let mut h = FNV128_OFFSET;
    for &b in bytes {
        h ^= b as u128;
        h = h.wrapping_mul(FNV128_PRIME);
    }
    h
}

/// Canonical identifier of an isomorphism class: the least encoding of the
/// structure over all labelings, plus a 128-bit digest of those bytes.
/// Equality always confirms the full byte string, so digest collisions
/// cannot produce false positives.
#[derive(Clone, Debug)]
pub struct Certificate {
    bytes: Vec<u8>,
    hash: u128,
}

impl Certificate {
    fn new(bytes: Vec<u8>) -> Self {
        let hash = fnv128(&bytes);
        Self { bytes, hash }
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn hash128(&self) -> u128 {
        self.hash
    }

    pub fn hash_hex(&self) -> String {
        format!("{:032x}", self.hash)
    }
}

impl PartialEq for Certificate {
    fn eq(&self, other: &Self) -> bool {
        self.hash == other.hash && self.bytes == other.bytes
    }
}

impl Eq for Certificate {}

impl PartialOrd for Certificate {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Certificate {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.bytes.cmp(&other.bytes)
    }
}

impl std::hash::Hash for Certificate {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.hash.hash(state);
    }
}

/// Hooks the labeling engine needs from a structure kind.
pub trait Canonize: Structure {
    /// Initial invariant color of a vertex (vertex colors where present).
    fn seed(&self, v: VertexId) -> u64;

    /// Pushes the (unsorted) incidence signature of `v` with respect to the
    /// current coloring; the engine sorts it. Must depend only on `colors`
    /// and label-invariant structure.
    fn signature(&self, v: VertexId, colors: &[u32], out: &mut Vec<u64>);

    /// Kind tag and shape parameters; common prefix of every certificate.
    fn write_header(&self, out: &mut Vec<u8>);

    /// Body bytes under the labeling `order` (`order[position] = vertex`).
    /// When [`Self::PREFIX_ENCODING`] is true, `order` may be any prefix of
    /// a full labeling and the output is the corresponding prefix of the
    /// full body.
    fn write_body(&self, order: &[VertexId], out: &mut Vec<u8>);

    /// Whether `write_body` on a prefix of positions yields a prefix of the
    /// full body (enables branch-and-bound pruning).
    const PREFIX_ENCODING: bool;
}

impl Canonize for SimpleGraph {
    fn seed(&self, _v: VertexId) -> u64 {
        0
    }

    fn signature(&self, v: VertexId, colors: &[u32], out: &mut Vec<u64>) {
        for u in self.neighbors(v).iter() {
            out.push(colors[u] as u64);
        }
    }

    fn write_header(&self, out: &mut Vec<u8>) {
        out.push(0);
        out.push(self.n() as u8);
    }

    fn write_body(&self, order: &[VertexId], out: &mut Vec<u8>) {
        for j in 1..order.len() {
            for i in 0..j {
                out.push(self.has_edge(order[i], order[j]) as u8);
            }
        }
    }

    const PREFIX_ENCODING: bool = true;
}

impl Canonize for EdgeColoredGraph {
    fn seed(&self, v: VertexId) -> u64 {
        self.vertex_color_unchecked(v) as u64
    }

    fn signature(&self, v: VertexId, colors: &[u32], out: &mut Vec<u64>) {
        for (u, &color) in colors.iter().enumerate() {
            if u != v {
                let pc = self.pair_color_unchecked(v, u) as u64;
                out.push(pc << 32 | color as u64);
            }
        }
    }

    fn write_header(&self, out: &mut Vec<u8>) {
        out.push(1);
        out.push(self.n() as u8);
        out.extend_from_slice(&(self.edge_color_count() as u16).to_le_bytes());
        out.extend_from_slice(&(self.vertex_color_count() as u16).to_le_bytes());
    }

    fn write_body(&self, order: &[VertexId], out: &mut Vec<u8>) {
        for j in 0..order.len() {
            out.push(self.vertex_color_unchecked(order[j]));
            for i in 0..j {
                out.push(self.pair_color_unchecked(order[i], order[j]));
            }
        }
    }

    const PREFIX_ENCODING: bool = true;
}

impl MultiGraphTuple {
    fn fused_bits(&self, x: VertexId, y: VertexId) -> u8 {
        let mut bits = 0u8;
        for (i, layer) in self.layers().iter().enumerate() {
            if layer.has_edge(x, y) {
                bits |= 1 << i;
            }
        }
        bits
    }
}

impl Canonize for MultiGraphTuple {
    fn seed(&self, _v: VertexId) -> u64 {
        0
    }

    fn signature(&self, v: VertexId, colors: &[u32], out: &mut Vec<u64>) {
        for (u, &color) in colors.iter().enumerate() {
            if u != v {
                out.push((self.fused_bits(v, u) as u64) << 32 | color as u64);
            }
        }
    }

    fn write_header(&self, out: &mut Vec<u8>) {
        out.push(3);
        out.push(self.n() as u8);
        out.push(self.layer_count() as u8);
    }

    fn write_body(&self, order: &[VertexId], out: &mut Vec<u8>) {
        for j in 1..order.len() {
            for i in 0..j {
                out.push(self.fused_bits(order[i], order[j]));
            }
        }
    }

    const PREFIX_ENCODING: bool = true;
}

impl Canonize for UniformHypergraph {
    fn seed(&self, _v: VertexId) -> u64 {
        0
    }

    fn signature(&self, v: VertexId, colors: &[u32], out: &mut Vec<u64>) {
        let mut partner_colors: Vec<u32> = Vec::new();
        for &e in self.edges() {
            if e.contains(v) {
                partner_colors.clear();
                partner_colors.extend(e.iter().filter(|&u| u != v).map(|u| colors[u]));
                partner_colors.sort_unstable();
                let mut h = FNV128_OFFSET as u64;
                for &c in &partner_colors {
                    for b in c.to_le_bytes() {
                        h ^= b as u64;
                        h = h.wrapping_mul(0x100000001b3);
                    }
                }
                out.push(h);
            }
        }
    }

    fn write_header(&self, out: &mut Vec<u8>) {
        out.push(2);
        out.push(self.n() as u8);
        out.push(self.arity() as u8);
    }

    fn write_body(&self, order: &[VertexId], out: &mut Vec<u8>) {
        let mut position = [0usize; crate::graph::MAX_BASE];
        for (pos, &v) in order.iter().enumerate() {
            position[v] = pos;
        }
        let mut masks: Vec<u16> = self
            .edges()
            .iter()
            .map(|e| e.iter().map(|v| 1u16 << position[v]).sum())
            .collect();
        masks.sort_unstable();
        for m in masks {
            out.extend_from_slice(&m.to_le_bytes());
        }
    }

    const PREFIX_ENCODING: bool = false;
}

// ---------------------------------------------------------------------------
// Refinement + backtracking search
// ---------------------------------------------------------------------------

/// Refines `colors` to the coarsest stable coloring finer than the input.
/// New color ids are ranks of (old color, sorted signature), so the relative
/// order of old classes is preserved and ids stay label-independent.
fn refine<T: Canonize>(g: &T, colors: &mut [u32]) {
    let n = colors.len();
    if n == 0 {
        return;
    }
    let mut keyed: Vec<(u32, Vec<u64>, usize)> = Vec::with_capacity(n);
    loop {
        let before = distinct_count(colors);
        keyed.clear();
        for v in 0..n {
            let mut sig = Vec::new();
            g.signature(v, colors, &mut sig);
            sig.sort_unstable();
            keyed.push((colors[v], sig, v));
        }
        keyed.sort_unstable_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
        let mut rank = 0u32;
        for i in 0..n {
            if i > 0 && (keyed[i].0, &keyed[i].1) != (keyed[i - 1].0, &keyed[i - 1].1) {
                rank += 1;
            }
            colors[keyed[i].2] = rank;
        }
        if distinct_count(colors) == before {
            return;
        }
    }
}

fn distinct_count(colors: &[u32]) -> usize {
    let mut seen = vec![false; colors.len()];
    let mut count = 0;
    for &c in colors {
        if !seen[c as usize] {
            seen[c as usize] = true;
            count += 1;
        }
    }
    count
}

/// Normalizes arbitrary keys to dense ranks preserving order.
fn compress(colors: &mut [u32]) {
    let mut sorted: Vec<u32> = colors.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    for c in colors.iter_mut() {
        *c = sorted.binary_search(c).unwrap() as u32;
    }
}

struct Search<'a, T: Canonize> {
    g: &'a T,
    n: usize,
    header: Vec<u8>,
    best: Option<(Vec<u8>, Vec<VertexId>)>,
}

impl<'a, T: Canonize> Search<'a, T> {
    /// Positions of the leading singleton classes, in class order.
    fn leading_order(&self, colors: &[u32]) -> Vec<VertexId> {
        let mut class_size = vec![0usize; self.n];
        for &c in colors {
            class_size[c as usize] += 1;
        }
        let mut leading = 0;
        while leading < self.n && class_size[leading] == 1 {
            leading += 1;
        }
        let mut order = vec![usize::MAX; leading];
        for (v, &c) in colors.iter().enumerate() {
            if (c as usize) < leading {
                order[c as usize] = v;
            }
        }
        order
    }

    fn run(&mut self, colors: Vec<u32>) {
        let order = self.leading_order(&colors);
        if order.len() == self.n {
            let mut bytes = self.header.clone();
            self.g.write_body(&order, &mut bytes);
            if self
                .best
                .as_ref()
                .map(|(b, _)| bytes < *b)
                .unwrap_or(true)
            {
                self.best = Some((bytes, order));
            }
            return;
        }
        if T::PREFIX_ENCODING && !order.is_empty() {
            if let Some((best_bytes, _)) = &self.best {
                let mut prefix = self.header.clone();
                self.g.write_body(&order, &mut prefix);
                if prefix.as_slice() > &best_bytes[..prefix.len()] {
                    return;
                }
            }
        }
        // First non-singleton class is the branching cell.
        let target = order.len() as u32;
        let members: Vec<VertexId> = (0..self.n).filter(|&v| colors[v] == target).collect();
        for &v in &members {
            let mut child: Vec<u32> = colors
                .iter()
                .enumerate()
                .map(|(u, &c)| {
                    let mut key = c * 2;
                    if c == target && u != v {
                        key += 1;
                    }
                    key
                })
                .collect();
            compress(&mut child);
            refine(self.g, &mut child);
            self.run(child);
        }
    }
}

/// Least encoding plus the labeling that realizes it (vertex → position).
pub fn canonical_labeling<T: Canonize>(g: &T) -> Result<(Certificate, Permutation)> {
    let n = g.n();
    if n > CANON_MAX_N {
        return Err(Error::CapExceeded {
            what: "canonical form",
            requested: n,
            cap: CANON_MAX_N,
        });
    }
    let mut header = Vec::new();
    g.write_header(&mut header);
    if n == 0 {
        return Ok((Certificate::new(header), Permutation::identity(0)));
    }
    let mut colors: Vec<u32> = (0..n).map(|v| g.seed(v) as u32).collect();
    compress(&mut colors);
    refine(g, &mut colors);
    let mut search = Search {
        g,
        n,
        header,
        best: None,
    };
    search.run(colors);
    let (bytes, order) = search.best.expect("search visits at least one leaf");
    let mut images = vec![0usize; n];
    for (pos, &v) in order.iter().enumerate() {
        images[v] = pos;
    }
    Ok((Certificate::new(bytes), Permutation::from_images(images)?))
}

/// Canonical certificate of the structure's isomorphism class.
pub fn canonical_form<T: Canonize>(g: &T) -> Result<Certificate> {
    canonical_labeling(g).map(|(cert, _)| cert)
}

/// The canonically labeled member of `g`'s class, with its certificate.
pub fn canonical_copy<T: Canonize>(g: &T) -> Result<(Certificate, T)> {
    let (cert, lab) = canonical_labeling(g)?;
    Ok((cert, g.apply(&lab)?))
}

/// An isomorphism witness `π` with `apply(π, a) = b`, or `None`.
///
/// A returned witness is re-applied and checked before being handed out, so
/// it is sound by construction.
pub fn are_isomorphic<T: Canonize>(a: &T, b: &T) -> Result<Option<Permutation>> {
    check_same_kind(a.kind(), b.kind())?;
    let (cert_a, lab_a) = canonical_labeling(a)?;
    let (cert_b, lab_b) = canonical_labeling(b)?;
    if cert_a != cert_b {
        return Ok(None);
    }
    let witness = lab_b.inverse().compose(&lab_a)?;
    let mapped = a.apply(&witness)?;
    assert!(
        mapped == *b,
        "canonical labeling produced an unsound witness"
    );
    Ok(Some(witness))
}
