//! Finite labeled structures on a dense base `{0, …, n-1}`: simple graphs,
//! edge-colored graphs, multigraph tuples, and uniform hypergraphs.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so they can be shared and sent across threads freely. Vertex
//! subsets are bitmasks, which caps the base size at 64; the exhaustive
//! machinery elsewhere in the crate only ever needs n ≤ 11.

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Index of a vertex inside a structure's base set.
pub type VertexId = usize;

/// Largest representable base size (subsets are `u64` bitmasks).
pub const MAX_BASE: usize = 64;

/// A subset of `{0, …, n-1}` as a bitmask.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);
    pub const MAX_BASE: usize = MAX_BASE;

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_BASE);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: VertexId) -> Self {
        VertexSet(1 << v)
    }

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: VertexId) -> bool {
        v < MAX_BASE && self.0 & (1 << v) != 0
    }

    pub fn with(self, v: VertexId) -> Self {
        VertexSet(self.0 | (1 << v))
    }

    pub fn without(self, v: VertexId) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersect(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    /// Complement within a base of size `n`.
    pub fn complement(self, n: usize) -> Self {
        VertexSet(Self::full(n).0 & !self.0)
    }

    /// The single member, if the set is a singleton.
    pub fn only_element(self) -> Option<VertexId> {
        if self.0.count_ones() == 1 {
            Some(self.0.trailing_zeros() as usize)
        } else {
            None
        }
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = VertexId> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    /// All size-`k` subsets of `{0, …, n-1}` in ascending bitmask order
    /// (Gosper's hack).
    pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
        assert!(n <= MAX_BASE);
        let full = Self::full(n).0;
        let mut cur = if k > n {
            None
        } else if k == 0 {
            Some(0u64)
        } else {
            Some((1u64 << k) - 1)
        };
        std::iter::from_fn(move || {
            let c = cur?;
            cur = if k == 0 || c == 0 {
                None
            } else {
                let lsb = c & c.wrapping_neg();
                let ripple = c.wrapping_add(lsb);
                let ones = ((c ^ ripple) >> 2) / lsb;
                let next = ripple | ones;
                if next <= full && next > c {
                    Some(next)
                } else {
                    None
                }
            };
            Some(VertexSet(c))
        })
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s = s.with(v);
        }
        s
    }
}

/// Column-major index of the unordered pair `{i, j}` with `i < j` inside the
/// upper triangle: pairs are ordered (0,1), (0,2), (1,2), (0,3), …
pub(crate) fn pair_index(i: VertexId, j: VertexId) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

pub(crate) fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn check_base(n: usize) -> Result<()> {
    if n > MAX_BASE {
        return Err(Error::CapExceeded {
            what: "base size",
            requested: n,
            cap: MAX_BASE,
        });
    }
    Ok(())
}

fn check_vertex(v: VertexId, n: usize) -> Result<()> {
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    Ok(())
}

fn check_subset(s: VertexSet, n: usize) -> Result<()> {
    if !s.is_subset_of(VertexSet::full(n)) {
        return Err(Error::SubsetOutOfRange { mask: s.bits(), n });
    }
    Ok(())
}

/// Structure kind plus its shape parameters; two values are comparable
/// (isomorphism, decks, measures) only when their kinds agree.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum StructureKind {
    Simple { n: usize },
    Colored { n: usize, k: usize, v: usize },
    Multigraph { n: usize, layers: usize },
    Hypergraph { n: usize, m: usize },
}

impl std::fmt::Display for StructureKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StructureKind::Simple { n } => write!(f, "simple(n={n})"),
            StructureKind::Colored { n, k, v } => write!(f, "colored(n={n},k={k},v={v})"),
            StructureKind::Multigraph { n, layers } => {
                write!(f, "multigraph(n={n},layers={layers})")
            }
            StructureKind::Hypergraph { n, m } => write!(f, "hypergraph(n={n},m={m})"),
        }
    }
}

pub(crate) fn check_same_kind(a: StructureKind, b: StructureKind) -> Result<()> {
    if a != b {
        // Distinguish a pure size mismatch from a kind/parameter mismatch.
        let (na, nb) = (kind_base(a), kind_base(b));
        if std::mem::discriminant(&a) == std::mem::discriminant(&b) && na != nb {
            let same_params = match (a, b) {
                (
                    StructureKind::Colored { k, v, .. },
                    StructureKind::Colored { k: k2, v: v2, .. },
                ) => k == k2 && v == v2,
                (
                    StructureKind::Multigraph { layers, .. },
                    StructureKind::Multigraph { layers: l2, .. },
                ) => layers == l2,
                (StructureKind::Hypergraph { m, .. }, StructureKind::Hypergraph { m: m2, .. }) => {
                    m == m2
                }
                _ => true,
            };
            if same_params {
                return Err(Error::SizeMismatch { left: na, right: nb });
            }
        }
        return Err(Error::KindMismatch {
            left: a.to_string(),
            right: b.to_string(),
        });
    }
    Ok(())
}

fn kind_base(k: StructureKind) -> usize {
    match k {
        StructureKind::Simple { n }
        | StructureKind::Colored { n, .. }
        | StructureKind::Multigraph { n, .. }
        | StructureKind::Hypergraph { n, .. } => n,
    }
}

/// Common surface of every structure kind: base size, induced substructures,
/// and the permutation action.
pub trait Structure: Clone + Eq + std::hash::Hash + Send + Sync + Sized {
    fn n(&self) -> usize;

    fn kind(&self) -> StructureKind;

    /// Restriction to `s`, relabeling the kept vertices `0..|s|-1` in
    /// ascending original order.
    fn induced(&self, s: VertexSet) -> Result<Self>;

    /// The relabeled structure `R` with `R(π(x), π(y)) = G(x, y)` (colors and
    /// hyperedges transported likewise).
    fn apply(&self, p: &Permutation) -> Result<Self>;
}

// ---------------------------------------------------------------------------
// SimpleGraph
// ---------------------------------------------------------------------------

/// Loop-free undirected graph on `n` labeled vertices, stored as one
/// neighbor bitmask per vertex.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u64>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Result<Self> {
        check_base(n)?;
        Ok(Self { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        check_base(n)?;
        let full = VertexSet::full(n).bits();
        Ok(Self {
            n,
            adj: (0..n).map(|v| full & !(1u64 << v)).collect(),
        })
    }

    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(x, y) in edges {
            check_vertex(x, n)?;
            check_vertex(y, n)?;
            if x == y {
                return Err(Error::InvalidStructure(format!("loop at vertex {x}")));
            }
            g.adj[x] |= 1 << y;
            g.adj[y] |= 1 << x;
        }
        Ok(g)
    }

    /// Extends by one fresh vertex adjacent to exactly `neighbors`.
    pub fn with_appended_vertex(&self, neighbors: VertexSet) -> Result<Self> {
        check_base(self.n + 1)?;
        check_subset(neighbors, self.n)?;
        let mut adj = self.adj.clone();
        adj.push(neighbors.bits());
        for v in neighbors.iter() {
            adj[v] |= 1 << self.n;
        }
        Ok(Self { n: self.n + 1, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, x: VertexId, y: VertexId) -> bool {
        x < self.n && y < self.n && x != y && self.adj[x] & (1 << y) != 0
    }

    pub fn neighbors(&self, x: VertexId) -> VertexSet {
        VertexSet::from_bits(self.adj[x])
    }

    /// Number of neighbors of `x`.
    pub fn degree(&self, x: VertexId) -> Result<usize> {
        check_vertex(x, self.n)?;
        Ok(self.adj[x].count_ones() as usize)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as ordered pairs `(x, y)` with `x < y`, ascending.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for x in 0..self.n {
            for y in (x + 1)..self.n {
                if self.adj[x] & (1 << y) != 0 {
                    out.push((x, y));
                }
            }
        }
        out
    }
}

impl Structure for SimpleGraph {
    fn n(&self) -> usize {
        self.n
    }

    fn kind(&self) -> StructureKind {
        StructureKind::Simple { n: self.n }
    }

    fn induced(&self, s: VertexSet) -> Result<Self> {
        check_subset(s, self.n)?;
        let kept: Vec<VertexId> = s.iter().collect();
        let mut g = Self::empty(kept.len())?;
        for (new_x, &old_x) in kept.iter().enumerate() {
            for (new_y, &old_y) in kept.iter().enumerate().skip(new_x + 1) {
                if self.adj[old_x] & (1 << old_y) != 0 {
                    g.adj[new_x] |= 1 << new_y;
                    g.adj[new_y] |= 1 << new_x;
                }
            }
        }
        Ok(g)
    }

    fn apply(&self, p: &Permutation) -> Result<Self> {
        if p.n() != self.n {
            return Err(Error::SizeMismatch {
                left: p.n(),
                right: self.n,
            });
        }
        let mut adj = vec![0u64; self.n];
        for x in 0..self.n {
            adj[p.image(x)] = VertexSet::from_bits(self.adj[x])
                .iter()
                .map(|y| p.image(y))
                .collect::<VertexSet>()
                .bits();
        }
        Ok(Self { n: self.n, adj })
    }
}

// ---------------------------------------------------------------------------
// EdgeColoredGraph
// ---------------------------------------------------------------------------

/// Symmetric color assignment on unordered vertex pairs plus a color per
/// vertex. Pair color 0 means "no edge", so a [`SimpleGraph`] embeds
/// losslessly as `k = 2, v = 1`. Equivalently: a symmetric matrix over the
/// alphabet `{0, …, k-1}` whose diagonal carries the vertex colors.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EdgeColoredGraph {
    n: usize,
    k: usize,
    v: usize,
    pair_colors: Vec<u8>,
    vertex_colors: Vec<u8>,
}

/// Largest supported color alphabet (colors are stored as bytes).
pub const MAX_COLORS: usize = 256;

impl EdgeColoredGraph {
    /// All pair colors 0 and all vertex colors 0.
    pub fn blank(n: usize, k: usize, v: usize) -> Result<Self> {
        check_base(n)?;
        if !(1..=MAX_COLORS).contains(&k) {
            return Err(Error::InvalidStructure(format!(
                "edge color count {k} outside 1..={MAX_COLORS}"
            )));
        }
        if !(1..=MAX_COLORS).contains(&v) {
            return Err(Error::InvalidStructure(format!(
                "vertex color count {v} outside 1..={MAX_COLORS}"
            )));
        }
        Ok(Self {
            n,
            k,
            v,
            pair_colors: vec![0; pair_count(n)],
            vertex_colors: vec![0; n],
        })
    }

    /// Builds from explicit colored edges; pairs not listed get color 0.
    pub fn new(
        n: usize,
        k: usize,
        v: usize,
        vertex_colors: &[u8],
        edges: &[(VertexId, VertexId, u8)],
    ) -> Result<Self> {
        let mut g = Self::blank(n, k, v)?;
        if vertex_colors.len() != n {
            return Err(Error::InvalidStructure(format!(
                "expected {n} vertex colors, got {}",
                vertex_colors.len()
            )));
        }
        for (x, &c) in vertex_colors.iter().enumerate() {
            if usize::from(c) >= v {
                return Err(Error::InvalidStructure(format!(
                    "vertex color {c} at vertex {x} outside 0..{v}"
                )));
            }
        }
        g.vertex_colors.copy_from_slice(vertex_colors);
        for &(x, y, c) in edges {
            check_vertex(x, n)?;
            check_vertex(y, n)?;
            if x == y {
                return Err(Error::InvalidStructure(format!("loop at vertex {x}")));
            }
            if usize::from(c) >= k {
                return Err(Error::InvalidStructure(format!(
                    "edge color {c} on ({x},{y}) outside 0..{k}"
                )));
            }
            g.pair_colors[pair_index(x.min(y), x.max(y))] = c;
        }
        Ok(g)
    }

    pub fn from_simple(g: &SimpleGraph) -> Self {
        let n = g.n();
        let mut pair_colors = vec![0u8; pair_count(n)];
        for (x, y) in g.edges() {
            pair_colors[pair_index(x, y)] = 1;
        }
        Self {
            n,
            k: 2,
            v: 1,
            pair_colors,
            vertex_colors: vec![0; n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_color_count(&self) -> usize {
        self.k
    }

    pub fn vertex_color_count(&self) -> usize {
        self.v
    }

    pub fn edge_color(&self, x: VertexId, y: VertexId) -> Result<u8> {
        check_vertex(x, self.n)?;
        check_vertex(y, self.n)?;
        if x == y {
            return Err(Error::InvalidStructure(
                "pair colors are defined on distinct vertices".into(),
            ));
        }
        Ok(self.pair_colors[pair_index(x.min(y), x.max(y))])
    }

    pub fn vertex_color(&self, x: VertexId) -> Result<u8> {
        check_vertex(x, self.n)?;
        Ok(self.vertex_colors[x])
    }

    pub(crate) fn pair_color_unchecked(&self, x: VertexId, y: VertexId) -> u8 {
        self.pair_colors[pair_index(x.min(y), x.max(y))]
    }

    pub(crate) fn vertex_color_unchecked(&self, x: VertexId) -> u8 {
        self.vertex_colors[x]
    }

    /// Colored edges `(x, y, c)` with `x < y` and `c ≠ 0`, ascending.
    pub fn colored_edges(&self) -> Vec<(VertexId, VertexId, u8)> {
        let mut out = Vec::new();
        for y in 1..self.n {
            for x in 0..y {
                let c = self.pair_colors[pair_index(x, y)];
                if c != 0 {
                    out.push((x, y, c));
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn vertex_colors(&self) -> &[u8] {
        &self.vertex_colors
    }

    /// Extends by a fresh vertex; `new_pair_colors[x]` colors the pair
    /// `{x, n}`.
    pub fn with_appended_vertex(&self, vertex_color: u8, new_pair_colors: &[u8]) -> Result<Self> {
        check_base(self.n + 1)?;
        if new_pair_colors.len() != self.n {
            return Err(Error::InvalidStructure(format!(
                "expected {} pair colors for the appended vertex, got {}",
                self.n,
                new_pair_colors.len()
            )));
        }
        if usize::from(vertex_color) >= self.v {
            return Err(Error::InvalidStructure(format!(
                "vertex color {vertex_color} outside 0..{}",
                self.v
            )));
        }
        for &c in new_pair_colors {
            if usize::from(c) >= self.k {
                return Err(Error::InvalidStructure(format!(
                    "edge color {c} outside 0..{}",
                    self.k
                )));
            }
        }
        let mut pair_colors = self.pair_colors.clone();
        pair_colors.extend_from_slice(new_pair_colors);
        let mut vertex_colors = self.vertex_colors.clone();
        vertex_colors.push(vertex_color);
        Ok(Self {
            n: self.n + 1,
            k: self.k,
            v: self.v,
            pair_colors,
            vertex_colors,
        })
    }
}

impl Structure for EdgeColoredGraph {
    fn n(&self) -> usize {
        self.n
    }

    fn kind(&self) -> StructureKind {
        StructureKind::Colored {
            n: self.n,
            k: self.k,
            v: self.v,
        }
    }

    fn induced(&self, s: VertexSet) -> Result<Self> {
        check_subset(s, self.n)?;
        let kept: Vec<VertexId> = s.iter().collect();
        let nn = kept.len();
        let mut pair_colors = vec![0u8; pair_count(nn)];
        for j in 0..nn {
            for i in 0..j {
                pair_colors[pair_index(i, j)] = self.pair_color_unchecked(kept[i], kept[j]);
            }
        }
        Ok(Self {
            n: nn,
            k: self.k,
            v: self.v,
            pair_colors,
            vertex_colors: kept.iter().map(|&x| self.vertex_colors[x]).collect(),
        })
    }

    fn apply(&self, p: &Permutation) -> Result<Self> {
        if p.n() != self.n {
            return Err(Error::SizeMismatch {
                left: p.n(),
                right: self.n,
            });
        }
        let mut pair_colors = vec![0u8; pair_count(self.n)];
        let mut vertex_colors = vec![0u8; self.n];
        for x in 0..self.n {
            vertex_colors[p.image(x)] = self.vertex_colors[x];
            for y in (x + 1)..self.n {
                let (a, b) = (p.image(x), p.image(y));
                pair_colors[pair_index(a.min(b), a.max(b))] = self.pair_colors[pair_index(x, y)];
            }
        }
        Ok(Self {
            n: self.n,
            k: self.k,
            v: self.v,
            pair_colors,
            vertex_colors,
        })
    }
}

// ---------------------------------------------------------------------------
// MultiGraphTuple
// ---------------------------------------------------------------------------

/// Largest supported number of layers; the fused color alphabet is
/// `2^layers` and must fit in [`MAX_COLORS`].
pub const MAX_LAYERS: usize = 8;

/// An ordered tuple of simple graphs sharing one base.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiGraphTuple {
    layers: Vec<SimpleGraph>,
}

impl MultiGraphTuple {
    pub fn new(layers: Vec<SimpleGraph>) -> Result<Self> {
        if layers.is_empty() {
            return Err(Error::EmptyStructure);
        }
        if layers.len() > MAX_LAYERS {
            return Err(Error::CapExceeded {
                what: "multigraph layers",
                requested: layers.len(),
                cap: MAX_LAYERS,
            });
        }
        let n = layers[0].n();
        for l in &layers[1..] {
            if l.n() != n {
                return Err(Error::SizeMismatch {
                    left: n,
                    right: l.n(),
                });
            }
        }
        Ok(Self { layers })
    }

    pub fn n(&self) -> usize {
        self.layers[0].n()
    }

    pub fn layer_count(&self) -> usize {
        self.layers.len()
    }

    pub fn layers(&self) -> &[SimpleGraph] {
        &self.layers
    }

    /// Collapses the tuple into one edge-colored graph: the color of a pair
    /// is the bit vector of the layers containing it (layer `i` contributes
    /// bit `i`), over the alphabet `2^layers`; vertex colors are constant.
    pub fn fuse(&self) -> EdgeColoredGraph {
        let n = self.n();
        let mut pair_colors = vec![0u8; pair_count(n)];
        for (i, layer) in self.layers.iter().enumerate() {
            for (x, y) in layer.edges() {
                pair_colors[pair_index(x, y)] |= 1 << i;
            }
        }
        EdgeColoredGraph {
            n,
            k: 1 << self.layers.len(),
            v: 1,
            pair_colors,
            vertex_colors: vec![0; n],
        }
    }

    /// Recovers the layers from a fused graph; inverse of [`Self::fuse`].
    pub fn unfuse(g: &EdgeColoredGraph, layers: usize) -> Result<Self> {
        if layers == 0 || layers > MAX_LAYERS {
            return Err(Error::InvalidStructure(format!(
                "layer count {layers} outside 1..={MAX_LAYERS}"
            )));
        }
        if g.vertex_color_count() != 1 {
            return Err(Error::InvalidStructure(
                "fused multigraphs have constant vertex color".into(),
            ));
        }
        if g.edge_color_count() != 1 << layers {
            return Err(Error::KindMismatch {
                left: format!("colored(k={})", g.edge_color_count()),
                right: format!("fused(layers={layers}, k={})", 1usize << layers),
            });
        }
        let n = g.n();
        let mut layer_graphs = Vec::with_capacity(layers);
        for i in 0..layers {
            let mut layer = SimpleGraph::empty(n)?;
            for y in 1..n {
                for x in 0..y {
                    if g.pair_colors[pair_index(x, y)] & (1 << i) != 0 {
                        layer.adj[x] |= 1 << y;
                        layer.adj[y] |= 1 << x;
                    }
                }
            }
            layer_graphs.push(layer);
        }
        Self::new(layer_graphs)
    }
}

/// Free-function form of [`MultiGraphTuple::fuse`].
pub fn fuse_multigraph(t: &MultiGraphTuple) -> EdgeColoredGraph {
    t.fuse()
}

impl Structure for MultiGraphTuple {
    fn n(&self) -> usize {
        self.n()
    }

    fn kind(&self) -> StructureKind {
        StructureKind::Multigraph {
            n: self.n(),
            layers: self.layers.len(),
        }
    }

    fn induced(&self, s: VertexSet) -> Result<Self> {
        let layers = self
            .layers
            .iter()
            .map(|l| l.induced(s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(layers)
    }

    fn apply(&self, p: &Permutation) -> Result<Self> {
        let layers = self
            .layers
            .iter()
            .map(|l| l.apply(p))
            .collect::<Result<Vec<_>>>()?;
        Self::new(layers)
    }
}

// ---------------------------------------------------------------------------
// UniformHypergraph
// ---------------------------------------------------------------------------

/// A set of `m`-element vertex subsets. Represents a fully symmetric m-ary
/// relation: the relation's value depends only on the underlying set of a
/// tuple, so the edge set carries all the information.
///
/// Bases smaller than `m` are permitted (the edge set is then necessarily
/// empty) so that vertex-deleted cards of an `n = m` structure remain
/// representable.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UniformHypergraph {
    n: usize,
    m: usize,
    edges: Vec<VertexSet>, // sorted ascending, deduplicated
}

impl UniformHypergraph {
    pub fn new<I>(n: usize, m: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        check_base(n)?;
        if m < 2 {
            return Err(Error::InvalidStructure(format!(
                "hyperedge arity {m} must be at least 2"
            )));
        }
        let mut list: Vec<VertexSet> = Vec::new();
        for e in edges {
            check_subset(e, n)?;
            if e.len() != m {
                return Err(Error::InvalidStructure(format!(
                    "hyperedge {:#b} has {} vertices, expected {m}",
                    e.bits(),
                    e.len()
                )));
            }
            list.push(e);
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self { n, m, edges: list })
    }

    pub fn from_vertex_lists(n: usize, m: usize, edges: &[Vec<VertexId>]) -> Result<Self> {
        let masks = edges
            .iter()
            .map(|e| {
                if e.len() != m {
                    return Err(Error::InvalidStructure(format!(
                        "hyperedge {e:?} has {} vertices, expected {m}",
                        e.len()
                    )));
                }
                let mut s = VertexSet::EMPTY;
                for &v in e {
                    check_vertex(v, n)?;
                    if s.contains(v) {
                        return Err(Error::InvalidStructure(format!(
                            "hyperedge {e:?} repeats vertex {v}"
                        )));
                    }
                    s = s.with(v);
                }
                Ok(s)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, m, masks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arity(&self) -> usize {
        self.m
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, e: VertexSet) -> bool {
        self.edges.binary_search(&e).is_ok()
    }
}

impl Structure for UniformHypergraph {
    fn n(&self) -> usize {
        self.n
    }

    fn kind(&self) -> StructureKind {
        StructureKind::Hypergraph {
            n: self.n,
            m: self.m,
        }
    }

    fn induced(&self, s: VertexSet) -> Result<Self> {
        check_subset(s, self.n)?;
        let kept: Vec<VertexId> = s.iter().collect();
        let mut relabel = [usize::MAX; MAX_BASE];
        for (new, &old) in kept.iter().enumerate() {
            relabel[old] = new;
        }
        let mut edges = Vec::new();
        for &e in &self.edges {
            if e.is_subset_of(s) {
                edges.push(e.iter().map(|v| relabel[v]).collect::<VertexSet>());
            }
        }
        edges.sort_unstable();
        Ok(Self {
            n: kept.len(),
            m: self.m,
            edges,
        })
    }

    fn apply(&self, p: &Permutation) -> Result<Self> {
        if p.n() != self.n {
            return Err(Error::SizeMismatch {
                left: p.n(),
                right: self.n,
            });
        }
        let mut edges: Vec<VertexSet> = self.edges.iter().map(|&e| p.map_set(e)).collect();
        edges.sort_unstable();
        Ok(Self {
            n: self.n,
            m: self.m,
            edges,
        })
    }
}
