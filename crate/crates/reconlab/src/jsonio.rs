//! Text formats for structures, and a kind-erased wrapper for the CLI and
//! C API.
//!
//! Simple graphs travel as graph6 strings. The other kinds use a JSON
//! object:
//!
//! ```json
//! {"kind":"colored","n":4,"k":3,"v":1,"vertex_colors":[0,0,0,0],
//!  "edges":[[0,1,2],[2,3,1]]}
//! {"kind":"hypergraph","n":5,"m":3,"edges":[[0,1,2],[1,3,4]]}
//! {"kind":"multigraph","n":3,"layers":["Bw","B_"]}
//! {"kind":"simple","graph6":"Bw"}
//! ```
//!
//! `edges` lists only pairs with nonzero color (colored) or the sorted
//! member lists of hyperedges. `v` (the vertex color alphabet size) may be
//! omitted, in which case it is inferred as `max(vertex_colors) + 1`;
//! `vertex_colors` may be omitted for an all-zero coloring.

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, Certificate};
use crate::deck::{self, Deck};
use crate::error::{Error, Result};
use crate::graph::{
    EdgeColoredGraph, MultiGraphTuple, SimpleGraph, Structure, UniformHypergraph,
};
use crate::graph6::{emit_graph6, parse_graph6};
use crate::measure::{self, MeasureVector};
use crate::perm::Permutation;

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum StructureJson {
    Simple {
        graph6: String,
    },
    Colored {
        n: usize,
        k: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        v: Option<usize>,
        #[serde(default)]
        vertex_colors: Vec<u8>,
        edges: Vec<(usize, usize, u8)>,
    },
    Hypergraph {
        n: usize,
        m: usize,
        edges: Vec<Vec<usize>>,
    },
    Multigraph {
        n: usize,
        layers: Vec<String>,
    },
}

/// A structure of any kind, for surfaces that cannot be generic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AnyStructure {
    Simple(SimpleGraph),
    Colored(EdgeColoredGraph),
    Hypergraph(UniformHypergraph),
    Multigraph(MultiGraphTuple),
}

impl From<SimpleGraph> for AnyStructure {
    fn from(g: SimpleGraph) -> Self {
        AnyStructure::Simple(g)
    }
}

impl From<EdgeColoredGraph> for AnyStructure {
    fn from(g: EdgeColoredGraph) -> Self {
        AnyStructure::Colored(g)
    }
}

impl From<UniformHypergraph> for AnyStructure {
    fn from(g: UniformHypergraph) -> Self {
        AnyStructure::Hypergraph(g)
    }
}

impl From<MultiGraphTuple> for AnyStructure {
    fn from(g: MultiGraphTuple) -> Self {
        AnyStructure::Multigraph(g)
    }
}

impl AnyStructure {
    pub fn n(&self) -> usize {
        match self {
            AnyStructure::Simple(g) => g.n(),
            AnyStructure::Colored(g) => g.n(),
            AnyStructure::Hypergraph(g) => g.n(),
            AnyStructure::Multigraph(g) => g.n(),
        }
    }

    pub fn kind_label(&self) -> String {
        match self {
            AnyStructure::Simple(g) => g.kind().to_string(),
            AnyStructure::Colored(g) => g.kind().to_string(),
            AnyStructure::Hypergraph(g) => g.kind().to_string(),
            AnyStructure::Multigraph(g) => g.kind().to_string(),
        }
    }

    pub fn certificate(&self) -> Result<Certificate> {
        match self {
            AnyStructure::Simple(g) => canonical_form(g),
            AnyStructure::Colored(g) => canonical_form(g),
            AnyStructure::Hypergraph(g) => canonical_form(g),
            AnyStructure::Multigraph(g) => canonical_form(g),
        }
    }

    pub fn deck(&self) -> Result<Deck> {
        match self {
            AnyStructure::Simple(g) => deck::deck(g),
            AnyStructure::Colored(g) => deck::deck(g),
            AnyStructure::Hypergraph(g) => deck::deck(g),
            AnyStructure::Multigraph(g) => deck::deck(g),
        }
    }

    pub fn measure_vector(&self) -> Result<MeasureVector> {
        match self {
            AnyStructure::Simple(g) => measure::measure_vector(g),
            AnyStructure::Colored(g) => measure::measure_vector(g),
            AnyStructure::Hypergraph(g) => measure::measure_vector(g),
            AnyStructure::Multigraph(g) => measure::measure_vector(g),
        }
    }

    pub fn hypomorphic_to(&self, other: &AnyStructure) -> Result<bool> {
        match (self, other) {
            (AnyStructure::Simple(a), AnyStructure::Simple(b)) => deck::are_hypomorphic(a, b),
            (AnyStructure::Colored(a), AnyStructure::Colored(b)) => deck::are_hypomorphic(a, b),
            (AnyStructure::Hypergraph(a), AnyStructure::Hypergraph(b)) => {
                deck::are_hypomorphic(a, b)
            }
            (AnyStructure::Multigraph(a), AnyStructure::Multigraph(b)) => {
                deck::are_hypomorphic(a, b)
            }
            _ => Err(self.kind_error(other)),
        }
    }

    pub fn isomorphic_to(&self, other: &AnyStructure) -> Result<Option<Permutation>> {
        match (self, other) {
            (AnyStructure::Simple(a), AnyStructure::Simple(b)) => crate::canon::are_isomorphic(a, b),
            (AnyStructure::Colored(a), AnyStructure::Colored(b)) => {
                crate::canon::are_isomorphic(a, b)
            }
            (AnyStructure::Hypergraph(a), AnyStructure::Hypergraph(b)) => {
                crate::canon::are_isomorphic(a, b)
            }
            (AnyStructure::Multigraph(a), AnyStructure::Multigraph(b)) => {
                crate::canon::are_isomorphic(a, b)
            }
            _ => Err(self.kind_error(other)),
        }
    }

    fn kind_error(&self, other: &AnyStructure) -> Error {
        Error::KindMismatch {
            left: self.kind_label(),
            right: other.kind_label(),
        }
    }

    /// Compact single-line text form: graph6 for simple graphs, JSON
    /// otherwise.
    pub fn to_text(&self) -> Result<String> {
        match self {
            AnyStructure::Simple(g) => emit_graph6(g),
            other => Ok(serde_json::to_string(&other.to_json_repr()?)?),
        }
    }

    /// JSON value form, as embedded in reports: a graph6 string for simple
    /// graphs, an object for the other kinds.
    pub fn to_value(&self) -> Result<serde_json::Value> {
        match self {
            AnyStructure::Simple(g) => Ok(serde_json::Value::String(emit_graph6(g)?)),
            other => Ok(serde_json::to_value(other.to_json_repr()?)?),
        }
    }

    fn to_json_repr(&self) -> Result<StructureJson> {
        Ok(match self {
            AnyStructure::Simple(g) => StructureJson::Simple {
                graph6: emit_graph6(g)?,
            },
            AnyStructure::Colored(g) => StructureJson::Colored {
                n: g.n(),
                k: g.edge_color_count(),
                v: Some(g.vertex_color_count()),
                vertex_colors: g.vertex_colors().to_vec(),
                edges: g.colored_edges(),
            },
            AnyStructure::Hypergraph(g) => StructureJson::Hypergraph {
                n: g.n(),
                m: g.arity(),
                edges: g.edges().iter().map(|e| e.iter().collect()).collect(),
            },
            AnyStructure::Multigraph(g) => StructureJson::Multigraph {
                n: g.n(),
                layers: g
                    .layers()
                    .iter()
                    .map(emit_graph6)
                    .collect::<Result<Vec<_>>>()?,
            },
        })
    }

    fn from_json_repr(repr: StructureJson) -> Result<Self> {
        Ok(match repr {
            StructureJson::Simple { graph6 } => AnyStructure::Simple(parse_graph6(&graph6)?),
            StructureJson::Colored {
                n,
                k,
                v,
                vertex_colors,
                edges,
            } => {
                let vertex_colors = if vertex_colors.is_empty() {
                    vec![0u8; n]
                } else {
                    vertex_colors
                };
                let v = v.unwrap_or_else(|| {
                    vertex_colors.iter().copied().max().unwrap_or(0) as usize + 1
                });
                AnyStructure::Colored(EdgeColoredGraph::new(n, k, v, &vertex_colors, &edges)?)
            }
            StructureJson::Hypergraph { n, m, edges } => {
                AnyStructure::Hypergraph(UniformHypergraph::from_vertex_lists(n, m, &edges)?)
            }
            StructureJson::Multigraph { n, layers } => {
                let graphs = layers
                    .iter()
                    .map(|s| {
                        let g = parse_graph6(s)?;
                        if g.n() != n {
                            return Err(Error::SizeMismatch {
                                left: n,
                                right: g.n(),
                            });
                        }
                        Ok(g)
                    })
                    .collect::<Result<Vec<_>>>()?;
                AnyStructure::Multigraph(MultiGraphTuple::new(graphs)?)
            }
        })
    }

    pub fn from_value(value: serde_json::Value) -> Result<Self> {
        if let serde_json::Value::String(s) = &value {
            return Ok(AnyStructure::Simple(parse_graph6(s)?));
        }
        Self::from_json_repr(serde_json::from_value(value)?)
    }

    /// Parses a one-structure text: JSON if it looks like an object,
    /// graph6 otherwise.
    pub fn parse_text(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.starts_with('{') {
            Self::from_json_repr(serde_json::from_str(trimmed)?)
        } else {
            Ok(AnyStructure::Simple(parse_graph6(trimmed)?))
        }
    }
}
