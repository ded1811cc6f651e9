//! The graph6 text codec for simple graphs (short form, n ≤ 62).
//!
//! Layout: one header byte `n + 63`, then the upper-triangle adjacency bits
//! in column-major order — (0,1), (0,2), (1,2), (0,3), … — packed six per
//! byte, most significant bit first, each byte offset by 63. The final byte
//! is zero-padded. Long-form headers (`~`, for n > 62) are recognized and
//! rejected with a structured error.

use crate::canon::canonical_labeling;
use crate::error::{Graph6Error, Result};
use crate::graph::{SimpleGraph, Structure};

const OFFSET: u8 = 63;
const LONG_FORM: u8 = 126;

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Encodes the given labeling verbatim (no canonicalization).
pub fn emit_graph6(g: &SimpleGraph) -> Result<String> {
    let n = g.n();
    if n > 62 {
        return Err(Graph6Error::TooLarge { n }.into());
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(OFFSET + n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(OFFSET + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(OFFSET + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Encodes the canonical labeling of `g`'s class, so relabelings of one
/// graph all produce the same string.
pub fn emit_graph6_canonical(g: &SimpleGraph) -> Result<String> {
    let (_, labeling) = canonical_labeling(g)?;
    emit_graph6(&g.apply(&labeling)?)
}

/// Decodes a short-form graph6 string; strict about length and padding, so
/// `emit(parse(s)) == s` on every accepted input.
pub fn parse_graph6(text: &str) -> Result<SimpleGraph> {
    let bytes = text.as_bytes();
    let &header = bytes.first().ok_or(Graph6Error::Empty)?;
    if header == LONG_FORM {
        return Err(Graph6Error::UnsupportedLongForm.into());
    }
    if !(OFFSET..LONG_FORM).contains(&header) {
        return Err(Graph6Error::InvalidHeader { byte: header }.into());
    }
    let n = usize::from(header - OFFSET);
    let expected = body_len(n);
    let body = &bytes[1..];
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: body.len(),
        }
        .into());
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingData {
            expected,
            found: body.len(),
        }
        .into());
    }
    let mut edges = Vec::new();
    let mut bit_pos = 0usize;
    let total_bits = n * n.saturating_sub(1) / 2;
    let mut pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
    for (offset, &raw) in body.iter().enumerate() {
        if !(OFFSET..=OFFSET + 63).contains(&raw) {
            return Err(Graph6Error::InvalidBody {
                byte: raw,
                offset: offset + 1,
            }
            .into());
        }
        let chunk = raw - OFFSET;
        for k in 0..6 {
            let bit = chunk >> (5 - k) & 1;
            if bit_pos < total_bits {
                let pair = pairs.next().expect("pair iterator matches bit count");
                if bit == 1 {
                    edges.push(pair);
                }
            } else if bit != 0 {
                return Err(Graph6Error::NonzeroPadding.into());
            }
            bit_pos += 1;
        }
    }
    Ok(SimpleGraph::from_edges(n, &edges).expect("decoded pairs are in range"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{random_graph, random_permutation, SplitMix64};
    use crate::error::Error;

    #[test]
    fn known_strings() {
        // 63 + 1 = '@': the one-vertex graph.
        let g1 = parse_graph6("@").unwrap();
        assert_eq!((g1.n(), g1.edge_count()), (1, 0));
        assert_eq!(emit_graph6(&SimpleGraph::empty(1).unwrap()).unwrap(), "@");
        // "A_": K2.
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!((k2.n(), k2.edge_count()), (2, 1));
        // "B_" is a one-edge graph on 3 vertices (bit layout puts the edge
        // on the pair (0,1)).
        let g = parse_graph6("B_").unwrap();
        assert_eq!((g.n(), g.edge_count()), (3, 1));
        assert!(g.has_edge(0, 1));
        // "Bw": the triangle.
        let k3 = parse_graph6("Bw").unwrap();
        assert_eq!(k3, SimpleGraph::complete(3).unwrap());
        // Empty graph on 0 vertices: just the header.
        assert_eq!(emit_graph6(&SimpleGraph::empty(0).unwrap()).unwrap(), "?");
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
    }

    #[test]
    fn round_trip_on_random_graphs() {
        let mut rng = SplitMix64::new(0xfeed);
        for trial in 0..300 {
            let n = (trial % 20) + 1;
            let g = random_graph(n, 0.4, rng.next_u64()).unwrap();
            let text = emit_graph6(&g).unwrap();
            assert_eq!(parse_graph6(&text).unwrap(), g);
            assert_eq!(emit_graph6(&parse_graph6(&text).unwrap()).unwrap(), text);
        }
    }

    #[test]
    fn malformed_inputs_yield_structured_errors() {
        let cases: &[(&str, Graph6Error)] = &[
            ("", Graph6Error::Empty),
            ("~", Graph6Error::UnsupportedLongForm),
            ("~~ABC", Graph6Error::UnsupportedLongForm),
            (" ", Graph6Error::InvalidHeader { byte: b' ' }),
            (
                "B",
                Graph6Error::Truncated {
                    expected: 1,
                    found: 0,
                },
            ),
            (
                "B__",
                Graph6Error::TrailingData {
                    expected: 1,
                    found: 2,
                },
            ),
            (
                "@_",
                Graph6Error::TrailingData {
                    expected: 0,
                    found: 1,
                },
            ),
            (
                "B\n",
                Graph6Error::InvalidBody {
                    byte: b'\n',
                    offset: 1,
                },
            ),
            // n=2 has one data bit; '_' = 100000 sets it, 'O' = 010000 is
            // nonzero padding.
            ("AO", Graph6Error::NonzeroPadding),
        ];
        for (text, expected) in cases {
            match parse_graph6(text) {
                Err(Error::Graph6(e)) => assert_eq!(&e, expected, "input {text:?}"),
                other => panic!("input {text:?}: expected error, got {other:?}"),
            }
        }
    }

    #[test]
    fn emit_rejects_oversized() {
        let g = SimpleGraph::empty(63).unwrap();
        assert!(matches!(
            emit_graph6(&g),
            Err(Error::Graph6(Graph6Error::TooLarge { n: 63 }))
        ));
    }

    #[test]
    fn canonical_emit_is_relabeling_stable() {
        let mut rng = SplitMix64::new(31);
        let g = random_graph(8, 0.5, 99).unwrap();
        let canonical = emit_graph6_canonical(&g).unwrap();
        for _ in 0..50 {
            let p = random_permutation(8, &mut rng);
            assert_eq!(
                emit_graph6_canonical(&g.apply(&p).unwrap()).unwrap(),
                canonical
            );
        }
    }
}
