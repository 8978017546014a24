//! Bit-exact graph6 encoding and decoding.
//!
//! Format: optional `>>graph6<<` header, a size field N(n), then
//! `ceil(n(n-1)/2 / 6)` payload bytes. Each payload byte is a 6-bit group
//! biased by 63 (so bytes run from 63 to 126). The bits are the upper
//! triangle of the adjacency matrix in column-major order — pair (i, j)
//! with i < j appears at bit position `j(j-1)/2 + i` — packed most
//! significant bit first, zero padded.

use crate::graph::{Graph, GraphError, VertexSet, MAX_ORDER};
use thiserror::Error;

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("graph6 byte {byte:#x} at position {pos} outside the printable range 63..=126")]
    ByteOutOfRange { pos: usize, byte: u8 },
    #[error("graph6 order {n} exceeds the supported maximum {MAX_ORDER}")]
    OrderTooLarge { n: usize },
    #[error("truncated graph6 payload: expected {expected} bytes, got {got}")]
    Truncated { expected: usize, got: usize },
    #[error("trailing data after graph6 payload: expected {expected} bytes, got {got}")]
    TrailingData { expected: usize, got: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Encodes a graph as a graph6 string (no header).
pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        // four-byte size field: 126 then n in three 6-bit groups, big-endian
        out.push(126);
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group <<= 1;
            if g.has_edge(i, j) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        group <<= 6 - filled;
        out.push(63 + group);
    }
    debug_assert_eq!(out.len(), size_field_len(n) + nbits.div_ceil(6));
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes a single graph6 line. A leading `>>graph6<<` header is accepted.
pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\r', '\n']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::ByteOutOfRange { pos, byte: b });
        }
    }
    let (n, header_len) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // canonical only for n >= 258048, always beyond our cap
            return Err(Graph6Error::OrderTooLarge { n: usize::MAX });
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated {
                expected: 4,
                got: bytes.len(),
            });
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    if n > MAX_ORDER {
        return Err(Graph6Error::OrderTooLarge { n });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = header_len + nbits.div_ceil(6);
    if bytes.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            got: bytes.len(),
        });
    }
    if bytes.len() > expected {
        return Err(Graph6Error::TrailingData {
            expected,
            got: bytes.len(),
        });
    }

    let mut adj = vec![VertexSet::EMPTY; n];
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[header_len + bit / 6] - 63;
            if (byte >> (5 - bit % 6)) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            bit += 1;
        }
    }
    let edges: Vec<(usize, usize)> = adj
        .iter()
        .enumerate()
        .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
        .collect();
    Ok(Graph::build(n, &edges)?)
}

fn size_field_len(n: usize) -> usize {
    if n <= 62 {
        1
    } else {
        4
    }
}
