//! graph6 encoding and decoding for graphs on at most 62 vertices.
//!
//! The layout is the standard one: a single size byte `n + 63`, then the
//! upper triangle of the adjacency matrix in column-major order (pair
//! `(i, j)` with `i < j` ordered by `j` then `i`), packed into 6-bit
//! groups, each group emitted as `value + 63`. The optional
//! `>>graph6<<` header is accepted on input and never emitted.

use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("invalid byte 0x{byte:02x} at offset {offset}")]
    InvalidByte { byte: u8, offset: usize },
    #[error("order {n} at offset {offset} exceeds the supported maximum of {MAX_VERTICES}")]
    UnsupportedOrder { n: usize, offset: usize },
    #[error("truncated data: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing data at offset {offset}")]
    TrailingData { offset: usize },
    #[error("nonzero padding bits at offset {offset}")]
    NonzeroPadding { offset: usize },
}

/// Parses a graph6 string. Trailing ASCII whitespace is tolerated; all
/// reported offsets are byte offsets into the original input.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    if text.starts_with(HEADER) {
        pos = HEADER.len();
    }
    let end = {
        let mut e = bytes.len();
        while e > pos && bytes[e - 1].is_ascii_whitespace() {
            e -= 1;
        }
        e
    };
    if pos >= end {
        return Err(Graph6Error::Empty);
    }

    let size_byte = bytes[pos];
    if size_byte == 126 {
        // Multi-byte order encoding means n > 62.
        return Err(Graph6Error::UnsupportedOrder { n: 63, offset: pos });
    }
    if !(63..=125).contains(&size_byte) {
        return Err(Graph6Error::InvalidByte { byte: size_byte, offset: pos });
    }
    let n = (size_byte - 63) as usize;
    pos += 1;

    let pair_count = n * n.saturating_sub(1) / 2;
    let data_len = pair_count.div_ceil(6);
    let avail = end - pos;
    if avail < data_len {
        return Err(Graph6Error::Truncated { expected: data_len, found: avail });
    }
    if avail > data_len {
        return Err(Graph6Error::TrailingData { offset: pos + data_len });
    }

    let mut adj = vec![0u64; n];
    let mut pair = 0usize;
    'cols: for j in 1..n {
        for i in 0..j {
            let byte_idx = pos + pair / 6;
            let b = bytes[byte_idx];
            if !(63..=126).contains(&b) {
                return Err(Graph6Error::InvalidByte { byte: b, offset: byte_idx });
            }
            let group = b - 63;
            let bit_in_group = 5 - (pair % 6);
            if group >> bit_in_group & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            pair += 1;
            if pair == pair_count {
                break 'cols;
            }
        }
    }
    // Padding bits in the last group must be zero. The byte itself was
    // range-checked while its pairs were read.
    if pair_count % 6 != 0 {
        let byte_idx = pos + data_len - 1;
        let group = bytes[byte_idx] - 63;
        let pad_bits = 6 - pair_count % 6;
        if group & ((1 << pad_bits) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding { offset: byte_idx });
        }
    }
    Ok(Graph::from_adj_unchecked(adj))
}

/// Encodes a graph in graph6, without a header.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    assert!(n <= MAX_VERTICES, "graph6 encoding supports n <= {MAX_VERTICES}");
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((group + 63) as char);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        group <<= 6 - filled;
        out.push((group + 63) as char);
    }
    out
}
