//! Strict graph6 codec.
//!
//! graph6 encodes a simple graph on `n` labeled vertices as printable ASCII
//! (bytes 63..=126): a size field (`chr(n+63)` for `n < 63`, or `'~'` plus
//! three 6-bit digits, big-endian, for `63 <= n < 258048`), followed by the
//! upper-triangle adjacency bits `x(0,1), x(0,2), x(1,2), x(0,3), ...`
//! (column-major), packed six per byte, most significant bit first, zero
//! padded to a byte boundary.
//!
//! Parsing is strict: anything that is not the canonical encoding of exactly
//! one graph is rejected — bad bytes, truncated or trailing data, nonzero
//! padding bits, and the long size form used for `n < 63`. The optional
//! `>>graph6<<` header is accepted on input and never emitted.

use crate::graph::Graph;
use thiserror::Error;

/// Optional input prefix, tolerated and stripped.
pub const HEADER: &str = ">>graph6<<";

const OFFSET: u8 = 63;
const LONG_FORM: u8 = 126;
/// Smallest order needing the 8-byte size form, which this codec rejects.
const MAX_LONG_N: usize = 258048;

/// Rejected graph6 input.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at position {pos} outside graph6 range 63..=126")]
    InvalidByte { pos: usize, byte: u8 },
    #[error("order {0} needs the 8-byte size form, which is not supported")]
    UnsupportedSize(usize),
    #[error("long size form used for order {0} < 63")]
    NonCanonicalSize(usize),
    #[error("adjacency data truncated: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing data: expected {expected} adjacency bytes, found {found}")]
    TrailingData { expected: usize, found: usize },
    #[error("nonzero padding bits")]
    NonzeroPadding,
}

/// Pairs `(i, j)`, `i < j`, in graph6 bit order (column-major by `j`).
fn pair_order(n: usize) -> impl Iterator<Item = (u32, u32)> {
    (1..n as u32).flat_map(|j| (0..j).map(move |i| (i, j)))
}

/// Decodes one graph6 line (optionally prefixed by [`HEADER`]).
///
/// ```
/// use eccaudit::graph6::parse_graph6;
/// let k3 = parse_graph6("Bw").unwrap();
/// assert_eq!((k3.n(), k3.m()), (3, 3));
/// ```
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.strip_prefix(HEADER).unwrap_or(line).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (pos, &byte) in bytes.iter().enumerate() {
        if !(OFFSET..=LONG_FORM).contains(&byte) {
            return Err(Graph6Error::InvalidByte { pos, byte });
        }
    }
    let (n, data) = if bytes[0] == LONG_FORM {
        if bytes.len() >= 2 && bytes[1] == LONG_FORM {
            return Err(Graph6Error::UnsupportedSize(MAX_LONG_N));
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated {
                expected: 3,
                found: bytes.len() - 1,
            });
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - OFFSET) as usize);
        if n < 63 {
            return Err(Graph6Error::NonCanonicalSize(n));
        }
        (n, &bytes[4..])
    } else {
        ((bytes[0] - OFFSET) as usize, &bytes[1..])
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    match data.len() {
        found if found < expected => return Err(Graph6Error::Truncated { expected, found }),
        found if found > expected => return Err(Graph6Error::TrailingData { expected, found }),
        _ => {}
    }
    let bit = |t: usize| (data[t / 6] - OFFSET) >> (5 - t % 6) & 1 == 1;
    if (nbits..expected * 6).any(bit) {
        return Err(Graph6Error::NonzeroPadding);
    }
    let edges: Vec<(u32, u32)> = pair_order(n)
        .enumerate()
        .filter(|&(t, _)| bit(t))
        .map(|(_, uv)| uv)
        .collect();
    Ok(Graph::new(n, &edges).expect("decoded edges are in range and distinct"))
}

/// Encodes a graph canonically, without header. Panics if `n >= 258048`.
///
/// ```
/// use eccaudit::{graph::Graph, graph6::encode_graph6};
/// let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
/// assert_eq!(encode_graph6(&p3), "Bg");
/// ```
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n < MAX_LONG_N, "order {n} too large for this codec");
    let mut out: Vec<u8> = if n < 63 {
        vec![OFFSET + n as u8]
    } else {
        vec![
            LONG_FORM,
            OFFSET + (n >> 12 & 63) as u8,
            OFFSET + (n >> 6 & 63) as u8,
            OFFSET + (n & 63) as u8,
        ]
    };
    let mut acc = 0u8;
    let mut used = 0u8;
    for (i, j) in pair_order(n) {
        acc = acc << 1 | u8::from(g.has_edge(i as usize, j as usize));
        used += 1;
        if used == 6 {
            out.push(OFFSET + acc);
            acc = 0;
            used = 0;
        }
    }
    if used > 0 {
        out.push(OFFSET + (acc << (6 - used)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
