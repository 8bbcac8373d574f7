//! Standard graph6 encoding (single-byte order header, `n <= 62`).
//!
//! The upper triangle of the adjacency matrix is read column by column,
//! `(0,1), (0,2), (1,2), (0,3), ...`, packed six bits per byte with the most
//! significant bit first, zero padded, and offset by 63.

use thiserror::Error;

use crate::graph::Graph;

/// Largest order expressible with a one-byte header.
pub const MAX_GRAPH6_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("unsupported graph6 header byte {0:#04x}")]
    BadHeader(u8),
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("expected {expected} bytes, got {found}")]
    Length { expected: usize, found: usize },
    #[error("nonzero padding bits")]
    Padding,
    #[error("graphs of order {0} need an extended header")]
    TooLarge(usize),
}

fn body_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Encodes `g`. Panics if `g.order() > 62`; use [`try_to_graph6`] to check.
pub fn to_graph6(g: &Graph) -> String {
    try_to_graph6(g).expect("graph6 supports n <= 62")
}

pub fn try_to_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.is_adjacent(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 is ASCII"))
}

/// Decodes one graph6 string. Surrounding whitespace is not accepted.
pub fn from_graph6(text: &[u8]) -> Result<Graph, Graph6Error> {
    let (&header, body) = text.split_first().ok_or(Graph6Error::Empty)?;
    if !(63..=63 + MAX_GRAPH6_ORDER as u8).contains(&header) || header == 63 {
        return Err(Graph6Error::BadHeader(header));
    }
    let n = (header - 63) as usize;
    let expected = body_len(n);
    if body.len() != expected {
        return Err(Graph6Error::Length {
            expected: expected + 1,
            found: text.len(),
        });
    }
    let mut bits = Vec::with_capacity(expected * 6);
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadByte { offset: i + 1, byte: b });
        }
        let v = b - 63;
        bits.extend((0..6).rev().map(|k| v >> k & 1 == 1));
    }
    let pairs = n * (n - 1) / 2;
    if bits[pairs..].iter().any(|&b| b) {
        return Err(Graph6Error::Padding);
    }
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows(adj))
}

impl std::str::FromStr for Graph {
    type Err = Graph6Error;

    fn from_str(s: &str) -> Result<Graph, Graph6Error> {
        from_graph6(s.as_bytes())
    }
}
