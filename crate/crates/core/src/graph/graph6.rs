//! graph6 text encoding.
//!
//! The upper triangle of the adjacency matrix is read column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed six bits per byte, most
//! significant bit first, and each 6-bit group is offset by 63. The order is
//! prefixed by a 1-, 4- or 8-byte header.

use thiserror::Error;

use super::Graph;

/// Largest order accepted by the decoder.
pub const GRAPH6_MAX_ORDER: usize = 1_000_000;

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph6 parse error at byte {offset}: {kind}")]
pub struct Graph6Error {
    pub offset: usize,
    pub kind: Graph6ErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6ErrorKind {
    #[error("empty record")]
    Empty,
    #[error("character {0:#04x} outside the printable range 63..=126")]
    CharOutOfRange(u8),
    #[error("truncated order header")]
    TruncatedHeader,
    #[error("order {0} exceeds the accepted maximum of {GRAPH6_MAX_ORDER}")]
    TooLarge(u64),
    #[error("expected {expected} adjacency bytes, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("nonzero padding bits after the last adjacency bit")]
    NonzeroPadding,
}

fn err(offset: usize, kind: Graph6ErrorKind) -> Graph6Error {
    Graph6Error { offset, kind }
}

fn encode_order(n: usize, out: &mut String) {
    let push6 = |out: &mut String, v: u64| out.push(char::from((v & 63) as u8 + 63));
    if n <= 62 {
        push6(out, n as u64);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            push6(out, (n as u64) >> shift);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            push6(out, (n as u64) >> shift);
        }
    }
}

/// graph6 line for `g` in its given labeling (no trailing newline).
pub fn graph6_encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(char::from(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(char::from((acc << (6 - filled)) + 63));
    }
    out
}

/// Parses one graph6 record. Surrounding whitespace and an optional
/// `>>graph6<<` header are ignored.
pub fn graph6_decode(record: &str) -> Result<Graph, Graph6Error> {
    let trimmed = record.trim_end_matches(['\n', '\r']);
    let (base, body) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    if body.is_empty() {
        return Err(err(base, Graph6ErrorKind::Empty));
    }
    let values: Vec<u8> = body
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            if (63..=126).contains(&c) {
                Ok(c - 63)
            } else {
                Err(err(base + i, Graph6ErrorKind::CharOutOfRange(c)))
            }
        })
        .collect::<Result<_, _>>()?;

    let read = |from: usize, count: usize| -> Result<u64, Graph6Error> {
        if values.len() < from + count {
            return Err(err(base + values.len(), Graph6ErrorKind::TruncatedHeader));
        }
        Ok(values[from..from + count].iter().fold(0u64, |acc, &v| (acc << 6) | v as u64))
    };
    let (n, start) = if values[0] != 63 {
        (values[0] as u64, 1)
    } else if values.get(1) != Some(&63) {
        (read(1, 3)?, 4)
    } else {
        (read(2, 6)?, 8)
    };
    if n > GRAPH6_MAX_ORDER as u64 {
        return Err(err(base, Graph6ErrorKind::TooLarge(n)));
    }
    let n = n as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let data = &values[start..];
    if data.len() != expected {
        return Err(err(
            base + start,
            Graph6ErrorKind::WrongLength { expected, found: data.len() },
        ));
    }
    if !bits.is_multiple_of(6) {
        let pad = 6 - bits % 6;
        if data[expected - 1] & ((1 << pad) - 1) != 0 {
            return Err(err(base + start + expected - 1, Graph6ErrorKind::NonzeroPadding));
        }
    }
    let bit = |k: usize| (data[k / 6] >> (5 - k % 6)) & 1 == 1;
    let mut k = 0;
    let mut adj = vec![Vec::new(); n];
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                adj[i].push(j);
                adj[j].push(i);
            }
            k += 1;
        }
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    Ok(Graph::from_sorted_adjacency(adj))
}
