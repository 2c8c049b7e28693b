//! graph6 encoding for undirected graphs of order at most 128.
//!
//! Layout: a size field followed by the upper triangle of the adjacency
//! matrix read column by column, `(0,1), (0,2), (1,2), (0,3), ...`, packed
//! big-endian into 6-bit groups, each stored as `63 + value`. Orders up to 62
//! use a single size byte; larger orders use `126` followed by three bytes.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_ORDER};

pub const HEADER: &[u8] = b">>graph6<<";

/// Largest order the codec accepts regardless of the row width.
pub const GRAPH6_MAX_ORDER: usize = 128;

fn malformed(offset: usize, reason: impl Into<String>) -> Error {
    Error::MalformedGraph6 {
        offset,
        reason: reason.into(),
    }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8> {
    match bytes.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok(b - 63),
        Some(&b) => Err(malformed(offset, format!("byte {b} outside [63, 126]"))),
        None => Err(malformed(offset, "truncated input")),
    }
}

/// Parses a single graph6 line. A leading `>>graph6<<` header and trailing
/// line terminators are accepted.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let mut end = text.len();
    while end > 0 && matches!(text[end - 1], b'\n' | b'\r') {
        end -= 1;
    }
    let start = if text.starts_with(HEADER) { HEADER.len() } else { 0 };
    let bytes = &text[..end];

    let first = sextet(bytes, start)?;
    let (n, mut pos) = if first < 63 {
        (first as usize, start + 1)
    } else {
        let mut n = 0usize;
        for i in 1..=3 {
            n = n << 6 | sextet(bytes, start + i)? as usize;
        }
        if n < 63 {
            return Err(malformed(start, format!("long size form used for order {n}")));
        }
        (n, start + 4)
    };
    if n == 0 {
        return Err(malformed(start, "order 0"));
    }
    if n > GRAPH6_MAX_ORDER || n > MAX_ORDER {
        return Err(malformed(
            start,
            format!("order {n} exceeds the supported maximum of {}", GRAPH6_MAX_ORDER.min(MAX_ORDER)),
        ));
    }

    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    let payload_start = pos;
    if bytes.len() < payload_start + nbytes {
        return Err(malformed(bytes.len(), "truncated payload"));
    }
    if bytes.len() > payload_start + nbytes {
        return Err(malformed(payload_start + nbytes, "trailing bytes after payload"));
    }

    let mut rows = vec![VertexSet::EMPTY; n];
    let mut bit = 0usize;
    let mut current = 0u8;
    for j in 1..n {
        for i in 0..j {
            if bit % 6 == 0 {
                current = sextet(bytes, pos)?;
                pos += 1;
            }
            if current >> (5 - bit % 6) & 1 == 1 {
                rows[i] = rows[i].with(j);
                rows[j] = rows[j].with(i);
            }
            bit += 1;
        }
    }
    if bit % 6 != 0 {
        let pad_mask = (1u8 << (6 - bit % 6)) - 1;
        if current & pad_mask != 0 {
            return Err(malformed(pos - 1, "nonzero padding bits"));
        }
    }
    // Any byte never read (n == 1) still has to be validated.
    for offset in pos..payload_start + nbytes {
        sextet(bytes, offset)?;
    }
    Graph::from_rows(rows)
}

/// Encodes `g` as a graph6 string without header or newline.
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::OrderTooLarge {
            n,
            max: GRAPH6_MAX_ORDER,
        });
    }
    let mut out = Vec::with_capacity(4 + (n * n) / 12 + 1);
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + (n >> shift & 0x3f) as u8);
        }
    }
    let mut current = 0u8;
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            current = current << 1 | g.has_edge(i, j) as u8;
            bit += 1;
            if bit % 6 == 0 {
                out.push(63 + current);
                current = 0;
            }
        }
    }
    if bit % 6 != 0 {
        out.push(63 + (current << (6 - bit % 6)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
