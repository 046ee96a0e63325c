//! graph6 text encoding, bit-exact per McKay's format description:
//! size header N(n), then the upper triangle column-by-column packed into
//! big-endian 6-bit groups, each group offset by 63 into printable ASCII.
//!
//! The vertex cap here is [`MAX_VERTICES`] (64), so only the one-byte
//! (n <= 62) and four-byte (n <= 258047) header forms ever occur.

use crate::error::Error;
use crate::graph::{Graph, MAX_VERTICES};

fn parse_err(offset: usize, reason: &str) -> Error {
    Error::Graph6Parse {
        offset,
        reason: reason.to_string(),
    }
}

/// Parses a single graph6 line.
pub fn parse_graph6(text: &str) -> Result<Graph, Error> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(0, "empty input"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(i, &format!("byte {b} outside graph6 range 63..=126")));
        }
    }
    let (n, header_len) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else {
        // 126 introduces the four-byte form; 126 126 the eight-byte form,
        // which is always beyond our cap.
        if bytes.len() < 4 {
            return Err(parse_err(bytes.len(), "truncated multi-byte size header"));
        }
        if bytes[1] == 126 {
            return Err(parse_err(1, "eight-byte size header exceeds vertex cap"));
        }
        let n = ((bytes[1] - 63) as usize) << 12
            | ((bytes[2] - 63) as usize) << 6
            | (bytes[3] - 63) as usize;
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(parse_err(0, &format!("n={n} exceeds vertex cap {MAX_VERTICES}")));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < header_len + nbytes {
        return Err(parse_err(bytes.len(), "truncated adjacency bit field"));
    }
    if bytes.len() > header_len + nbytes {
        return Err(parse_err(header_len + nbytes, "trailing bytes after adjacency bit field"));
    }
    let mut g = Graph::new(n)?;
    let mut pos = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = bytes[header_len + pos / 6] - 63;
            if byte >> (5 - pos % 6) & 1 == 1 {
                g.add_edge(u, v)?;
            }
            pos += 1;
        }
    }
    Ok(g)
}

/// Emits the graph6 line for the labeled adjacency of `g`. No isomorphism
/// canonicalization: equal labeled graphs give equal bytes, nothing more.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        out.push(63 + ((n >> 12) & 0x3f) as u8);
        out.push(63 + ((n >> 6) & 0x3f) as u8);
        out.push(63 + (n & 0x3f) as u8);
    }
    let mut acc = 0u8;
    let mut filled = 0u32;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).unwrap()
}
