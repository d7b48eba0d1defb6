//! graph6 encoding and decoding, bit-exact per the format definition.
//!
//! The size field is `chr(n+63)` for `n <= 62` and the 4-byte extended form
//! `chr(126)` plus three 6-bit groups for `63 <= n <= 64`. The body packs the
//! upper triangle of the adjacency matrix column by column, 6 bits per byte,
//! each byte offset by 63, padding bits zero.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const OFFSET: u8 = 63;
const HEADER: &[u8] = b">>graph6<<";

/// Encode a graph under its current labelling (no relabelling, no trailing
/// newline, no optional header).
pub fn write_graph6(g: &Graph) -> Result<Vec<u8>> {
    let n = g.n();
    if n > MAX_VERTICES {
        return Err(Error::Capability(format!(
            "write_graph6 supports n <= {MAX_VERTICES}, got {n}"
        )));
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + OFFSET);
        out.push(((n >> 6) & 0x3f) as u8 + OFFSET);
        out.push((n & 0x3f) as u8 + OFFSET);
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for col in 1..n {
        for row in 0..col {
            acc = (acc << 1) | u8::from(g.has_edge(row, col));
            nbits += 1;
            if nbits == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + OFFSET);
    }
    Ok(out)
}

/// Convenience: the encoding as a `String` (graph6 is always ASCII).
pub fn write_graph6_string(g: &Graph) -> Result<String> {
    Ok(String::from_utf8(write_graph6(g)?).expect("graph6 is ascii"))
}

/// Decode one graph6 line. An optional `>>graph6<<` header is accepted and
/// stripped; a trailing newline is not (callers split lines).
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let (text, base) = if text.starts_with(HEADER) {
        (&text[HEADER.len()..], HEADER.len())
    } else {
        (text, 0)
    };
    if text.is_empty() {
        return Err(Error::Parse {
            offset: base,
            msg: "empty graph6 string".into(),
        });
    }
    let pos: usize;
    let n: usize;
    if text[0] == 126 {
        if text.len() >= 2 && text[1] == 126 {
            return Err(Error::Capability(
                "graph6 orders beyond 64 vertices are unsupported".into(),
            ));
        }
        if text.len() < 4 {
            return Err(Error::Parse {
                offset: base + text.len(),
                msg: "truncated extended length field".into(),
            });
        }
        let mut value = 0usize;
        for (i, &b) in text.iter().enumerate().take(4).skip(1) {
            if !(OFFSET..=126).contains(&b) {
                return Err(Error::Parse {
                    offset: base + i,
                    msg: format!("byte {b} outside graph6 range [63,126]"),
                });
            }
            value = (value << 6) | (b - OFFSET) as usize;
        }
        n = value;
        pos = 4;
    } else {
        let b = text[0];
        if !(OFFSET..=126).contains(&b) {
            return Err(Error::Parse {
                offset: base,
                msg: format!("byte {b} outside graph6 range [63,126]"),
            });
        }
        n = (b - OFFSET) as usize;
        pos = 1;
    }
    if n > MAX_VERTICES {
        return Err(Error::Capability(format!(
            "graph6 order {n} exceeds the supported maximum {MAX_VERTICES}"
        )));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if text.len() < pos + nbytes {
        return Err(Error::Parse {
            offset: base + text.len(),
            msg: format!(
                "truncated body: expected {nbytes} data bytes for n={n}, found {}",
                text.len() - pos
            ),
        });
    }
    if text.len() > pos + nbytes {
        return Err(Error::Parse {
            offset: base + pos + nbytes,
            msg: "trailing data after graph6 body".into(),
        });
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for (i, &b) in text[pos..].iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(Error::Parse {
                offset: base + pos + i,
                msg: format!("byte {b} outside graph6 range [63,126]"),
            });
        }
        let mut group = b - OFFSET;
        for k in 0..6 {
            let set = group & 0x20 != 0;
            group <<= 1;
            if bit + k < nbits {
                if set {
                    let (row, col) = triangle_position(bit + k);
                    edges.push((row, col));
                }
            } else if set {
                return Err(Error::Parse {
                    offset: base + pos + i,
                    msg: "nonzero padding bits".into(),
                });
            }
        }
        bit += 6;
    }
    Graph::from_edges(n, &edges)
}

/// Map a bit index in column-major upper-triangle order to `(row, col)`.
fn triangle_position(idx: usize) -> (usize, usize) {
    // Column c starts at bit c(c-1)/2.
    let mut col = 1usize;
    let mut start = 0usize;
    while start + col <= idx {
        start += col;
        col += 1;
    }
    (idx - start, col)
}
