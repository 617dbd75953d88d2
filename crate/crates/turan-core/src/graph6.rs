//! graph6 interchange format (McKay): printable bytes 63..126, header
//! encodes n, then the upper triangle of the adjacency matrix in column
//! order, packed big-endian into 6-bit groups.

use crate::error::{Error, Result};
use crate::graph::{Graph, VERTEX_CAP};

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Encode a graph as a single graph6 line (no trailing newline).
pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        // 63 <= n <= 258047: '~' then three 6-bit groups, big-endian
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for col in 1..n {
        for row in 0..col {
            acc = (acc << 1) | g.has_edge(row, col) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).unwrap()
}

/// Decode one graph6 line. Rejects malformed headers, wrong body length
/// and trailing garbage, reporting the byte offset of the problem.
pub fn decode(text: &str) -> Result<Graph> {
    let b = text.trim_end_matches(['\n', '\r']).as_bytes();
    if b.is_empty() {
        return Err(err(0, "empty input"));
    }
    for (i, &c) in b.iter().enumerate() {
        if !(63..=126).contains(&c) {
            return Err(err(i, format!("byte {c} outside graph6 range 63..126")));
        }
    }
    let (n, body_at) = if b[0] == 126 {
        if b.len() >= 2 && b[1] == 126 {
            return Err(err(1, "256-bit vertex counts not supported"));
        }
        if b.len() < 4 {
            return Err(err(b.len(), "truncated vertex count"));
        }
        let n = ((b[1] as usize - 63) << 12) | ((b[2] as usize - 63) << 6) | (b[3] as usize - 63);
        if n <= 62 {
            return Err(err(1, "non-canonical long form for n <= 62"));
        }
        (n, 4)
    } else {
        (b[0] as usize - 63, 1)
    };
    if n > VERTEX_CAP {
        return Err(Error::Capacity { n, cap: VERTEX_CAP });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if b.len() < body_at + nbytes {
        return Err(err(b.len(), format!("body too short, expected {nbytes} bytes")));
    }
    if b.len() > body_at + nbytes {
        return Err(err(body_at + nbytes, "trailing garbage"));
    }
    let mut g = Graph::empty(n)?;
    let mut bit = 0usize;
    'outer: for col in 1..n {
        for row in 0..col {
            let byte = b[body_at + bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.insert_edge(row, col);
            }
            bit += 1;
            if bit == nbits {
                break 'outer;
            }
        }
    }
    Ok(g)
}
