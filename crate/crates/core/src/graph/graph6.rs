//! The graph6 text encoding (one graph per line, upper triangle packed
//! column by column into 6-bit printable characters).

use super::Graph;
use crate::error::{GraphError, Result};

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;

fn parse_error(offset: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Parses one graph6 line. A leading `>>graph6<<` header and trailing
/// line terminators are ignored; byte offsets in errors are relative to the
/// line as given.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let skip = if line.starts_with(HEADER) { HEADER.len() } else { 0 };
    let bytes = &line.as_bytes()[skip..];

    if bytes.is_empty() {
        return Err(parse_error(skip, "empty input"));
    }
    if matches!(bytes[0], b':' | b';' | b'&') {
        return Err(parse_error(skip, "sparse6/digraph6 lines are not graph6"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return Err(parse_error(skip + i, format!("byte 0x{b:02x} is outside the graph6 range")));
        }
    }

    let (n, body_start) = decode_order(bytes).map_err(|(offset, reason)| parse_error(skip + offset, reason))?;

    let bit_count = n * n.saturating_sub(1) / 2;
    let byte_count = bit_count.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() < byte_count {
        return Err(parse_error(
            skip + bytes.len(),
            format!("truncated: {n} vertices need {byte_count} data bytes, found {}", body.len()),
        ));
    }
    if body.len() > byte_count {
        return Err(parse_error(skip + body_start + byte_count, "trailing bytes after the adjacency data"));
    }

    let bit = |k: usize| (body[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;

    let mut adjacency = vec![Vec::new(); n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                adjacency[i].push(j);
                adjacency[j].push(i);
            }
            k += 1;
        }
    }
    for pad in bit_count..byte_count * 6 {
        if bit(pad) {
            return Err(parse_error(skip + body_start + pad / 6, "non-zero padding bits"));
        }
    }
    Ok(Graph::from_raw_adjacency(adjacency))
}

fn decode_order(bytes: &[u8]) -> std::result::Result<(usize, usize), (usize, &'static str)> {
    let word = |range: std::ops::Range<usize>| {
        range.fold(0usize, |acc, i| (acc << 6) | usize::from(bytes[i] - BIAS))
    };
    if bytes[0] != 126 {
        return Ok((usize::from(bytes[0] - BIAS), 1));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err((bytes.len(), "truncated 36-bit vertex count"));
        }
        Ok((word(2..8), 8))
    } else {
        if bytes.len() < 4 {
            return Err((bytes.len(), "truncated 18-bit vertex count"));
        }
        Ok((word(1..4), 4))
    }
}

/// Encodes `g` as a graph6 line without header or trailing newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    let push_word = |out: &mut Vec<u8>, value: usize, chunks: u32| {
        for c in (0..chunks).rev() {
            out.push(BIAS + ((value >> (6 * c)) & 0x3f) as u8);
        }
    };
    if n <= 62 {
        out.push(BIAS + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        push_word(&mut out, n, 3);
    } else {
        out.push(126);
        out.push(126);
        push_word(&mut out, n, 6);
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(BIAS + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(BIAS + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}
