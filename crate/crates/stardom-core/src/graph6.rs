//! graph6 codec.
//!
//! A record is `N(n)` followed by the upper triangle of the adjacency matrix
//! in column-major order — bits (0,1), (0,2), (1,2), (0,3), ... — packed
//! big-endian into 6-bit groups, each offset by 63 into the printable range
//! `?`..`~`. Only the single-byte order form is supported (`n <= 62`), so
//! every graph this crate enumerates or reads stays within the 64-vertex
//! adjacency cap.
//!
//! Parsing is strict: every byte must be in range, the record must end
//! exactly at the last group, and padding bits must be zero. That keeps
//! encode and parse mutually inverse, byte for byte.

use alloc::string::String;

use crate::graph::triangle_pairs;
use crate::{Error, Graph, Result};

const HEADER: &str = ">>graph6<<";

/// Encode a graph as a graph6 record (without trailing newline).
pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > 62 {
        return Err(Error::InvalidArgument("graph6 single-byte records support at most 62 vertices"));
    }
    let mut out = String::new();
    out.push((63 + n as u8) as char);
    let pairs = triangle_pairs(n);
    let mut group = 0u8;
    let mut filled = 0;
    for (i, j) in pairs {
        group <<= 1;
        if g.has_edge(i, j) {
            group |= 1;
        }
        filled += 1;
        if filled == 6 {
            out.push((63 + group) as char);
            group = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        group <<= 6 - filled;
        out.push((63 + group) as char);
    }
    Ok(out)
}

/// Parse one graph6 record. A leading `>>graph6<<` header is tolerated and
/// skipped; anything else out of place reports its byte offset.
pub fn parse_graph6(record: &str) -> Result<Graph> {
    let record = record.strip_suffix('\n').unwrap_or(record);
    let skipped = if record.starts_with(HEADER) { HEADER.len() } else { 0 };
    let bytes = record.as_bytes();
    let body = &bytes[skipped..];
    let at = |i: usize| skipped + i;

    let &first = body
        .first()
        .ok_or(Error::Graph6 { offset: at(0), reason: "empty record" })?;
    if first == 126 {
        return Err(Error::Graph6 {
            offset: at(0),
            reason: "multi-byte order form (n > 62) is not supported",
        });
    }
    if !(63..=126).contains(&first) {
        return Err(Error::Graph6 { offset: at(0), reason: "order byte out of range" });
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(Error::Graph6 { offset: at(0), reason: "graph must have at least one vertex" });
    }

    let bit_count = n * (n - 1) / 2;
    let group_count = (bit_count + 5) / 6;
    if body.len() < 1 + group_count {
        return Err(Error::Graph6 { offset: at(body.len()), reason: "record truncated" });
    }
    if body.len() > 1 + group_count {
        return Err(Error::Graph6 { offset: at(1 + group_count), reason: "trailing bytes after record" });
    }

    let pairs = triangle_pairs(n);
    let mut g = Graph::new(n)?;
    for (gidx, &byte) in body[1..].iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Error::Graph6 { offset: at(1 + gidx), reason: "data byte out of range" });
        }
        let group = byte - 63;
        for b in 0..6 {
            let k = gidx * 6 + b;
            let bit = group >> (5 - b) & 1;
            if k >= bit_count {
                if bit != 0 {
                    return Err(Error::Graph6 {
                        offset: at(1 + gidx),
                        reason: "nonzero padding bits",
                    });
                }
            } else if bit == 1 {
                let (i, j) = pairs[k];
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g)
}
