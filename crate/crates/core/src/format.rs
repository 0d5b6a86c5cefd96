//! Text formats: graph6, plain edge lists and DOT.
//!
//! graph6 follows the usual layout: a size header, then the upper
//! triangle of the adjacency matrix in column order (`x(0,1), x(0,2),
//! x(1,2), x(0,3), ...`) packed big-endian into 6-bit groups, each group
//! offset by 63.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphBuilder, GraphError, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("graph6: empty input")]
    Empty,
    #[error("graph6: illegal byte {byte:#04x} at offset {offset}")]
    IllegalByte { offset: usize, byte: u8 },
    #[error("graph6: malformed size header at offset {offset}")]
    BadHeader { offset: usize },
    #[error("graph6: expected {expected} bytes of edge data, found {found} (truncated at offset {offset})")]
    Truncated {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("graph6: {extra} trailing bytes after edge data at offset {offset}")]
    TrailingData { offset: usize, extra: usize },
    #[error("graph6: nonzero padding bits in final byte at offset {offset}")]
    NonzeroPadding { offset: usize },
    #[error("edge list, line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

const HEADER: &str = ">>graph6<<";
const MAX_N: u64 = 68_719_476_735;

fn byte_at(bytes: &[u8], offset: usize) -> Result<u8, FormatError> {
    let b = *bytes.get(offset).ok_or(FormatError::BadHeader { offset })?;
    if !(63..=126).contains(&b) {
        return Err(FormatError::IllegalByte { offset, byte: b });
    }
    Ok(b - 63)
}

/// Decodes one graph6 line. Surrounding whitespace and an optional
/// `>>graph6<<` header are ignored; offsets in errors refer to the
/// trimmed text.
pub fn from_graph6(text: &str) -> Result<Graph, FormatError> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::Empty);
    }
    let (n, mut pos) = if bytes[0] != 126 {
        (byte_at(bytes, 0)? as usize, 1)
    } else if bytes.get(1) != Some(&126) {
        let mut n = 0usize;
        for i in 1..4 {
            n = n << 6 | byte_at(bytes, i)? as usize;
        }
        if n < 63 {
            return Err(FormatError::BadHeader { offset: 0 });
        }
        (n, 4)
    } else {
        let mut n = 0usize;
        for i in 2..8 {
            n = n << 6 | byte_at(bytes, i)? as usize;
        }
        if n < 258_048 {
            return Err(FormatError::BadHeader { offset: 0 });
        }
        (n, 8)
    };

    let found = bytes.len() - pos;
    let wide = n as u128 * (n as u128).saturating_sub(1) / 2;
    if wide.div_ceil(6) > found as u128 {
        return Err(FormatError::Truncated {
            offset: bytes.len(),
            expected: usize::try_from(wide.div_ceil(6)).unwrap_or(usize::MAX),
            found,
        });
    }
    let nbits = wide as usize;
    let expected = nbits.div_ceil(6);
    if found > expected {
        return Err(FormatError::TrailingData {
            offset: pos + expected,
            extra: found - expected,
        });
    }

    let mut b = GraphBuilder::new(n);
    let (mut i, mut j) = (0usize, 1usize);
    let mut remaining = nbits;
    while remaining > 0 {
        let offset = pos;
        let group = byte_at(bytes, offset)?;
        pos += 1;
        let take = remaining.min(6);
        for k in 0..6 {
            let bit = group >> (5 - k) & 1 == 1;
            if k >= take {
                if bit {
                    return Err(FormatError::NonzeroPadding { offset });
                }
                continue;
            }
            if bit {
                b.set(i, j);
            }
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
        remaining -= take;
    }
    Ok(b.build())
}

/// Encodes a graph as graph6 (no header, no newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n as u64 <= MAX_N, "graph too large for graph6");
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

/// Parses `n m` followed by `m` lines `u v` (0-based). Blank lines and
/// lines starting with `#` are skipped.
pub fn from_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let err = |line, msg: &str| FormatError::EdgeList {
        line,
        msg: msg.to_string(),
    };
    let (hl, header) = lines.next().ok_or_else(|| err(1, "missing `n m` header"))?;
    let nums = parse_pair(header).ok_or_else(|| err(hl, "header must be `n m`"))?;
    let (n, m) = nums;
    let mut b = GraphBuilder::new(n);
    let mut count = 0;
    for (ln, line) in lines {
        let (u, v) = parse_pair(line).ok_or_else(|| err(ln, "expected `u v`"))?;
        if u < n && v < n && u != v && b.has_edge(u, v) {
            return Err(err(ln, "duplicate edge"));
        }
        b.add_edge(u, v).map_err(|e| err(ln, &e.to_string()))?;
        count += 1;
    }
    if count != m {
        return Err(err(hl, &format!("header announces {m} edges, found {count}")));
    }
    Ok(b.build())
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Undirected DOT; vertices in `highlight` are filled.
pub fn to_dot(g: &Graph, name: &str, highlight: Option<&VertexSet>) -> String {
    let mut out = format!("graph \"{name}\" {{\n");
    for v in 0..g.n() {
        if highlight.is_some_and(|h| h.contains(v)) {
            let _ = writeln!(out, "  {v} [style=filled, fillcolor=\"#f4a261\"];");
        } else {
            let _ = writeln!(out, "  {v};");
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// Picks graph6 or edge-list by looking at the first meaningful line.
pub fn parse_auto(text: &str) -> Result<Graph, FormatError> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if parse_pair(l).is_some() => from_edge_list(text),
        _ => from_graph6(text),
    }
}
