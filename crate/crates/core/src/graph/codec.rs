//! Text encodings: graph6, whitespace edge lists and JSON.
//!
//! graph6 follows the nauty definition: a size header `N(n)` followed by the
//! upper triangle of the adjacency matrix in column order (`(0,1), (0,2),
//! (1,2), (0,3), ...`), packed six bits per byte, big-endian, plus 63.

use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::Graph;

/// Largest order representable with the four-byte graph6 size header.
pub const GRAPH6_MAX_ORDER: usize = 258_047;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
    Json,
}

impl Format {
    /// Guesses the format from a file extension (`.g6`, `.edges`, `.json`).
    pub fn from_path(path: &Path) -> Option<Format> {
        match path.extension()?.to_str()? {
            "g6" | "graph6" => Some(Format::Graph6),
            "edges" | "edgelist" | "txt" => Some(Format::EdgeList),
            "json" => Some(Format::Json),
            _ => None,
        }
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "g6" | "graph6" => Ok(Format::Graph6),
            "edges" | "edge-list" | "edgelist" => Ok(Format::EdgeList),
            "json" => Ok(Format::Json),
            other => Err(Error::invalid(format!("unknown graph format {other:?}"))),
        }
    }
}

pub fn encode(g: &Graph, format: Format) -> Result<String> {
    match format {
        Format::Graph6 => to_graph6(g),
        Format::EdgeList => Ok(to_edge_list(g)),
        Format::Json => Ok(serde_json::to_string(g).expect("graph serialization is infallible")),
    }
}

pub fn decode(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::Graph6 => from_graph6(text),
        Format::EdgeList => from_edge_list(text),
        Format::Json => from_json(text),
    }
}

fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::Unsupported(format!(
            "graph6 order {n} exceeds {GRAPH6_MAX_ORDER}"
        )));
    }
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|x| x as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

fn from_graph6(text: &str) -> Result<Graph> {
    let mut bytes = text.as_bytes();
    let mut offset = 0;
    if let Some(rest) = bytes.strip_prefix(b">>graph6<<") {
        bytes = rest;
        offset = 10;
    }
    while let Some((&last, rest)) = bytes.split_last() {
        if last == b'\n' || last == b'\r' {
            bytes = rest;
        } else {
            break;
        }
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::parse(
            offset + pos,
            format!("byte 0x{:02x} is outside the graph6 range", bytes[pos]),
        ));
    }
    let value = |b: u8| (b - 63) as usize;
    let (n, header) = match bytes {
        [] => return Err(Error::parse(offset, "empty graph6 string")),
        [126, 126, ..] => {
            return Err(Error::Unsupported(format!(
                "graph6 orders above {GRAPH6_MAX_ORDER} are not supported"
            )))
        }
        [126, a, b, c, ..] => {
            let n = (value(*a) << 12) | (value(*b) << 6) | value(*c);
            if n <= 62 {
                return Err(Error::parse(offset, "long size header used for a small order"));
            }
            (n, 4)
        }
        [126, ..] => return Err(Error::parse(offset + bytes.len(), "truncated size header")),
        [first, ..] => (value(*first), 1),
    };
    let body = &bytes[header..];
    let expected = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if body.len() != expected {
        let at = offset + header + body.len().min(expected);
        return Err(Error::parse(
            at,
            format!("expected {expected} adjacency bytes for order {n}, found {}", body.len()),
        ));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = value(body[k / 6]);
            if byte >> (5 - k % 6) & 1 == 1 {
                g.insert_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Whitespace-separated unsigned integers with their byte offsets.
fn tokens(text: &str) -> impl Iterator<Item = Result<(usize, usize)>> + '_ {
    let base = text.as_ptr() as usize;
    text.split_ascii_whitespace().map(move |tok| {
        let at = tok.as_ptr() as usize - base;
        tok.parse::<usize>()
            .map(|v| (at, v))
            .map_err(|_| Error::parse(at, format!("expected a nonnegative integer, found {tok:?}")))
    })
}

fn from_edge_list(text: &str) -> Result<Graph> {
    let mut toks = tokens(text);
    let mut next = |what: &str| -> Result<(usize, usize)> {
        toks.next()
            .unwrap_or_else(|| Err(Error::parse(text.len(), format!("unexpected end of input, expected {what}"))))
    };
    let (_, n) = next("vertex count")?;
    let (_, m) = next("edge count")?;
    let mut g = Graph::empty(n);
    for _ in 0..m {
        let (at, u) = next("edge endpoint")?;
        let (_, v) = next("edge endpoint")?;
        if u >= n || v >= n {
            return Err(Error::parse(at, format!("edge ({u}, {v}) leaves 0..{n}")));
        }
        if u == v {
            return Err(Error::parse(at, format!("self-loop at vertex {u}")));
        }
        if g.has_edge(u, v) {
            return Err(Error::parse(at, format!("repeated edge ({u}, {v})")));
        }
        g.insert_edge(u, v);
    }
    if let Some(extra) = toks.next() {
        let at = extra.map_or_else(
            |e| match e {
                Error::Parse { offset, .. } => offset,
                _ => 0,
            },
            |(at, _)| at,
        );
        return Err(Error::parse(at, format!("trailing data after {m} edges")));
    }
    Ok(g)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(super) struct JsonGraph {
    order: usize,
    edges: Vec<[usize; 2]>,
}

impl From<Graph> for JsonGraph {
    fn from(g: Graph) -> Self {
        JsonGraph {
            order: g.order(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl JsonGraph {
    /// Builds the graph, or reports the index of the first bad edge.
    fn build(self) -> std::result::Result<Graph, (usize, String)> {
        let mut g = Graph::empty(self.order);
        for (k, [u, v]) in self.edges.into_iter().enumerate() {
            if u >= self.order || v >= self.order {
                return Err((k, format!("edge #{k} ({u}, {v}) leaves 0..{}", self.order)));
            }
            if u == v {
                return Err((k, format!("edge #{k} is a self-loop at {u}")));
            }
            if g.has_edge(u, v) {
                return Err((k, format!("edge #{k} ({u}, {v}) is repeated")));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }
}

impl TryFrom<JsonGraph> for Graph {
    type Error = String;

    fn try_from(raw: JsonGraph) -> std::result::Result<Self, String> {
        raw.build().map_err(|(_, msg)| msg)
    }
}

fn from_json(text: &str) -> Result<Graph> {
    let raw: JsonGraph = serde_json::from_str(text).map_err(|e| {
        let offset = byte_offset(text, e.line(), e.column());
        Error::parse(offset, e.to_string())
    })?;
    raw.build()
        .map_err(|(k, msg)| Error::parse(edge_offset(text, k), msg))
}

/// Byte offset of the `k`-th inner `[` of the `"edges"` array in text that
/// already parsed as a `JsonGraph`.
fn edge_offset(text: &str, k: usize) -> usize {
    let Some(key) = text.find("\"edges\"") else { return 0 };
    text[key..]
        .match_indices('[')
        .nth(k + 1)
        .map_or(key, |(i, _)| key + i)
}

/// serde_json reports 1-based lines and columns; convert to a byte offset.
fn byte_offset(text: &str, line: usize, column: usize) -> usize {
    if line == 0 {
        return 0;
    }
    let line_start: usize = text.split_inclusive('\n').take(line - 1).map(str::len).sum();
    (line_start + column.saturating_sub(1)).min(text.len())
}
