//! Graph interchange: DOT, graph6, and a JSON edge-list format.
//!
//! All exports are deterministic: vertices keep their positional order and
//! edges are emitted sorted with the smaller endpoint first.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::{Error, Result};

/// Supported export formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Graph6,
    Json,
}

impl std::str::FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_lowercase().as_str() {
            "dot" => Ok(ExportFormat::Dot),
            "graph6" | "g6" => Ok(ExportFormat::Graph6),
            "json" => Ok(ExportFormat::Json),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

/// Serialize a graph in the chosen format.
pub fn export(g: &Graph, format: ExportFormat) -> Result<String> {
    match format {
        ExportFormat::Dot => Ok(to_dot(g)),
        ExportFormat::Graph6 => to_graph6(g),
        ExportFormat::Json => Ok(to_json(g)),
    }
}

/// Undirected DOT with one node statement per vertex, labels quoted.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.vertex_count() {
        out.push_str(&format!(
            "  {} [label=\"{}\"];\n",
            v,
            g.label(v).replace('"', "\\\"")
        ));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

const G6_MAX: usize = 258047;

/// Standard graph6 encoding (labels are not carried).
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.vertex_count();
    if n > G6_MAX {
        return Err(Error::UnsupportedFormat(format!(
            "graph6 export supports up to {G6_MAX} vertices, got {n}"
        )));
    }
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(63 + n as u8);
    } else {
        bytes.push(b'~');
        bytes.push(63 + ((n >> 12) & 63) as u8);
        bytes.push(63 + ((n >> 6) & 63) as u8);
        bytes.push(63 + (n & 63) as u8);
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            nbits += 1;
            if nbits == 6 {
                bytes.push(63 + acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        bytes.push(63 + (acc << (6 - nbits)));
    }
    Ok(String::from_utf8(bytes).expect("graph6 bytes are ascii"))
}

/// Parse graph6 text (optionally prefixed with `>>graph6<<`).
///
/// Vertices receive their index as label.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let data = text.trim().trim_start_matches(">>graph6<<").as_bytes();
    if data.is_empty() {
        return Err(Error::InvalidGraphData("empty graph6 input".into()));
    }
    let sixbit = |b: u8| -> Result<usize> {
        if (63..=126).contains(&b) {
            Ok((b - 63) as usize)
        } else {
            Err(Error::InvalidGraphData(format!(
                "byte {b:#04x} outside the graph6 alphabet"
            )))
        }
    };
    let (n, mut pos) = if data[0] == b'~' {
        if data.len() >= 2 && data[1] == b'~' {
            return Err(Error::InvalidGraphData(
                "graphs beyond 258047 vertices are not supported".into(),
            ));
        }
        if data.len() < 4 {
            return Err(Error::InvalidGraphData("truncated graph6 header".into()));
        }
        let n = (sixbit(data[1])? << 12) | (sixbit(data[2])? << 6) | sixbit(data[3])?;
        (n, 4)
    } else {
        (sixbit(data[0])?, 1)
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if data.len() - pos != nbytes {
        return Err(Error::InvalidGraphData(format!(
            "graph6 body has {} bytes, expected {nbytes} for {n} vertices",
            data.len() - pos
        )));
    }
    let mut edges = Vec::new();
    let mut acc = 0usize;
    let mut have = 0;
    'outer: for v in 1..n {
        for u in 0..v {
            if have == 0 {
                if pos >= data.len() {
                    break 'outer;
                }
                acc = sixbit(data[pos])?;
                pos += 1;
                have = 6;
            }
            have -= 1;
            if acc >> have & 1 == 1 {
                edges.push((u, v));
            }
        }
    }
    Graph::new((0..n).map(|i| i.to_string()).collect(), &edges)
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<String>,
    edges: Vec<(usize, usize)>,
}

/// JSON object `{"vertices": [...], "edges": [[u,v], ...]}` with edges
/// sorted and the smaller endpoint first.
pub fn to_json(g: &Graph) -> String {
    let doc = GraphJson {
        vertices: g.labels().to_vec(),
        edges: g.edges(),
    };
    serde_json::to_string(&doc).expect("graph json serialization cannot fail")
}

/// Parse the JSON edge-list format; edge order and orientation are free.
pub fn from_json(text: &str) -> Result<Graph> {
    let doc: GraphJson = serde_json::from_str(text)
        .map_err(|e| Error::InvalidGraphData(format!("graph json: {e}")))?;
    let edges: Vec<(usize, usize)> = doc
        .edges
        .iter()
        .map(|&(u, v)| if u <= v { (u, v) } else { (v, u) })
        .collect();
    Graph::new(doc.vertices, &edges)
}
