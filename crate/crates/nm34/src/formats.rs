//! Graph interchange formats: graph6, Graphviz DOT and a labelled JSON
//! adjacency list.

use nm34_core::Graph;
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("graph with {0} vertices is too large for graph6")]
    TooLarge(usize),
    #[error("invalid graph6: {0}")]
    Graph6(String),
    #[error("invalid graph JSON: {0}")]
    Json(String),
}

/// Largest order graph6 can encode (the 8-byte header form is not needed
/// here).
pub const GRAPH6_MAX: usize = 258_047;

fn push_n(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Encodes the upper triangle column by column (`x(0,1), x(0,2), x(1,2),
/// x(0,3), …`), six bits per character, offset 63.
pub fn to_graph6(g: &Graph) -> Result<String, FormatError> {
    let n = g.n();
    if n > GRAPH6_MAX {
        return Err(FormatError::TooLarge(n));
    }
    let mut out = Vec::new();
    push_n(&mut out, n);
    let (mut acc, mut filled) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                (acc, filled) = (0, 0);
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("printable ASCII"))
}

pub fn from_graph6(line: &str) -> Result<Graph, FormatError> {
    let s = line.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(FormatError::Graph6(format!(
            "character out of range in {s:?}"
        )));
    }
    let (n, body) = match bytes {
        [] => return Err(FormatError::Graph6("empty input".into())),
        [126, 126, ..] => return Err(FormatError::TooLarge(usize::MAX)),
        [126, a, b, c, rest @ ..] => (
            ((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63),
            rest,
        ),
        [126, ..] => return Err(FormatError::Graph6("truncated size header".into())),
        [first, rest @ ..] => (*first as usize - 63, rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(FormatError::Graph6(format!(
            "expected {} data characters for {n} vertices, found {}",
            bits.div_ceil(6),
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if (bits..body.len() * 6).any(bit) {
        return Err(FormatError::Graph6("nonzero padding bits".into()));
    }
    Ok(g)
}

fn label(g: &Graph, v: usize) -> String {
    g.label(v).map_or_else(|| v.to_string(), str::to_string)
}

pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut s = format!("graph \"{name}\" {{\n");
    for v in 0..g.n() {
        s += &format!("  {v} [label=\"{}\"];\n", label(g, v));
    }
    for (u, v) in g.edges() {
        s += &format!("  {u} -- {v};\n");
    }
    s += "}\n";
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub name: String,
    pub n: usize,
    pub edges: usize,
    pub labels: Vec<String>,
    /// Sorted neighbour lists by vertex index.
    pub adjacency: Vec<Vec<usize>>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph, name: &str) -> Self {
        GraphJson {
            name: name.to_string(),
            n: g.n(),
            edges: g.edge_count(),
            labels: (0..g.n()).map(|v| label(g, v)).collect(),
            adjacency: (0..g.n()).map(|v| g.neighbors(v).collect()).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph, FormatError> {
        if self.adjacency.len() != self.n || self.labels.len() != self.n {
            return Err(FormatError::Json("list lengths disagree with n".into()));
        }
        let mut g = Graph::new(self.n);
        for (u, ns) in self.adjacency.iter().enumerate() {
            for &v in ns {
                if v >= self.n || v == u {
                    return Err(FormatError::Json(format!("bad neighbour {v} of {u}")));
                }
                g.add_edge(u, v);
            }
        }
        if !(0..self.n).all(|u| g.degree(u) == self.adjacency[u].len()) {
            return Err(FormatError::Json("adjacency is not symmetric".into()));
        }
        Ok(g.with_labels(self.labels.clone()))
    }
}

pub fn to_json(g: &Graph, name: &str) -> String {
    serde_json::to_string_pretty(&GraphJson::from_graph(g, name)).expect("plain data serializes")
}

pub fn from_json(text: &str) -> Result<Graph, FormatError> {
    let parsed: GraphJson =
        serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))?;
    parsed.to_graph()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_small_cases() {
        assert_eq!(to_graph6(&Graph::new(1)).unwrap(), "@");
        assert_eq!(to_graph6(&Graph::complete(2)).unwrap(), "A_");
        assert_eq!(to_graph6(&Graph::new(0)).unwrap(), "?");
        // 5 vertices, edges 0-2 0-4 1-3 3-4
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(to_graph6(&g).unwrap(), "DQc");
        assert_eq!(from_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn graph6_long_header() {
        let g = Graph::cycle(100);
        let s = to_graph6(&g).unwrap();
        assert!(s.starts_with("~?@c"));
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn graph6_rejects_garbage() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("A").is_err());
        assert!(from_graph6("A`").is_err());
        assert!(from_graph6("A_ ").is_err());
        assert_eq!(from_graph6(">>graph6<<A_").unwrap(), Graph::complete(2));
    }

    #[test]
    fn dot_and_json() {
        let g = Graph::path(3).with_labels(vec!["a".into(), "b".into(), "c".into()]);
        let dot = to_dot(&g, "p3");
        assert!(dot.contains("0 -- 1;") && dot.contains("label=\"c\""));
        let back = from_json(&to_json(&g, "p3")).unwrap();
        assert_eq!(back, g);
        assert!(from_json(
            "{\"name\":\"x\",\"n\":2,\"edges\":1,\"labels\":[\"a\",\"b\"],\"adjacency\":[[1],[]]}"
        )
        .is_err());
    }
}
