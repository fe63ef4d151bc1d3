//! Graph files.
//!
//! Text form: the first data line is `N`, then one `i j` pair per line.
//! Blank lines and lines starting with `#` are ignored. A JSON object
//! `{"n": N, "edges": [[i, j], ...]}` is also accepted.

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        Self {
            n: g.num_vertices(),
            edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(value: GraphJson) -> Result<Self> {
        Graph::new(value.n, value.edges.into_iter().map(|[a, b]| (a, b)))
    }
}

/// Parses either format, chosen by whether the input starts with `{`.
pub fn parse_graph(input: &str) -> Result<Graph> {
    if input.trim_start().starts_with('{') {
        let json: GraphJson = serde_json::from_str(input)?;
        return Graph::try_from(json);
    }
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::parse("graph file has no vertex count"))?;
    let n: usize = header
        .parse()
        .map_err(|_| Error::parse(format!("bad vertex count {header:?}")))?;
    let mut edges = Vec::new();
    for (lineno, line) in lines {
        let mut fields = line.split_whitespace();
        let mut next = || -> Result<usize> {
            fields
                .next()
                .and_then(|f| f.parse().ok())
                .ok_or_else(|| Error::parse(format!("line {lineno}: expected `i j`, got {line:?}")))
        };
        let (i, j) = (next()?, next()?);
        if fields.next().is_some() {
            return Err(Error::parse(format!("line {lineno}: trailing fields in {line:?}")));
        }
        if i >= j {
            return Err(Error::parse(format!("line {lineno}: edge must satisfy i < j")));
        }
        edges.push((i, j));
    }
    Graph::new(n, edges)
}

impl Graph {
    /// Canonical text form: `N`, then sorted edges.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.num_vertices());
        for &(a, b) in self.edges() {
            out.push_str(&format!("{a} {b}\n"));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphJson::from(self)).expect("graph JSON is serialisable")
    }
}
