use std::fmt;
use std::str::FromStr;

use super::{parse_graph, Graph};
use crate::error::{Error, Result};

/// Open chain `0 - 1 - ... - (n-1)`.
pub fn line_graph(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::invalid(format!("line graph needs n >= 2, got {n}")));
    }
    Graph::new(n, (0..n - 1).map(|i| (i, i + 1)))
}

/// Periodic chain: the open chain closed by the edge `(0, n-1)`.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::invalid(format!("cycle graph needs n >= 3, got {n}")));
    }
    Graph::new(n, (0..n - 1).map(|i| (i, i + 1)).chain([(0, n - 1)]))
}

pub fn complete_graph(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::invalid(format!("complete graph needs n >= 2, got {n}")));
    }
    Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// `K_4` on `{0,1,2,3}` with a tail `0 - 4 - 5`. Its densest part is the
/// `K_4` block, so it is not two-segmented.
pub fn kite6() -> Graph {
    Graph::new(
        6,
        [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (4, 5)],
    )
    .expect("kite6 is a valid graph")
}

/// The three hand-built graphs whose densest subgraph is a proper subset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MiscGraph {
    G1,
    G2,
    G3,
}

impl MiscGraph {
    pub const ALL: [MiscGraph; 3] = [MiscGraph::G1, MiscGraph::G2, MiscGraph::G3];

    /// Bundled edge-list text, see `data/*.txt`.
    pub fn bundled_text(self) -> &'static str {
        match self {
            MiscGraph::G1 => include_str!("../../data/g1.txt"),
            MiscGraph::G2 => include_str!("../../data/g2.txt"),
            MiscGraph::G3 => include_str!("../../data/g3.txt"),
        }
    }

    pub fn file_name(self) -> &'static str {
        match self {
            MiscGraph::G1 => "g1.txt",
            MiscGraph::G2 => "g2.txt",
            MiscGraph::G3 => "g3.txt",
        }
    }

    /// Edge counts of the bundled transcriptions; used to detect edited data files.
    pub fn expected_edges(self) -> usize {
        match self {
            MiscGraph::G1 => 21,
            MiscGraph::G2 => 13,
            MiscGraph::G3 => 18,
        }
    }
}

impl fmt::Display for MiscGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            MiscGraph::G1 => "G1",
            MiscGraph::G2 => "G2",
            MiscGraph::G3 => "G3",
        };
        f.write_str(name)
    }
}

impl FromStr for MiscGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "G1" => Ok(MiscGraph::G1),
            "G2" => Ok(MiscGraph::G2),
            "G3" => Ok(MiscGraph::G3),
            _ => Err(Error::invalid(format!("unknown graph id {s:?}"))),
        }
    }
}

pub fn misc_graph(id: MiscGraph) -> Result<Graph> {
    parse_graph(id.bundled_text())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chains() {
        assert_eq!(line_graph(3).unwrap().edges(), &[(0, 1), (1, 2)]);
        assert_eq!(line_graph(2).unwrap().edges(), &[(0, 1)]);
        let l9 = line_graph(9).unwrap();
        assert_eq!(l9.num_edges(), 8);
        assert!(l9.edges().iter().all(|&(a, b)| b == a + 1));
        assert!(line_graph(1).is_err());
    }

    #[test]
    fn cycles() {
        assert_eq!(cycle_graph(3).unwrap().edges(), &[(0, 1), (0, 2), (1, 2)]);
        let c4 = cycle_graph(4).unwrap();
        assert_eq!(c4.num_edges(), 4);
        assert!((0..4).all(|v| c4.degree(v) == 2));
        assert_eq!(cycle_graph(9).unwrap().num_edges(), 9);
        assert!(cycle_graph(2).is_err());
    }

    #[test]
    fn complete() {
        assert_eq!(complete_graph(4).unwrap().num_edges(), 6);
        assert_eq!(complete_graph(2).unwrap().num_edges(), 1);
        assert_eq!(complete_graph(9).unwrap().num_edges(), 36);
        assert!(complete_graph(1).is_err());
    }

    #[test]
    fn misc_graphs_load() {
        let sizes = [(MiscGraph::G1, 9), (MiscGraph::G2, 8), (MiscGraph::G3, 9)];
        for (id, n) in sizes {
            let g = misc_graph(id).unwrap();
            assert_eq!(g.num_vertices(), n, "{id}");
            assert_eq!(g.num_edges(), id.expected_edges(), "{id}");
            assert_eq!(g.connected_components().len(), 1, "{id}");
        }
        assert_eq!("g2".parse::<MiscGraph>().unwrap(), MiscGraph::G2);
        assert!("G4".parse::<MiscGraph>().is_err());
    }
}
