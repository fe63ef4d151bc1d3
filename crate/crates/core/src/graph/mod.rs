//! Undirected simple graphs over qubit-labelled vertices `0..N`.
//!
//! Vertex `i` corresponds to qubit `q_i`. Edges are stored canonically as
//! `(i, j)` with `i < j`, sorted lexicographically.

mod families;
mod io;
mod random;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use families::{complete_graph, cycle_graph, kite6, line_graph, misc_graph, MiscGraph};
pub use io::{parse_graph, GraphJson};
pub use random::{random_graph, GraphRng};

/// An edge `(i, j)` with `i < j`.
pub type Edge = (usize, usize);

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    num_vertices: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, normalising each pair to `(min, max)` order.
    ///
    /// Self-loops, duplicate edges and out-of-range endpoints are rejected.
    pub fn new(num_vertices: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut list: Vec<Edge> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::invalid(format!("self-loop on vertex {a}")));
            }
            if a >= num_vertices || b >= num_vertices {
                return Err(Error::invalid(format!(
                    "edge ({a}, {b}) out of range for {num_vertices} vertices"
                )));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!("duplicate edge {:?}", w[0])));
        }
        let mut adjacency = vec![Vec::new(); num_vertices];
        for &(a, b) in &list {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Ok(Self {
            num_vertices,
            edges: list,
            adjacency,
        })
    }

    pub fn empty(num_vertices: usize) -> Self {
        Self {
            num_vertices,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); num_vertices],
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.num_vertices && self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Position of `(min(a,b), max(a,b))` in [`Graph::edges`].
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        self.edges.binary_search(&(a.min(b), a.max(b))).ok()
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.num_vertices)
    }

    /// Neighbour bitmasks, one per vertex. Only valid for `N <= 64`.
    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        debug_assert!(self.num_vertices <= 64);
        self.adjacency
            .iter()
            .map(|nbrs| nbrs.iter().fold(0u64, |m, &u| m | (1 << u)))
            .collect()
    }

    /// Number of edges with both endpoints in `set`.
    pub fn induced_edge_count(&self, set: &VertexSet) -> usize {
        let member = set.indicator(self.num_vertices);
        self.edges
            .iter()
            .filter(|&&(a, b)| member[a] && member[b])
            .count()
    }

    /// Edges with both endpoints in `set`, in canonical order.
    pub fn induced_edges(&self, set: &VertexSet) -> Vec<Edge> {
        let member = set.indicator(self.num_vertices);
        self.edges
            .iter()
            .copied()
            .filter(|&(a, b)| member[a] && member[b])
            .collect()
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.num_vertices];
        let mut components = Vec::new();
        for start in 0..self.num_vertices {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut members = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &u in &self.adjacency[v] {
                    if !seen[u] {
                        seen[u] = true;
                        members.push(u);
                        queue.push_back(u);
                    }
                }
            }
            components.push(VertexSet::from_unsorted(members));
        }
        components
    }

    /// Breadth-first spanning forest of the subgraph induced by `set`.
    ///
    /// Roots are taken in ascending order and neighbours are visited in
    /// ascending order, so the result is deterministic.
    pub fn spanning_forest(&self, set: &VertexSet) -> SpanningForest {
        let member = set.indicator(self.num_vertices);
        let mut seen = vec![false; self.num_vertices];
        let mut edges = Vec::new();
        let mut components = 0;
        for &root in set.members() {
            if seen[root] {
                continue;
            }
            components += 1;
            seen[root] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &u in &self.adjacency[v] {
                    if member[u] && !seen[u] {
                        seen[u] = true;
                        edges.push((v.min(u), v.max(u)));
                        queue.push_back(u);
                    }
                }
            }
        }
        edges.sort_unstable();
        SpanningForest { edges, components }
    }

    /// Applies a vertex relabelling `v -> perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.num_vertices {
            return Err(Error::invalid("permutation length does not match graph"));
        }
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            if p >= perm.len() || std::mem::replace(&mut seen[p], true) {
                return Err(Error::invalid("not a permutation"));
            }
        }
        Graph::new(
            self.num_vertices,
            self.edges.iter().map(|&(a, b)| (perm[a], perm[b])),
        )
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("num_vertices", &self.num_vertices)
            .field("edges", &self.edges)
            .finish()
    }
}

/// A sorted, duplicate-free set of vertex labels.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn full(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn from_unsorted(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        Self(members)
    }

    pub fn from_mask(mask: u64) -> Self {
        Self((0..64).filter(|&i| mask >> i & 1 == 1).collect())
    }

    /// Checks that every member is below `n`.
    pub fn validate(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&max) if max >= n => Err(Error::invalid(format!(
                "vertex {max} out of range for {n} vertices"
            ))),
            _ => Ok(()),
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn insert(&mut self, v: usize) {
        if let Err(pos) = self.0.binary_search(&v) {
            self.0.insert(pos, v);
        }
    }

    pub fn to_mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &v| m | (1 << v))
    }

    pub fn indicator(&self, n: usize) -> Vec<bool> {
        let mut out = vec![false; n];
        for &v in &self.0 {
            out[v] = true;
        }
        out
    }

    pub fn complement(&self, n: usize) -> VertexSet {
        let member = self.indicator(n);
        Self((0..n).filter(|&v| !member[v]).collect())
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        Self::from_unsorted(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        Self(self.0.iter().copied().filter(|&v| other.contains(v)).collect())
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_unsorted(iter.into_iter().collect())
    }
}

impl<const K: usize> From<[usize; K]> for VertexSet {
    fn from(members: [usize; K]) -> Self {
        Self::from_unsorted(members.to_vec())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningForest {
    edges: Vec<Edge>,
    components: usize,
}

impl SpanningForest {
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Number of trees, i.e. connected components of the induced subgraph.
    pub fn components(&self) -> usize {
        self.components
    }
}
