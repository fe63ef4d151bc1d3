//! Exact maximum flow.
//!
//! [`Dinic`] works on `i128` capacities. [`FlowNetwork`] accepts rational
//! capacities and scales them to integers by their common denominator.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Clone, Debug)]
struct Arc {
    to: usize,
    rev: usize,
    cap: i128,
}

/// Dinic's blocking-flow algorithm on a residual graph.
#[derive(Clone, Debug)]
pub struct Dinic {
    graph: Vec<Vec<Arc>>,
    level: Vec<i32>,
    next: Vec<usize>,
}

impl Dinic {
    pub fn new(nodes: usize) -> Self {
        Self {
            graph: vec![Vec::new(); nodes],
            level: vec![-1; nodes],
            next: vec![0; nodes],
        }
    }

    pub fn num_nodes(&self) -> usize {
        self.graph.len()
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: i128) {
        debug_assert!(cap >= 0);
        let rev_from = self.graph[to].len() + usize::from(from == to);
        let rev_to = self.graph[from].len();
        self.graph[from].push(Arc { to, rev: rev_from, cap });
        self.graph[to].push(Arc { to: from, rev: rev_to, cap: 0 });
    }

    fn bfs(&mut self, source: usize) {
        self.level.fill(-1);
        self.level[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for arc in &self.graph[v] {
                if arc.cap > 0 && self.level[arc.to] < 0 {
                    self.level[arc.to] = self.level[v] + 1;
                    queue.push_back(arc.to);
                }
            }
        }
    }

    fn dfs(&mut self, v: usize, sink: usize, limit: i128) -> i128 {
        if v == sink {
            return limit;
        }
        while self.next[v] < self.graph[v].len() {
            let i = self.next[v];
            let Arc { to, rev, cap } = self.graph[v][i];
            if cap > 0 && self.level[v] < self.level[to] {
                let pushed = self.dfs(to, sink, limit.min(cap));
                if pushed > 0 {
                    self.graph[v][i].cap -= pushed;
                    self.graph[to][rev].cap += pushed;
                    return pushed;
                }
            }
            self.next[v] += 1;
        }
        0
    }

    /// Runs to completion and returns the flow value.
    pub fn max_flow(&mut self, source: usize, sink: usize) -> Result<i128> {
        let mut total: i128 = 0;
        loop {
            self.bfs(source);
            if self.level[sink] < 0 {
                return Ok(total);
            }
            self.next.fill(0);
            loop {
                let pushed = self.dfs(source, sink, i128::MAX);
                if pushed == 0 {
                    break;
                }
                total = total
                    .checked_add(pushed)
                    .ok_or_else(|| Error::Overflow("flow value exceeds 128 bits".into()))?;
            }
        }
    }

    /// Nodes reachable from `source` in the residual graph: the source side
    /// of the minimal minimum cut. Call after [`Dinic::max_flow`].
    pub fn source_side(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.graph.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for arc in &self.graph[v] {
                if arc.cap > 0 && !seen[arc.to] {
                    seen[arc.to] = true;
                    queue.push_back(arc.to);
                }
            }
        }
        seen
    }

    /// Nodes that cannot reach `sink` in the residual graph: the source side
    /// of the maximal minimum cut.
    pub fn maximal_source_side(&self, sink: usize) -> Vec<bool> {
        let mut reaches_sink = vec![false; self.graph.len()];
        reaches_sink[sink] = true;
        let mut queue = VecDeque::from([sink]);
        while let Some(v) = queue.pop_front() {
            // u -> v has residual capacity iff the reverse arc stored at v
            // points at u and the forward arc at u still has capacity.
            for arc in &self.graph[v] {
                let u = arc.to;
                if !reaches_sink[u] && self.graph[u][arc.rev].cap > 0 {
                    reaches_sink[u] = true;
                    queue.push_back(u);
                }
            }
        }
        reaches_sink.into_iter().map(|r| !r).collect()
    }
}

/// A network with rational capacities.
#[derive(Clone, Debug)]
pub struct FlowNetwork {
    nodes: usize,
    source: usize,
    sink: usize,
    arcs: Vec<(usize, usize, Rational)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MaxFlow {
    pub value: Rational,
    /// Sorted node ids on the source side of the minimal minimum cut.
    pub source_side: Vec<usize>,
}

impl FlowNetwork {
    pub fn new(nodes: usize, source: usize, sink: usize) -> Result<Self> {
        if source >= nodes || sink >= nodes {
            return Err(Error::invalid("source or sink out of range"));
        }
        if source == sink {
            return Err(Error::invalid("source and sink must differ"));
        }
        Ok(Self {
            nodes,
            source,
            sink,
            arcs: Vec::new(),
        })
    }

    pub fn add_arc(&mut self, from: usize, to: usize, capacity: Rational) -> Result<()> {
        if from >= self.nodes || to >= self.nodes {
            return Err(Error::invalid(format!("arc {from} -> {to} out of range")));
        }
        if capacity < Rational::from_integer(0) {
            return Err(Error::invalid("capacities must be nonnegative"));
        }
        self.arcs.push((from, to, capacity));
        Ok(())
    }

    pub fn max_flow(&self) -> Result<MaxFlow> {
        let scale = rational::common_denominator(self.arcs.iter().map(|(_, _, c)| c))?;
        let mut dinic = Dinic::new(self.nodes);
        for (from, to, cap) in &self.arcs {
            dinic.add_arc(*from, *to, rational::scale_to_integer(cap, scale)?);
        }
        let value = dinic.max_flow(self.source, self.sink)?;
        let side = dinic.source_side(self.source);
        Ok(MaxFlow {
            value: Rational::new(value, scale),
            source_side: (0..self.nodes).filter(|&v| side[v]).collect(),
        })
    }
}

/// `max_flow` as a free function.
pub fn max_flow(net: &FlowNetwork) -> Result<MaxFlow> {
    net.max_flow()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i128) -> Rational {
        Rational::from_integer(v)
    }

    #[test]
    fn single_arc() {
        let mut net = FlowNetwork::new(2, 0, 1).unwrap();
        net.add_arc(0, 1, int(3)).unwrap();
        let f = max_flow(&net).unwrap();
        assert_eq!(f.value, int(3));
        assert_eq!(f.source_side, vec![0]);
    }

    #[test]
    fn diamond() {
        // s=0, a=1, b=2, t=3
        let mut net = FlowNetwork::new(4, 0, 3).unwrap();
        for (u, v) in [(0, 1), (1, 3), (0, 2), (2, 3)] {
            net.add_arc(u, v, int(1)).unwrap();
        }
        assert_eq!(max_flow(&net).unwrap().value, int(2));
    }

    #[test]
    fn rational_capacities() {
        let mut net = FlowNetwork::new(3, 0, 2).unwrap();
        net.add_arc(0, 1, Rational::new(1, 3)).unwrap();
        net.add_arc(1, 2, Rational::new(1, 2)).unwrap();
        net.add_arc(0, 2, Rational::new(1, 4)).unwrap();
        let f = max_flow(&net).unwrap();
        assert_eq!(f.value, Rational::new(7, 12));
        assert_eq!(f.source_side, vec![0]);
    }

    #[test]
    fn rejects_bad_networks() {
        assert!(FlowNetwork::new(2, 0, 0).is_err());
        assert!(FlowNetwork::new(2, 0, 2).is_err());
        let mut net = FlowNetwork::new(2, 0, 1).unwrap();
        assert!(net.add_arc(0, 1, int(-1)).is_err());
        assert!(net.add_arc(0, 5, int(1)).is_err());
    }

    /// Exhaustive min-cut oracle over all s-t cuts.
    fn min_cut_oracle(n: usize, arcs: &[(usize, usize, i128)]) -> i128 {
        (0u32..1 << n)
            .filter(|m| m & 1 == 1 && m >> (n - 1) & 1 == 0)
            .map(|m| {
                arcs.iter()
                    .filter(|&&(u, v, _)| m >> u & 1 == 1 && m >> v & 1 == 0)
                    .map(|&(_, _, c)| c)
                    .sum::<i128>()
            })
            .min()
            .unwrap()
    }

    #[test]
    fn matches_cut_enumeration_on_random_networks() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let n = rng.gen_range(2..8);
            let mut arcs = Vec::new();
            for u in 0..n {
                for v in 0..n {
                    if u != v && rng.gen_bool(0.4) {
                        arcs.push((u, v, rng.gen_range(0..6)));
                    }
                }
            }
            let mut dinic = Dinic::new(n);
            for &(u, v, c) in &arcs {
                dinic.add_arc(u, v, c);
            }
            let flow = dinic.max_flow(0, n - 1).unwrap();
            assert_eq!(flow, min_cut_oracle(n, &arcs));
            // both extreme cuts have the min-cut capacity
            for side in [dinic.source_side(0), dinic.maximal_source_side(n - 1)] {
                assert!(side[0] && !side[n - 1]);
                let cap: i128 = arcs
                    .iter()
                    .filter(|&&(u, v, _)| side[u] && !side[v])
                    .map(|&(_, _, c)| c)
                    .sum();
                assert_eq!(cap, flow);
            }
        }
    }
}
