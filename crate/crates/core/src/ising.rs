//! Transverse-field Ising instances and their Clifford cost function.
//!
//! The Hamiltonian is `H = -Σ_{(i,j)∈E} J_ij Z_i Z_j - Σ_i J_i X_i`. In the
//! unweighted case `J_ij = 1` and `J_i = g`. Vertex weights are taken as
//! already rescaled, i.e. they replace `g` outright.
//!
//! Basis states use qubit 0 as the least significant bit, everywhere in the
//! crate: bit `k` of a basis index is the computational value of qubit `k`.

use itertools::Itertools;
use nalgebra::DMatrix;
use num::{Signed, Zero};
use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphJson, VertexSet};
use crate::limits;
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq)]
pub struct IsingInstance {
    graph: Graph,
    g: Rational,
    /// Aligned with `graph.edges()`.
    edge_weights: Option<Vec<Rational>>,
    vertex_weights: Option<Vec<Rational>>,
}

impl IsingInstance {
    pub fn new(graph: Graph, g: Rational) -> Result<Self> {
        Self::weighted(graph, g, None, None)
    }

    pub fn weighted(
        graph: Graph,
        g: Rational,
        edge_weights: Option<Vec<Rational>>,
        vertex_weights: Option<Vec<Rational>>,
    ) -> Result<Self> {
        if g.is_negative() {
            return Err(Error::invalid(format!(
                "field ratio must be nonnegative, got {}",
                rational::format_rational(&g)
            )));
        }
        if let Some(w) = &edge_weights {
            if w.len() != graph.num_edges() {
                return Err(Error::invalid("edge weight count does not match edge count"));
            }
            if let Some(bad) = w.iter().position(|x| !x.is_positive()) {
                return Err(Error::invalid(format!(
                    "edge weights must be strictly positive; edge {:?} has {}",
                    graph.edges()[bad],
                    rational::format_rational(&w[bad])
                )));
            }
        }
        if let Some(w) = &vertex_weights {
            if w.len() != graph.num_vertices() {
                return Err(Error::invalid("vertex weight count does not match vertex count"));
            }
            if let Some(bad) = w.iter().position(|x| x.is_negative()) {
                return Err(Error::invalid(format!("vertex {bad} has a negative weight")));
            }
        }
        Ok(Self {
            graph,
            g,
            edge_weights,
            vertex_weights,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn num_qubits(&self) -> usize {
        self.graph.num_vertices()
    }

    pub fn g(&self) -> Rational {
        self.g
    }

    pub fn g_f64(&self) -> f64 {
        rational::to_f64(&self.g)
    }

    /// Same couplings, different field ratio. Explicit vertex weights are kept.
    pub fn with_g(&self, g: Rational) -> Result<Self> {
        Self::weighted(
            self.graph.clone(),
            g,
            self.edge_weights.clone(),
            self.vertex_weights.clone(),
        )
    }

    pub fn is_weighted(&self) -> bool {
        self.edge_weights.is_some() || self.vertex_weights.is_some()
    }

    /// `J_e` for the `k`-th edge of `graph.edges()`.
    pub fn edge_weight(&self, k: usize) -> Rational {
        self.edge_weights
            .as_ref()
            .map_or_else(|| Rational::from_integer(1), |w| w[k])
    }

    pub fn vertex_weight(&self, v: usize) -> Rational {
        self.vertex_weights.as_ref().map_or(self.g, |w| w[v])
    }

    pub fn edge_weights_f64(&self) -> Vec<f64> {
        (0..self.graph.num_edges())
            .map(|k| rational::to_f64(&self.edge_weight(k)))
            .collect()
    }

    pub fn vertex_weights_f64(&self) -> Vec<f64> {
        (0..self.num_qubits())
            .map(|v| rational::to_f64(&self.vertex_weight(v)))
            .collect()
    }

    pub fn total_edge_weight(&self) -> Rational {
        (0..self.graph.num_edges()).map(|k| self.edge_weight(k)).sum()
    }

    pub fn total_vertex_weight(&self) -> Rational {
        (0..self.num_qubits()).map(|v| self.vertex_weight(v)).sum()
    }

    /// Clifford cost `f(V) = -Σ_{e∈E(V)} J_e - Σ_{i∉V} J_i`.
    pub fn cost(&self, set: &VertexSet) -> Result<Rational> {
        set.validate(self.num_qubits())?;
        let member = set.indicator(self.num_qubits());
        let edges: Rational = self
            .graph
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| member[a] && member[b])
            .map(|(k, _)| self.edge_weight(k))
            .sum();
        let field: Rational = (0..self.num_qubits())
            .filter(|&v| !member[v])
            .map(|v| self.vertex_weight(v))
            .sum();
        Ok(-edges - field)
    }

    pub fn cost_f64(&self, set: &VertexSet) -> Result<f64> {
        Ok(rational::to_f64(&self.cost(set)?))
    }

    /// `f(S ∪ {v}) - f(S)` for `v ∉ S`: `J_v - Σ_{u∈S, (u,v)∈E} J_uv`.
    ///
    /// Runs in `O(deg v)` given an indicator for `S`.
    pub fn marginal_gain(&self, member: &[bool], v: usize) -> Rational {
        let mut gain = self.vertex_weight(v);
        for &u in self.graph.neighbors(v) {
            if member[u] {
                let k = self.graph.edge_index(u, v).expect("neighbour edge exists");
                gain -= self.edge_weight(k);
            }
        }
        gain
    }

    /// All weights multiplied by their common denominator.
    pub fn scaled_weights(&self) -> Result<ScaledWeights> {
        let edge: Vec<Rational> = (0..self.graph.num_edges()).map(|k| self.edge_weight(k)).collect();
        let vertex: Vec<Rational> = (0..self.num_qubits()).map(|v| self.vertex_weight(v)).collect();
        let scale = rational::common_denominator(edge.iter().chain(&vertex))?;
        let to_int = |w: &Vec<Rational>| -> Result<Vec<i128>> {
            w.iter().map(|x| rational::scale_to_integer(x, scale)).collect()
        };
        Ok(ScaledWeights {
            scale,
            edge: to_int(&edge)?,
            vertex: to_int(&vertex)?,
        })
    }
}

/// Integer weights `w * scale`, used by the exact combinatorial solvers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledWeights {
    pub scale: i128,
    pub edge: Vec<i128>,
    pub vertex: Vec<i128>,
}

impl ScaledWeights {
    pub fn to_rational(&self, scaled: i128) -> Rational {
        Rational::new(scaled, self.scale)
    }
}

/// `C(n) = ℰ(n) + g(N - n)`; the Clifford cost of an `n`-optimal set is `-C(n)`.
pub fn segment_cost(inst: &IsingInstance, n: usize, edge_fn_value: usize) -> Result<Rational> {
    let total = inst.num_qubits();
    if n > total {
        return Err(Error::invalid(format!("segment size {n} exceeds N = {total}")));
    }
    Ok(Rational::from_integer(edge_fn_value as i128) + inst.g() * Rational::from_integer((total - n) as i128))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeFunctionValue {
    pub value: usize,
    pub witness: VertexSet,
}

/// Edge function `ℰ(n) = max_{|S| ≤ n} |E(S)|` by exhaustive search.
///
/// Since `|E(S)|` only grows when vertices are added, the search runs over
/// sets of size exactly `n`, in lexicographic order; the witness is the
/// first maximiser found.
pub fn edge_function(graph: &Graph, n: usize) -> Result<EdgeFunctionValue> {
    let total = graph.num_vertices();
    if n > total {
        return Err(Error::invalid(format!("n = {n} exceeds N = {total}")));
    }
    limits::check("edge function", total, limits::EDGE_FUNCTION_MAX_N)?;
    let subsets = binomial(total as u64, n as u64);
    if subsets > limits::EDGE_FUNCTION_BUDGET {
        return Err(Error::InfeasibleSize {
            what: "edge function subset enumeration",
            size: usize::try_from(subsets).unwrap_or(usize::MAX),
            limit: limits::EDGE_FUNCTION_BUDGET as usize,
        });
    }
    let adj = graph.adjacency_masks();
    let mut best: Option<(usize, Vec<usize>)> = None;
    for combo in (0..total).combinations(n) {
        let mask = combo.iter().fold(0u64, |m, &v| m | (1 << v));
        let count = induced_count_mask(&adj, mask);
        if best.as_ref().is_none_or(|(b, _)| count > *b) {
            best = Some((count, combo));
        }
    }
    let (value, witness) = best.expect("at least one subset of each size exists");
    Ok(EdgeFunctionValue {
        value,
        witness: VertexSet::from_unsorted(witness),
    })
}

/// `ℰ(0), ..., ℰ(N)` from a single pass over all `2^N` subsets.
pub fn edge_profile(graph: &Graph) -> Result<Vec<usize>> {
    let n = graph.num_vertices();
    limits::check("edge profile", n, limits::EDGE_FUNCTION_MAX_N)?;
    let adj = graph.adjacency_masks();
    let mut best = vec![0usize; n + 1];
    for mask in 0u64..1 << n {
        let size = mask.count_ones() as usize;
        let count = induced_count_mask(&adj, mask);
        if count > best[size] {
            best[size] = count;
        }
    }
    for k in 1..=n {
        best[k] = best[k].max(best[k - 1]);
    }
    Ok(best)
}

pub(crate) fn induced_count_mask(adj: &[u64], mask: u64) -> usize {
    let mut rest = mask;
    let mut twice = 0u32;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        twice += (adj[v] & mask).count_ones();
    }
    (twice / 2) as usize
}

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Dense `2^N × 2^N` matrix of the Hamiltonian, qubit 0 least significant.
pub fn dense_hamiltonian(inst: &IsingInstance) -> Result<DMatrix<f64>> {
    let n = inst.num_qubits();
    limits::check("dense Hamiltonian", n, limits::DENSE_MAX_N)?;
    let dim = 1usize << n;
    let edge_w = inst.edge_weights_f64();
    let vertex_w = inst.vertex_weights_f64();
    let mut h = DMatrix::<f64>::zeros(dim, dim);
    for b in 0..dim {
        let mut diag = 0.0;
        for (k, &(i, j)) in inst.graph().edges().iter().enumerate() {
            let parity = ((b >> i) ^ (b >> j)) & 1;
            diag -= edge_w[k] * if parity == 0 { 1.0 } else { -1.0 };
        }
        h[(b, b)] = diag;
        for (v, &w) in vertex_w.iter().enumerate() {
            if !w.is_zero() {
                h[(b ^ (1 << v), b)] -= w;
            }
        }
    }
    Ok(h)
}

/// Reads the instance JSON document:
/// `{"graph": {...}, "g": "8/9" | 0.889, "edge_weights": [[i, j, w], ...], "vertex_weights": [w, ...]}`.
pub fn parse_instance_json(text: &str) -> Result<IsingInstance> {
    let doc: Value = serde_json::from_str(text)?;
    let obj = doc
        .as_object()
        .ok_or_else(|| Error::parse("instance must be a JSON object"))?;
    let graph_json: GraphJson = serde_json::from_value(
        obj.get("graph")
            .cloned()
            .ok_or_else(|| Error::parse("instance is missing \"graph\""))?,
    )?;
    let graph = Graph::try_from(graph_json)?;
    let g = match obj.get("g") {
        Some(v) => rational::from_json(v)?,
        None => return Err(Error::parse("instance is missing \"g\"")),
    };
    let edge_weights = match obj.get("edge_weights") {
        None | Some(Value::Null) => None,
        Some(Value::Array(items)) => {
            let mut weights = vec![None; graph.num_edges()];
            for item in items {
                let triple = item
                    .as_array()
                    .filter(|t| t.len() == 3)
                    .ok_or_else(|| Error::parse("edge weight entries are [i, j, w]"))?;
                let endpoint = |v: &Value| {
                    v.as_u64()
                        .map(|x| x as usize)
                        .ok_or_else(|| Error::parse("edge endpoint must be an integer"))
                };
                let (a, b) = (endpoint(&triple[0])?, endpoint(&triple[1])?);
                let k = graph
                    .edge_index(a, b)
                    .ok_or_else(|| Error::invalid(format!("weight given for non-edge ({a}, {b})")))?;
                weights[k] = Some(rational::from_json(&triple[2])?);
            }
            // Unlisted edges keep the default coupling.
            Some(
                weights
                    .into_iter()
                    .map(|w| w.unwrap_or_else(|| Rational::from_integer(1)))
                    .collect(),
            )
        }
        Some(_) => return Err(Error::parse("\"edge_weights\" must be an array")),
    };
    let vertex_weights = match obj.get("vertex_weights") {
        None | Some(Value::Null) => None,
        Some(Value::Array(items)) => Some(
            items
                .iter()
                .map(rational::from_json)
                .collect::<Result<Vec<_>>>()?,
        ),
        Some(_) => return Err(Error::parse("\"vertex_weights\" must be an array")),
    };
    IsingInstance::weighted(graph, g, edge_weights, vertex_weights)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, kite6, line_graph, misc_graph, MiscGraph};
    use nalgebra::SymmetricEigen;

    fn r(n: i128, d: i128) -> Rational {
        Rational::new(n, d)
    }

    /// Brute-force edge function over all subsets of size at most n.
    fn edge_function_oracle(graph: &Graph, n: usize) -> usize {
        (0u64..1 << graph.num_vertices())
            .filter(|m| m.count_ones() as usize <= n)
            .map(|m| graph.induced_edge_count(&VertexSet::from_mask(m)))
            .max()
            .unwrap()
    }

    #[test]
    fn cost_examples() {
        let l3 = IsingInstance::new(line_graph(3).unwrap(), r(1, 2)).unwrap();
        assert_eq!(l3.cost(&VertexSet::from([0, 1])).unwrap(), r(-3, 2));
        let k4 = IsingInstance::new(complete_graph(4).unwrap(), r(7, 3)).unwrap();
        assert_eq!(k4.cost(&VertexSet::new()).unwrap(), r(-28, 3));
        assert_eq!(k4.cost(&VertexSet::full(4)).unwrap(), r(-6, 1));
        assert!(k4.cost(&VertexSet::from([4])).is_err());
    }

    #[test]
    fn rejects_bad_weights() {
        let l3 = line_graph(3).unwrap();
        assert!(IsingInstance::new(l3.clone(), r(-1, 2)).is_err());
        assert!(IsingInstance::weighted(l3.clone(), r(1, 1), Some(vec![r(1, 1), r(0, 1)]), None).is_err());
        assert!(IsingInstance::weighted(l3.clone(), r(1, 1), Some(vec![r(1, 1)]), None).is_err());
        assert!(IsingInstance::weighted(l3, r(1, 1), None, Some(vec![r(1, 1), r(-1, 1), r(0, 1)])).is_err());
    }

    #[test]
    fn weighted_cost() {
        let l3 = line_graph(3).unwrap();
        let inst = IsingInstance::weighted(
            l3,
            r(0, 1),
            Some(vec![r(2, 1), r(1, 3)]),
            Some(vec![r(1, 2), r(0, 1), r(5, 1)]),
        )
        .unwrap();
        // {0,1}: edge (0,1) inside, vertex 2 outside
        assert_eq!(inst.cost(&VertexSet::from([0, 1])).unwrap(), r(-7, 1));
        assert_eq!(inst.total_edge_weight(), r(7, 3));
        let scaled = inst.scaled_weights().unwrap();
        assert_eq!(scaled.scale, 6);
        assert_eq!(scaled.edge, vec![12, 2]);
        assert_eq!(scaled.vertex, vec![3, 0, 30]);
    }

    #[test]
    fn unweighted_default_weights() {
        let inst = IsingInstance::new(line_graph(3).unwrap(), r(8, 9)).unwrap();
        assert!(!inst.is_weighted());
        assert_eq!(inst.edge_weight(1), r(1, 1));
        assert_eq!(inst.vertex_weight(2), r(8, 9));
    }

    #[test]
    fn segment_costs() {
        let k9 = IsingInstance::new(complete_graph(9).unwrap(), r(4, 1)).unwrap();
        let e9 = edge_function(k9.graph(), 9).unwrap().value;
        assert_eq!(e9, edge_function_oracle(k9.graph(), 9));
        assert_eq!(segment_cost(&k9, 9, e9).unwrap(), r(36, 1));
        assert_eq!(segment_cost(&k9, 0, 0).unwrap(), r(36, 1));
        let l9 = IsingInstance::new(line_graph(9).unwrap(), r(8, 9)).unwrap();
        let e = edge_function(l9.graph(), 9).unwrap().value;
        assert_eq!(e, 8);
        assert_eq!(segment_cost(&l9, 9, e).unwrap(), r(8, 1));
        assert!(segment_cost(&l9, 10, 0).is_err());
    }

    #[test]
    fn edge_function_examples() {
        let k5 = complete_graph(5).unwrap();
        let v = edge_function(&k5, 3).unwrap();
        assert_eq!(v.value, 3);
        assert_eq!(v.witness, VertexSet::from([0, 1, 2]));
        let l9 = line_graph(9).unwrap();
        assert_eq!(edge_function_oracle(&l9, 4), 3);
        let v = edge_function(&l9, 4).unwrap();
        assert_eq!(v.value, 3);
        assert_eq!(v.witness, VertexSet::from([0, 1, 2, 3]));
        assert_eq!(edge_function(&kite6(), 1).unwrap().value, 0);
        assert_eq!(edge_function(&kite6(), 0).unwrap().value, 0);
    }

    #[test]
    fn edge_profile_matches_oracle() {
        for g in [kite6(), misc_graph(MiscGraph::G2).unwrap(), line_graph(7).unwrap()] {
            let profile = edge_profile(&g).unwrap();
            assert_eq!(profile[g.num_vertices()], g.num_edges());
            for n in 0..=g.num_vertices() {
                assert_eq!(profile[n], edge_function_oracle(&g, n));
                assert_eq!(profile[n], edge_function(&g, n).unwrap().value);
                if n > 0 {
                    assert!(profile[n] >= profile[n - 1]);
                }
            }
        }
    }

    #[test]
    fn cost_is_submodular() {
        for g in [kite6(), misc_graph(MiscGraph::G2).unwrap()] {
            let inst = IsingInstance::new(g, r(3, 4)).unwrap();
            let n = inst.num_qubits();
            let costs: Vec<Rational> = (0u64..1 << n)
                .map(|m| inst.cost(&VertexSet::from_mask(m)).unwrap())
                .collect();
            for a in 0..1usize << n {
                for b in 0..1usize << n {
                    assert!(costs[a] + costs[b] >= costs[a & b] + costs[a | b]);
                }
            }
        }
    }

    #[test]
    fn min_cost_equals_segment_minimum() {
        for g in [kite6(), misc_graph(MiscGraph::G1).unwrap(), line_graph(8).unwrap()] {
            let profile = edge_profile(&g).unwrap();
            for gv in [r(0, 1), r(1, 2), r(6, 5), r(3, 1)] {
                let inst = IsingInstance::new(g.clone(), gv).unwrap();
                let direct = (0u64..1 << g.num_vertices())
                    .map(|m| inst.cost(&VertexSet::from_mask(m)).unwrap())
                    .min()
                    .unwrap();
                let by_segment = (0..=g.num_vertices())
                    .map(|n| -segment_cost(&inst, n, profile[n]).unwrap())
                    .min()
                    .unwrap();
                assert_eq!(direct, by_segment);
            }
        }
    }

    #[test]
    fn marginal_gain_examples() {
        let l3 = IsingInstance::new(line_graph(3).unwrap(), r(1, 2)).unwrap();
        assert_eq!(l3.marginal_gain(&[false; 3], 1), r(1, 2));
        assert_eq!(l3.marginal_gain(&[true, false, true], 1), r(-3, 2));
    }

    #[test]
    fn dense_examples() {
        let single = IsingInstance::new(Graph::empty(1), r(1, 1)).unwrap();
        let h = dense_hamiltonian(&single).unwrap();
        assert_eq!(h, DMatrix::from_row_slice(2, 2, &[0.0, -1.0, -1.0, 0.0]));

        let l2 = IsingInstance::new(line_graph(2).unwrap(), r(0, 1)).unwrap();
        let h = dense_hamiltonian(&l2).unwrap();
        assert_eq!(h, DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![-1.0, 1.0, 1.0, -1.0])));

        let l2 = IsingInstance::new(line_graph(2).unwrap(), r(3, 4)).unwrap();
        let h = dense_hamiltonian(&l2).unwrap();
        assert_eq!(h, h.transpose());
        let e0 = SymmetricEigen::new(h).eigenvalues.min();
        assert!((e0 + 3.25f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn dense_ground_energy_below_every_clifford_cost() {
        let inst = IsingInstance::new(kite6(), r(7, 5)).unwrap();
        let e0 = SymmetricEigen::new(dense_hamiltonian(&inst).unwrap()).eigenvalues.min();
        for m in 0u64..64 {
            assert!(e0 <= inst.cost_f64(&VertexSet::from_mask(m)).unwrap() + 1e-12);
        }
    }

    #[test]
    fn parses_instance_json() {
        let inst = parse_instance_json(
            r#"{"graph": {"n": 3, "edges": [[0,1],[1,2]]}, "g": "8/9",
                "edge_weights": [[1, 2, 0.5]], "vertex_weights": [1, "1/3", 0]}"#,
        )
        .unwrap();
        assert_eq!(inst.g(), r(8, 9));
        assert_eq!(inst.edge_weight(0), r(1, 1));
        assert_eq!(inst.edge_weight(1), r(1, 2));
        assert_eq!(inst.vertex_weight(1), r(1, 3));
        let plain = parse_instance_json(r#"{"graph": {"n": 2, "edges": [[0,1]]}, "g": 0.889}"#).unwrap();
        assert_eq!(plain.g(), r(889, 1000));
        assert!(parse_instance_json(r#"{"graph": {"n": 2, "edges": [[0,1]]}}"#).is_err());
        assert!(parse_instance_json(
            r#"{"graph": {"n": 3, "edges": [[0,1]]}, "g": 1, "edge_weights": [[0, 2, 1]]}"#
        )
        .is_err());
    }
}
