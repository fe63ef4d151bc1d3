use super::flow::Dinic;
use super::{Certificate, Solver, VertexSetSolution};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::ising::IsingInstance;
use crate::rational::Rational;

/// Minimum cut of the project-selection network for
/// `max_S Σ_{E(S)} edge_cap - Σ_S vertex_cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectSelectionCut {
    pub cut: i128,
    /// Vertex part of the minimal minimum cut's source side.
    pub minimal: VertexSet,
    /// Vertex part of the maximal minimum cut's source side.
    pub maximal: VertexSet,
}

impl ProjectSelectionCut {
    /// `max_S (Σ_{E(S)} edge_cap - Σ_S vertex_cap) = Σ_E edge_cap - cut`.
    pub fn profit(&self, total_edge_cap: i128) -> i128 {
        total_edge_cap - self.cut
    }
}

/// Source → edge node (capacity `edge_cap[e]`), edge node → both endpoints
/// (unbounded), vertex node → sink (capacity `vertex_cap[v]`).
///
/// "Unbounded" is `1 + Σ finite capacities`, which no minimum cut can use.
pub fn project_selection(
    graph: &Graph,
    edge_cap: &[i128],
    vertex_cap: &[i128],
) -> Result<ProjectSelectionCut> {
    let n = graph.num_vertices();
    let m = graph.num_edges();
    if edge_cap.len() != m || vertex_cap.len() != n {
        return Err(Error::invalid("capacity vectors do not match the graph"));
    }
    let overflow = || Error::Overflow("project-selection capacities exceed 128 bits".into());
    let finite = edge_cap
        .iter()
        .chain(vertex_cap)
        .try_fold(0i128, |acc, &c| acc.checked_add(c))
        .ok_or_else(overflow)?;
    let infinite = finite.checked_add(1).ok_or_else(overflow)?;

    let source = 0;
    let sink = 1;
    let edge_node = |e: usize| 2 + e;
    let vertex_node = |v: usize| 2 + m + v;
    let mut dinic = Dinic::new(2 + m + n);
    for (e, &(a, b)) in graph.edges().iter().enumerate() {
        dinic.add_arc(source, edge_node(e), edge_cap[e]);
        dinic.add_arc(edge_node(e), vertex_node(a), infinite);
        dinic.add_arc(edge_node(e), vertex_node(b), infinite);
    }
    for (v, &c) in vertex_cap.iter().enumerate() {
        dinic.add_arc(vertex_node(v), sink, c);
    }
    let cut = dinic.max_flow(source, sink)?;
    if cut >= infinite {
        return Err(Error::Internal("minimum cut crossed an unbounded arc".into()));
    }
    let pick = |side: Vec<bool>| (0..n).filter(|&v| side[vertex_node(v)]).collect::<VertexSet>();
    Ok(ProjectSelectionCut {
        cut,
        minimal: pick(dinic.source_side(source)),
        maximal: pick(dinic.maximal_source_side(sink)),
    })
}

/// Minimises the cost via one maximum-flow computation:
/// `min_V f(V) = -Σ_i J_i - (Σ_e J_e - mincut)`.
///
/// Returns the inclusion-minimal optimum. The optimum is degenerate exactly
/// when the minimal and maximal minimum cuts select different vertex sets.
pub fn mincut_min(inst: &IsingInstance) -> Result<VertexSetSolution> {
    let w = inst.scaled_weights()?;
    let cut = project_selection(inst.graph(), &w.edge, &w.vertex)?;
    let total_edge: i128 = w.edge.iter().sum();
    let total_vertex: i128 = w.vertex.iter().sum();
    let cost = Rational::new(-total_vertex - cut.profit(total_edge), w.scale);
    let solution = VertexSetSolution {
        degenerate: Some(cut.minimal != cut.maximal),
        vertex_set: cut.minimal,
        cost,
        solver: Solver::MinCut,
        certificate: Some(Certificate::CutValue(Rational::new(cut.cut, w.scale))),
    };
    solution.check(inst)?;
    Ok(solution)
}
