use super::{Certificate, Solver, VertexSetSolution};
use crate::error::Result;
use crate::graph::VertexSet;
use crate::ising::IsingInstance;
use crate::limits;
use crate::rational::Rational;

/// Walks all subsets in Gray-code order and calls `visit(mask, value)`, where
/// `value = Σ_{E(S)} w_e + Σ_{i∉S} w_i` in scaled integer weights (so the cost
/// is `-value / scale`).
fn for_each_subset(inst: &IsingInstance, mut visit: impl FnMut(u64, i128)) -> Result<i128> {
    let n = inst.num_qubits();
    limits::check("brute-force minimisation", n, limits::BRUTE_FORCE_MAX_N)?;
    let w = inst.scaled_weights()?;
    let graph = inst.graph();
    let weighted_nbrs: Vec<Vec<(usize, i128)>> = (0..n)
        .map(|v| {
            graph
                .neighbors(v)
                .iter()
                .map(|&u| (u, w.edge[graph.edge_index(u, v).expect("edge exists")]))
                .collect()
        })
        .collect();

    let mut mask = 0u64;
    let mut value: i128 = w.vertex.iter().sum();
    visit(mask, value);
    for step in 1u64..1 << n {
        let v = step.trailing_zeros() as usize;
        let inside: i128 = weighted_nbrs[v]
            .iter()
            .filter(|(u, _)| mask >> u & 1 == 1)
            .map(|&(_, c)| c)
            .sum();
        if mask >> v & 1 == 0 {
            value += inside - w.vertex[v];
        } else {
            value -= inside - w.vertex[v];
        }
        mask ^= 1 << v;
        visit(mask, value);
    }
    Ok(w.scale)
}

/// `a` precedes `b`: smaller cardinality first, then lexicographic order of
/// the sorted member lists.
fn precedes(a: u64, b: u64) -> bool {
    match a.count_ones().cmp(&b.count_ones()) {
        std::cmp::Ordering::Less => true,
        std::cmp::Ordering::Greater => false,
        std::cmp::Ordering::Equal => {
            let diff = a ^ b;
            diff != 0 && a & diff & diff.wrapping_neg() != 0
        }
    }
}

/// Exact global minimum over all `2^N` subsets.
pub fn brute_force_min(inst: &IsingInstance) -> Result<VertexSetSolution> {
    let mut best_value = i128::MIN;
    let mut best_mask = 0u64;
    let mut count = 0u64;
    let scale = for_each_subset(inst, |mask, value| {
        if value > best_value {
            best_value = value;
            best_mask = mask;
            count = 1;
        } else if value == best_value {
            count += 1;
            if precedes(mask, best_mask) {
                best_mask = mask;
            }
        }
    })?;
    Ok(VertexSetSolution {
        vertex_set: VertexSet::from_mask(best_mask),
        cost: Rational::new(-best_value, scale),
        solver: Solver::BruteForce,
        certificate: Some(Certificate::OptimaCount(count)),
        degenerate: Some(count > 1),
    })
}

/// Number of subsets whose cost equals `cost` exactly.
pub fn count_optima(inst: &IsingInstance, cost: Rational) -> Result<u64> {
    let w = inst.scaled_weights()?;
    let target = -cost * Rational::from_integer(w.scale);
    if !target.is_integer() {
        return Ok(0);
    }
    let target = target.to_integer();
    let mut count = 0u64;
    for_each_subset(inst, |_, value| count += (value == target) as u64)?;
    Ok(count)
}
