//! Exact minimisation of the Clifford cost `f(V) = -Σ_{E(V)} J_e - Σ_{i∉V} J_i`.
//!
//! Three independent routes:
//!
//! * [`brute_force_min`] enumerates all `2^N` subsets (the reference);
//! * [`mincut_min`] reduces to a project-selection minimum cut solved by
//!   [`flow::Dinic`] (the production path);
//! * [`min_norm_point_min`] runs Wolfe's minimum-norm-point algorithm on the
//!   base polytope of the normalised cost.

mod brute;
pub mod flow;
mod mincut;
mod wolfe;

use std::fmt;
use std::str::FromStr;

use serde_json::json;

pub use brute::{brute_force_min, count_optima};
pub use flow::{max_flow, FlowNetwork, MaxFlow};
pub use mincut::{mincut_min, project_selection, ProjectSelectionCut};
pub use wolfe::{min_norm_point_min, MinNormOptions};

use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::ising::IsingInstance;
use crate::rational::{self, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Solver {
    BruteForce,
    MinCut,
    MinNormPoint,
}

impl Solver {
    pub fn name(self) -> &'static str {
        match self {
            Solver::BruteForce => "brute",
            Solver::MinCut => "mincut",
            Solver::MinNormPoint => "wolfe",
        }
    }

    pub fn solve(self, inst: &IsingInstance) -> Result<VertexSetSolution> {
        match self {
            Solver::BruteForce => brute_force_min(inst),
            Solver::MinCut => mincut_min(inst),
            Solver::MinNormPoint => min_norm_point_min(inst, MinNormOptions::default()),
        }
    }
}

impl fmt::Display for Solver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Solver {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "brute" | "brute-force" => Ok(Solver::BruteForce),
            "mincut" | "min-cut" => Ok(Solver::MinCut),
            "wolfe" | "min-norm" => Ok(Solver::MinNormPoint),
            _ => Err(Error::invalid(format!("unknown solver {s:?} (brute, mincut, wolfe)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Certificate {
    /// Number of subsets attaining the minimum.
    OptimaCount(u64),
    /// Minimum cut capacity of the project-selection network.
    CutValue(Rational),
    /// Euclidean norm of the final base-polytope point (scaled weights).
    FinalNorm(f64),
}

#[derive(Clone, Debug, PartialEq)]
pub struct VertexSetSolution {
    pub vertex_set: VertexSet,
    pub cost: Rational,
    pub solver: Solver,
    pub certificate: Option<Certificate>,
    /// Whether another vertex set attains the same cost; `None` if unknown.
    pub degenerate: Option<bool>,
}

impl VertexSetSolution {
    pub fn cost_f64(&self) -> f64 {
        rational::to_f64(&self.cost)
    }

    /// Recomputes the cost from the vertex set and compares exactly.
    pub fn check(&self, inst: &IsingInstance) -> Result<()> {
        let direct = inst.cost(&self.vertex_set)?;
        if direct != self.cost {
            return Err(Error::Internal(format!(
                "{} reported cost {} but the set costs {}",
                self.solver,
                rational::format_rational(&self.cost),
                rational::format_rational(&direct)
            )));
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let certificate = match &self.certificate {
            None => serde_json::Value::Null,
            Some(Certificate::OptimaCount(c)) => json!({ "optima_count": c }),
            Some(Certificate::CutValue(v)) => json!({ "cut_value": rational::format_rational(v) }),
            Some(Certificate::FinalNorm(v)) => json!({ "final_norm": v }),
        };
        json!({
            "vertex_set": self.vertex_set,
            "cost": self.cost_f64(),
            "cost_exact": rational::format_rational(&self.cost),
            "solver": self.solver.name(),
            "certificate": certificate,
            "degenerate": self.degenerate,
        })
    }
}

/// `f(S ∪ {v}) - f(S)` for `v ∉ S`.
pub fn marginal_gain(inst: &IsingInstance, set: &VertexSet, v: usize) -> Result<Rational> {
    let n = inst.num_qubits();
    set.validate(n)?;
    if v >= n {
        return Err(Error::invalid(format!("vertex {v} out of range")));
    }
    if set.contains(v) {
        return Err(Error::invalid(format!("vertex {v} is already in the set")));
    }
    Ok(inst.marginal_gain(&set.indicator(n), v))
}
