use serde::Serialize;
use serde_json::json;

use super::{PauliOperator, StabilizerTableau};
use crate::error::{Error, Result};
use crate::graph::{Edge, VertexSet};
use crate::ising::IsingInstance;
use crate::rational::{self, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum HamiltonianTerm {
    /// `Z_i Z_j` for the `edge`-th graph edge.
    Zz { edge: usize, i: usize, j: usize },
    X { vertex: usize },
}

impl HamiltonianTerm {
    pub fn pauli(&self, n: usize) -> PauliOperator {
        match *self {
            HamiltonianTerm::Zz { i, j, .. } => PauliOperator::zz(n, i, j),
            HamiltonianTerm::X { vertex } => PauliOperator::single_x(n, vertex),
        }
    }

    /// Coefficient magnitude in `H`; the term enters as `-weight · term`.
    pub fn weight(&self, inst: &IsingInstance) -> Rational {
        match *self {
            HamiltonianTerm::Zz { edge, .. } => inst.edge_weight(edge),
            HamiltonianTerm::X { vertex } => inst.vertex_weight(vertex),
        }
    }

    pub fn label(&self) -> String {
        match *self {
            HamiltonianTerm::Zz { i, j, .. } => format!("Z{i}Z{j}"),
            HamiltonianTerm::X { vertex } => format!("X{vertex}"),
        }
    }
}

/// Every `Z_iZ_j` (edge order) followed by every `X_i`.
pub fn hamiltonian_terms(inst: &IsingInstance) -> Vec<HamiltonianTerm> {
    let edges = inst
        .graph()
        .edges()
        .iter()
        .enumerate()
        .map(|(edge, &(i, j))| HamiltonianTerm::Zz { edge, i, j });
    let fields = (0..inst.num_qubits()).map(|vertex| HamiltonianTerm::X { vertex });
    edges.chain(fields).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TermExpectation {
    pub term: HamiltonianTerm,
    pub expectation: i8,
}

/// The stabilizer state realising the cost of a vertex set.
#[derive(Clone, Debug)]
pub struct CliffordWitness {
    pub tableau: StabilizerTableau,
    pub vertex_set: VertexSet,
    /// Spanning-forest edges of the subgraph induced by `vertex_set`.
    pub forest_edges: Vec<Edge>,
    pub term_expectations: Vec<TermExpectation>,
    pub energy: Rational,
}

impl CliffordWitness {
    /// The partial generator list: `Z_iZ_j` for each forest edge and `X_j`
    /// for each vertex outside the set. It has at most `N` elements and
    /// every one of them has expectation `+1`.
    pub fn lemma_operators(&self) -> Vec<PauliOperator> {
        let n = self.tableau.num_qubits();
        let forest = self.forest_edges.iter().map(|&(i, j)| PauliOperator::zz(n, i, j));
        let fields = self
            .vertex_set
            .complement(n)
            .iter()
            .map(|j| PauliOperator::single_x(n, j))
            .collect::<Vec<_>>();
        forest.chain(fields).collect()
    }

    pub fn energy_f64(&self) -> f64 {
        rational::to_f64(&self.energy)
    }

    /// `-Σ weight · ⟨term⟩` recomputed from the stored expectations.
    pub fn recompute_energy(&self, inst: &IsingInstance) -> Rational {
        self.term_expectations
            .iter()
            .map(|t| -t.term.weight(inst) * Rational::from_integer(t.expectation as i128))
            .sum()
    }

    /// Export consumed by a VQE front end as its initial state.
    pub fn to_json(&self) -> serde_json::Value {
        let n = self.tableau.num_qubits();
        json!({
            "vertex_set": self.vertex_set,
            "generators": self.tableau.generators().iter().map(ToString::to_string).collect::<Vec<_>>(),
            "terms": self.term_expectations.iter().map(|t| json!({
                "term": t.term.label(),
                "pauli": t.term.pauli(n).to_string(),
                "expectation": t.expectation,
            })).collect::<Vec<_>>(),
            "energy": self.energy_f64(),
            "energy_exact": rational::format_rational(&self.energy),
        })
    }
}

/// Builds `Π_{j∉V} R_Y(π/2)_j |0...0⟩` and records every term expectation.
///
/// Fails with an internal error if the state does not stabilize the
/// forest `Z_iZ_j` and complement `X_j` operators.
pub fn build_witness(inst: &IsingInstance, set: &VertexSet) -> Result<CliffordWitness> {
    let n = inst.num_qubits();
    set.validate(n)?;
    let mut tableau = StabilizerTableau::zero_state(n);
    for j in set.complement(n).iter() {
        tableau.ry_half_pi(j);
    }
    tableau.validate()?;

    let forest = inst.graph().spanning_forest(set);
    let term_expectations = hamiltonian_terms(inst)
        .into_iter()
        .map(|term| {
            Ok(TermExpectation {
                term,
                expectation: tableau.expectation(&term.pauli(n))?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut witness = CliffordWitness {
        tableau,
        vertex_set: set.clone(),
        forest_edges: forest.edges().to_vec(),
        term_expectations,
        energy: Rational::from_integer(0),
    };
    for op in witness.lemma_operators() {
        if witness.tableau.expectation(&op)? != 1 {
            return Err(Error::Internal(format!("{op} is not in the stabilizer group")));
        }
    }
    witness.energy = witness.recompute_energy(inst);
    Ok(witness)
}

pub fn pauli_expectation(tableau: &StabilizerTableau, p: &PauliOperator) -> Result<i8> {
    tableau.expectation(p)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ExclusionReport {
    /// No `Z_iZ_j` and `X_k` with `k ∈ {i, j}` are both `±1`.
    pub zz_x_exclusive: bool,
    /// Every vertex with `⟨X_j⟩ = ±1` has all incident `⟨Z_iZ_j⟩ = 0`, and
    /// every edge with `⟨Z_iZ_j⟩ = ±1` has `⟨X_i⟩ = ⟨X_j⟩ = 0`.
    pub x_blocks_incident_zz: bool,
    pub violations: Vec<String>,
}

impl ExclusionReport {
    pub fn passed(&self) -> bool {
        self.zz_x_exclusive && self.x_blocks_incident_zz
    }
}

/// Checks that no edge term and field term on a shared qubit are both
/// definite in the state.
pub fn verify_exclusions(tableau: &StabilizerTableau, inst: &IsingInstance) -> Result<ExclusionReport> {
    let n = inst.num_qubits();
    if tableau.num_qubits() != n {
        return Err(Error::invalid("tableau and instance differ in qubit count"));
    }
    let x_exp = (0..n)
        .map(|k| tableau.expectation(&PauliOperator::single_x(n, k)))
        .collect::<Result<Vec<_>>>()?;
    let zz_exp = inst
        .graph()
        .edges()
        .iter()
        .map(|&(i, j)| tableau.expectation(&PauliOperator::zz(n, i, j)))
        .collect::<Result<Vec<_>>>()?;

    let mut report = ExclusionReport {
        zz_x_exclusive: true,
        x_blocks_incident_zz: true,
        violations: Vec::new(),
    };
    for (e, &(i, j)) in inst.graph().edges().iter().enumerate() {
        for k in [i, j] {
            if zz_exp[e] != 0 && x_exp[k] != 0 {
                report.zz_x_exclusive = false;
                report.violations.push(format!("Z{i}Z{j} and X{k} both definite"));
            }
        }
    }
    for v in 0..n {
        let incident_definite = inst.graph().neighbors(v).iter().any(|&u| {
            let e = inst.graph().edge_index(u, v).expect("neighbour edge exists");
            zz_exp[e] != 0
        });
        if x_exp[v] != 0 && incident_definite {
            report.x_blocks_incident_zz = false;
            report.violations.push(format!("X{v} definite next to a definite edge term"));
        }
    }
    Ok(report)
}
