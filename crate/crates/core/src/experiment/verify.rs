use std::path::{Path, PathBuf};

use num::Zero;
use serde::Serialize;

use super::source::{bundled_sources, Family, GraphSource, NamedGraph, RandomSpec};
use crate::clifford::{build_witness, pauli_expectation_dense, statevector_oracle, verify_exclusions};
use crate::density::two_segmented;
use crate::error::{Error, Result};
use crate::exact_diag::ground_energy;
use crate::graph::{misc_graph, parse_graph, Graph, MiscGraph, VertexSet};
use crate::ising::IsingInstance;
use crate::limits;
use crate::rational::{self, Rational};
use crate::subset::{brute_force_min, mincut_min, min_norm_point_min, MinNormOptions};

/// Largest graph the verification suite touches when `CLIFIS_MAX_N` is unset.
pub const VERIFY_MAX_N: usize = 12;
/// Statevector cross-checks run up to this size.
pub const STATEVECTOR_CHECK_MAX_N: usize = 10;
pub const WOLFE_TOLERANCE: f64 = 1e-7;

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Directory holding `g1.txt`..`g3.txt`; the bundled copies are used if unset.
    pub data_dir: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub max_n: usize,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Problems with the Clifford witness of `set`: energy mismatch, invalid
/// tableau, failed exclusions, and (when `dense`) statevector disagreement.
pub fn witness_problems(inst: &IsingInstance, set: &VertexSet, cost: Rational, dense: bool) -> Result<Vec<String>> {
    let mut problems = Vec::new();
    let witness = build_witness(inst, set)?;
    if witness.energy != cost {
        problems.push(format!(
            "witness energy {} differs from cost {}",
            rational::format_rational(&witness.energy),
            rational::format_rational(&cost)
        ));
    }
    if !witness.tableau.generators_commute() {
        problems.push("stabilizer generators do not commute".into());
    }
    let exclusions = verify_exclusions(&witness.tableau, inst)?;
    problems.extend(exclusions.violations);
    if dense {
        let psi = statevector_oracle(&witness.tableau)?;
        let n = inst.num_qubits();
        for t in &witness.term_expectations {
            let value = pauli_expectation_dense(&psi, &t.term.pauli(n))?;
            if (value - f64::from(t.expectation)).abs() > 1e-10 {
                problems.push(format!("{}: tableau {} vs statevector {value}", t.term.label(), t.expectation));
            }
        }
    }
    Ok(problems)
}

fn load_misc(id: MiscGraph, data_dir: Option<&Path>) -> Result<Graph> {
    match data_dir {
        None => misc_graph(id),
        Some(dir) => {
            let path = dir.join(id.file_name());
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::file(&path, e))?;
            parse_graph(&text)
        }
    }
}

/// Expected transition value, or `None` for graphs that are not two-segmented.
fn expected_transition(source: &GraphSource) -> Option<Option<Rational>> {
    match source {
        GraphSource::Family(Family::Line, n) => Some(Some(Rational::new(*n as i128 - 1, *n as i128))),
        GraphSource::Family(Family::Cycle, _) => Some(Some(Rational::from_integer(1))),
        GraphSource::Family(Family::Complete, n) => Some(Some(Rational::new(*n as i128 - 1, 2))),
        GraphSource::Kite6 | GraphSource::Misc(_) => Some(None),
        _ => None,
    }
}

struct Suite {
    checks: Vec<CheckResult>,
}

impl Suite {
    fn record(&mut self, name: String, outcome: Result<Vec<String>>) {
        let (passed, detail) = match outcome {
            Ok(problems) if problems.is_empty() => (true, "ok".to_string()),
            Ok(problems) => (false, problems.join("; ")),
            Err(e) => (false, e.to_string()),
        };
        self.checks.push(CheckResult { name, passed, detail });
    }
}

/// Field ratios `0, 1/4, ..., ceil(d*) + 1`, plus the transition value.
fn check_points(graph: &Graph, transition: Option<Rational>) -> Result<Vec<Rational>> {
    let stop = super::grid::GGrid::for_graph(graph)?.stop;
    let mut pts = super::grid::GGrid::new(Rational::zero(), stop, Rational::new(1, 4))?.points();
    if let Some(t) = transition {
        if !pts.contains(&t) {
            pts.push(t);
        }
    }
    Ok(pts)
}

fn solver_and_witness_checks(named: &NamedGraph, points: &[Rational], exact_cap: usize) -> Result<Vec<String>> {
    let mut problems = Vec::new();
    let n = named.graph.num_vertices();
    for &g in points {
        let inst = IsingInstance::new(named.graph.clone(), g)?;
        let brute = brute_force_min(&inst)?;
        let cut = mincut_min(&inst)?;
        let wolfe = min_norm_point_min(&inst, MinNormOptions::default())?;
        let at = rational::format_rational(&g);
        if cut.cost != brute.cost {
            problems.push(format!("g={at}: mincut {} vs brute {}", cut.cost, brute.cost));
        }
        if (wolfe.cost_f64() - brute.cost_f64()).abs() > WOLFE_TOLERANCE {
            problems.push(format!("g={at}: wolfe {} vs brute {}", wolfe.cost, brute.cost));
        }
        if cut.degenerate != brute.degenerate {
            problems.push(format!("g={at}: degeneracy flags differ"));
        }
        let dense = n <= STATEVECTOR_CHECK_MAX_N.min(limits::effective(STATEVECTOR_CHECK_MAX_N));
        for p in witness_problems(&inst, &cut.vertex_set, cut.cost, dense)? {
            problems.push(format!("g={at}: {p}"));
        }
        if n <= exact_cap {
            let exact = ground_energy(&inst, 1e-10)?.energy;
            if cut.cost_f64() < exact - 1e-7 {
                problems.push(format!("g={at}: clifford {} below ground energy {exact}", cut.cost_f64()));
            }
        }
    }
    Ok(problems)
}

/// Runs solver agreement, witness, variational and classification checks
/// over the bundled graphs no larger than the active size cap.
pub fn verify_bundle(opts: &VerifyOptions) -> Result<VerifyReport> {
    let cap = limits::effective(VERIFY_MAX_N);
    let mut suite = Suite { checks: Vec::new() };

    let mut cases: Vec<(GraphSource, NamedGraph)> = Vec::new();
    for source in bundled_sources(4..=12) {
        let named = match &source {
            GraphSource::Misc(id) => {
                let loaded = load_misc(*id, opts.data_dir.as_deref());
                let name = format!("data:{id}");
                match loaded {
                    Ok(graph) => {
                        let problems = if graph.num_edges() == id.expected_edges() {
                            Vec::new()
                        } else {
                            vec![format!(
                                "{} has {} edges, expected {}",
                                id.file_name(),
                                graph.num_edges(),
                                id.expected_edges()
                            )]
                        };
                        suite.record(name, Ok(problems));
                        NamedGraph { id: id.to_string(), graph }
                    }
                    Err(e) => {
                        suite.record(name, Err(e));
                        continue;
                    }
                }
            }
            _ => source.resolve()?.remove(0),
        };
        if named.graph.num_vertices() <= cap {
            cases.push((source, named));
        }
    }
    let random = RandomSpec { n: 7.min(cap.max(2)), p: 0.5, count: 5, seed: 17 };
    if random.n >= 4 {
        for named in GraphSource::Random(random).resolve()? {
            cases.push((GraphSource::Random(random), named));
        }
    }

    for (source, named) in &cases {
        let seg = two_segmented(&named.graph);
        if let Some(expected) = expected_transition(source) {
            let problems = match &seg {
                Ok(s) if s.transition_value == expected => Vec::new(),
                Ok(s) => vec![format!(
                    "transition {:?}, expected {:?}",
                    s.transition_value.map(|t| rational::format_rational(&t)),
                    expected.map(|t| rational::format_rational(&t))
                )],
                Err(e) => vec![format!("classification failed: {e}")],
            };
            suite.record(format!("segments:{}", named.id), Ok(problems));
        }
        let transition = seg.ok().and_then(|s| s.transition_value);
        let outcome = check_points(&named.graph, transition)
            .and_then(|pts| solver_and_witness_checks(named, &pts, cap.min(VERIFY_MAX_N)));
        suite.record(format!("optimum:{}", named.id), outcome);
    }

    let passed = suite.checks.iter().all(|c| c.passed);
    Ok(VerifyReport { passed, max_n: cap, checks: suite.checks })
}
