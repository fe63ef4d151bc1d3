use std::path::{Path, PathBuf};

use num::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Deserializer};

use super::grid::{default_step, GGrid};
use super::source::{GraphSource, NamedGraph};
use crate::density::{two_segmented, SegmentationReport};
use crate::error::{Error, Result};
use crate::exact_diag::{ground_energy, relative_error, DEFAULT_TOLERANCE};
use crate::ising::IsingInstance;
use crate::rational::{self, Rational};
use crate::subset::Solver;

pub const CSV_HEADER: [&str; 10] = [
    "graph_id",
    "n",
    "g",
    "clifford_energy",
    "exact_energy",
    "relative_error",
    "set_size",
    "degenerate",
    "two_segmented",
    "transition",
];

/// Slack allowed when comparing the Clifford optimum to the exact ground energy.
pub const VARIATIONAL_SLACK: f64 = 1e-7;

/// Range of field ratios; a missing `stop` means `ceil(d*) + 1` per graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridSpec {
    pub start: Rational,
    pub stop: Option<Rational>,
    pub step: Rational,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            start: Rational::zero(),
            stop: None,
            step: default_step(),
        }
    }
}

impl GridSpec {
    pub fn for_graph(&self, graph: &crate::graph::Graph) -> Result<GGrid> {
        let stop = match self.stop {
            Some(stop) => stop,
            None => GGrid::for_graph(graph)?.stop,
        };
        GGrid::new(self.start, stop.max(self.start), self.step)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub graphs: Vec<GraphSource>,
    pub grid: GridSpec,
    pub solver: Solver,
    pub exact: bool,
    pub tolerance: f64,
    pub out: Option<PathBuf>,
    /// Seed for random graph sources that do not name their own.
    pub seed: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            graphs: Vec::new(),
            grid: GridSpec::default(),
            solver: Solver::MinCut,
            exact: true,
            tolerance: DEFAULT_TOLERANCE,
            out: None,
            seed: 0,
        }
    }
}

fn opt_rational<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<Rational>, D::Error> {
    Option::<serde_json::Value>::deserialize(d)?
        .map(|v| rational::from_json(&v).map_err(serde::de::Error::custom))
        .transpose()
}

/// Partial sweep settings, read from a JSON file or from flags.
///
/// Rational fields accept `"8/9"`, `"0.05"` or plain JSON numbers.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSettings {
    pub graphs: Option<Vec<String>>,
    #[serde(default, deserialize_with = "opt_rational")]
    pub g_start: Option<Rational>,
    #[serde(default, deserialize_with = "opt_rational")]
    pub g_stop: Option<Rational>,
    #[serde(default, deserialize_with = "opt_rational")]
    pub g_step: Option<Rational>,
    pub solver: Option<String>,
    pub exact: Option<bool>,
    pub tolerance: Option<f64>,
    pub out: Option<PathBuf>,
    pub seed: Option<u64>,
}

impl SweepSettings {
    pub fn from_json_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::file(path, e))?;
        serde_json::from_str(&text).map_err(|e| Error::parse(format!("{}: {e}", path.display())))
    }

    /// Fields set in `over` replace those in `self`.
    pub fn merged(self, over: SweepSettings) -> SweepSettings {
        SweepSettings {
            graphs: over.graphs.or(self.graphs),
            g_start: over.g_start.or(self.g_start),
            g_stop: over.g_stop.or(self.g_stop),
            g_step: over.g_step.or(self.g_step),
            solver: over.solver.or(self.solver),
            exact: over.exact.or(self.exact),
            tolerance: over.tolerance.or(self.tolerance),
            out: over.out.or(self.out),
            seed: over.seed.or(self.seed),
        }
    }

    pub fn build(self) -> Result<SweepConfig> {
        let defaults = SweepConfig::default();
        let seed = self.seed.unwrap_or(defaults.seed);
        let graphs = self
            .graphs
            .unwrap_or_default()
            .iter()
            .map(|g| GraphSource::parse(g, seed))
            .collect::<Result<Vec<_>>>()?;
        if graphs.is_empty() {
            return Err(Error::invalid("sweep needs at least one graph"));
        }
        let grid = GridSpec {
            start: self.g_start.unwrap_or(defaults.grid.start),
            stop: self.g_stop,
            step: self.g_step.unwrap_or(defaults.grid.step),
        };
        GGrid::new(grid.start, grid.stop.unwrap_or(grid.start), grid.step)?;
        let tolerance = self.tolerance.unwrap_or(defaults.tolerance);
        Ok(SweepConfig {
            graphs,
            grid,
            solver: self.solver.as_deref().map(str::parse).transpose()?.unwrap_or(defaults.solver),
            exact: self.exact.unwrap_or(defaults.exact),
            tolerance,
            out: self.out,
            seed,
        })
    }
}

/// One `(graph, g)` row of a sweep.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepRecord {
    pub graph_id: String,
    pub n: usize,
    pub g: Rational,
    pub clifford_energy: Option<Rational>,
    pub exact_energy: Option<f64>,
    pub relative_error: Option<f64>,
    pub set_size: Option<usize>,
    pub degenerate: Option<bool>,
    pub two_segmented: Option<bool>,
    pub transition: Option<Rational>,
    pub errors: Vec<String>,
}

impl SweepRecord {
    pub fn clifford_f64(&self) -> Option<f64> {
        self.clifford_energy.as_ref().map(rational::to_f64)
    }
}

fn evaluate(
    named: &NamedGraph,
    segments: &std::result::Result<SegmentationReport, String>,
    g: Rational,
    cfg: &SweepConfig,
) -> SweepRecord {
    let mut rec = SweepRecord {
        graph_id: named.id.clone(),
        n: named.graph.num_vertices(),
        g,
        clifford_energy: None,
        exact_energy: None,
        relative_error: None,
        set_size: None,
        degenerate: None,
        two_segmented: None,
        transition: None,
        errors: Vec::new(),
    };
    match segments {
        Ok(s) => {
            rec.two_segmented = Some(s.two_segmented);
            rec.transition = s.transition_value;
        }
        Err(e) => rec.errors.push(format!("segments: {e}")),
    }
    let inst = match IsingInstance::new(named.graph.clone(), g) {
        Ok(inst) => inst,
        Err(e) => {
            rec.errors.push(e.to_string());
            return rec;
        }
    };
    match cfg.solver.solve(&inst) {
        Ok(sol) => {
            rec.clifford_energy = Some(sol.cost);
            rec.set_size = Some(sol.vertex_set.len());
            rec.degenerate = sol.degenerate;
        }
        Err(e) => rec.errors.push(format!("{}: {e}", cfg.solver)),
    }
    if cfg.exact {
        match ground_energy(&inst, cfg.tolerance) {
            Ok(res) => rec.exact_energy = Some(res.energy),
            Err(e) => rec.errors.push(format!("exact: {e}")),
        }
    }
    if let (Some(c), Some(e)) = (rec.clifford_f64(), rec.exact_energy) {
        if c < e - VARIATIONAL_SLACK {
            rec.errors.push(format!("variational bound violated: clifford {c} < exact {e}"));
        }
        match relative_error(c, e) {
            Ok(r) => rec.relative_error = Some(r),
            Err(err) => rec.errors.push(format!("relative error: {err}")),
        }
    }
    rec
}

/// Evaluates every `(graph, g)` pair. Rows come back ordered by graph (in
/// source order) and then by increasing `g`, whatever the scheduling.
///
/// Failures are attached to their row and do not stop the run.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<SweepRecord>> {
    let mut graphs = Vec::new();
    for source in &cfg.graphs {
        graphs.extend(source.resolve()?);
    }
    let mut items = Vec::new();
    for named in &graphs {
        let segments = if named.graph.num_edges() == 0 {
            Err("graph has no edges".to_string())
        } else {
            two_segmented(&named.graph).map_err(|e| e.to_string())
        };
        for g in cfg.grid.for_graph(&named.graph)?.points() {
            items.push((named, segments.clone(), g));
        }
    }
    Ok(items
        .par_iter()
        .map(|(named, segments, g)| evaluate(named, segments, *g, cfg))
        .collect())
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// The sweep table with the fixed header; floats use shortest round-trip form.
pub fn records_to_csv(records: &[SweepRecord]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.write_record([
            r.graph_id.clone(),
            r.n.to_string(),
            rational::to_f64(&r.g).to_string(),
            opt(r.clifford_f64()),
            opt(r.exact_energy),
            opt(r.relative_error),
            opt(r.set_size),
            opt(r.degenerate),
            opt(r.two_segmented),
            opt(r.transition.as_ref().map(rational::to_f64)),
        ])
        ?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
}

/// `graph_id,g,error` rows for records that carry failures.
pub fn errors_to_csv(records: &[SweepRecord]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["graph_id", "g", "error"])?;
    for r in records {
        for e in &r.errors {
            w.write_record([r.graph_id.as_str(), &rational::format_rational(&r.g), e])
                ?;
        }
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
}

pub const PLOT_RECIPE: &str = "\
Columns: graph_id,n,g,clifford_energy,exact_energy,relative_error,set_size,degenerate,two_segmented,transition

Energy plot: for each graph_id, draw clifford_energy and exact_energy against g.
Error plot: for each graph_id, draw relative_error against g and mark the
vertical line g = transition where the transition column is nonempty.

pandas/matplotlib:
  import pandas as pd, matplotlib.pyplot as plt
  df = pd.read_csv(CSV)
  for gid, part in df.groupby('graph_id', sort=False):
      plt.plot(part.g, part.relative_error, label=gid)
  plt.xlabel('g'); plt.ylabel('relative error'); plt.legend(); plt.show()

gnuplot:
  set datafile separator ','
  plot CSV using 3:6 with linespoints title 'relative error'
";

/// Companion file paths: `<out>.errors.csv` and `<out>.plot.txt`.
pub fn sidecar_paths(out: &Path) -> (PathBuf, PathBuf) {
    let with = |suffix: &str| {
        let mut s = out.as_os_str().to_owned();
        s.push(suffix);
        PathBuf::from(s)
    };
    (with(".errors.csv"), with(".plot.txt"))
}

/// Writes the CSV, the plot recipe, and the error sidecar when any row failed.
pub fn write_sweep_outputs(records: &[SweepRecord], out: &Path) -> Result<()> {
    let io = |p: &Path, e| Error::file(p, e);
    std::fs::write(out, records_to_csv(records)?).map_err(|e| io(out, e))?;
    let (errors, plot) = sidecar_paths(out);
    std::fs::write(&plot, PLOT_RECIPE).map_err(|e| io(&plot, e))?;
    if records.iter().any(|r| !r.errors.is_empty()) {
        std::fs::write(&errors, errors_to_csv(records)?).map_err(|e| io(&errors, e))?;
    } else if errors.exists() {
        std::fs::remove_file(&errors).map_err(|e| io(&errors, e))?;
    }
    Ok(())
}
