//! Sweeps over graphs and field ratios, the random-graph study, and the
//! verification bundle behind the command-line tool.

mod grid;
mod random_study;
mod source;
mod sweep;
mod verify;

pub use grid::{default_step, GGrid};
pub use random_study::{run_random_study, MeanCurve, RandomStudy, RandomStudyConfig};
pub use source::{bundled_sources, load_graph, Family, GraphSource, NamedGraph, RandomSpec};
pub use sweep::{
    errors_to_csv, records_to_csv, run_sweep, sidecar_paths, write_sweep_outputs, GridSpec,
    SweepConfig, SweepRecord, SweepSettings, CSV_HEADER, PLOT_RECIPE, VARIATIONAL_SLACK,
};
pub use verify::{
    verify_bundle, witness_problems, CheckResult, VerifyOptions, VerifyReport,
    STATEVECTOR_CHECK_MAX_N, VERIFY_MAX_N,
};
