use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use clifis::clifford::build_witness;
use clifis::density::{densest_subgraph, extreme_thresholds, two_segmented};
use clifis::exact_diag::{ground_energy, DEFAULT_TOLERANCE};
use clifis::experiment::{
    load_graph, records_to_csv, run_random_study, run_sweep, verify_bundle, write_sweep_outputs,
    GGrid, GraphSource, RandomSpec, RandomStudyConfig, SweepSettings, VerifyOptions,
};
use clifis::ising::parse_instance_json;
use clifis::rational::{self, parse_rational, Rational};
use clifis::subset::Solver;
use clifis::{Error, Graph, IsingInstance, Result};

/// Optimal Clifford initial states for transverse-field Ising Hamiltonians.
#[derive(Parser)]
#[command(name = "clifis", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph file (text or JSON).
    Gen(GenArgs),
    /// Minimise the Clifford cost and export the stabilizer witness.
    Opt(OptArgs),
    /// Ground-state energy by Lanczos iteration.
    Exact(ExactArgs),
    /// Densest subgraph.
    Dsp(GraphArg),
    /// Two-segmented classification and extreme thresholds.
    Segments(GraphArg),
    /// Sweep graphs over a grid of field ratios and write CSV.
    Sweep(SweepArgs),
    /// Mean relative error over random graphs per size.
    RandomStudy(RandomStudyArgs),
    /// Run the built-in consistency suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct GenArgs {
    /// Built-in name: L9, P9, K9, kite6, G1, G2, G3.
    #[arg(conflicts_with_all = ["n", "p"])]
    name: Option<String>,
    /// Vertex count of a random G(n, p) graph.
    #[arg(long, requires = "p")]
    n: Option<usize>,
    /// Edge probability of a random graph.
    #[arg(long)]
    p: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GraphArg {
    /// Graph file or built-in name.
    #[arg(long)]
    graph: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OptArgs {
    /// Graph file or built-in name.
    #[arg(long, required_unless_present = "instance", conflicts_with = "instance")]
    graph: Option<String>,
    /// Instance JSON with optional weights.
    #[arg(long)]
    instance: Option<PathBuf>,
    /// Field ratio, e.g. 8/9 or 0.889; overrides the instance value.
    #[arg(long, required_unless_present = "instance")]
    g: Option<String>,
    #[arg(long, default_value = "mincut")]
    solver: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExactArgs {
    #[arg(long)]
    graph: String,
    #[arg(long)]
    g: String,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    tol: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// JSON settings file; flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Graph file, built-in name, or random:n=..,p=..,count=..,seed=.. (repeatable).
    #[arg(long)]
    graph: Vec<String>,
    #[arg(long)]
    g_start: Option<String>,
    #[arg(long)]
    g_stop: Option<String>,
    #[arg(long)]
    g_step: Option<String>,
    #[arg(long)]
    solver: Option<String>,
    /// Skip exact diagonalisation.
    #[arg(long)]
    no_exact: bool,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
    /// CSV path; companion files get `.errors.csv` and `.plot.txt` suffixes.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RandomStudyArgs {
    #[arg(long, default_value_t = 4)]
    n_min: usize,
    #[arg(long, default_value_t = 10)]
    n_max: usize,
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value = "0")]
    g_start: String,
    #[arg(long, default_value = "4")]
    g_stop: String,
    #[arg(long, default_value = "0.05")]
    g_step: String,
    #[arg(long, default_value_t = 2024)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    tol: f64,
    /// CSV path; the per-size argmax table goes to `<out>.argmax.csv`.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Directory with g1.txt, g2.txt, g3.txt to check instead of the bundled copies.
    #[arg(long)]
    data_dir: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(Error::from),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_json(value: &serde_json::Value, out: Option<&Path>) -> Result<()> {
    emit(&(serde_json::to_string_pretty(value)? + "\n"), out)
}

fn gen(args: GenArgs) -> Result<()> {
    let graph: Graph = match (&args.name, args.n, args.p) {
        (Some(name), _, _) => load_graph(name)?,
        (None, Some(n), Some(p)) => {
            let spec = RandomSpec { n, p, count: 1, seed: args.seed };
            GraphSource::Random(spec).resolve()?.remove(0).graph
        }
        _ => return Err(Error::InvalidArgument("give a graph name or --n and --p".into())),
    };
    let text = match args.format {
        Format::Text => graph.to_text(),
        Format::Json => graph.to_json() + "\n",
    };
    emit(&text, args.out.as_deref())
}

fn opt(args: OptArgs) -> Result<()> {
    let mut inst = match (&args.instance, &args.graph) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)?;
            parse_instance_json(&text)?
        }
        (None, Some(graph)) => IsingInstance::new(load_graph(graph)?, Rational::from_integer(0))?,
        (None, None) => unreachable!("clap requires one of --graph and --instance"),
    };
    if let Some(g) = &args.g {
        inst = inst.with_g(parse_rational(g)?)?;
    }
    let solver: Solver = args.solver.parse()?;
    let solution = solver.solve(&inst)?;
    let witness = build_witness(&inst, &solution.vertex_set)?;
    if witness.energy != solution.cost {
        return Err(Error::Internal("witness energy differs from the optimum".into()));
    }
    let doc = json!({
        "g": rational::format_rational(&inst.g()),
        "solution": solution.to_json(),
        "witness": witness.to_json(),
    });
    emit_json(&doc, args.out.as_deref())
}

fn exact(args: ExactArgs) -> Result<()> {
    let inst = IsingInstance::new(load_graph(&args.graph)?, parse_rational(&args.g)?)?;
    let result = ground_energy(&inst, args.tol)?;
    emit_json(&serde_json::to_value(result)?, args.out.as_deref())
}

fn dsp(args: GraphArg) -> Result<()> {
    let result = densest_subgraph(&load_graph(&args.graph)?)?;
    let doc = json!({
        "density": rational::format_rational(&result.density),
        "density_f64": rational::to_f64(&result.density),
        "vertex_set": result.vertex_set,
    });
    emit_json(&doc, args.out.as_deref())
}

fn segments(args: GraphArg) -> Result<()> {
    let graph = load_graph(&args.graph)?;
    let mut doc = two_segmented(&graph)?.to_json();
    // Thresholds need the full edge profile; skip them past the size guard.
    match extreme_thresholds(&graph) {
        Ok(t) => {
            doc["lower_threshold"] = json!(rational::format_rational(&t.lower));
            doc["upper_threshold"] = json!(rational::format_rational(&t.upper));
        }
        Err(Error::InfeasibleSize { .. }) => {}
        Err(e) => return Err(e),
    }
    emit_json(&doc, args.out.as_deref())
}

fn sweep(args: SweepArgs) -> Result<()> {
    let file = match &args.config {
        Some(path) => SweepSettings::from_json_file(path)?,
        None => SweepSettings::default(),
    };
    let parse = |v: &Option<String>| v.as_deref().map(parse_rational).transpose();
    let flags = SweepSettings {
        graphs: (!args.graph.is_empty()).then_some(args.graph.clone()),
        g_start: parse(&args.g_start)?,
        g_stop: parse(&args.g_stop)?,
        g_step: parse(&args.g_step)?,
        solver: args.solver.clone(),
        exact: args.no_exact.then_some(false),
        tolerance: args.tol,
        out: args.out.clone(),
        seed: args.seed,
    };
    let cfg = file.merged(flags).build()?;
    let records = run_sweep(&cfg)?;
    match &cfg.out {
        Some(out) => write_sweep_outputs(&records, out)?,
        None => print!("{}", records_to_csv(&records)?),
    }
    let failed = records.iter().filter(|r| !r.errors.is_empty()).count();
    if failed > 0 {
        eprintln!("{failed} of {} rows recorded errors", records.len());
    }
    Ok(())
}

fn random_study(args: RandomStudyArgs) -> Result<()> {
    let cfg = RandomStudyConfig {
        n_min: args.n_min,
        n_max: args.n_max,
        count: args.count,
        p: args.p,
        grid: GGrid::new(
            parse_rational(&args.g_start)?,
            parse_rational(&args.g_stop)?,
            parse_rational(&args.g_step)?,
        )?,
        seed: args.seed,
        tolerance: args.tol,
    };
    let study = run_random_study(&cfg)?;
    match &args.out {
        Some(out) => {
            std::fs::write(out, study.to_csv()?)?;
            let mut argmax = out.as_os_str().to_owned();
            argmax.push(".argmax.csv");
            std::fs::write(PathBuf::from(argmax), study.argmax_csv())?;
        }
        None => print!("{}", study.to_csv()?),
    }
    eprint!("{}", study.argmax_csv());
    Ok(())
}

fn verify(args: VerifyArgs) -> Result<bool> {
    let report = verify_bundle(&VerifyOptions { data_dir: args.data_dir })?;
    emit_json(&serde_json::to_value(&report)?, args.out.as_deref())?;
    for check in report.failures() {
        eprintln!("FAIL {}: {}", check.name, check.detail);
    }
    Ok(report.passed)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Gen(a) => gen(a)?,
        Command::Opt(a) => opt(a)?,
        Command::Exact(a) => exact(a)?,
        Command::Dsp(a) => dsp(a)?,
        Command::Segments(a) => segments(a)?,
        Command::Sweep(a) => sweep(a)?,
        Command::RandomStudy(a) => random_study(a)?,
        Command::Verify(a) => {
            if !verify(a)? {
                return Ok(ExitCode::from(3));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
