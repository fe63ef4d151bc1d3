//! Full sweep of `L_9` written as CSV, plus the error peak.
//!
//! cargo run --release --example sweep_chain -- [out.csv]

use clifis::experiment::{records_to_csv, run_sweep, write_sweep_outputs, SweepSettings};
use clifis::rational::format_rational;
use clifis::Rational;

fn main() -> clifis::Result<()> {
    let cfg = SweepSettings {
        graphs: Some(vec!["L9".into()]),
        g_stop: Some(Rational::from_integer(2)),
        ..Default::default()
    }
    .build()?;
    let records = run_sweep(&cfg)?;
    match std::env::args().nth(1) {
        Some(out) => write_sweep_outputs(&records, out.as_ref())?,
        None => print!("{}", records_to_csv(&records)?),
    }
    let peak = records
        .iter()
        .filter(|r| r.relative_error.is_some())
        .max_by(|a, b| a.relative_error.partial_cmp(&b.relative_error).unwrap())
        .expect("at least one row");
    eprintln!(
        "largest relative error {:.4} at g = {}",
        peak.relative_error.unwrap(),
        format_rational(&peak.g)
    );
    Ok(())
}
