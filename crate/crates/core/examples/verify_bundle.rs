//! The built-in consistency suite; set CLIFIS_MAX_N to shrink it.
//!
//! cargo run --release --example verify_bundle

use clifis::experiment::{verify_bundle, VerifyOptions};

fn main() -> clifis::Result<()> {
    let report = verify_bundle(&VerifyOptions::default())?;
    for check in &report.checks {
        println!("{} {}", if check.passed { "ok  " } else { "FAIL" }, check.name);
    }
    println!("{} checks, size cap {}, passed: {}", report.checks.len(), report.max_n, report.passed);
    if !report.passed {
        std::process::exit(3);
    }
    Ok(())
}
