//! Mean relative error of the optimal Clifford state over random graphs.
//!
//! cargo run --release --example random_study -- [n_min] [n_max] [count]

use clifis::experiment::{run_random_study, RandomStudyConfig};

fn main() -> clifis::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let n_min = args.first().copied().unwrap_or(4);
    let n_max = args.get(1).copied().unwrap_or(8);
    let mut cfg = RandomStudyConfig::new(n_min, n_max);
    if let Some(&count) = args.get(2) {
        cfg.count = count;
    }
    let study = run_random_study(&cfg)?;
    println!("{:>3} {:>9} {:>10}", "N", "argmax g", "max error");
    for curve in &study.curves {
        let (g, err) = curve.argmax();
        println!("{:>3} {:>9} {:>10.4}", curve.n, clifis::rational::to_f64(&g), err);
    }
    println!("argmax nondecreasing within one step: {}", study.argmax_nondecreasing());
    Ok(())
}
