//! Optimal Clifford state for one instance, with its stabilizer generators.
//!
//! cargo run --example optimal_state -- [graph] [g]

use clifis::clifford::build_witness;
use clifis::experiment::load_graph;
use clifis::rational::{format_rational, parse_rational};
use clifis::subset::mincut_min;
use clifis::IsingInstance;

fn main() -> clifis::Result<()> {
    let mut args = std::env::args().skip(1);
    let graph = load_graph(&args.next().unwrap_or_else(|| "kite6".into()))?;
    let g = parse_rational(&args.next().unwrap_or_else(|| "7/5".into()))?;
    let inst = IsingInstance::new(graph, g)?;

    let best = mincut_min(&inst)?;
    let witness = build_witness(&inst, &best.vertex_set)?;
    println!("g = {}", format_rational(&g));
    println!("Z-block vertices: {:?}", best.vertex_set.members());
    println!("energy: {} ({})", format_rational(&witness.energy), witness.energy_f64());
    println!("stabilizer generators:");
    for p in witness.tableau.generators() {
        println!("  {p}");
    }
    println!("definite terms:");
    for t in witness.term_expectations.iter().filter(|t| t.expectation != 0) {
        println!("  <{}> = {:+}", t.term.label(), t.expectation);
    }
    Ok(())
}
