//! Densest subgraphs, two-segmented classification and extreme thresholds.
//!
//! cargo run --example densest_subgraph -- [graph ...]

use clifis::density::{extreme_thresholds, two_segmented};
use clifis::experiment::load_graph;
use clifis::rational::format_rational;

fn main() -> clifis::Result<()> {
    let mut names: Vec<String> = std::env::args().skip(1).collect();
    if names.is_empty() {
        names = ["L9", "P9", "K9", "kite6", "G1", "G2", "G3"].map(String::from).to_vec();
    }
    println!("{:>6} {:>8} {:>8} {:>10} {:>7} {:>7}  densest set", "graph", "d*", "|E|/N", "two-seg", "lower", "upper");
    for name in names {
        let graph = load_graph(&name)?;
        let report = two_segmented(&graph)?;
        let t = extreme_thresholds(&graph)?;
        let whole = clifis::Rational::new(graph.num_edges() as i128, graph.num_vertices() as i128);
        println!(
            "{:>6} {:>8} {:>8} {:>10} {:>7} {:>7}  {:?}",
            name,
            format_rational(&report.max_density),
            format_rational(&whole),
            report.two_segmented,
            format_rational(&t.lower),
            format_rational(&t.upper),
            report.densest_set.members()
        );
    }
    Ok(())
}
