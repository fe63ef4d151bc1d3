//! Brute force, minimum cut and the minimum-norm-point method on one graph.
//!
//! cargo run --example solver_agreement -- [graph]

use clifis::experiment::{load_graph, GGrid};
use clifis::rational::format_rational;
use clifis::subset::Solver;
use clifis::{IsingInstance, Rational};

fn main() -> clifis::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "G2".into());
    let graph = load_graph(&name)?;
    let grid = GGrid::new(Rational::from_integer(0), GGrid::for_graph(&graph)?.stop, Rational::new(1, 4))?;
    println!("{name}: {} vertices, {} edges", graph.num_vertices(), graph.num_edges());
    println!("{:>6} {:>10} {:>10} {:>12} {:>6} {:>10}", "g", "brute", "mincut", "wolfe", "|V|", "degenerate");
    for g in grid.points() {
        let inst = IsingInstance::new(graph.clone(), g)?;
        let brute = Solver::BruteForce.solve(&inst)?;
        let cut = Solver::MinCut.solve(&inst)?;
        let wolfe = Solver::MinNormPoint.solve(&inst)?;
        assert_eq!(brute.cost, cut.cost);
        println!(
            "{:>6} {:>10} {:>10} {:>12.6} {:>6} {:>10}",
            format_rational(&g),
            format_rational(&brute.cost),
            format_rational(&cut.cost),
            wolfe.cost_f64(),
            cut.vertex_set.len(),
            cut.degenerate.unwrap_or(false)
        );
    }
    Ok(())
}
