//! Relative error of the optimal Clifford energy against Lanczos ground
//! energies, around the transition of a chain.
//!
//! cargo run --release --example exact_diag_error -- [graph]

use clifis::density::two_segmented;
use clifis::exact_diag::{dense_ground_energy, ground_energy, relative_error};
use clifis::experiment::{load_graph, GGrid};
use clifis::rational::{format_rational, to_f64};
use clifis::subset::mincut_min;
use clifis::IsingInstance;

fn main() -> clifis::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "L9".into());
    let graph = load_graph(&name)?;
    let seg = two_segmented(&graph)?;
    if let Some(t) = seg.transition_value {
        println!("{name} transition at g = {} ({:.4})", format_rational(&t), to_f64(&t));
    }
    println!("{:>6} {:>12} {:>14} {:>10} {:>6}", "g", "clifford", "exact", "rel.err", "iters");
    for g in GGrid::for_graph(&graph)?.points().into_iter().step_by(4) {
        let inst = IsingInstance::new(graph.clone(), g)?;
        let clifford = mincut_min(&inst)?.cost_f64();
        let exact = ground_energy(&inst, 1e-10)?;
        if graph.num_vertices() <= 10 {
            assert!((dense_ground_energy(&inst)? - exact.energy).abs() < 1e-9);
        }
        println!(
            "{:>6} {:>12.6} {:>14.9} {:>10.4} {:>6}",
            format_rational(&g),
            clifford,
            exact.energy,
            relative_error(clifford, exact.energy)?,
            exact.iterations
        );
    }
    Ok(())
}
