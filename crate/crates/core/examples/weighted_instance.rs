//! Weighted couplings and fields read from instance JSON.
//!
//! cargo run --example weighted_instance

use clifis::clifford::build_witness;
use clifis::exact_diag::ground_energy;
use clifis::ising::parse_instance_json;
use clifis::rational::format_rational;
use clifis::subset::{brute_force_min, mincut_min};

const INSTANCE: &str = r#"{
  "graph": {"n": 4, "edges": [[0, 1], [1, 2], [2, 3], [0, 3]]},
  "g": "1/2",
  "edge_weights": [[0, 1, 3], [2, 3, "1/4"]],
  "vertex_weights": [1, "1/2", 2, "3/4"]
}"#;

fn main() -> clifis::Result<()> {
    let inst = parse_instance_json(INSTANCE)?;
    let best = mincut_min(&inst)?;
    assert_eq!(best.cost, brute_force_min(&inst)?.cost);
    let witness = build_witness(&inst, &best.vertex_set)?;
    let exact = ground_energy(&inst, 1e-10)?;
    println!("Z-block vertices: {:?}", best.vertex_set.members());
    println!("Clifford energy {} = {}", format_rational(&witness.energy), witness.energy_f64());
    println!("ground energy   {:.9}", exact.energy);
    Ok(())
}
