//! Built-in graphs, random graphs, and the two file formats.
//!
//! cargo run --example graph_io

use clifis::experiment::load_graph;
use clifis::graph::{parse_graph, random_graph};

fn main() -> clifis::Result<()> {
    let g1 = load_graph("G1")?;
    print!("G1 as text:\n{}", g1.to_text());
    println!("G1 as JSON: {}", g1.to_json());
    assert_eq!(parse_graph(&g1.to_json())?, g1);

    let r = random_graph(8, 0.5, 42)?;
    println!("G(8, 1/2) with seed 42: {} edges, components {:?}", r.num_edges(), r.connected_components());
    assert_eq!(parse_graph(&r.to_text())?, r);
    Ok(())
}
