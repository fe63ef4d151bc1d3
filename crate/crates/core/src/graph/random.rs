use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};

/// Generator behind [`random_graph`]: ChaCha8 seeded from a `u64`.
pub type GraphRng = ChaCha8Rng;

/// Erdős–Rényi `G(n, p)` sample.
///
/// Pairs `(i, j)` are visited in lexicographic order, each drawing one
/// `f64` from the stream. An edgeless sample is discarded and the stream
/// keeps going until a sample with at least one edge appears.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(Error::invalid(format!("random graph needs n >= 2, got {n}")));
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::invalid(format!("edge probability must be in (0, 1], got {p}")));
    }
    let mut rng = GraphRng::seed_from_u64(seed);
    loop {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen::<f64>() < p {
                    edges.push((i, j));
                }
            }
        }
        if !edges.is_empty() {
            return Graph::new(n, edges);
        }
    }
}
