//! Densest subgraph, two-segmented classification and the extreme-regime
//! thresholds of the field ratio.

use num::Zero;
use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::ising::edge_profile;
use crate::limits;
use crate::rational::{self, Rational};
use crate::subset::project_selection;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityResult {
    pub density: Rational,
    pub vertex_set: VertexSet,
}

/// Returns a nonempty `S` with `|E(S)| > λ|S|`, if one exists.
///
/// With `λ = p/q` this is the project-selection problem with edge profit
/// `q` and vertex cost `p`; any positive-profit optimum works.
fn denser_than(graph: &Graph, lambda: Rational) -> Result<Option<VertexSet>> {
    let (p, q) = (*lambda.numer(), *lambda.denom());
    let edge_cap = vec![q; graph.num_edges()];
    let vertex_cap = vec![p; graph.num_vertices()];
    let cut = project_selection(graph, &edge_cap, &vertex_cap)?;
    let total = q
        .checked_mul(graph.num_edges() as i128)
        .ok_or_else(|| Error::Overflow("density search capacities".into()))?;
    Ok((cut.profit(total) > 0).then_some(cut.minimal))
}

fn density_of(graph: &Graph, set: &VertexSet) -> Rational {
    Rational::new(graph.induced_edge_count(set) as i128, set.len() as i128)
}

/// Maximum of `|E(S)|/|S|` over nonempty `S`, exactly.
///
/// Bisection over rationals keeps `lo < d* ≤ hi`. Two distinct densities
/// with denominators at most `N` differ by more than `1/N²`, so once the
/// interval is shorter than that the last set found above `lo` attains `d*`.
pub fn densest_subgraph(graph: &Graph) -> Result<DensityResult> {
    if graph.num_edges() == 0 {
        return Err(Error::Domain(
            "densest subgraph of an edgeless graph is not defined".into(),
        ));
    }
    let n = graph.num_vertices() as i128;
    let resolution = Rational::new(1, n * n);
    let mut lo = Rational::zero();
    let mut hi = Rational::from_integer(n);
    let mut witness = denser_than(graph, lo)?.ok_or_else(|| {
        Error::Internal("a graph with an edge has positive density".into())
    })?;
    // Every witness raises the lower bound to its own density.
    lo = density_of(graph, &witness);
    while hi - lo >= resolution {
        let mid = (lo + hi) / Rational::from_integer(2);
        match denser_than(graph, mid)? {
            Some(set) => {
                lo = density_of(graph, &set);
                witness = set;
            }
            None => hi = mid,
        }
    }
    // lo is the density of `witness`; check nothing beats it.
    if denser_than(graph, lo)?.is_some() {
        return Err(Error::Internal("density search ended below the optimum".into()));
    }
    Ok(DensityResult {
        density: lo,
        vertex_set: witness,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegmentationReport {
    pub two_segmented: bool,
    /// `|E|/N`, present only for two-segmented graphs.
    pub transition_value: Option<Rational>,
    pub max_density: Rational,
    pub densest_set: VertexSet,
}

impl SegmentationReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "two_segmented": self.two_segmented,
            "transition_value": self.transition_value.as_ref().map(rational::format_rational),
            "transition_value_f64": self.transition_value.as_ref().map(rational::to_f64),
            "max_density": rational::format_rational(&self.max_density),
            "max_density_f64": rational::to_f64(&self.max_density),
            "densest_set": self.densest_set,
        })
    }

    /// Clifford optimum `-|E|` for `g ≤ |E|/N` and `-gN` above, for
    /// two-segmented graphs.
    pub fn piecewise_energy(&self, graph: &Graph, g: Rational) -> Option<Rational> {
        let t = self.transition_value?;
        let n = Rational::from_integer(graph.num_vertices() as i128);
        Some(if g <= t {
            -Rational::from_integer(graph.num_edges() as i128)
        } else {
            -g * n
        })
    }
}

/// A graph is two-segmented when no subgraph is denser than the whole graph.
pub fn two_segmented(graph: &Graph) -> Result<SegmentationReport> {
    let densest = densest_subgraph(graph)?;
    let whole = Rational::new(graph.num_edges() as i128, graph.num_vertices() as i128);
    let two_segmented = densest.density == whole;
    Ok(SegmentationReport {
        two_segmented,
        transition_value: two_segmented.then_some(whole),
        max_density: densest.density,
        densest_set: densest.vertex_set,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtremeThresholds {
    /// `min_{0≤n<N} (ℰ(N) - ℰ(n)) / (N - n)`: at or below it the full set is optimal.
    pub lower: Rational,
    /// `max_{0<n≤N} ℰ(n) / n`: at or above it the empty set is optimal.
    pub upper: Rational,
}

/// Field ratios bounding the all-`Z` and all-`X` regimes, from the
/// brute-force edge profile.
pub fn extreme_thresholds(graph: &Graph) -> Result<ExtremeThresholds> {
    let n = graph.num_vertices();
    if n == 0 {
        return Err(Error::invalid("graph has no vertices"));
    }
    limits::check("extreme thresholds", n, limits::THRESHOLDS_MAX_N)?;
    let profile = edge_profile(graph)?;
    let full = profile[n] as i128;
    let lower = (0..n)
        .map(|k| Rational::new(full - profile[k] as i128, (n - k) as i128))
        .min()
        .expect("n >= 1");
    let upper = (1..=n)
        .map(|k| Rational::new(profile[k] as i128, k as i128))
        .max()
        .expect("n >= 1");
    Ok(ExtremeThresholds { lower, upper })
}

impl ExtremeThresholds {
    /// `lower == upper`: no intermediate regime.
    pub fn collapsed(&self) -> bool {
        self.lower == self.upper
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, kite6, line_graph, misc_graph, random_graph, MiscGraph};

    /// Exhaustive maximum density.
    fn density_oracle(graph: &Graph) -> Rational {
        (1u64..1 << graph.num_vertices())
            .map(|m| density_of(graph, &VertexSet::from_mask(m)))
            .max()
            .unwrap()
    }

    #[test]
    fn examples() {
        let k9 = complete_graph(9).unwrap();
        assert_eq!(density_oracle(&k9), Rational::from_integer(4));
        let r = densest_subgraph(&k9).unwrap();
        assert_eq!(r.density, Rational::from_integer(4));
        assert_eq!(r.vertex_set, VertexSet::full(9));

        let r = densest_subgraph(&kite6()).unwrap();
        assert_eq!(r.density, Rational::new(3, 2));
        assert_eq!(r.vertex_set, VertexSet::from([0, 1, 2, 3]));

        let l9 = line_graph(9).unwrap();
        assert_eq!(density_oracle(&l9), Rational::new(8, 9));
        let r = densest_subgraph(&l9).unwrap();
        assert_eq!(r.density, Rational::new(8, 9));
        assert_eq!(r.vertex_set, VertexSet::full(9));

        assert!(matches!(densest_subgraph(&Graph::empty(3)), Err(Error::Domain(_))));
    }

    #[test]
    fn matches_exhaustive_density() {
        for seed in 0..40 {
            let g = random_graph(9, 0.35, seed).unwrap();
            let r = densest_subgraph(&g).unwrap();
            assert_eq!(r.density, density_oracle(&g), "seed {seed}");
            assert_eq!(density_of(&g, &r.vertex_set), r.density);
        }
    }

    #[test]
    fn segmentation() {
        let r = two_segmented(&line_graph(9).unwrap()).unwrap();
        assert!(r.two_segmented);
        assert_eq!(r.transition_value, Some(Rational::new(8, 9)));
        let r = two_segmented(&complete_graph(9).unwrap()).unwrap();
        assert_eq!(r.transition_value, Some(Rational::from_integer(4)));
        for id in MiscGraph::ALL {
            let r = two_segmented(&misc_graph(id).unwrap()).unwrap();
            assert!(!r.two_segmented, "{id}");
            assert_eq!(r.transition_value, None);
        }
        assert!(!two_segmented(&kite6()).unwrap().two_segmented);
    }

    #[test]
    fn thresholds() {
        let t = extreme_thresholds(&line_graph(9).unwrap()).unwrap();
        assert_eq!((t.lower, t.upper), (Rational::new(8, 9), Rational::new(8, 9)));
        assert!(t.collapsed());

        let t = extreme_thresholds(&kite6()).unwrap();
        assert_eq!(t.upper, Rational::new(3, 2));
        assert_eq!(t.lower, Rational::from_integer(1));
        assert!(!t.collapsed());

        for n in 2..=9 {
            let t = extreme_thresholds(&complete_graph(n).unwrap()).unwrap();
            let half = Rational::new(n as i128 - 1, 2);
            assert_eq!((t.lower, t.upper), (half, half));
        }
        let t = extreme_thresholds(&cycle_graph(7).unwrap()).unwrap();
        assert!(t.lower <= t.upper);
    }
}
