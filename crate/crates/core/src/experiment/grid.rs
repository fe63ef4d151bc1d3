use num::Zero;

use crate::density::densest_subgraph;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;

/// Default spacing of field-ratio grids.
pub fn default_step() -> Rational {
    Rational::new(1, 20)
}

/// Field ratios `start, start + step, ...` up to and including `stop`, in
/// exact arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GGrid {
    pub start: Rational,
    pub stop: Rational,
    pub step: Rational,
}

impl GGrid {
    pub fn new(start: Rational, stop: Rational, step: Rational) -> Result<Self> {
        if step <= Rational::zero() {
            return Err(Error::invalid("g step must be positive"));
        }
        if start > stop {
            return Err(Error::invalid("g start must not exceed g stop"));
        }
        if start < Rational::zero() {
            return Err(Error::invalid("g must be nonnegative"));
        }
        Ok(GGrid { start, stop, step })
    }

    /// `[0, ceil(d*) + 1]` with the default step, where `d*` is the maximum
    /// subgraph density (0 for an edgeless graph).
    pub fn for_graph(graph: &Graph) -> Result<Self> {
        let density = if graph.num_edges() == 0 {
            Rational::zero()
        } else {
            densest_subgraph(graph)?.density
        };
        let stop = Rational::from_integer(density.ceil().to_integer() + 1);
        GGrid::new(Rational::zero(), stop, default_step())
    }

    pub fn len(&self) -> usize {
        ((self.stop - self.start) / self.step).floor().to_integer() as usize + 1
    }

    /// A valid grid always contains `start`.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn points(&self) -> Vec<Rational> {
        (0..self.len())
            .map(|k| self.start + self.step * Rational::from_integer(k as i128))
            .collect()
    }

    /// Grid point closest to `value`; ties go to the smaller point.
    pub fn nearest(&self, value: Rational) -> Rational {
        let k = ((value - self.start) / self.step).max(Rational::zero());
        let below = k.floor();
        let pick = if k - below > Rational::new(1, 2) { below + 1 } else { below };
        let idx = pick.to_integer().min(self.len() as i128 - 1);
        self.start + self.step * Rational::from_integer(idx)
    }

    /// Whether `self.step` divides `value - start`.
    pub fn contains(&self, value: Rational) -> bool {
        value >= self.start && value <= self.stop && ((value - self.start) / self.step).is_integer()
    }
}
