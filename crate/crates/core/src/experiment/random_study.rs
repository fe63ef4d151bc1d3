use rayon::prelude::*;

use super::grid::GGrid;
use super::source::RandomSpec;
use crate::error::{Error, Result};
use crate::exact_diag::{ground_energy, relative_error, DEFAULT_TOLERANCE};
use crate::graph::random_graph;
use crate::ising::IsingInstance;
use crate::rational::{self, Rational};
use crate::subset::mincut_min;

#[derive(Clone, Debug, PartialEq)]
pub struct RandomStudyConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub count: usize,
    pub p: f64,
    pub grid: GGrid,
    pub seed: u64,
    pub tolerance: f64,
}

impl RandomStudyConfig {
    /// `N` in `n_min..=n_max`, 100 graphs each, `p = 1/2`, `g` in `[0, 4]`
    /// with step `1/20`.
    pub fn new(n_min: usize, n_max: usize) -> Self {
        RandomStudyConfig {
            n_min,
            n_max,
            count: 100,
            p: 0.5,
            grid: GGrid::new(Rational::from_integer(0), Rational::from_integer(4), Rational::new(1, 20))
                .expect("valid default grid"),
            seed: 2024,
            tolerance: DEFAULT_TOLERANCE,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n_min < 4 {
            return Err(Error::invalid(format!("n_min must be at least 4, got {}", self.n_min)));
        }
        if self.n_min > self.n_max {
            return Err(Error::invalid("n_min must not exceed n_max"));
        }
        if self.count == 0 {
            return Err(Error::invalid("count must be positive"));
        }
        Ok(())
    }

    /// Graphs for size `n`: the seed is mixed with `n` so each size gets
    /// its own stream.
    pub fn spec_for(&self, n: usize) -> RandomSpec {
        RandomSpec {
            n,
            p: self.p,
            count: self.count,
            seed: self.seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15),
        }
    }
}

/// Mean relative error against `g` for one graph size.
#[derive(Clone, Debug, PartialEq)]
pub struct MeanCurve {
    pub n: usize,
    pub g: Vec<Rational>,
    pub mean_error: Vec<f64>,
    pub graphs: usize,
}

impl MeanCurve {
    /// Grid point of the largest mean error; the first one on ties.
    pub fn argmax(&self) -> (Rational, f64) {
        let mut best = (self.g[0], self.mean_error[0]);
        for (g, &e) in self.g.iter().zip(&self.mean_error) {
            if e > best.1 {
                best = (*g, e);
            }
        }
        best
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RandomStudy {
    pub curves: Vec<MeanCurve>,
    pub step: Rational,
}

impl RandomStudy {
    /// Whether each size's argmax is at least the previous one minus one step.
    pub fn argmax_nondecreasing(&self) -> bool {
        self.curves
            .windows(2)
            .all(|w| w[1].argmax().0 >= w[0].argmax().0 - self.step)
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut out = String::from("n,g,mean_relative_error,graphs\n");
        for c in &self.curves {
            for (g, e) in c.g.iter().zip(&c.mean_error) {
                out.push_str(&format!("{},{},{},{}\n", c.n, rational::to_f64(g), e, c.graphs));
            }
        }
        Ok(out)
    }

    pub fn argmax_csv(&self) -> String {
        let mut out = String::from("n,argmax_g,max_mean_relative_error\n");
        for c in &self.curves {
            let (g, e) = c.argmax();
            out.push_str(&format!("{},{},{}\n", c.n, rational::to_f64(&g), e));
        }
        out
    }
}

/// Relative error of the optimal Clifford state for each grid point.
fn error_curve(inst: &IsingInstance, grid: &[Rational], tolerance: f64) -> Result<Vec<f64>> {
    grid.iter()
        .map(|&g| {
            let inst = inst.with_g(g)?;
            let clifford = mincut_min(&inst)?.cost_f64();
            let exact = ground_energy(&inst, tolerance)?.energy;
            relative_error(clifford, exact)
        })
        .collect()
}

/// Averages the relative-error curve over `count` random graphs per size.
pub fn run_random_study(cfg: &RandomStudyConfig) -> Result<RandomStudy> {
    cfg.validate()?;
    let grid = cfg.grid.points();
    let mut jobs = Vec::new();
    for n in cfg.n_min..=cfg.n_max {
        for seed in cfg.spec_for(n).graph_seeds() {
            jobs.push((n, seed));
        }
    }
    let curves: Vec<Vec<f64>> = jobs
        .par_iter()
        .map(|&(n, seed)| {
            let graph = random_graph(n, cfg.p, seed)?;
            let inst = IsingInstance::new(graph, Rational::from_integer(0))?;
            error_curve(&inst, &grid, cfg.tolerance)
        })
        .collect::<Result<_>>()?;

    let out = (cfg.n_min..=cfg.n_max)
        .zip(curves.chunks(cfg.count))
        .map(|(n, chunk)| {
            let mean_error = (0..grid.len())
                .map(|k| chunk.iter().map(|c| c[k]).sum::<f64>() / cfg.count as f64)
                .collect();
            MeanCurve {
                n,
                g: grid.clone(),
                mean_error,
                graphs: cfg.count,
            }
        })
        .collect();
    Ok(RandomStudy {
        curves: out,
        step: cfg.grid.step,
    })
}
