//! Wolfe's minimum-norm-point algorithm on the base polytope.
//!
//! The cost is normalised to `F(S) = f(S) - f(∅)` and evaluated in scaled
//! integer weights (as `f64`). Greedy ordering of the current iterate gives
//! the linear-optimisation oracle over `B(F)`; the minimum-norm point `x*`
//! then encodes the minimisers: `{x* < 0}` is the smallest one and
//! `{x* ≤ 0}` the largest.

use super::brute::count_optima;
use super::{Certificate, Solver, VertexSetSolution};
use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::ising::IsingInstance;
use crate::limits;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MinNormOptions {
    /// Stop once `|x|² - ⟨x, q⟩ ≤ tolerance · max(1, |q|²)`.
    pub tolerance: f64,
    /// Corral points whose convex weight falls to this level are dropped.
    pub deletion_tolerance: f64,
    /// `None` means `10 · N · 2^10`.
    pub max_iterations: Option<usize>,
}

impl Default for MinNormOptions {
    fn default() -> Self {
        Self {
            tolerance: 1e-10,
            deletion_tolerance: 1e-12,
            max_iterations: None,
        }
    }
}

impl MinNormOptions {
    pub fn with_tolerance(tolerance: f64) -> Self {
        Self {
            tolerance,
            ..Self::default()
        }
    }
}

struct BaseOracle {
    vertex: Vec<f64>,
    nbrs: Vec<Vec<(usize, f64)>>,
}

impl BaseOracle {
    fn new(inst: &IsingInstance) -> Result<Self> {
        let w = inst.scaled_weights()?;
        let graph = inst.graph();
        let nbrs = (0..inst.num_qubits())
            .map(|v| {
                graph
                    .neighbors(v)
                    .iter()
                    .map(|&u| (u, w.edge[graph.edge_index(u, v).expect("edge exists")] as f64))
                    .collect()
            })
            .collect();
        Ok(Self {
            vertex: w.vertex.iter().map(|&c| c as f64).collect(),
            nbrs,
        })
    }

    fn dim(&self) -> usize {
        self.vertex.len()
    }

    /// Extreme point of `B(F)` for the order `order`: coordinate `order[k]`
    /// is the marginal gain of adding it to `order[..k]`.
    fn greedy(&self, order: &[usize]) -> Vec<f64> {
        let mut chosen = vec![false; self.dim()];
        let mut point = vec![0.0; self.dim()];
        for &v in order {
            let inside: f64 = self.nbrs[v].iter().filter(|(u, _)| chosen[*u]).map(|(_, c)| c).sum();
            point[v] = self.vertex[v] - inside;
            chosen[v] = true;
        }
        point
    }

    /// Minimiser of `⟨x, q⟩` over `B(F)`: greedy along ascending `x`.
    fn linear_minimizer(&self, x: &[f64]) -> Vec<f64> {
        let mut order: Vec<usize> = (0..self.dim()).collect();
        order.sort_by(|&a, &b| x[a].total_cmp(&x[b]).then(a.cmp(&b)));
        self.greedy(&order)
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn combine(points: &[Vec<f64>], weights: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; points[0].len()];
    for (p, &w) in points.iter().zip(weights) {
        for (o, &c) in out.iter_mut().zip(p) {
            *o += w * c;
        }
    }
    out
}

/// Affine weights `α` (summing to one) minimising `|Σ α_k p_k|`, from the
/// bordered normal equations `[G 1; 1ᵀ 0] [α; μ] = [0; 1]` with `G = PᵀP`.
/// `None` if the corral is numerically affinely dependent.
fn affine_minimizer(points: &[Vec<f64>]) -> Option<Vec<f64>> {
    let k = points.len();
    let size = k + 1;
    let mut a = vec![vec![0.0; size + 1]; size];
    let mut scale: f64 = 1.0;
    for i in 0..k {
        for j in 0..k {
            a[i][j] = dot(&points[i], &points[j]);
            scale = scale.max(a[i][j].abs());
        }
        a[i][k] = 1.0;
        a[k][i] = 1.0;
    }
    a[k][size] = 1.0;

    // Gaussian elimination with partial pivoting.
    for col in 0..size {
        let pivot = (col..size).max_by(|&r, &s| a[r][col].abs().total_cmp(&a[s][col].abs()))?;
        if a[pivot][col].abs() <= 1e-13 * scale {
            return None;
        }
        a.swap(col, pivot);
        for r in 0..size {
            if r != col {
                let factor = a[r][col] / a[col][col];
                if factor != 0.0 {
                    for c in col..=size {
                        a[r][c] -= factor * a[col][c];
                    }
                }
            }
        }
    }
    let alpha: Vec<f64> = (0..k).map(|i| a[i][size] / a[i][i]).collect();
    alpha.iter().all(|v| v.is_finite()).then_some(alpha)
}

struct WolfeRun {
    point: Vec<f64>,
    converged: bool,
    iterations: usize,
}

fn wolfe(oracle: &BaseOracle, opts: &MinNormOptions, cap: usize) -> WolfeRun {
    let identity: Vec<usize> = (0..oracle.dim()).collect();
    let mut corral = vec![oracle.greedy(&identity)];
    let mut lambda = vec![1.0];
    let mut x = corral[0].clone();
    let mut iterations = 0;

    loop {
        // major cycle
        let q = oracle.linear_minimizer(&x);
        let gap = dot(&x, &x) - dot(&x, &q);
        if gap <= opts.tolerance * dot(&q, &q).max(1.0) {
            return WolfeRun { point: x, converged: true, iterations };
        }
        if corral.iter().any(|p| p == &q) {
            // q is already in the corral, so x is optimal over it up to rounding.
            return WolfeRun { point: x, converged: true, iterations };
        }
        corral.push(q);
        lambda.push(0.0);

        loop {
            // minor cycle
            iterations += 1;
            if iterations > cap {
                return WolfeRun { point: x, converged: false, iterations };
            }
            let Some(alpha) = affine_minimizer(&corral) else {
                corral.pop();
                lambda.pop();
                return WolfeRun { point: x, converged: true, iterations };
            };
            if alpha.iter().all(|&a| a > opts.deletion_tolerance) {
                lambda = alpha;
                x = combine(&corral, &lambda);
                break;
            }
            // Move from lambda towards alpha until a weight hits zero.
            let theta = lambda
                .iter()
                .zip(&alpha)
                .filter(|(_, &a)| a <= opts.deletion_tolerance)
                .filter(|(&l, &a)| l > a)
                .map(|(&l, &a)| l / (l - a))
                .fold(1.0f64, f64::min);
            for (l, a) in lambda.iter_mut().zip(&alpha) {
                *l = theta * a + (1.0 - theta) * *l;
            }
            let keep: Vec<bool> = lambda.iter().map(|&l| l > opts.deletion_tolerance).collect();
            let mut idx = 0;
            corral.retain(|_| {
                idx += 1;
                keep[idx - 1]
            });
            lambda.retain(|&l| l > opts.deletion_tolerance);
            if corral.is_empty() {
                return WolfeRun { point: x, converged: false, iterations };
            }
            let total: f64 = lambda.iter().sum();
            lambda.iter_mut().for_each(|l| *l /= total);
            x = combine(&corral, &lambda);
        }
    }
}

/// Minimises the cost with the minimum-norm-point algorithm.
///
/// Candidate sets are read off the final point by thresholding at zero,
/// strictly and non-strictly, with and without a small band for rounding;
/// the cheapest candidate (then the smallest) is returned.
pub fn min_norm_point_min(inst: &IsingInstance, opts: MinNormOptions) -> Result<VertexSetSolution> {
    if !(opts.tolerance > 0.0) {
        return Err(Error::invalid("tolerance must be positive"));
    }
    let n = inst.num_qubits();
    if n == 0 {
        return Ok(VertexSetSolution {
            vertex_set: VertexSet::new(),
            cost: Rational::from_integer(0),
            solver: Solver::MinNormPoint,
            certificate: Some(Certificate::FinalNorm(0.0)),
            degenerate: Some(false),
        });
    }
    let oracle = BaseOracle::new(inst)?;
    let cap = opts.max_iterations.unwrap_or(10 * n * 1024);
    let run = wolfe(&oracle, &opts, cap);

    let band = 1e-9 * run.point.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let thresholds: [(f64, bool); 4] = [(0.0, true), (0.0, false), (-band, true), (band, false)];
    let mut best: Option<(Rational, VertexSet)> = None;
    for (t, strict) in thresholds {
        let set: VertexSet = (0..n)
            .filter(|&i| if strict { run.point[i] < t } else { run.point[i] <= t })
            .collect();
        let cost = inst.cost(&set)?;
        let better = match &best {
            None => true,
            Some((c, s)) => cost < *c || (cost == *c && set.len() < s.len()),
        };
        if better {
            best = Some((cost, set));
        }
    }
    let (cost, vertex_set) = best.expect("at least one candidate");
    if !run.converged {
        return Err(Error::NonConvergence {
            solver: "minimum-norm point",
            iterations: run.iterations,
            best: crate::rational::to_f64(&cost),
        });
    }
    let degenerate = if n <= limits::effective(limits::DEGENERACY_CHECK_MAX_N) {
        Some(count_optima(inst, cost)? > 1)
    } else {
        None
    };
    Ok(VertexSetSolution {
        vertex_set,
        cost,
        solver: Solver::MinNormPoint,
        certificate: Some(Certificate::FinalNorm(dot(&run.point, &run.point).sqrt())),
        degenerate,
    })
}
