//! Ground-state energy of the transverse-field Ising Hamiltonian.
//!
//! [`ground_energy`] runs Lanczos with full reorthogonalisation on a
//! matrix-free product; [`dense_ground_energy`] is the small-`N` reference.

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ising::{dense_hamiltonian, IsingInstance};
use crate::limits;

pub const DEFAULT_TOLERANCE: f64 = 1e-8;
pub const MIN_TOLERANCE: f64 = 1e-12;
pub const MAX_ITERATIONS: usize = 400;
pub const START_VECTOR_SEED: u64 = 0x5eed_1a2c;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GroundStateResult {
    pub energy: f64,
    pub iterations: usize,
    pub residual: f64,
    pub n_qubits: usize,
    pub seed: u64,
}

/// Diagonal of `H` in the computational basis: `-Σ_e J_e s_i(b) s_j(b)`.
fn diagonal(inst: &IsingInstance) -> Vec<f64> {
    let dim = 1usize << inst.num_qubits();
    let edges = inst.graph().edges();
    let w = inst.edge_weights_f64();
    (0..dim)
        .into_par_iter()
        .map(|b| {
            edges
                .iter()
                .zip(&w)
                .map(|(&(i, j), &wij)| if (b >> i ^ b >> j) & 1 == 0 { -wij } else { wij })
                .sum()
        })
        .collect()
}

struct Operator {
    diag: Vec<f64>,
    /// `(qubit, J_i)` for nonzero transverse weights.
    flips: Vec<(usize, f64)>,
}

impl Operator {
    fn new(inst: &IsingInstance) -> Self {
        let flips = inst
            .vertex_weights_f64()
            .into_iter()
            .enumerate()
            .filter(|&(_, w)| w != 0.0)
            .collect();
        Operator {
            diag: diagonal(inst),
            flips,
        }
    }

    fn apply(&self, x: &[f64], y: &mut [f64]) {
        y.par_iter_mut().enumerate().for_each(|(b, out)| {
            let mut acc = self.diag[b] * x[b];
            for &(v, w) in &self.flips {
                acc -= w * x[b ^ (1 << v)];
            }
            *out = acc;
        });
    }
}

/// `y = Hx` without forming `H`.
pub fn matvec(inst: &IsingInstance, x: &[f64]) -> Result<Vec<f64>> {
    let n = inst.num_qubits();
    limits::check("matrix-free product", n, limits::EXACT_DIAG_MAX_N)?;
    if x.len() != 1 << n {
        return Err(Error::invalid(format!(
            "vector has length {} but the Hamiltonian acts on dimension {}",
            x.len(),
            1usize << n
        )));
    }
    let mut y = vec![0.0; x.len()];
    Operator::new(inst).apply(x, &mut y);
    Ok(y)
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.par_iter().zip(b).map(|(x, y)| x * y).sum()
}

fn axpy(alpha: f64, x: &[f64], y: &mut [f64]) {
    y.par_iter_mut().zip(x).for_each(|(yi, xi)| *yi += alpha * xi);
}

/// Lowest Ritz value of the tridiagonal matrix and its residual `|β_k y_k|`.
fn lowest_ritz(alpha: &[f64], beta: &[f64], beta_next: f64) -> (f64, f64) {
    let k = alpha.len();
    let mut t = DMatrix::<f64>::zeros(k, k);
    for i in 0..k {
        t[(i, i)] = alpha[i];
        if i + 1 < k {
            t[(i, i + 1)] = beta[i];
            t[(i + 1, i)] = beta[i];
        }
    }
    let eig = t.symmetric_eigen();
    let (idx, &value) = eig
        .eigenvalues
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .expect("nonempty tridiagonal");
    (value, (beta_next * eig.eigenvectors[(k - 1, idx)]).abs())
}

/// Lowest eigenvalue of `H` by Lanczos with full reorthogonalisation,
/// stopping when the Ritz residual drops to `tolerance`.
///
/// With no transverse field the Hamiltonian is diagonal and the answer is
/// its smallest entry, returned without iterating.
pub fn ground_energy(inst: &IsingInstance, tolerance: f64) -> Result<GroundStateResult> {
    let n = inst.num_qubits();
    limits::check("exact diagonalisation", n, limits::EXACT_DIAG_MAX_N)?;
    if !(tolerance >= MIN_TOLERANCE) || !tolerance.is_finite() {
        return Err(Error::invalid(format!(
            "tolerance must be a finite value of at least {MIN_TOLERANCE:e}"
        )));
    }
    let op = Operator::new(inst);
    let result = |energy, iterations, residual| GroundStateResult {
        energy,
        iterations,
        residual,
        n_qubits: n,
        seed: START_VECTOR_SEED,
    };
    if op.flips.is_empty() {
        let energy = op.diag.iter().copied().fold(f64::INFINITY, f64::min);
        return Ok(result(energy, 0, 0.0));
    }

    let dim = 1usize << n;
    let mut rng = ChaCha8Rng::seed_from_u64(START_VECTOR_SEED);
    let mut q: Vec<f64> = (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let norm = dot(&q, &q).sqrt();
    q.iter_mut().for_each(|v| *v /= norm);

    let mut basis: Vec<Vec<f64>> = Vec::new();
    let mut alpha: Vec<f64> = Vec::new();
    let mut beta: Vec<f64> = Vec::new();
    let mut w = vec![0.0; dim];
    let mut best = (f64::INFINITY, f64::INFINITY);
    for k in 0..MAX_ITERATIONS.min(dim) {
        op.apply(&q, &mut w);
        let a = dot(&q, &w);
        axpy(-a, &q, &mut w);
        if let (Some(prev), Some(&b)) = (basis.last(), beta.last()) {
            axpy(-b, prev, &mut w);
        }
        basis.push(q);
        // Two passes of Gram-Schmidt against the whole basis.
        for _ in 0..2 {
            for v in &basis {
                let c = dot(v, &w);
                axpy(-c, v, &mut w);
            }
        }
        alpha.push(a);
        let b_next = dot(&w, &w).sqrt();
        let exhausted = b_next <= 1e-14 * a.abs().max(1.0) || k + 1 == dim;
        let check = exhausted || k < 64 || k % 4 == 3 || k + 1 == MAX_ITERATIONS;
        if check {
            let (value, residual) = lowest_ritz(&alpha, &beta, if exhausted { 0.0 } else { b_next });
            best = (value, residual);
            if residual <= tolerance {
                return Ok(result(value, k + 1, residual));
            }
        }
        if exhausted {
            break;
        }
        beta.push(b_next);
        q = w.iter().map(|v| v / b_next).collect();
    }
    Err(Error::NonConvergence {
        solver: "lanczos",
        iterations: alpha.len(),
        best: best.0,
    })
}

/// Smallest eigenvalue of the dense Hamiltonian.
pub fn dense_ground_energy(inst: &IsingInstance) -> Result<f64> {
    let h = dense_hamiltonian(inst)?;
    Ok(h.symmetric_eigenvalues().iter().copied().fold(f64::INFINITY, f64::min))
}

/// `(clifford - exact) / |exact|`.
pub fn relative_error(clifford_energy: f64, exact_energy: f64) -> Result<f64> {
    if !(exact_energy < 0.0) {
        return Err(Error::Domain(format!(
            "relative error needs a negative exact energy, got {exact_energy}"
        )));
    }
    Ok((clifford_energy - exact_energy) / exact_energy.abs())
}

/// Dense ground state vector, for examples that inspect amplitudes.
pub fn dense_ground_state(inst: &IsingInstance) -> Result<(f64, DVector<f64>)> {
    let eig = dense_hamiltonian(inst)?.symmetric_eigen();
    let (idx, &value) = eig
        .eigenvalues
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .ok_or_else(|| Error::Internal("empty spectrum".into()))?;
    Ok((value, eig.eigenvectors.column(idx).into_owned()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, kite6, line_graph, random_graph, Graph};
    use crate::rational::Rational;

    fn inst(graph: Graph, g: Rational) -> IsingInstance {
        IsingInstance::new(graph, g).unwrap()
    }

    #[test]
    fn matvec_examples() {
        let one = inst(Graph::empty(1), Rational::from_integer(1));
        assert_eq!(matvec(&one, &[1.0, 0.0]).unwrap(), vec![0.0, -1.0]);
        let l2 = inst(line_graph(2).unwrap(), Rational::from_integer(0));
        assert_eq!(matvec(&l2, &[1.0, 0.0, 0.0, 0.0]).unwrap(), vec![-1.0, 0.0, 0.0, 0.0]);
        assert!(matvec(&l2, &[1.0, 0.0]).is_err());
    }

    #[test]
    fn matvec_matches_dense_and_is_symmetric() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for seed in 0..5 {
            let g = random_graph(6, 0.5, seed).unwrap();
            let i = inst(g, Rational::new(3, 4));
            let h = dense_hamiltonian(&i).unwrap();
            let x: Vec<f64> = (0..64).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let y: Vec<f64> = (0..64).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let hx = matvec(&i, &x).unwrap();
            let hy = matvec(&i, &y).unwrap();
            let dense = &h * DVector::from_vec(x.clone());
            for b in 0..64 {
                assert!((hx[b] - dense[b]).abs() < 1e-12);
            }
            assert!((dot(&x, &hy) - dot(&hx, &y)).abs() < 1e-12);
        }
    }

    #[test]
    fn two_site_closed_form() {
        for k in 0..=40 {
            let g = Rational::new(k, 10);
            let gf = k as f64 / 10.0;
            let r = ground_energy(&inst(line_graph(2).unwrap(), g), 1e-10).unwrap();
            assert!((r.energy + (1.0 + 4.0 * gf * gf).sqrt()).abs() < 1e-10, "g={gf}");
            assert!(r.residual <= 1e-10);
        }
        let r = ground_energy(&inst(line_graph(2).unwrap(), Rational::new(3, 4)), 1e-10).unwrap();
        assert!((r.energy + 1.802_776).abs() < 1e-6);
    }

    #[test]
    fn field_free_and_edgeless_limits() {
        for g in [kite6(), complete_graph(5).unwrap(), cycle_graph(7).unwrap()] {
            let m = g.num_edges() as f64;
            let r = ground_energy(&inst(g, Rational::from_integer(0)), 1e-8).unwrap();
            assert_eq!(r.energy, -m);
        }
        let r = ground_energy(&inst(Graph::empty(5), Rational::from_integer(1)), 1e-10).unwrap();
        assert!((r.energy + 5.0).abs() < 1e-10);
    }

    #[test]
    fn lanczos_matches_dense() {
        for seed in 0..6 {
            let g = random_graph(8, 0.4, seed).unwrap();
            for k in [1, 5, 9, 14] {
                let i = inst(g.clone(), Rational::new(k, 10));
                let lz = ground_energy(&i, 1e-10).unwrap();
                let dense = dense_ground_energy(&i).unwrap();
                assert!((lz.energy - dense).abs() < 1e-9, "seed {seed} g {k}/10");
            }
        }
    }

    #[test]
    fn monotone_in_field() {
        let g = kite6();
        let energies: Vec<f64> = (0..=20)
            .map(|k| ground_energy(&inst(g.clone(), Rational::new(k, 8)), 1e-10).unwrap().energy)
            .collect();
        assert!(energies.windows(2).all(|w| w[1] <= w[0] + 1e-10));
    }

    #[test]
    fn relative_error_examples() {
        let e = relative_error(-1.0, -(2f64).sqrt()).unwrap();
        assert!((e - 0.2929).abs() < 1e-4);
        assert_eq!(relative_error(-7.0, -7.0).unwrap(), 0.0);
        assert!(relative_error(-1.0, 0.0).is_err());
        assert!(relative_error(-1.0, 0.5).is_err());
    }

    #[test]
    fn rejects_bad_tolerance() {
        let i = inst(line_graph(3).unwrap(), Rational::from_integer(1));
        assert!(ground_energy(&i, 1e-13).is_err());
        assert!(ground_energy(&i, f64::NAN).is_err());
    }
}
