use num::complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{PauliOperator, StabilizerTableau};
use crate::error::{Error, Result};
use crate::limits;

const START_SEED: u64 = 0x05ee_d0f5_7a7e;

/// `P|ψ⟩` for a dense state, qubit 0 least significant.
fn apply_pauli(p: &PauliOperator, psi: &[Complex64]) -> Vec<Complex64> {
    let mut x_mask = 0usize;
    let mut z_mask = 0usize;
    let mut y_count = 0u32;
    for k in 0..p.num_qubits() {
        let (x, z) = (p.x_bits()[k], p.z_bits()[k]);
        x_mask |= (x as usize) << k;
        z_mask |= (z as usize) << k;
        y_count += (x && z) as u32;
    }
    // Y = iXZ on each qubit.
    let mut global = Complex64::i().powu(y_count);
    if p.is_negative() {
        global = -global;
    }
    let mut out = vec![Complex64::new(0.0, 0.0); psi.len()];
    for (b, amp) in psi.iter().enumerate() {
        let parity = (b & z_mask).count_ones() % 2;
        let factor = if parity == 1 { -global } else { global };
        out[b ^ x_mask] += factor * amp;
    }
    out
}

/// Dense amplitudes of the state stabilized by `tableau`, up to global phase.
///
/// A fixed pseudo-random vector is pushed through the projectors
/// `(I + S_k)/2` of every generator and normalised.
pub fn statevector_oracle(tableau: &StabilizerTableau) -> Result<Vec<Complex64>> {
    let n = tableau.num_qubits();
    limits::check("statevector", n, limits::STATEVECTOR_MAX_N)?;
    let mut rng = ChaCha8Rng::seed_from_u64(START_SEED);
    let mut psi: Vec<Complex64> = (0..1usize << n)
        .map(|_| Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5))
        .collect();
    for s in tableau.generators() {
        let image = apply_pauli(s, &psi);
        for (a, b) in psi.iter_mut().zip(image) {
            *a = (*a + b) * 0.5;
        }
    }
    let norm = psi.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    if norm < 1e-8 {
        return Err(Error::Internal("stabilizer projection vanished".into()));
    }
    for a in &mut psi {
        *a /= norm;
    }
    Ok(psi)
}

/// `⟨ψ|P|ψ⟩`, real part.
pub fn pauli_expectation_dense(psi: &[Complex64], p: &PauliOperator) -> Result<f64> {
    if psi.len() != 1usize << p.num_qubits() {
        return Err(Error::invalid("state dimension does not match Pauli size"));
    }
    let image = apply_pauli(p, psi);
    Ok(psi
        .iter()
        .zip(&image)
        .map(|(a, b)| a.conj() * b)
        .sum::<Complex64>()
        .re)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_state_amplitudes() {
        let psi = statevector_oracle(&StabilizerTableau::zero_state(3)).unwrap();
        assert!((psi[0].norm() - 1.0).abs() < 1e-12);
        assert!(psi[1..].iter().all(|a| a.norm() < 1e-12));
    }

    #[test]
    fn plus_plus_amplitudes() {
        let mut t = StabilizerTableau::zero_state(2);
        t.ry_half_pi(0);
        t.ry_half_pi(1);
        let psi = statevector_oracle(&t).unwrap();
        // Fix the global phase against amplitude 0.
        let phase = psi[0] / psi[0].norm();
        for a in &psi {
            let a = a / phase;
            assert!((a.re - 0.5).abs() < 1e-12 && a.im.abs() < 1e-12);
        }
    }

    #[test]
    fn y_eigenstate() {
        let mut t = StabilizerTableau::zero_state(1);
        t.h(0);
        t.s(0);
        let psi = statevector_oracle(&t).unwrap();
        let y: PauliOperator = "Y".parse().unwrap();
        assert!((pauli_expectation_dense(&psi, &y).unwrap() - 1.0).abs() < 1e-12);
        let x: PauliOperator = "X".parse().unwrap();
        assert!(pauli_expectation_dense(&psi, &x).unwrap().abs() < 1e-12);
    }

    #[test]
    fn normalised() {
        let mut t = StabilizerTableau::zero_state(5);
        t.ry_half_pi(1);
        t.s(1);
        t.h(3);
        let psi = statevector_oracle(&t).unwrap();
        let norm: f64 = psi.iter().map(|a| a.norm_sqr()).sum();
        assert!((norm - 1.0).abs() < 1e-12);
    }
}
