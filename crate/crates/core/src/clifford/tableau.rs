use super::pauli::PauliOperator;
use crate::error::{Error, Result};

/// Stabilizer tableau with destabilizers.
///
/// Row `k` of `destabilizers` anticommutes with row `k` of `stabilizers` and
/// commutes with every other stabilizer row. Gates act by conjugation; the
/// global phase of the state is not tracked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerTableau {
    destabilizers: Vec<PauliOperator>,
    stabilizers: Vec<PauliOperator>,
}

impl StabilizerTableau {
    /// `|0...0⟩`: stabilizers `Z_k`, destabilizers `X_k`.
    pub fn zero_state(n: usize) -> Self {
        Self {
            destabilizers: (0..n).map(|k| PauliOperator::single_x(n, k)).collect(),
            stabilizers: (0..n).map(|k| PauliOperator::single_z(n, k)).collect(),
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.stabilizers.len()
    }

    pub fn generators(&self) -> &[PauliOperator] {
        &self.stabilizers
    }

    pub fn destabilizers(&self) -> &[PauliOperator] {
        &self.destabilizers
    }

    fn rows_mut(&mut self) -> impl Iterator<Item = &mut PauliOperator> {
        self.destabilizers.iter_mut().chain(self.stabilizers.iter_mut())
    }

    /// Hadamard: `X ↔ Z`, `Y → -Y`.
    pub fn h(&mut self, q: usize) {
        for row in self.rows_mut() {
            let (x, z) = (row.x_bits()[q], row.z_bits()[q]);
            if x && z {
                row.flip_sign();
            }
            row.x_mut()[q] = z;
            row.z_mut()[q] = x;
        }
    }

    /// Phase gate: `X → Y`, `Y → -X`.
    pub fn s(&mut self, q: usize) {
        for row in self.rows_mut() {
            let (x, z) = (row.x_bits()[q], row.z_bits()[q]);
            if x && z {
                row.flip_sign();
            }
            row.z_mut()[q] = z ^ x;
        }
    }

    /// Pauli `X`: flips the sign of rows with a `Z` or `Y` on `q`.
    pub fn x(&mut self, q: usize) {
        for row in self.rows_mut() {
            if row.z_bits()[q] {
                row.flip_sign();
            }
        }
    }

    /// Pauli `Z`: flips the sign of rows with an `X` or `Y` on `q`.
    pub fn z(&mut self, q: usize) {
        for row in self.rows_mut() {
            if row.x_bits()[q] {
                row.flip_sign();
            }
        }
    }

    /// `R_Y(π/2)` up to global phase, as `Z` followed by `H`: `Z → X`, `X → -Z`.
    pub fn ry_half_pi(&mut self, q: usize) {
        self.z(q);
        self.h(q);
    }

    /// Expectation of a Hermitian Pauli: `±1` if `±p` is in the stabilizer
    /// group, `0` if `p` anticommutes with some generator.
    pub fn expectation(&self, p: &PauliOperator) -> Result<i8> {
        let n = self.num_qubits();
        if p.num_qubits() != n {
            return Err(Error::invalid(format!(
                "Pauli on {} qubits queried against a {n}-qubit tableau",
                p.num_qubits()
            )));
        }
        if self.stabilizers.iter().any(|s| !s.commutes_with(p)) {
            return Ok(0);
        }
        // p commutes with the whole group, so it is ± the product of the
        // stabilizers whose destabilizer partners it anticommutes with.
        let mut product = PauliOperator::identity(n);
        for (d, s) in self.destabilizers.iter().zip(&self.stabilizers) {
            if !d.commutes_with(p) {
                product = product.multiply(s)?;
            }
        }
        if !product.same_string(p) {
            return Err(Error::Internal(format!(
                "{p} commutes with every stabilizer but is not in the group"
            )));
        }
        Ok(p.sign() * product.sign())
    }

    /// All generator pairs commute.
    pub fn generators_commute(&self) -> bool {
        let s = &self.stabilizers;
        (0..s.len()).all(|i| (i + 1..s.len()).all(|j| s[i].commutes_with(&s[j])))
    }

    /// Rank of the generators' binary symplectic rows over GF(2).
    pub fn generator_rank(&self) -> usize {
        let n = self.num_qubits();
        let mut rows: Vec<Vec<bool>> = self
            .stabilizers
            .iter()
            .map(|p| p.x_bits().iter().chain(p.z_bits()).copied().collect())
            .collect();
        let mut rank = 0;
        for col in 0..2 * n {
            let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col]) else {
                continue;
            };
            rows.swap(rank, pivot);
            for r in 0..rows.len() {
                if r != rank && rows[r][col] {
                    let pivot_row = rows[rank].clone();
                    for (a, b) in rows[r].iter_mut().zip(pivot_row) {
                        *a ^= b;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Checks the tableau invariants: `N` commuting, independent generators
    /// and a consistent destabilizer pairing.
    pub fn validate(&self) -> Result<()> {
        let n = self.num_qubits();
        if self.destabilizers.len() != n {
            return Err(Error::Internal("destabilizer count differs from generator count".into()));
        }
        if !self.generators_commute() {
            return Err(Error::Internal("stabilizer generators do not commute".into()));
        }
        if self.generator_rank() != n {
            return Err(Error::Internal("stabilizer generators are not independent".into()));
        }
        for (i, d) in self.destabilizers.iter().enumerate() {
            for (j, s) in self.stabilizers.iter().enumerate() {
                if d.commutes_with(s) == (i == j) {
                    return Err(Error::Internal(format!(
                        "destabilizer {i} has the wrong commutation with stabilizer {j}"
                    )));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PauliOperator {
        s.parse().unwrap()
    }

    #[test]
    fn zero_state_expectations() {
        let t = StabilizerTableau::zero_state(1);
        assert_eq!(t.expectation(&p("Z")).unwrap(), 1);
        assert_eq!(t.expectation(&p("-Z")).unwrap(), -1);
        assert_eq!(t.expectation(&p("X")).unwrap(), 0);
        assert!(t.expectation(&p("ZZ")).is_err());
    }

    #[test]
    fn plus_state() {
        let mut t = StabilizerTableau::zero_state(1);
        t.h(0);
        assert_eq!(t.expectation(&p("Z")).unwrap(), 0);
        assert_eq!(t.expectation(&p("X")).unwrap(), 1);
    }

    #[test]
    fn sign_tracking_after_x() {
        let mut t = StabilizerTableau::zero_state(2);
        t.x(1);
        assert_eq!(t.expectation(&p("IZ")).unwrap(), -1);
        assert_eq!(t.expectation(&p("ZI")).unwrap(), 1);
        assert_eq!(t.expectation(&p("ZZ")).unwrap(), -1);
    }

    #[test]
    fn ry_half_pi_maps_zero_to_plus() {
        let mut t = StabilizerTableau::zero_state(1);
        t.ry_half_pi(0);
        assert_eq!(t.generators()[0], p("+X"));
        // R_Y(π/2) sends X to -Z.
        assert_eq!(t.destabilizers()[0], p("-Z"));
    }

    #[test]
    fn product_state_products() {
        let mut t = StabilizerTableau::zero_state(2);
        t.h(0);
        assert_eq!(t.expectation(&p("XZ")).unwrap(), 1);
        assert_eq!(t.expectation(&p("YZ")).unwrap(), 0);
        t.s(0);
        // S|+⟩ = |+i⟩, stabilized by Y.
        assert_eq!(t.expectation(&p("YI")).unwrap(), 1);
        assert_eq!(t.expectation(&p("YZ")).unwrap(), 1);
        t.validate().unwrap();
    }

    #[test]
    fn gates_preserve_invariants() {
        let mut t = StabilizerTableau::zero_state(4);
        for q in 0..4 {
            t.ry_half_pi(q);
            t.s((q + 1) % 4);
            t.h((q + 2) % 4);
            t.validate().unwrap();
        }
    }
}
