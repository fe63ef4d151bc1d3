//! Stabilizer states for the Clifford optimum.
//!
//! [`build_witness`] turns an optimal vertex set into a concrete stabilizer
//! state whose energy equals the set's cost, and [`statevector_oracle`]
//! expands small tableaus into amplitudes for cross-checking.

mod pauli;
mod statevector;
mod tableau;
mod witness;

pub use pauli::PauliOperator;
pub use statevector::{pauli_expectation_dense, statevector_oracle};
pub use tableau::StabilizerTableau;
pub use witness::{
    build_witness, hamiltonian_terms, pauli_expectation, verify_exclusions, CliffordWitness,
    ExclusionReport, HamiltonianTerm, TermExpectation,
};
