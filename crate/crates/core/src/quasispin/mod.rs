//! Collective (symmetric-irrep) bases, Hamiltonian matrices and exact ground
//! states of the two- and three-level Lipkin models.
//!
//! The two-level model lives in the `J = N/2` multiplet of SU(2), spanned by
//! `|J, M⟩` with `M = −J..J`. The three-level model lives in the fully
//! symmetric SU(3) irrep, realized with three bosons per the Schwinger mapping
//! `K_{σσ'} → b†_σ b_σ'` on `|n1, n2⟩` (with `n0 = N − n1 − n2`).
//!
//! Label order is part of the public contract: ascending `M` for the
//! two-level basis and lexicographic `(n1, n2)` for the three-level one.

mod basis;
mod hamiltonian;
mod operators;
mod spectrum;

pub use basis::{BasisLabel, CollectiveBasis};
pub use hamiltonian::{
    build_hamiltonian, build_three_level_hamiltonian, build_two_level_hamiltonian,
    HamiltonianMatrix,
};
pub use operators::{apply_operator, expectation_k, operator_matrix, KOperator};
pub use spectrum::{ground_state, GroundState};
