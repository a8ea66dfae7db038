use alloc::vec::Vec;

use libm::sqrt;
use nalgebra::DVector;

use super::basis::CollectiveBasis;
use super::hamiltonian::HamiltonianMatrix;
use crate::error::{Error, Result};
use crate::linalg::symmetric_eigen;

/// Relative gap below which the lowest levels count as degenerate.
const DEGENERACY_TOL: f64 = 1e-10;
/// Odd-sector weight tolerated in a non-degenerate ground state before it is rejected.
const PARITY_TOL: f64 = 1e-8;

/// Lowest eigenpair of a collective Hamiltonian.
#[derive(Debug, Clone, PartialEq)]
pub struct GroundState {
    energy: f64,
    vector: DVector<f64>,
    basis: CollectiveBasis,
    quasi_degenerate: bool,
}

impl GroundState {
    pub fn energy(&self) -> f64 {
        self.energy
    }

    /// Normalized amplitudes in basis order; the largest-magnitude entry is positive.
    pub fn vector(&self) -> &DVector<f64> {
        &self.vector
    }

    pub fn basis(&self) -> &CollectiveBasis {
        &self.basis
    }

    /// Set when the lowest two eigenvalues are closer than `1e-10 · max|H|`.
    /// The even-sector state is returned in that case.
    pub fn quasi_degenerate(&self) -> bool {
        self.quasi_degenerate
    }

    /// Total weight on basis states outside the even sector.
    pub fn odd_weight(&self) -> f64 {
        odd_weight(&self.basis, &self.vector)
    }
}

fn odd_weight(basis: &CollectiveBasis, v: &DVector<f64>) -> f64 {
    v.iter()
        .enumerate()
        .filter(|(i, _)| !basis.is_even(*i))
        .map(|(_, x)| x * x)
        .sum()
}

/// Dense symmetric eigensolve; returns the lowest even-sector eigenpair.
pub fn ground_state(h: &HamiltonianMatrix) -> Result<GroundState> {
    let basis = h.basis();
    let scale = h.max_abs().max(f64::MIN_POSITIVE);
    let eig = symmetric_eigen(h.entries())?;
    let lowest = eig.eigenvalues[0];
    let cluster: Vec<usize> = (0..eig.eigenvalues.len())
        .take_while(|&k| eig.eigenvalues[k] - lowest <= DEGENERACY_TOL * scale)
        .collect();

    // Inside a degenerate cluster the solver may return any rotation of the
    // even and odd states; the even projection of the best member recovers
    // the even state.
    let (best, even_norm2) = cluster
        .iter()
        .map(|&k| {
            let col = eig.eigenvectors.column(k);
            let w = 1.0 - odd_weight(basis, &col.into_owned());
            (k, w)
        })
        .fold(
            (cluster[0], -1.0),
            |acc, cur| if cur.1 > acc.1 { cur } else { acc },
        );

    if cluster.len() == 1 && 1.0 - even_norm2 > PARITY_TOL {
        return Err(Error::ParityViolation {
            odd_weight: 1.0 - even_norm2,
        });
    }
    if even_norm2 < 0.25 {
        return Err(Error::ParityViolation {
            odd_weight: 1.0 - even_norm2,
        });
    }

    let mut vector: DVector<f64> = eig.eigenvectors.column(best).into_owned();
    for i in 0..vector.len() {
        if !basis.is_even(i) {
            vector[i] = 0.0;
        }
    }
    let norm = sqrt(vector.dot(&vector));
    vector /= norm;
    let pivot = vector.iamax();
    if vector[pivot] < 0.0 {
        vector = -vector;
    }
    let energy = vector.dot(&(h.entries() * &vector));

    Ok(GroundState {
        energy,
        vector,
        basis: basis.clone(),
        quasi_degenerate: cluster.len() > 1,
    })
}
