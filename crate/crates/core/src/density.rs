//! Per-p one-body density blocks `γ_ij = ⟨c†_j c_i⟩`.
//!
//! Both models conserve the degeneracy index p and treat every p alike, so the
//! full `dN × dN` one-body density matrix is N identical `d × d` blocks. Level
//! order is `(−, +)` for the two-level model and `(0, 1, 2)` for the
//! three-level model.

use alloc::vec::Vec;

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::linalg::symmetric_eigen;
use crate::model::ModelKind;
use crate::quasispin::{expectation_k, GroundState, KOperator};

const TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct OneBodyDensityBlock {
    matrix: DMatrix<f64>,
    multiplicity: u32,
}

impl OneBodyDensityBlock {
    /// Validates symmetry, unit trace and occupations in `[0, 1]`.
    pub fn new(matrix: DMatrix<f64>, multiplicity: u32) -> Result<Self> {
        let d = matrix.nrows();
        if !(d == 2 || d == 3) || matrix.ncols() != d {
            return Err(Error::InvalidDensity("block must be 2x2 or 3x3"));
        }
        if (&matrix - matrix.transpose()).abs().max() > TOL {
            return Err(Error::InvalidDensity("block is not symmetric"));
        }
        if (matrix.trace() - 1.0).abs() > TOL {
            return Err(Error::InvalidDensity("trace differs from one"));
        }
        let block = Self {
            matrix,
            multiplicity,
        };
        let occ = block.natural_occupations();
        if occ.iter().any(|&x| !(-TOL..=1.0 + TOL).contains(&x)) {
            return Err(Error::InvalidDensity("occupation outside [0, 1]"));
        }
        Ok(block)
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    /// Number of identical blocks (the particle number N).
    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// Eigenvalues of the block in descending order.
    pub fn natural_occupations(&self) -> Vec<f64> {
        natural_occupations(self)
    }
}

pub fn natural_occupations(block: &OneBodyDensityBlock) -> Vec<f64> {
    let eig = symmetric_eigen(&block.matrix).expect("eigensolver converges on 3x3 blocks");
    let mut occ = eig.eigenvalues;
    occ.reverse();
    occ
}

/// One-body density block of an exact ground state.
pub fn exact_one_body_density(gs: &GroundState) -> Result<OneBodyDensityBlock> {
    let n = f64::from(gs.basis().n_particles());
    let matrix = match gs.basis().model() {
        ModelKind::TwoLevel => {
            let k0 = expectation_k(gs, KOperator::K0)? / n;
            let kp = expectation_k(gs, KOperator::KPlus)? / n;
            let km = expectation_k(gs, KOperator::KMinus)? / n;
            // γ_{−+} = ⟨c†_+ c_−⟩ = ⟨K+⟩/N
            DMatrix::from_row_slice(2, 2, &[0.5 - k0, kp, km, 0.5 + k0])
        }
        ModelKind::ThreeLevel => {
            let mut m = DMatrix::zeros(3, 3);
            for i in 0..3u8 {
                for j in 0..3u8 {
                    let k = expectation_k(gs, KOperator::Level { to: j, from: i })?;
                    m[(i as usize, j as usize)] = k / n;
                }
            }
            m
        }
    };
    OneBodyDensityBlock::new(matrix, gs.basis().n_particles())
}
