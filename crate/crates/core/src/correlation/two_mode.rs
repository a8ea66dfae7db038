use libm::sqrt;
use nalgebra::{Complex, Matrix2, Matrix4};

use super::entropy::von_neumann;
use crate::density::OneBodyDensityBlock;
use crate::error::{Error, Result};

const TOL: f64 = 1e-10;

/// Index of the occupation state `|n_A n_B⟩` in the 4×4 representation.
#[inline]
pub(crate) fn idx(n_a: usize, n_b: usize) -> usize {
    n_a + 2 * n_b
}

/// Reduced state of two fermionic modes A and B over `{|00⟩, |10⟩, |01⟩, |11⟩}`
/// (first digit is mode A), with `|11⟩ = c†_A c†_B |00⟩`.
///
/// Parity superselection leaves two blocks, `{|00⟩, |11⟩}` and
/// `{|10⟩, |01⟩}`; everything else must vanish.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoModeState {
    rho: Matrix4<Complex<f64>>,
}

impl TwoModeState {
    /// Validates hermiticity, unit trace, the superselection block pattern and positivity.
    pub fn from_matrix(rho: Matrix4<Complex<f64>>) -> Result<Self> {
        if (rho - rho.adjoint()).iter().any(|z| z.norm_sqr() > 1e-24) {
            return Err(Error::NonPhysicalState("matrix is not Hermitian"));
        }
        if (rho.trace() - Complex::new(1.0, 0.0)).norm_sqr() > TOL * TOL {
            return Err(Error::NonPhysicalState("trace differs from one"));
        }
        for (i, j) in [(0, 1), (0, 2), (3, 1), (3, 2)] {
            if rho[(i, j)].norm_sqr() > 1e-24 {
                return Err(Error::NonPhysicalState(
                    "coherence between different parity sectors",
                ));
            }
        }
        let state = Self { rho };
        if state.eigenvalues().iter().any(|&x| x < -TOL) {
            return Err(Error::NonPhysicalState("negative eigenvalue"));
        }
        Ok(state)
    }

    pub fn rho(&self) -> &Matrix4<Complex<f64>> {
        &self.rho
    }

    /// `⟨10|ρ|01⟩ = ⟨c†_B c_A⟩`.
    pub fn coherence(&self) -> Complex<f64> {
        self.rho[(1, 2)]
    }

    /// Spectrum, from the two parity blocks.
    pub fn eigenvalues(&self) -> [f64; 4] {
        let r = &self.rho;
        let even = hermitian_2x2_eigenvalues(r[(0, 0)].re, r[(0, 3)], r[(3, 3)].re);
        let odd = hermitian_2x2_eigenvalues(r[(1, 1)].re, r[(1, 2)], r[(2, 2)].re);
        [even[0], even[1], odd[0], odd[1]]
    }

    pub fn entropy(&self) -> f64 {
        von_neumann(&self.eigenvalues())
    }

    /// Mode-A state after tracing out B.
    pub fn reduced_a(&self) -> Matrix2<Complex<f64>> {
        Matrix2::from_fn(|a, ap| (0..2).map(|b| self.rho[(idx(a, b), idx(ap, b))]).sum())
    }

    /// Mode-B state after tracing out A.
    pub fn reduced_b(&self) -> Matrix2<Complex<f64>> {
        Matrix2::from_fn(|b, bp| (0..2).map(|a| self.rho[(idx(a, b), idx(a, bp))]).sum())
    }
}

/// Eigenvalues of `[[a, b], [b*, d]]`, ascending.
pub(crate) fn hermitian_2x2_eigenvalues(a: f64, b: Complex<f64>, d: f64) -> [f64; 2] {
    let mean = 0.5 * (a + d);
    let half = 0.5 * (a - d);
    let r = sqrt(half * half + b.norm_sqr());
    [mean - r, mean + r]
}

pub(crate) fn entropy_2x2(m: &Matrix2<Complex<f64>>) -> f64 {
    von_neumann(&hermitian_2x2_eigenvalues(
        m[(0, 0)].re,
        m[(0, 1)],
        m[(1, 1)].re,
    ))
}

/// Builds the pair state from `⟨n_A⟩`, `⟨n_B⟩`, `⟨n_A n_B⟩` and `⟨c†_B c_A⟩`.
///
/// Non-physical inputs (negative probabilities, or `|coh|² > p10 p01` beyond
/// `1e-10`) are rejected rather than clipped.
pub fn two_mode_state_from_correlators(
    n_a: f64,
    n_b: f64,
    n_ab: f64,
    coh: Complex<f64>,
) -> Result<TwoModeState> {
    if n_ab < -TOL || n_ab > n_a.min(n_b) + TOL {
        return Err(Error::NonPhysicalState(
            "pair occupation outside [0, min(n_A, n_B)]",
        ));
    }
    let p00 = 1.0 - n_a - n_b + n_ab;
    let p10 = n_a - n_ab;
    let p01 = n_b - n_ab;
    let p11 = n_ab;
    if [p00, p10, p01, p11].iter().any(|&p| p < -TOL) {
        return Err(Error::NonPhysicalState("negative occupation probability"));
    }
    if coh.norm_sqr() > p10 * p01 + TOL {
        return Err(Error::NonPhysicalState(
            "coherence exceeds the positivity bound",
        ));
    }
    let mut rho = Matrix4::zeros();
    rho[(0, 0)] = Complex::new(p00, 0.0);
    rho[(1, 1)] = Complex::new(p10, 0.0);
    rho[(2, 2)] = Complex::new(p01, 0.0);
    rho[(3, 3)] = Complex::new(p11, 0.0);
    rho[(1, 2)] = coh;
    rho[(2, 1)] = coh.conj();
    TwoModeState::from_matrix(rho)
}

/// Pair state of levels `a` (mode A) and `b` (mode B) at the same p.
///
/// Every p-block of the states treated here holds exactly one particle, so
/// `⟨n_A n_B⟩ = 0` and the remaining correlators come from the block.
pub fn two_mode_state_from_block(
    block: &OneBodyDensityBlock,
    a: usize,
    b: usize,
) -> Result<TwoModeState> {
    let dim = block.dim();
    for index in [a, b] {
        if index >= dim {
            return Err(Error::ModeOutOfRange { index, dim });
        }
    }
    if a == b {
        return Err(Error::NonPhysicalState(
            "a mode cannot be paired with itself",
        ));
    }
    let g = block.matrix();
    two_mode_state_from_correlators(g[(a, a)], g[(b, b)], 0.0, Complex::new(g[(a, b)], 0.0))
}

/// `I(A, B) = S(ρ_A) + S(ρ_B) − S(ρ_AB)`, clamped at zero against rounding.
pub fn mutual_information(state: &TwoModeState) -> f64 {
    let i = entropy_2x2(&state.reduced_a()) + entropy_2x2(&state.reduced_b()) - state.entropy();
    i.max(0.0)
}

/// `Tr ρ²`.
pub fn purity(state: &TwoModeState) -> f64 {
    state.rho.iter().map(|z| z.norm_sqr()).sum()
}
