//! Hartree–Fock solutions of both Lipkin models.
//!
//! The HF state is the Slater determinant `Π_p a†_{0p} |0⟩` with one rotated
//! orbital `a†_0 = Σ_σ x_σ c†_σ` per degeneracy index. Its energy follows from
//! Wick's theorem: one-body terms give `N Σ_σ e_σ x_σ²`, and each squared
//! ladder `K_{σσ'}²` contributes `N(N − 1) x_σ² x_σ'²` (the `p = p'` term
//! vanishes because a level cannot hold two fermions with the same p).

mod three_level;
mod two_level;

use nalgebra::DMatrix;

use crate::density::OneBodyDensityBlock;
use crate::error::{Error, Result};
use crate::model::{ModelKind, ModelParams};

pub use three_level::{
    closed_form_cos2_alpha, closed_form_cos2_beta, hf_three_level, three_level_rotation,
};
pub use two_level::{closed_form_cos_phi, hf_two_level};

/// Variational angles in `[0, π/2]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum HfAngles {
    TwoLevel { phi: f64 },
    ThreeLevel { alpha: f64, beta: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct HfSolution {
    pub model: ModelKind,
    pub angles: HfAngles,
    /// `E_HF`.
    pub energy: f64,
    /// Orthogonal matrix whose row `k` holds the amplitudes of HF orbital `k`
    /// on the original levels; row 0 is the occupied orbital.
    pub rotation: DMatrix<f64>,
    /// `Rᵀ diag(1, 0, …) R`, the per-p HF one-body density.
    pub density_block: OneBodyDensityBlock,
}

impl HfSolution {
    /// Amplitudes `x_σ` of the occupied HF orbital.
    pub fn occupied_orbital(&self) -> alloc::vec::Vec<f64> {
        self.rotation.row(0).iter().copied().collect()
    }
}

pub fn hf_solve(params: &ModelParams) -> Result<HfSolution> {
    match params.model() {
        ModelKind::TwoLevel => hf_two_level(params),
        ModelKind::ThreeLevel => hf_three_level(params),
    }
}

/// Single-particle energies in units of ε: `(−½, ½)` or `(−1, 0, 1)`.
fn level_energies(model: ModelKind) -> &'static [f64] {
    match model {
        ModelKind::TwoLevel => &[-0.5, 0.5],
        ModelKind::ThreeLevel => &[-1.0, 0.0, 1.0],
    }
}

/// `⟨HF|H|HF⟩` for the determinant built from the orbital with amplitudes `x`.
pub fn hf_energy(params: &ModelParams, x: &[f64]) -> f64 {
    let n = f64::from(params.n_particles());
    let one_body: f64 = level_energies(params.model())
        .iter()
        .zip(x)
        .map(|(e, xs)| e * xs * xs)
        .sum();
    let mut pairs = 0.0;
    for s in 0..x.len() {
        for t in (s + 1)..x.len() {
            pairs += x[s] * x[s] * x[t] * x[t];
        }
    }
    params.epsilon() * n * one_body - params.v() * n * (n - 1.0) * pairs
}

fn density_from_rotation(rotation: &DMatrix<f64>, n_particles: u32) -> Result<OneBodyDensityBlock> {
    let row = rotation.row(0);
    OneBodyDensityBlock::new(row.transpose() * row, n_particles)
}

fn require_two_particles(params: &ModelParams) -> Result<()> {
    if params.n_particles() < 2 {
        return Err(Error::TooFewParticles {
            min: 2,
            got: params.n_particles(),
        });
    }
    Ok(())
}

/// `ε_corr = (E_exact − E_HF) / E_exact`.
///
/// Values within `1e-10 |E_exact|` below zero are rounding and return 0; a larger
/// violation of `E_exact ≤ E_HF` is an error.
pub fn relative_correlation_energy(e_exact: f64, e_hf: f64) -> Result<f64> {
    if e_exact.is_nan() || e_exact >= 0.0 {
        return Err(Error::NonNegativeExactEnergy(e_exact));
    }
    let diff = e_exact - e_hf;
    if diff > 1e-10 * e_exact.abs() {
        return Err(Error::VariationalViolation { e_exact, e_hf });
    }
    Ok((diff / e_exact).max(0.0))
}
