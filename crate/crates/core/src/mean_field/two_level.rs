use libm::{acos, sqrt};
use nalgebra::DMatrix;

use super::{density_from_rotation, hf_energy, require_two_particles, HfAngles, HfSolution};
use crate::error::{Error, Result};
use crate::model::{ModelKind, ModelParams};
use crate::optimize::minimize_bracketed;

/// `cos φ` of the HF minimum: 1 for `χ ≤ 1`, `1/χ` above.
pub fn closed_form_cos_phi(chi: f64) -> f64 {
    if chi <= 1.0 {
        1.0
    } else {
        1.0 / chi
    }
}

/// Occupied orbital `cos(φ/2) c†_− − sin(φ/2) c†_+` written in terms of `u = cos φ`.
fn orbital(u: f64) -> [f64; 2] {
    [sqrt(0.5 * (1.0 + u)), -sqrt(0.5 * (1.0 - u))]
}

/// Minimizes `E(φ) = −(Nε/2)[cos φ + (χ/2) sin² φ]` over `φ ∈ [0, π/2]`.
///
/// The search runs in `u = cos φ ∈ [0, 1]`, where the functional is a
/// quadratic and the minimizer resolves to machine precision even at `χ = 1`.
pub fn hf_two_level(params: &ModelParams) -> Result<HfSolution> {
    if params.model() != ModelKind::TwoLevel {
        return Err(Error::ModelMismatch {
            expected: ModelKind::TwoLevel.name(),
            got: params.model().name(),
        });
    }
    require_two_particles(params)?;
    let n = f64::from(params.n_particles());
    let eps = params.epsilon();
    let chi = params.chi();

    let energy_at = |u: f64| hf_energy(params, &orbital(u));
    let slope = |u: f64| 0.5 * n * eps * (chi * u - 1.0);
    let u = minimize_bracketed(energy_at, slope, 0.0, 1.0);
    let phi = acos(u.clamp(-1.0, 1.0));

    let [c, s] = orbital(u);
    let rotation = DMatrix::from_row_slice(2, 2, &[c, s, -s, c]);
    let density_block = density_from_rotation(&rotation, params.n_particles())?;
    Ok(HfSolution {
        model: ModelKind::TwoLevel,
        angles: HfAngles::TwoLevel { phi },
        energy: hf_energy(params, &[c, s]),
        rotation,
        density_block,
    })
}
