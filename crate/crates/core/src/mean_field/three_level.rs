use libm::{acos, cos, sin, sqrt};
use nalgebra::DMatrix;

use super::{density_from_rotation, hf_energy, require_two_particles, HfAngles, HfSolution};
use crate::error::{Error, Result};
use crate::model::{ModelKind, ModelParams};
use crate::optimize::projected_newton_unit_box;

/// Agreement required between the numerical minimum and the closed forms.
const CLOSED_FORM_TOL: f64 = 1e-6;
/// Starting points per axis of the multi-start grid (4 × 4 = 16 starts).
const STARTS_PER_AXIS: usize = 4;

/// `cos² α` of the HF minimum.
pub fn closed_form_cos2_alpha(chi: f64) -> f64 {
    if chi <= 1.0 {
        1.0
    } else if chi <= 3.0 {
        0.5 * (1.0 + 1.0 / chi)
    } else {
        (chi + 3.0) / (3.0 * chi)
    }
}

/// `cos² β` of the HF minimum; β is irrelevant while α = 0 and reported as 0.
pub fn closed_form_cos2_beta(chi: f64) -> f64 {
    if chi <= 3.0 {
        1.0
    } else {
        0.5 * (3.0 / (2.0 * chi - 3.0) + 1.0)
    }
}

/// The orbital rotation `U(α, β)`; row 0 is the occupied HF orbital.
pub fn three_level_rotation(alpha: f64, beta: f64) -> DMatrix<f64> {
    rotation_from_trig(cos(alpha), sin(alpha), cos(beta), sin(beta))
}

fn rotation_from_trig(ca: f64, sa: f64, cb: f64, sb: f64) -> DMatrix<f64> {
    #[rustfmt::skip]
    let u = DMatrix::from_row_slice(3, 3, &[
        ca,       cb * sa,                   sb * sa,
        -cb * sa, 1.0 + cb * cb * (ca - 1.0), sb * cb * (ca - 1.0),
        -sb * sa, sb * cb * (ca - 1.0),       1.0 + sb * sb * (ca - 1.0),
    ]);
    u
}

/// HF energy per `Nε` in `u = cos² α`, `w = cos² β`, with occupations
/// `a = u`, `b = (1 − u) w`, `c = (1 − u)(1 − w)` of levels 0, 1, 2:
/// `c − a − χ(ab + ac + bc)`.
struct Functional {
    chi: f64,
}

impl Functional {
    fn value(&self, [u, w]: [f64; 2]) -> f64 {
        let (a, b, c) = (u, (1.0 - u) * w, (1.0 - u) * (1.0 - w));
        c - a - self.chi * (a * b + a * c + b * c)
    }

    fn gradient(&self, [u, w]: [f64; 2]) -> [f64; 2] {
        let chi = self.chi;
        [
            -(1.0 - w) - 1.0 - chi * (1.0 - 2.0 * u - 2.0 * (1.0 - u) * w * (1.0 - w)),
            -(1.0 - u) - chi * (1.0 - u) * (1.0 - u) * (1.0 - 2.0 * w),
        ]
    }

    fn hessian(&self, [u, w]: [f64; 2]) -> [[f64; 2]; 2] {
        let chi = self.chi;
        let uw = 1.0 + 2.0 * chi * (1.0 - u) * (1.0 - 2.0 * w);
        [
            [2.0 * chi * (1.0 - w * (1.0 - w)), uw],
            [uw, 2.0 * chi * (1.0 - u) * (1.0 - u)],
        ]
    }
}

/// Minimizes the three-level HF energy over `(α, β) ∈ [0, π/2]²`.
///
/// Runs a 16-start projected Newton descent in `(cos² α, cos² β)` and
/// cross-checks the winner against the piecewise closed forms.
pub fn hf_three_level(params: &ModelParams) -> Result<HfSolution> {
    if params.model() != ModelKind::ThreeLevel {
        return Err(Error::ModelMismatch {
            expected: ModelKind::ThreeLevel.name(),
            got: params.model().name(),
        });
    }
    require_two_particles(params)?;
    let chi = params.chi();
    let functional = Functional { chi };

    let mut best: Option<([f64; 2], f64)> = None;
    for i in 0..STARTS_PER_AXIS {
        for j in 0..STARTS_PER_AXIS {
            let start = [
                (i as f64 + 0.5) / STARTS_PER_AXIS as f64,
                (j as f64 + 0.5) / STARTS_PER_AXIS as f64,
            ];
            let x = projected_newton_unit_box(
                |x| functional.value(x),
                |x| functional.gradient(x),
                |x| functional.hessian(x),
                start,
            );
            let fx = functional.value(x);
            if best.is_none_or(|(_, fb)| fx < fb) {
                best = Some((x, fx));
            }
        }
    }
    let ([mut u, mut w], _) = best.expect("at least one start");
    if u >= 1.0 - 1e-12 {
        // α = 0 leaves β undetermined
        u = 1.0;
        w = 1.0;
    }

    let expect_u = closed_form_cos2_alpha(chi);
    if (u - expect_u).abs() > CLOSED_FORM_TOL {
        return Err(Error::ClosedFormMismatch {
            quantity: "cos^2 alpha",
            found: u,
            expected: expect_u,
        });
    }
    let expect_w = closed_form_cos2_beta(chi);
    if (w - expect_w).abs() > CLOSED_FORM_TOL {
        return Err(Error::ClosedFormMismatch {
            quantity: "cos^2 beta",
            found: w,
            expected: expect_w,
        });
    }

    let (ca, sa, cb, sb) = (sqrt(u), sqrt(1.0 - u), sqrt(w), sqrt(1.0 - w));
    let rotation = rotation_from_trig(ca, sa, cb, sb);
    let orbital = [ca, cb * sa, sb * sa];
    let density_block = density_from_rotation(&rotation, params.n_particles())?;
    Ok(HfSolution {
        model: ModelKind::ThreeLevel,
        angles: HfAngles::ThreeLevel {
            alpha: acos(ca),
            beta: acos(cb),
        },
        energy: hf_energy(params, &orbital),
        rotation,
        density_block,
    })
}
