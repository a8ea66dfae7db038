//! Self-test against analytic results, behind `lipkin check`.

use lipkin_core::correlation::{
    hf_discord_closed_form_three_level, hf_discord_closed_form_two_level, purity, quantum_discord,
    two_mode_state_from_block, LevelPair, MeasurementSet,
};
use lipkin_core::mean_field::{
    closed_form_cos2_alpha, closed_form_cos2_beta, closed_form_cos_phi, hf_solve, HfAngles,
};
use lipkin_core::quasispin::{build_hamiltonian, ground_state};
use lipkin_core::record::evaluate_point;
use lipkin_core::{ModelKind, ModelParams};

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    /// Worst deviation seen, or what went wrong.
    pub detail: String,
}

fn chi_points(lo: f64, hi: f64, count: usize) -> impl Iterator<Item = f64> {
    (0..count).map(move |i| lo + (hi - lo) * i as f64 / (count - 1) as f64)
}

/// Runs `f` over its inputs, tracking the largest deviation against `tol`.
fn worst<I, F>(name: &'static str, tol: f64, inputs: I, f: F) -> CheckOutcome
where
    I: IntoIterator<Item = f64>,
    F: Fn(f64) -> lipkin_core::Result<f64>,
{
    let mut max = 0.0f64;
    for x in inputs {
        match f(x) {
            Ok(d) if d.is_finite() => max = max.max(d),
            Ok(d) => {
                return CheckOutcome {
                    name,
                    passed: false,
                    detail: format!("chi = {x}: got {d}"),
                }
            }
            Err(e) => {
                return CheckOutcome {
                    name,
                    passed: false,
                    detail: format!("chi = {x}: {e}"),
                }
            }
        }
    }
    CheckOutcome {
        name,
        passed: max <= tol,
        detail: format!("max deviation {max:.3e} (tol {tol:.0e})"),
    }
}

fn exact(model: ModelKind, n: u32, chi: f64) -> lipkin_core::Result<f64> {
    let params = ModelParams::from_chi(model, n, 1.0, chi)?;
    Ok(ground_state(&build_hamiltonian(&params)?)?.energy())
}

fn hf_pair_discord(model: ModelKind, chi: f64, pair: LevelPair) -> lipkin_core::Result<f64> {
    let hf = hf_solve(&ModelParams::from_chi(model, 6, 1.0, chi)?)?;
    let (a, b) = pair.modes();
    Ok(quantum_discord(
        &two_mode_state_from_block(&hf.density_block, a, b)?,
        MeasurementSet::SSRRestricted,
    ))
}

pub fn run_checks() -> Vec<CheckOutcome> {
    let two = ModelKind::TwoLevel;
    let three = ModelKind::ThreeLevel;
    let branches = [(0.05, 1.0), (1.0 + 1e-9, 3.0), (3.0 + 1e-9, 20.0)];
    let all_chi = || branches.iter().flat_map(|&(lo, hi)| chi_points(lo, hi, 40));

    vec![
        worst(
            "two-level N=2 exact energy is -sqrt(eps^2 + V^2)",
            1e-10,
            chi_points(0.0, 6.0, 200),
            |chi| Ok((exact(two, 2, chi)? + (1.0 + chi * chi).sqrt()).abs()),
        ),
        worst(
            "two-level HF energy closed form",
            1e-10,
            chi_points(0.0, 6.0, 200),
            |chi| {
                let n = 7.0;
                let hf = hf_solve(&ModelParams::from_chi(two, 7, 1.0, chi)?)?;
                let want = if chi <= 1.0 {
                    -n / 2.0
                } else {
                    -n / 4.0 * (chi + 1.0 / chi)
                };
                Ok((hf.energy - want).abs())
            },
        ),
        worst("HF angles match closed forms", 1e-6, all_chi(), |chi| {
            let phi = match hf_solve(&ModelParams::from_chi(two, 5, 1.0, chi)?)?.angles {
                HfAngles::TwoLevel { phi } => phi,
                _ => unreachable!(),
            };
            let (alpha, beta) = match hf_solve(&ModelParams::from_chi(three, 5, 1.0, chi)?)?.angles
            {
                HfAngles::ThreeLevel { alpha, beta } => (alpha, beta),
                _ => unreachable!(),
            };
            Ok((phi.cos() - closed_form_cos_phi(chi))
                .abs()
                .max((alpha.cos().powi(2) - closed_form_cos2_alpha(chi)).abs())
                .max((beta.cos().powi(2) - closed_form_cos2_beta(chi)).abs()))
        }),
        worst("HF discords match closed forms", 1e-6, all_chi(), |chi| {
            let mut d = (hf_pair_discord(two, chi, LevelPair::P01)?
                - hf_discord_closed_form_two_level(chi))
            .abs();
            for pair in LevelPair::ALL {
                d = d.max(
                    (hf_pair_discord(three, chi, pair)?
                        - hf_discord_closed_form_three_level(chi, pair))
                    .abs(),
                );
            }
            Ok(d)
        }),
        worst("two-level HF pair state is pure", 1e-10, all_chi(), |chi| {
            let hf = hf_solve(&ModelParams::from_chi(two, 4, 1.0, chi)?)?;
            Ok((purity(&two_mode_state_from_block(&hf.density_block, 0, 1)?) - 1.0).abs())
        }),
        worst(
            "S_ov = 2 S(gamma) for two-level ground states",
            1e-10,
            chi_points(0.05, 6.0, 60),
            |chi| {
                let r = evaluate_point(two, 12, chi, 1.0)?;
                Ok((r.s_ov - 2.0 * r.s_gamma).abs())
            },
        ),
        worst("E_exact <= E_HF", 0.0, chi_points(0.05, 8.0, 60), |chi| {
            let mut excess = 0.0f64;
            for model in [two, three] {
                let r = evaluate_point(model, 6, chi, 1.0)?;
                excess = excess.max(r.e_exact - r.e_hf - 1e-10 * r.e_exact.abs());
            }
            Ok(excess.max(0.0))
        }),
        worst(
            "N=2, chi=1 relative correlation energy",
            1e-12,
            [1.0],
            |chi| {
                let r = evaluate_point(two, 2, chi, 1.0)?;
                Ok((r.eps_corr - (1.0 - 1.0 / 2f64.sqrt())).abs())
            },
        ),
    ]
}
