use core::f64::consts::{FRAC_PI_2, PI};

use libm::{cos, sin};
use nalgebra::{Complex, Matrix2};

use super::entropy::entropy_s;
use super::two_mode::{entropy_2x2, idx, TwoModeState};
use crate::optimize::nelder_mead_2d;

const GRID: usize = 64;

/// Which projective measurements on mode B enter the optimization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MeasurementSet {
    /// Every rank-1 projective measurement on B.
    Unrestricted,
    /// Only the occupation-number measurement, the one compatible with parity superselection.
    SSRRestricted,
}

/// Same-p level pair of the three-level model, lower level first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LevelPair {
    P01,
    P02,
    P12,
}

impl LevelPair {
    pub const ALL: [LevelPair; 3] = [LevelPair::P01, LevelPair::P02, LevelPair::P12];

    /// Level indices (A, B).
    pub fn modes(self) -> (usize, usize) {
        match self {
            LevelPair::P01 => (0, 1),
            LevelPair::P02 => (0, 2),
            LevelPair::P12 => (1, 2),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscordReport {
    pub mutual_information: f64,
    /// Classical correlation J, maximized over the measurement set.
    pub classical_correlation: f64,
    pub discord: f64,
    /// Optimal measurement direction on B, `cosθ|0⟩ + e^{iμ} sinθ|1⟩`.
    pub theta: f64,
    pub mu: f64,
}

/// Conditional entropy `Σ_k p_k S(ρ_k)` after measuring B along `(θ, μ)`.
///
/// Since the measured B is pure, `S(ρ_k)` is the entropy of the
/// conditional state of A.
fn conditional_entropy(rho: &TwoModeState, theta: f64, mu: f64) -> f64 {
    let (c, s) = (cos(theta), sin(theta));
    let phase = Complex::new(cos(mu), sin(mu));
    let v = [Complex::new(c, 0.0), phase * s];
    let w = [-phase.conj() * s, Complex::new(c, 0.0)];
    let r = rho.rho();
    [v, w]
        .iter()
        .map(|u| {
            let sigma = Matrix2::from_fn(|a, ap| {
                let mut z = Complex::new(0.0, 0.0);
                for b in 0..2 {
                    for bp in 0..2 {
                        z += u[b].conj() * r[(idx(a, b), idx(ap, bp))] * u[bp];
                    }
                }
                z
            });
            let p = sigma.trace().re;
            if p <= 1e-15 {
                0.0
            } else {
                p * entropy_2x2(&(sigma / Complex::new(p, 0.0)))
            }
        })
        .sum()
}

/// Discord of mode A with respect to measurements on mode B, with the optimizer's details.
pub fn discord_report(state: &TwoModeState, set: MeasurementSet) -> DiscordReport {
    let s_a = entropy_2x2(&state.reduced_a());
    let s_b = entropy_2x2(&state.reduced_b());
    let s_ab = state.entropy();
    let mutual_information = (s_a + s_b - s_ab).max(0.0);

    let (theta, mu, min_ce) = match set {
        MeasurementSet::SSRRestricted => (0.0, 0.0, conditional_entropy(state, 0.0, 0.0)),
        MeasurementSet::Unrestricted => {
            let mut best = (0.0, 0.0, f64::INFINITY);
            for i in 0..GRID {
                let theta = FRAC_PI_2 * i as f64 / (GRID - 1) as f64;
                for j in 0..GRID {
                    let mu = 2.0 * PI * j as f64 / GRID as f64;
                    let ce = conditional_entropy(state, theta, mu);
                    // Strict comparison keeps the smallest θ, then μ, on ties.
                    if ce < best.2 {
                        best = (theta, mu, ce);
                    }
                }
            }
            let step = [FRAC_PI_2 / (GRID - 1) as f64, 2.0 * PI / GRID as f64];
            let (p, ce) = nelder_mead_2d(
                |p| conditional_entropy(state, p[0], p[1]),
                [best.0, best.1],
                step,
                (0.0, FRAC_PI_2),
                1e-9,
                1e-15,
                4000,
            );
            if ce < best.2 {
                (p[0], p[1].rem_euclid(2.0 * PI), ce)
            } else {
                best
            }
        }
    };

    let classical_correlation = s_a - min_ce;
    let discord = (s_b - s_ab + min_ce).clamp(0.0, mutual_information);
    DiscordReport {
        mutual_information,
        classical_correlation,
        discord,
        theta,
        mu,
    }
}

/// `δ(A, B) = I(A, B) − J(A, B)`, clamped into `[0, I]`.
pub fn quantum_discord(state: &TwoModeState, set: MeasurementSet) -> f64 {
    discord_report(state, set).discord
}

/// Discord between the two same-p modes of the two-level Hartree–Fock state.
pub fn hf_discord_closed_form_two_level(chi: f64) -> f64 {
    if chi <= 1.0 {
        return 0.0;
    }
    let x = 1.0 / chi;
    entropy_s(0.5 * (1.0 - x)) + entropy_s(0.5 * (1.0 + x))
}

/// Discord between a same-p level pair of the three-level Hartree–Fock state.
pub fn hf_discord_closed_form_three_level(chi: f64, pair: LevelPair) -> f64 {
    let s = entropy_s;
    let x = 1.0 / chi;
    let third = 1.0 / 3.0;
    match pair {
        LevelPair::P01 if chi <= 1.0 => 0.0,
        LevelPair::P01 if chi <= 3.0 => s(0.5 * (1.0 + x)) + s(0.5 * (1.0 - x)),
        LevelPair::P01 => -s(2.0 * third + x) + s(third + x) + s(third),
        _ if chi <= 3.0 => 0.0,
        LevelPair::P02 => s(third + x) + s(third - x) - s(2.0 * third),
        LevelPair::P12 => -s(2.0 * third - x) + s(third - x) + s(third),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correlation::two_mode::{mutual_information, two_mode_state_from_correlators};
    use core::f64::consts::LN_2;

    fn real(x: f64) -> Complex<f64> {
        Complex::new(x, 0.0)
    }

    fn hf_pair(chi: f64, a: usize, b: usize) -> TwoModeState {
        // Occupied orbital (√a, √b, √c) from the closed-form populations.
        let x = 1.0 / chi;
        let pops = if chi <= 1.0 {
            [1.0, 0.0, 0.0]
        } else if chi <= 3.0 {
            [0.5 * (1.0 + x), 0.5 * (1.0 - x), 0.0]
        } else {
            [1.0 / 3.0 + x, 1.0 / 3.0, 1.0 / 3.0 - x]
        };
        let amp = pops.map(f64::sqrt);
        two_mode_state_from_correlators(pops[a], pops[b], 0.0, real(amp[a] * amp[b])).unwrap()
    }

    #[test]
    fn product_state_has_no_discord() {
        let s = two_mode_state_from_correlators(0.3, 0.6, 0.18, real(0.0)).unwrap();
        for set in [MeasurementSet::Unrestricted, MeasurementSet::SSRRestricted] {
            assert!(quantum_discord(&s, set) < 1e-12);
        }
    }

    #[test]
    fn two_level_closed_form_values() {
        assert_eq!(hf_discord_closed_form_two_level(0.7), 0.0);
        assert_eq!(hf_discord_closed_form_two_level(1.0), 0.0);
        let h2 = -0.25 * 0.25f64.ln() - 0.75 * 0.75f64.ln();
        assert!((hf_discord_closed_form_two_level(2.0) - h2).abs() < 1e-15);
        assert!((hf_discord_closed_form_two_level(1e9) - LN_2).abs() < 1e-12);
    }

    #[test]
    fn three_level_closed_form_values() {
        let s = |x: f64| -x * x.ln();
        let f = hf_discord_closed_form_three_level;
        assert_eq!(f(2.0, LevelPair::P02), 0.0);
        assert_eq!(f(2.0, LevelPair::P12), 0.0);
        assert_eq!(
            f(2.0, LevelPair::P01),
            hf_discord_closed_form_two_level(2.0)
        );
        let want = -s(11.0 / 12.0) + s(7.0 / 12.0) + s(1.0 / 3.0);
        assert!((f(4.0, LevelPair::P01) - want).abs() < 1e-15);
        let want = -s(2.0 / 3.0 - 0.25) + s(1.0 / 3.0 - 0.25) + s(1.0 / 3.0);
        assert!((f(4.0, LevelPair::P12) - want).abs() < 1e-15);
    }

    #[test]
    fn pure_hf_pair_discord_is_entanglement() {
        let s = hf_pair(2.0, 0, 1);
        let h2 = hf_discord_closed_form_two_level(2.0);
        assert!((mutual_information(&s) - 2.0 * h2).abs() < 1e-12);
        for set in [MeasurementSet::Unrestricted, MeasurementSet::SSRRestricted] {
            assert!((quantum_discord(&s, set) - h2).abs() < 1e-9, "{set:?}");
        }
    }

    #[test]
    fn ssr_discord_reproduces_mixed_branches() {
        for chi in [3.2, 4.0, 7.5, 40.0] {
            for pair in LevelPair::ALL {
                let (a, b) = pair.modes();
                let d = quantum_discord(&hf_pair(chi, a, b), MeasurementSet::SSRRestricted);
                let want = hf_discord_closed_form_three_level(chi, pair);
                assert!(
                    (d - want).abs() < 1e-12,
                    "chi {chi} {pair:?}: {d} vs {want}"
                );
            }
        }
    }

    #[test]
    fn unrestricted_never_exceeds_ssr() {
        for chi in [0.5, 2.0, 3.5, 4.0, 10.0] {
            for pair in LevelPair::ALL {
                let (a, b) = pair.modes();
                let s = hf_pair(chi, a, b);
                let r = discord_report(&s, MeasurementSet::Unrestricted);
                let ssr = quantum_discord(&s, MeasurementSet::SSRRestricted);
                assert!(r.discord <= ssr + 1e-10);
                assert!(r.discord >= 0.0 && r.discord <= r.mutual_information);
                assert!(r.classical_correlation >= -1e-12);
            }
        }
        // Mixed states beyond χ = 3 gain from measurements outside the occupation basis.
        let s = hf_pair(4.0, 0, 1);
        let unres = quantum_discord(&s, MeasurementSet::Unrestricted);
        assert!((unres - 0.55182).abs() < 1e-4, "{unres}");
    }

    #[test]
    fn invariant_under_coherence_sign_and_phase() {
        let s = hf_pair(5.0, 0, 2);
        let rho = *s.rho();
        for phase in [Complex::new(-1.0, 0.0), Complex::new(0.6, 0.8)] {
            let mut flipped = rho;
            flipped[(1, 2)] *= phase;
            flipped[(2, 1)] *= phase.conj();
            let t = TwoModeState::from_matrix(flipped).unwrap();
            assert!((mutual_information(&s) - mutual_information(&t)).abs() < 1e-14);
            for set in [MeasurementSet::Unrestricted, MeasurementSet::SSRRestricted] {
                assert!((quantum_discord(&s, set) - quantum_discord(&t, set)).abs() < 1e-9);
            }
        }
    }
}
