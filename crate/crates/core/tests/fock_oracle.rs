mod support;

use lipkin_core::correlation::two_mode_state_from_block;
use lipkin_core::mean_field::hf_solve;
use lipkin_core::quasispin::{build_hamiltonian, ground_state};
use lipkin_core::{ModelKind, ModelParams};
use support::fock::{
    correlator, expectation, fock_ground_energy, hamiltonian_terms, mode, slater_state,
};

const MODELS: [ModelKind; 2] = [ModelKind::TwoLevel, ModelKind::ThreeLevel];

#[test]
fn collective_ground_energy_matches_fock_space() {
    for model in MODELS {
        for n in 2..=4u32 {
            for chi in [0.5, 1.0, 2.0, 4.0] {
                let params = ModelParams::from_chi(model, n, 1.0, chi).unwrap();
                let collective = ground_state(&build_hamiltonian(&params).unwrap())
                    .unwrap()
                    .energy();
                let brute = fock_ground_energy(model.levels(), n as usize, 1.0, params.v());
                assert!(
                    (collective - brute).abs() < 1e-10,
                    "{model:?} N={n} chi={chi}: {collective} vs {brute}"
                );
            }
        }
    }
}

#[test]
fn hf_energy_is_slater_expectation() {
    for model in MODELS {
        let levels = model.levels();
        for n in [2u32, 3, 4] {
            for chi in [0.4, 1.5, 2.5, 3.5, 8.0] {
                let params = ModelParams::from_chi(model, n, 1.3, chi).unwrap();
                let hf = hf_solve(&params).unwrap();
                let terms = hamiltonian_terms(levels, n as usize, 1.3, params.v());
                let psi = slater_state(levels, n as usize, &hf.occupied_orbital());
                let e = expectation(&terms, &psi);
                assert!(
                    (hf.energy - e).abs() < 1e-10,
                    "{model:?} N={n} chi={chi}: {} vs {e}",
                    hf.energy
                );
            }
        }
    }
}

#[test]
fn hf_pair_states_match_fock_correlators() {
    let n = 3usize;
    for model in MODELS {
        let levels = model.levels();
        for chi in [0.7, 2.0, 5.0] {
            let params = ModelParams::from_chi(model, n as u32, 1.0, chi).unwrap();
            let hf = hf_solve(&params).unwrap();
            let psi = slater_state(levels, n, &hf.occupied_orbital());
            for b in 1..levels {
                for a in 0..b {
                    let state = two_mode_state_from_block(&hf.density_block, a, b).unwrap();
                    let rho = state.rho();
                    // Modes (a, p=1) and (b, p=1).
                    let (ma, mb) = (mode(a, 1, n), mode(b, 1, n));
                    let n_a = correlator(&psi, &[(true, ma), (false, ma)]);
                    let n_b = correlator(&psi, &[(true, mb), (false, mb)]);
                    let n_ab =
                        correlator(&psi, &[(true, ma), (false, ma), (true, mb), (false, mb)]);
                    let coh = correlator(&psi, &[(true, mb), (false, ma)]);
                    let pairing = correlator(&psi, &[(false, mb), (false, ma)]);
                    assert!((rho[(1, 1)].re - (n_a - n_ab)).abs() < 1e-12);
                    assert!((rho[(2, 2)].re - (n_b - n_ab)).abs() < 1e-12);
                    assert!((rho[(3, 3)].re - n_ab).abs() < 1e-12);
                    assert!(
                        (rho[(1, 2)].re - coh).abs() < 1e-12,
                        "{model:?} chi={chi} ({a},{b})"
                    );
                    assert!(rho[(0, 3)].norm_sqr() < 1e-24 && pairing.abs() < 1e-12);
                }
            }
        }
    }
}
