//! Everything computed at one point of a χ sweep.

use crate::correlation::{
    entropies, quantum_discord, two_mode_state_from_block, LevelPair, MeasurementSet,
};
use crate::density::exact_one_body_density;
use crate::error::{Error, Result};
use crate::mean_field::{hf_solve, relative_correlation_energy, HfAngles, HfSolution};
use crate::model::{ModelKind, ModelParams};
use crate::quasispin::{build_hamiltonian, ground_state};

/// HF discords between same-p modes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Discords {
    /// Between the lower and upper level.
    TwoLevel {
        pm: f64,
    },
    ThreeLevel {
        d01: f64,
        d02: f64,
        d12: f64,
    },
}

impl Discords {
    pub fn sum(&self) -> f64 {
        match *self {
            Discords::TwoLevel { pm } => pm,
            Discords::ThreeLevel { d01, d02, d12 } => d01 + d02 + d12,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRecord {
    pub model: ModelKind,
    pub n: u32,
    pub chi: f64,
    pub e_exact: f64,
    pub e_hf: f64,
    pub eps_corr: f64,
    pub s_ov: f64,
    pub s_ov_per_particle: f64,
    pub s_gamma: f64,
    pub discords: Discords,
    pub hf_angles: HfAngles,
}

impl SweepRecord {
    fn check_finite(&self) -> Result<()> {
        let mut values = [
            self.chi,
            self.e_exact,
            self.e_hf,
            self.eps_corr,
            self.s_ov,
            self.s_gamma,
            0.0,
            0.0,
            0.0,
        ];
        match self.discords {
            Discords::TwoLevel { pm } => values[6] = pm,
            Discords::ThreeLevel { d01, d02, d12 } => values[6..].copy_from_slice(&[d01, d02, d12]),
        }
        if values.iter().all(|v| v.is_finite()) {
            Ok(())
        } else {
            Err(Error::NonPhysicalState("non-finite value in sweep record"))
        }
    }
}

/// HF discords, measured in the occupation basis of the upper level.
pub fn hf_discords(hf: &HfSolution) -> Result<Discords> {
    let block = &hf.density_block;
    let d = |a, b| -> Result<f64> {
        Ok(quantum_discord(
            &two_mode_state_from_block(block, a, b)?,
            MeasurementSet::SSRRestricted,
        ))
    };
    Ok(match hf.model {
        ModelKind::TwoLevel => Discords::TwoLevel { pm: d(0, 1)? },
        ModelKind::ThreeLevel => {
            let [d01, d02, d12] = LevelPair::ALL.map(|p| p.modes());
            Discords::ThreeLevel {
                d01: d(d01.0, d01.1)?,
                d02: d(d02.0, d02.1)?,
                d12: d(d12.0, d12.1)?,
            }
        }
    })
}

/// Solves the model exactly and in HF at `(N, χ)` and collects every sweep quantity.
pub fn evaluate_point(model: ModelKind, n: u32, chi: f64, epsilon: f64) -> Result<SweepRecord> {
    let params = ModelParams::from_chi(model, n, epsilon, chi)?;
    let gs = ground_state(&build_hamiltonian(&params)?)?;
    let hf = hf_solve(&params)?;
    let eps_corr = relative_correlation_energy(gs.energy(), hf.energy)?;
    let report = entropies(&exact_one_body_density(&gs)?);
    let record = SweepRecord {
        model,
        n,
        chi,
        e_exact: gs.energy(),
        e_hf: hf.energy,
        eps_corr,
        s_ov: report.overall_entropy,
        s_ov_per_particle: report.overall_entropy_per_particle,
        s_gamma: report.one_body_entropy,
        discords: hf_discords(&hf)?,
        hf_angles: hf.angles,
    };
    record.check_finite()?;
    Ok(record)
}
