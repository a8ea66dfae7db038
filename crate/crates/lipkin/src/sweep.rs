use std::path::PathBuf;

use lipkin_core::record::{evaluate_point, SweepRecord};
use lipkin_core::ModelKind;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::figure::FigureId;
use crate::table::write_csv;

/// Grid points used when nothing else is asked for.
pub const DEFAULT_STEPS: usize = 400;

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub model: ModelKind,
    pub particles: Vec<u32>,
    pub chi_min: f64,
    pub chi_max: f64,
    pub steps: usize,
    /// Geometric instead of evenly spaced χ points.
    pub log_grid: bool,
    pub epsilon: f64,
    pub out: Option<PathBuf>,
    pub figure: Option<FigureId>,
}

impl SweepConfig {
    pub fn new(
        model: ModelKind,
        particles: Vec<u32>,
        chi_min: f64,
        chi_max: f64,
        steps: usize,
    ) -> Self {
        Self {
            model,
            particles,
            chi_min,
            chi_max,
            steps,
            log_grid: false,
            epsilon: 1.0,
            out: None,
            figure: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Config(msg));
        if self.particles.is_empty() {
            return fail("no particle numbers given".into());
        }
        if let Some(n) = self.particles.iter().find(|&&n| n < 2) {
            return fail(format!("N = {n} leaves chi undefined, need N >= 2"));
        }
        if !(self.chi_min.is_finite() && self.chi_max.is_finite() && self.chi_min < self.chi_max) {
            return fail(format!(
                "need chi_min < chi_max, got {} and {}",
                self.chi_min, self.chi_max
            ));
        }
        if self.chi_min < 0.0 || (self.log_grid && self.chi_min <= 0.0) {
            return fail(format!(
                "chi_min = {} is out of range for this grid",
                self.chi_min
            ));
        }
        if self.steps < 2 {
            return fail(format!("need at least 2 steps, got {}", self.steps));
        }
        if !(self.epsilon.is_finite() && self.epsilon > 0.0) {
            return fail(format!("epsilon must be positive, got {}", self.epsilon));
        }
        Ok(())
    }

    /// The χ values, ascending, endpoints included.
    pub fn chi_grid(&self) -> Vec<f64> {
        let last = (self.steps - 1) as f64;
        let mut grid: Vec<f64> = (0..self.steps)
            .map(|i| {
                let t = i as f64 / last;
                if self.log_grid {
                    (self.chi_min.ln() + t * (self.chi_max / self.chi_min).ln()).exp()
                } else {
                    self.chi_min + t * (self.chi_max - self.chi_min)
                }
            })
            .collect();
        grid[0] = self.chi_min;
        grid[self.steps - 1] = self.chi_max;
        grid
    }
}

/// Evaluates every (N, χ) point, N outer and χ ascending, in parallel.
///
/// The first failing point in grid order aborts the sweep. When
/// `config.out` is set the records are also written there as CSV.
pub fn run_sweep(config: &SweepConfig) -> Result<Vec<SweepRecord>> {
    config.validate()?;
    let grid = config.chi_grid();
    let points: Vec<(u32, f64)> = config
        .particles
        .iter()
        .flat_map(|&n| grid.iter().map(move |&chi| (n, chi)))
        .collect();
    let records = points
        .par_iter()
        .map(|&(n, chi)| {
            evaluate_point(config.model, n, chi, config.epsilon).map_err(|source| Error::Point {
                model: config.model,
                n,
                chi,
                source,
            })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    if let Some(path) = &config.out {
        write_csv(path, config.model, &records)?;
    }
    Ok(records)
}

/// Splits a sweep into its single-N runs, keeping order.
pub fn by_particle_number(records: &[SweepRecord]) -> Vec<(u32, Vec<SweepRecord>)> {
    let mut out: Vec<(u32, Vec<SweepRecord>)> = Vec::new();
    for r in records {
        match out.last_mut() {
            Some((n, run)) if *n == r.n => run.push(*r),
            _ => out.push((r.n, vec![*r])),
        }
    }
    out
}
