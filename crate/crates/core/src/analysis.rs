//! Finite-difference analysis of sweep series and jump detection.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::record::SweepRecord;

/// Half-width of the neighbourhood whose median sets the jump baseline.
const WINDOW: usize = 10;
/// A jump must exceed this multiple of the local median.
const FACTOR: f64 = 5.0;
/// Jumps below this fraction of the largest series value are rounding noise.
const FLOOR: f64 = 1e-8;

/// Minimum number of sweep points for [`detect_transitions`].
pub const MIN_DETECTION_POINTS: usize = 20;

/// A located discontinuity of the second-derivative series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Transition {
    /// Midpoint in χ of the two grid points straddling the jump.
    pub chi: f64,
    /// `|Δ|` of the second derivative across the jump.
    pub jump: f64,
}

/// Three-point second derivative `d²y/dx²` at the interior points of a
/// possibly nonuniform, strictly monotone grid. Endpoints are dropped.
pub fn second_derivative_series(x: &[f64], y: &[f64]) -> Result<Vec<f64>> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            x: x.len(),
            y: y.len(),
        });
    }
    if x.len() < 5 {
        return Err(Error::TooFewPoints {
            min: 5,
            got: x.len(),
        });
    }
    let increasing = x[1] > x[0];
    if let Some(i) = x.windows(2).position(|w| {
        if increasing {
            w[1] <= w[0]
        } else {
            w[1] >= w[0]
        }
    }) {
        return Err(Error::NonMonotone(i + 1));
    }
    Ok((1..x.len() - 1)
        .map(|i| {
            let h1 = x[i] - x[i - 1];
            let h2 = x[i + 1] - x[i];
            2.0 * (h1 * y[i + 1] - (h1 + h2) * y[i] + h2 * y[i - 1]) / (h1 * h2 * (h1 + h2))
        })
        .collect())
}

fn median(values: &mut [f64]) -> f64 {
    values.sort_by(f64::total_cmp);
    let n = values.len();
    if n % 2 == 1 {
        values[n / 2]
    } else {
        0.5 * (values[n / 2 - 1] + values[n / 2])
    }
}

/// Finds isolated jumps in `series`, sampled at `chi`.
///
/// A neighbour difference is flagged when it exceeds five times the median
/// of the differences within ten places on either side, and is above an
/// absolute floor. Consecutive flags form one jump, reported at its largest
/// difference. A global median would flag the whole steep side of a
/// transition, so the baseline is local.
pub fn detect_jumps(chi: &[f64], series: &[f64]) -> Result<Vec<Transition>> {
    if chi.len() != series.len() {
        return Err(Error::LengthMismatch {
            x: chi.len(),
            y: series.len(),
        });
    }
    if series.len() < 3 {
        return Ok(Vec::new());
    }
    let diffs: Vec<f64> = series.windows(2).map(|w| (w[1] - w[0]).abs()).collect();
    let floor = FLOOR * series.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let flagged: Vec<usize> = (0..diffs.len())
        .filter(|&i| {
            let lo = i.saturating_sub(WINDOW);
            let hi = (i + WINDOW + 1).min(diffs.len());
            let mut neighbours: Vec<f64> = (lo..hi).filter(|&j| j != i).map(|j| diffs[j]).collect();
            diffs[i] > floor
                && (neighbours.is_empty() || diffs[i] > FACTOR * median(&mut neighbours))
        })
        .collect();

    let mut out = Vec::new();
    let mut run_start = 0;
    for k in 0..flagged.len() {
        let ends = k + 1 == flagged.len() || flagged[k + 1] > flagged[k] + 1;
        if ends {
            let best = flagged[run_start..=k]
                .iter()
                .copied()
                .max_by(|&a, &b| diffs[a].total_cmp(&diffs[b]))
                .unwrap_or(flagged[k]);
            out.push(Transition {
                chi: 0.5 * (chi[best] + chi[best + 1]),
                jump: diffs[best],
            });
            run_start = k + 1;
        }
    }
    Ok(out)
}

/// Second derivative of `eps_corr` with respect to `S_ov` over a single-N
/// sweep, paired with the χ of each interior point.
pub fn correlation_energy_curvature(records: &[SweepRecord]) -> Result<(Vec<f64>, Vec<f64>)> {
    let x: Vec<f64> = records.iter().map(|r| r.s_ov).collect();
    let y: Vec<f64> = records.iter().map(|r| r.eps_corr).collect();
    let series = second_derivative_series(&x, &y)?;
    let chi = records[1..records.len() - 1]
        .iter()
        .map(|r| r.chi)
        .collect();
    Ok((chi, series))
}

/// Jumps in `d²eps_corr/dS_ov²` along a single-N sweep ordered by χ.
pub fn detect_transitions(records: &[SweepRecord]) -> Result<Vec<Transition>> {
    if records.len() < MIN_DETECTION_POINTS {
        return Err(Error::TooFewPoints {
            min: MIN_DETECTION_POINTS,
            got: records.len(),
        });
    }
    let (chi, series) = correlation_energy_curvature(records)?;
    detect_jumps(&chi, &series)
}
