//! SVG reproductions of the eight figures.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use lipkin_core::analysis::correlation_energy_curvature;
use lipkin_core::correlation::{
    hf_discord_closed_form_three_level, hf_discord_closed_form_two_level, LevelPair,
};
use lipkin_core::record::{Discords, SweepRecord};
use lipkin_core::ModelKind;
use plotters::prelude::*;

use crate::error::{Error, Result};
use crate::sweep::{by_particle_number, SweepConfig, DEFAULT_STEPS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FigureId {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
    F8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Quantity {
    CorrelationVsEntropy,
    Curvature,
    EntropyPerParticle,
    Discord,
}

impl FigureId {
    pub const ALL: [FigureId; 8] = [
        FigureId::F1,
        FigureId::F2,
        FigureId::F3,
        FigureId::F4,
        FigureId::F5,
        FigureId::F6,
        FigureId::F7,
        FigureId::F8,
    ];

    fn index(self) -> usize {
        self as usize
    }

    pub fn model(self) -> ModelKind {
        if self.index() < 4 {
            ModelKind::TwoLevel
        } else {
            ModelKind::ThreeLevel
        }
    }

    fn quantity(self) -> Quantity {
        match self.index() % 4 {
            0 => Quantity::CorrelationVsEntropy,
            1 => Quantity::Curvature,
            2 => Quantity::EntropyPerParticle,
            _ => Quantity::Discord,
        }
    }

    /// The sweep `lipkin figure` runs for this figure.
    pub fn default_sweep(self) -> SweepConfig {
        let (particles, chi_max) = match self.model() {
            ModelKind::TwoLevel => (vec![5, 10, 20, 50], 3.0),
            ModelKind::ThreeLevel => (vec![5, 10, 20], 5.0),
        };
        SweepConfig {
            figure: Some(self),
            ..SweepConfig::new(self.model(), particles, 0.2, chi_max, DEFAULT_STEPS)
        }
    }
}

impl fmt::Display for FigureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f{}", self.index() + 1)
    }
}

impl FromStr for FigureId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        FigureId::ALL
            .into_iter()
            .find(|id| id.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown figure `{s}`, expected one of f1..f8"))
    }
}

/// One plotted curve.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    pub label: String,
    pub points: Vec<(f64, f64)>,
    /// Analytic reference drawn on top of computed data.
    pub reference: bool,
}

impl Curve {
    fn data(label: String, points: Vec<(f64, f64)>) -> Self {
        Self {
            label,
            points,
            reference: false,
        }
    }

    fn reference(label: String, points: Vec<(f64, f64)>) -> Self {
        Self {
            label,
            points,
            reference: true,
        }
    }
}

/// Axis labels and curves of a figure, before drawing.
#[derive(Debug, Clone, PartialEq)]
pub struct FigureData {
    pub title: String,
    pub x_label: &'static str,
    pub y_label: &'static str,
    pub curves: Vec<Curve>,
}

fn figure_error(id: FigureId, reason: impl Into<String>) -> Error {
    Error::Figure {
        figure: id.to_string(),
        reason: reason.into(),
    }
}

fn discord_parts(d: Discords) -> [f64; 3] {
    match d {
        Discords::TwoLevel { pm } => [pm, 0.0, 0.0],
        Discords::ThreeLevel { d01, d02, d12 } => [d01, d02, d12],
    }
}

/// Extracts the curves of figure `id` from sweep records.
pub fn figure_data(id: FigureId, records: &[SweepRecord]) -> Result<FigureData> {
    if records.is_empty() {
        return Err(figure_error(id, "no records"));
    }
    if let Some(r) = records.iter().find(|r| r.model != id.model()) {
        return Err(figure_error(
            id,
            format!(
                "needs {} records, got {}",
                id.model().name(),
                r.model.name()
            ),
        ));
    }
    let runs = by_particle_number(records);
    let label = |n: u32| format!("N = {n}");
    let mut curves = Vec::new();
    let (title, x_label, y_label) = match id.quantity() {
        Quantity::CorrelationVsEntropy => {
            for (n, run) in &runs {
                curves.push(Curve::data(
                    label(*n),
                    run.iter().map(|r| (r.s_ov, r.eps_corr)).collect(),
                ));
            }
            (
                "Relative correlation energy vs overall entropy",
                "S_ov",
                "eps_corr",
            )
        }
        Quantity::Curvature => {
            for (n, run) in &runs {
                let (_, series) = correlation_energy_curvature(run)
                    .map_err(|e| figure_error(id, format!("N = {n}: {e}")))?;
                let x = run[1..run.len() - 1].iter().map(|r| r.s_ov);
                curves.push(Curve::data(label(*n), x.zip(series).collect()));
            }
            (
                "Second derivative of the relative correlation energy",
                "S_ov",
                "d2 eps_corr / d S_ov2",
            )
        }
        Quantity::EntropyPerParticle => {
            for (n, run) in &runs {
                curves.push(Curve::data(
                    label(*n),
                    run.iter().map(|r| (r.chi, r.s_ov_per_particle)).collect(),
                ));
            }
            ("Overall entropy per particle", "chi", "S_ov / N")
        }
        Quantity::Discord => {
            // HF discords do not depend on N; one run carries all the information.
            let (n, run) = runs.last().expect("records are not empty");
            let chis: Vec<f64> = run.iter().map(|r| r.chi).collect();
            let along =
                |f: &dyn Fn(&SweepRecord) -> f64| run.iter().map(|r| (r.chi, f(r))).collect();
            let closed = |f: &dyn Fn(f64) -> f64| chis.iter().map(|&c| (c, f(c))).collect();
            match id.model() {
                ModelKind::TwoLevel => {
                    curves.push(Curve::data(
                        format!("HF discord, N = {n}"),
                        along(&|r| r.discords.sum()),
                    ));
                    curves.push(Curve::reference(
                        "h(chi)".into(),
                        closed(&hf_discord_closed_form_two_level),
                    ));
                }
                ModelKind::ThreeLevel => {
                    for (k, pair) in LevelPair::ALL.into_iter().enumerate() {
                        let (a, b) = pair.modes();
                        curves.push(Curve::data(
                            format!("discord {a}{b}, N = {n}"),
                            along(&|r| discord_parts(r.discords)[k]),
                        ));
                    }
                    curves.push(Curve::data(
                        format!("sum, N = {n}"),
                        along(&|r| r.discords.sum()),
                    ));
                    curves.push(Curve::reference(
                        "closed-form sum".into(),
                        closed(&|c| {
                            LevelPair::ALL
                                .iter()
                                .map(|&p| hf_discord_closed_form_three_level(c, p))
                                .sum()
                        }),
                    ));
                }
            }
            (
                "Quantum discord of same-p modes in the HF state",
                "chi",
                "discord",
            )
        }
    };
    Ok(FigureData {
        title: format!("{id}: {} ({})", title, id.model().name()),
        x_label,
        y_label,
        curves,
    })
}

fn bounds(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = values
        .filter(|v| v.is_finite())
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
            (lo.min(v), hi.max(v))
        });
    if !lo.is_finite() {
        return (0.0, 1.0);
    }
    let pad = if hi > lo {
        0.04 * (hi - lo)
    } else {
        0.5 * lo.abs().max(1.0)
    };
    (lo - pad, hi + pad)
}

/// Draws `data` as a standalone SVG file.
pub fn draw_svg(data: &FigureData, path: &Path) -> Result<()> {
    let plot_err = |e: &dyn fmt::Display| Error::Plot {
        path: path.into(),
        message: e.to_string(),
    };
    let all = || data.curves.iter().flat_map(|c| c.points.iter());
    let (x0, x1) = bounds(all().map(|p| p.0));
    let (y0, y1) = bounds(all().map(|p| p.1));

    let root = SVGBackend::new(path, (900, 620)).into_drawing_area();
    root.fill(&WHITE).map_err(|e| plot_err(&e))?;
    let mut chart = ChartBuilder::on(&root)
        .caption(&data.title, ("sans-serif", 20))
        .margin(16)
        .x_label_area_size(44)
        .y_label_area_size(70)
        .build_cartesian_2d(x0..x1, y0..y1)
        .map_err(|e| plot_err(&e))?;
    chart
        .configure_mesh()
        .x_desc(data.x_label)
        .y_desc(data.y_label)
        .draw()
        .map_err(|e| plot_err(&e))?;

    for (i, curve) in data.curves.iter().enumerate() {
        let style = if curve.reference {
            BLACK.stroke_width(1)
        } else {
            Palette99::pick(i).stroke_width(2)
        };
        let legend_style = style;
        chart
            .draw_series(LineSeries::new(curve.points.iter().copied(), style))
            .map_err(|e| plot_err(&e))?
            .label(curve.label.as_str())
            .legend(move |(x, y)| PathElement::new(vec![(x, y), (x + 20, y)], legend_style));
    }
    chart
        .configure_series_labels()
        .background_style(WHITE.mix(0.85))
        .border_style(BLACK)
        .position(SeriesLabelPosition::UpperLeft)
        .draw()
        .map_err(|e| plot_err(&e))?;
    root.present().map_err(|e| plot_err(&e))?;
    Ok(())
}

/// Builds figure `id` from `records` and writes it to `path`.
pub fn emit_figure(id: FigureId, records: &[SweepRecord], path: &Path) -> Result<()> {
    draw_svg(&figure_data(id, records)?, path)
}
