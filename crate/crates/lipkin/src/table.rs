//! CSV persistence of sweep records.
//!
//! One header row, then one row per record. Floats are written with 17
//! significant digits so a file reads back bit-for-bit.

use std::fs::File;
use std::io::Write;
use std::path::Path;

use lipkin_core::mean_field::HfAngles;
use lipkin_core::record::{Discords, SweepRecord};
use lipkin_core::ModelKind;

use crate::error::{Error, Result};

const COMMON: [&str; 9] = [
    "model",
    "N",
    "chi",
    "E_exact",
    "E_HF",
    "eps_corr",
    "S_ov",
    "S_ov_per_particle",
    "S_gamma",
];
const TWO_LEVEL: [&str; 2] = ["discord_pm", "hf_phi"];
const THREE_LEVEL: [&str; 6] = [
    "discord_01",
    "discord_02",
    "discord_12",
    "discord_sum",
    "hf_alpha",
    "hf_beta",
];

pub fn header(model: ModelKind) -> Vec<&'static str> {
    let tail: &[&str] = match model {
        ModelKind::TwoLevel => &TWO_LEVEL,
        ModelKind::ThreeLevel => &THREE_LEVEL,
    };
    COMMON.iter().chain(tail).copied().collect()
}

fn float(x: f64) -> String {
    format!("{x:.16e}")
}

fn row(r: &SweepRecord) -> Vec<String> {
    let mut out = vec![r.model.to_string(), r.n.to_string()];
    out.extend(
        [
            r.chi,
            r.e_exact,
            r.e_hf,
            r.eps_corr,
            r.s_ov,
            r.s_ov_per_particle,
            r.s_gamma,
        ]
        .map(float),
    );
    match (r.discords, r.hf_angles) {
        (Discords::TwoLevel { pm }, HfAngles::TwoLevel { phi }) => out.extend([pm, phi].map(float)),
        (d @ Discords::ThreeLevel { d01, d02, d12 }, HfAngles::ThreeLevel { alpha, beta }) => {
            out.extend([d01, d02, d12, d.sum(), alpha, beta].map(float))
        }
        _ => unreachable!("record mixes two- and three-level fields"),
    }
    out
}

/// Writes `records`, which must all belong to `model`, to any sink.
pub fn write_records<W: Write>(
    sink: W,
    model: ModelKind,
    records: &[SweepRecord],
) -> csv::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(sink);
    w.write_record(header(model))?;
    for r in records {
        debug_assert_eq!(r.model, model);
        w.write_record(row(r))?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_csv(path: &Path, model: ModelKind, records: &[SweepRecord]) -> Result<()> {
    let file = File::create(path).map_err(|source| Error::Io {
        path: path.into(),
        source,
    })?;
    write_records(file, model, records).map_err(|source| Error::Csv {
        path: path.into(),
        source,
    })
}

/// Reads a file written by [`write_csv`]. The model is taken from the columns present.
pub fn read_csv(path: &Path) -> Result<(ModelKind, Vec<SweepRecord>)> {
    let csv_err = |source| Error::Csv {
        path: path.into(),
        source,
    };
    let mut reader = csv::Reader::from_path(path).map_err(csv_err)?;
    let headers = reader.headers().map_err(csv_err)?.clone();
    let model = if headers.iter().any(|h| h == "discord_pm") {
        ModelKind::TwoLevel
    } else {
        ModelKind::ThreeLevel
    };
    let columns = header(model)
        .into_iter()
        .map(|name| {
            headers
                .iter()
                .position(|h| h == name)
                .map(|i| (name, i))
                .ok_or(Error::MissingColumn {
                    path: path.into(),
                    column: name,
                })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut records = Vec::new();
    for result in reader.records() {
        let line = result.map_err(csv_err)?;
        let number = line.position().map_or(0, |p| p.line());
        let bad = |column| Error::BadValue {
            path: path.into(),
            line: number,
            column,
        };
        let get = |k: usize| -> Result<f64> {
            let (name, i) = columns[k];
            line.get(i)
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| bad(name))
        };
        let expected = model.to_string();
        if line.get(columns[0].1) != Some(expected.as_str()) {
            return Err(bad("model"));
        }
        let n = line
            .get(columns[1].1)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| bad("N"))?;
        let (discords, hf_angles) = match model {
            ModelKind::TwoLevel => (
                Discords::TwoLevel { pm: get(9)? },
                HfAngles::TwoLevel { phi: get(10)? },
            ),
            ModelKind::ThreeLevel => (
                Discords::ThreeLevel {
                    d01: get(9)?,
                    d02: get(10)?,
                    d12: get(11)?,
                },
                HfAngles::ThreeLevel {
                    alpha: get(13)?,
                    beta: get(14)?,
                },
            ),
        };
        records.push(SweepRecord {
            model,
            n,
            chi: get(2)?,
            e_exact: get(3)?,
            e_hf: get(4)?,
            eps_corr: get(5)?,
            s_ov: get(6)?,
            s_ov_per_particle: get(7)?,
            s_gamma: get(8)?,
            discords,
            hf_angles,
        });
    }
    Ok((model, records))
}
