use std::path::PathBuf;

use lipkin_core::ModelKind;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid sweep configuration: {0}")]
    Config(String),
    #[error("{model} model failed at N = {n}, chi = {chi}: {source}")]
    Point {
        model: ModelKind,
        n: u32,
        chi: f64,
        #[source]
        source: lipkin_core::Error,
    },
    #[error(transparent)]
    Core(#[from] lipkin_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
    #[error("{path}: missing column `{column}`")]
    MissingColumn { path: PathBuf, column: &'static str },
    #[error("{path}, line {line}: bad value in column `{column}`")]
    BadValue {
        path: PathBuf,
        line: u64,
        column: &'static str,
    },
    #[error("figure {figure}: {reason}")]
    Figure { figure: String, reason: String },
    #[error("{path}: drawing failed: {message}")]
    Plot { path: PathBuf, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
