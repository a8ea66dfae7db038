//! Sweeps, file formats and figures on top of `lipkin-core`.

pub mod check;
mod error;
pub mod figure;
pub mod sweep;
pub mod table;

pub use error::{Error, Result};
