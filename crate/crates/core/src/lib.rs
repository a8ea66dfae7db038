#![no_std]

extern crate alloc;

pub mod analysis;
pub mod correlation;
pub mod density;
mod error;
pub mod linalg;
pub mod mean_field;
pub mod model;
pub mod optimize;
pub mod quasispin;
pub mod record;

pub use error::{Error, Result};
pub use model::{chi, ModelKind, ModelParams};
