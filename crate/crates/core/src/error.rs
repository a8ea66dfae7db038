use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("particle number must be at least {min}, got {got}")]
    TooFewParticles { min: u32, got: u32 },
    #[error("level spacing must be positive and finite, got {0}")]
    InvalidEpsilon(f64),
    #[error("interaction strength must be non-negative and finite, got {0}")]
    InvalidInteraction(f64),
    #[error("chi must be non-negative and finite, got {0}")]
    InvalidChi(f64),
    #[error("operator {op} is not defined for the {model} model")]
    OperatorMismatch {
        op: &'static str,
        model: &'static str,
    },
    #[error("model mismatch: expected {expected}, got {got}")]
    ModelMismatch {
        expected: &'static str,
        got: &'static str,
    },
    #[error("eigensolver failed: {0}")]
    Eigensolver(&'static str),
    #[error("ground state violates parity support (odd weight {odd_weight:e})")]
    ParityViolation { odd_weight: f64 },
    #[error("HF minimizer disagrees with closed form: {quantity} = {found}, expected {expected}")]
    ClosedFormMismatch {
        quantity: &'static str,
        found: f64,
        expected: f64,
    },
    #[error("exact energy must be negative, got {0}")]
    NonNegativeExactEnergy(f64),
    #[error("variational bound violated: E_exact = {e_exact} > E_HF = {e_hf}")]
    VariationalViolation { e_exact: f64, e_hf: f64 },
    #[error("non-physical two-mode correlators: {0}")]
    NonPhysicalState(&'static str),
    #[error("series lengths differ ({x} vs {y})")]
    LengthMismatch { x: usize, y: usize },
    #[error("need at least {min} points, got {got}")]
    TooFewPoints { min: usize, got: usize },
    #[error("abscissa is not strictly monotone at index {0}")]
    NonMonotone(usize),
    #[error("invalid one-body density block: {0}")]
    InvalidDensity(&'static str),
    #[error("mode index {index} out of range for a {dim}-level block")]
    ModeOutOfRange { index: usize, dim: usize },
}
