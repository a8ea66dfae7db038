use core::fmt;

use crate::error::{Error, Result};

/// Which Lipkin model a calculation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelKind {
    /// Two levels σ = ±, SU(2) quasi-spin.
    TwoLevel,
    /// Three equally spaced levels σ = 0, 1, 2, SU(3).
    ThreeLevel,
}

impl ModelKind {
    pub fn name(self) -> &'static str {
        match self {
            ModelKind::TwoLevel => "two-level",
            ModelKind::ThreeLevel => "three-level",
        }
    }

    /// Number of single-particle levels per degeneracy index p.
    pub fn levels(self) -> usize {
        match self {
            ModelKind::TwoLevel => 2,
            ModelKind::ThreeLevel => 3,
        }
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModelKind::TwoLevel => "two",
            ModelKind::ThreeLevel => "three",
        })
    }
}

/// Particle number, level spacing and interaction strength of one model instance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    n_particles: u32,
    epsilon: f64,
    v: f64,
    model: ModelKind,
}

impl ModelParams {
    pub fn new(model: ModelKind, n_particles: u32, epsilon: f64, v: f64) -> Result<Self> {
        if n_particles < 1 {
            return Err(Error::TooFewParticles {
                min: 1,
                got: n_particles,
            });
        }
        if !(epsilon.is_finite() && epsilon > 0.0) {
            return Err(Error::InvalidEpsilon(epsilon));
        }
        if !(v.is_finite() && v >= 0.0) {
            return Err(Error::InvalidInteraction(v));
        }
        Ok(Self {
            n_particles,
            epsilon,
            v,
            model,
        })
    }

    /// Parametrize by the dimensionless coupling, `V = χ ε / (N − 1)`.
    ///
    /// Undefined for a single particle; use [`ModelParams::new`] there.
    pub fn from_chi(model: ModelKind, n_particles: u32, epsilon: f64, chi: f64) -> Result<Self> {
        if n_particles < 2 {
            return Err(Error::TooFewParticles {
                min: 2,
                got: n_particles,
            });
        }
        if !(chi.is_finite() && chi >= 0.0) {
            return Err(Error::InvalidChi(chi));
        }
        let v = chi * epsilon / f64::from(n_particles - 1);
        Self::new(model, n_particles, epsilon, v)
    }

    pub fn model(&self) -> ModelKind {
        self.model
    }

    pub fn n_particles(&self) -> u32 {
        self.n_particles
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn v(&self) -> f64 {
        self.v
    }

    /// χ = (N − 1) V / ε, identical for both models.
    pub fn chi(&self) -> f64 {
        chi(self)
    }
}

pub fn chi(params: &ModelParams) -> f64 {
    f64::from(params.n_particles - 1) * params.v / params.epsilon
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chi_examples() {
        let p = ModelParams::new(ModelKind::TwoLevel, 5, 1.0, 0.0).unwrap();
        assert_eq!(p.chi(), 0.0);
        let p = ModelParams::new(ModelKind::TwoLevel, 2, 1.0, 1.0).unwrap();
        assert_eq!(p.chi(), 1.0);
        let p = ModelParams::new(ModelKind::ThreeLevel, 11, 1.0, 0.1).unwrap();
        assert!((p.chi() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn from_chi_roundtrips() {
        let p = ModelParams::from_chi(ModelKind::ThreeLevel, 7, 2.0, 1.5).unwrap();
        assert!((p.v() - 0.5).abs() < 1e-15);
        assert!((p.chi() - 1.5).abs() < 1e-15);
    }

    #[test]
    fn rejects_invalid() {
        assert!(ModelParams::new(ModelKind::TwoLevel, 0, 1.0, 1.0).is_err());
        assert!(ModelParams::new(ModelKind::TwoLevel, 3, 0.0, 1.0).is_err());
        assert!(ModelParams::new(ModelKind::TwoLevel, 3, 1.0, -0.1).is_err());
        assert!(ModelParams::new(ModelKind::TwoLevel, 3, 1.0, f64::NAN).is_err());
        assert_eq!(
            ModelParams::from_chi(ModelKind::TwoLevel, 1, 1.0, 1.0),
            Err(Error::TooFewParticles { min: 2, got: 1 })
        );
    }
}
