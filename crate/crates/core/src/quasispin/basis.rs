use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::model::ModelKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisLabel {
    /// `|J = N/2, M⟩`, stored as `2M` so half-integer projections stay exact.
    Spin { twice_m: i64 },
    /// `|n1, n2⟩`: particles in levels 1 and 2; level 0 holds the rest.
    Occupation { n1: u32, n2: u32 },
}

/// Ordered list of collective basis states for one model and particle number.
#[derive(Debug, Clone, PartialEq)]
pub struct CollectiveBasis {
    model: ModelKind,
    n_particles: u32,
    labels: Vec<BasisLabel>,
}

impl CollectiveBasis {
    pub fn new(model: ModelKind, n_particles: u32) -> Result<Self> {
        match model {
            ModelKind::TwoLevel => Self::two_level(n_particles),
            ModelKind::ThreeLevel => Self::three_level(n_particles),
        }
    }

    /// `|N/2, M⟩` for `M = −N/2, …, N/2`.
    pub fn two_level(n_particles: u32) -> Result<Self> {
        if n_particles == 0 {
            return Err(Error::TooFewParticles { min: 1, got: 0 });
        }
        let n = i64::from(n_particles);
        let labels = (0..=n)
            .map(|k| BasisLabel::Spin { twice_m: 2 * k - n })
            .collect();
        Ok(Self {
            model: ModelKind::TwoLevel,
            n_particles,
            labels,
        })
    }

    /// `|n1, n2⟩` with `n1 + n2 ≤ N`, lexicographic in `(n1, n2)`.
    pub fn three_level(n_particles: u32) -> Result<Self> {
        if n_particles == 0 {
            return Err(Error::TooFewParticles { min: 1, got: 0 });
        }
        let mut labels = Vec::with_capacity(three_level_dimension(n_particles));
        for n1 in 0..=n_particles {
            for n2 in 0..=(n_particles - n1) {
                labels.push(BasisLabel::Occupation { n1, n2 });
            }
        }
        Ok(Self {
            model: ModelKind::ThreeLevel,
            n_particles,
            labels,
        })
    }

    pub fn model(&self) -> ModelKind {
        self.model
    }

    pub fn n_particles(&self) -> u32 {
        self.n_particles
    }

    pub fn dimension(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> BasisLabel {
        self.labels[index]
    }

    pub fn index_of(&self, label: BasisLabel) -> Option<usize> {
        let n = self.n_particles;
        match (self.model, label) {
            (ModelKind::TwoLevel, BasisLabel::Spin { twice_m }) => {
                let k = twice_m + i64::from(n);
                if k < 0 || k % 2 != 0 || k / 2 > i64::from(n) {
                    return None;
                }
                Some((k / 2) as usize)
            }
            (ModelKind::ThreeLevel, BasisLabel::Occupation { n1, n2 }) => {
                if u64::from(n1) + u64::from(n2) > u64::from(n) {
                    return None;
                }
                let (n, n1, n2) = (n as usize, n1 as usize, n2 as usize);
                // rows n1' < n1 hold N + 1 − n1' states each
                Some(n1 * (n + 1) - n1 * n1.saturating_sub(1) / 2 + n2)
            }
            _ => None,
        }
    }

    /// Whether basis state `index` belongs to the sector the ground state lives in:
    /// an even number of particles above the lowest level (two-level), or even
    /// `n1` and `n2` (three-level).
    pub fn is_even(&self, index: usize) -> bool {
        match self.labels[index] {
            BasisLabel::Spin { twice_m } => (twice_m + i64::from(self.n_particles)) % 4 == 0,
            BasisLabel::Occupation { n1, n2 } => n1 % 2 == 0 && n2 % 2 == 0,
        }
    }
}

pub(crate) fn three_level_dimension(n: u32) -> usize {
    let n = n as usize;
    (n + 1) * (n + 2) / 2
}
