use alloc::vec::Vec;

use libm::log;

use crate::density::OneBodyDensityBlock;

/// `s(x) = −x ln x`, with `s(x) = 0` for `x ≤ 0` (and hence `0 ln 0 = 0`).
pub fn entropy_s(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        -x * log(x)
    }
}

/// One-body entropy kernel `g(x) = −x ln x`.
pub fn entropy_g(x: f64) -> f64 {
    entropy_s(x)
}

/// Single-mode entropy kernel `f(x) = −(1 − x) ln(1 − x) − x ln x`.
pub fn entropy_f(x: f64) -> f64 {
    entropy_s(1.0 - x) + entropy_s(x)
}

/// von Neumann entropy (nats) from a spectrum.
pub fn von_neumann(eigenvalues: &[f64]) -> f64 {
    eigenvalues.iter().map(|&x| entropy_s(x)).sum()
}

#[derive(Debug, Clone, PartialEq)]
pub struct EntropyReport {
    /// Overall entropy in the natural-orbital basis, `N Σ f(λ)`.
    pub overall_entropy: f64,
    pub overall_entropy_per_particle: f64,
    /// `S(γ) = N Σ g(λ)`.
    pub one_body_entropy: f64,
    /// Per-block natural occupations, descending.
    pub natural_occupations: Vec<f64>,
}

pub fn entropies(block: &OneBodyDensityBlock) -> EntropyReport {
    let occ = block.natural_occupations();
    let n = f64::from(block.multiplicity());
    let per_block_f: f64 = occ.iter().map(|&x| entropy_f(x)).sum();
    let per_block_g: f64 = occ.iter().map(|&x| entropy_g(x)).sum();
    EntropyReport {
        overall_entropy: n * per_block_f,
        overall_entropy_per_particle: per_block_f,
        one_body_entropy: n * per_block_g,
        natural_occupations: occ,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::DMatrix;

    #[test]
    fn kernels_vanish_at_endpoints() {
        assert_eq!(entropy_f(0.0), 0.0);
        assert_eq!(entropy_f(1.0), 0.0);
        assert_eq!(entropy_g(0.0), 0.0);
        assert_eq!(entropy_g(1.0), 0.0);
        assert_eq!(entropy_s(-1e-18), 0.0);
    }

    #[test]
    fn pure_block_has_zero_entropy() {
        let b = OneBodyDensityBlock::new(DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, 0.0]), 5)
            .unwrap();
        let r = entropies(&b);
        assert_eq!(r.overall_entropy, 0.0);
        assert_eq!(r.one_body_entropy, 0.0);
    }

    #[test]
    fn half_filling_single_particle() {
        let b = OneBodyDensityBlock::new(DMatrix::from_row_slice(2, 2, &[0.5, 0.0, 0.0, 0.5]), 1)
            .unwrap();
        let r = entropies(&b);
        let ln2 = core::f64::consts::LN_2;
        assert!((r.overall_entropy - 2.0 * ln2).abs() < 1e-15);
        assert!((r.one_body_entropy - ln2).abs() < 1e-15);
        assert!((r.overall_entropy / r.one_body_entropy - 2.0).abs() < 1e-15);
    }

    #[test]
    fn quarter_filling_four_particles() {
        let b = OneBodyDensityBlock::new(DMatrix::from_row_slice(2, 2, &[0.75, 0.0, 0.0, 0.25]), 4)
            .unwrap();
        let r = entropies(&b);
        let f = -0.75 * 0.75f64.ln() - 0.25 * 0.25f64.ln();
        assert!((r.overall_entropy - 8.0 * f).abs() < 1e-14);
        assert!((r.overall_entropy - 4.4987).abs() < 1e-4);
        assert!((r.overall_entropy_per_particle - 2.0 * f).abs() < 1e-14);
    }
}
