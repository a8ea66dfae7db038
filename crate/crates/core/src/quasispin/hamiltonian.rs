use libm::sqrt;
use nalgebra::DMatrix;

use super::basis::{BasisLabel, CollectiveBasis};
use crate::error::Result;
use crate::model::{ModelKind, ModelParams};

/// Real symmetric Hamiltonian over a [`CollectiveBasis`].
#[derive(Debug, Clone, PartialEq)]
pub struct HamiltonianMatrix {
    basis: CollectiveBasis,
    entries: DMatrix<f64>,
}

impl HamiltonianMatrix {
    pub fn basis(&self) -> &CollectiveBasis {
        &self.basis
    }

    pub fn entries(&self) -> &DMatrix<f64> {
        &self.entries
    }

    pub fn dimension(&self) -> usize {
        self.basis.dimension()
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    /// Largest `|H_ij − H_ji|`.
    pub fn asymmetry(&self) -> f64 {
        let n = self.dimension();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..i {
                worst = worst.max((self.entries[(i, j)] - self.entries[(j, i)]).abs());
            }
        }
        worst
    }
}

pub fn build_hamiltonian(params: &ModelParams) -> Result<HamiltonianMatrix> {
    match params.model() {
        ModelKind::TwoLevel => build_two_level_hamiltonian(params),
        ModelKind::ThreeLevel => build_three_level_hamiltonian(params),
    }
}

/// `H = ε K0 − ½ V (K+² + K−²)` on `|N/2, M⟩`.
pub fn build_two_level_hamiltonian(params: &ModelParams) -> Result<HamiltonianMatrix> {
    let basis = CollectiveBasis::two_level(params.n_particles())?;
    let dim = basis.dimension();
    let j = 0.5 * f64::from(params.n_particles());
    let jj = j * (j + 1.0);
    let (eps, v) = (params.epsilon(), params.v());

    let mut h = DMatrix::zeros(dim, dim);
    for (i, label) in basis.labels().iter().enumerate() {
        let BasisLabel::Spin { twice_m } = *label else {
            unreachable!()
        };
        let m = 0.5 * twice_m as f64;
        h[(i, i)] = eps * m;
        if i + 2 < dim {
            let ladder = sqrt(jj - m * (m + 1.0)) * sqrt(jj - (m + 1.0) * (m + 2.0));
            h[(i + 2, i)] = -0.5 * v * ladder;
            h[(i, i + 2)] = -0.5 * v * ladder;
        }
    }
    Ok(HamiltonianMatrix { basis, entries: h })
}

/// `H = ε(K22 − K00) − ½ V (K10² + K20² + K21² + h.c.)` on `|n1, n2⟩`.
pub fn build_three_level_hamiltonian(params: &ModelParams) -> Result<HamiltonianMatrix> {
    let basis = CollectiveBasis::three_level(params.n_particles())?;
    let dim = basis.dimension();
    let n = params.n_particles();
    let (eps, v) = (params.epsilon(), params.v());

    let mut h = DMatrix::zeros(dim, dim);
    for (i, label) in basis.labels().iter().enumerate() {
        let BasisLabel::Occupation { n1, n2 } = *label else {
            unreachable!()
        };
        let n0 = n - n1 - n2;
        let (f0, f1, f2) = (f64::from(n0), f64::from(n1), f64::from(n2));
        h[(i, i)] = eps * (f2 - f0);

        let moves = [
            // K10²: two bosons 0 → 1
            (
                n0 >= 2,
                n1 + 2,
                n2,
                (f1 + 1.0) * (f1 + 2.0) * f0 * (f0 - 1.0),
            ),
            // K20²: two bosons 0 → 2
            (
                n0 >= 2,
                n1,
                n2 + 2,
                (f2 + 1.0) * (f2 + 2.0) * f0 * (f0 - 1.0),
            ),
            // K21²: two bosons 1 → 2
            (
                n1 >= 2,
                n1.wrapping_sub(2),
                n2 + 2,
                (f2 + 1.0) * (f2 + 2.0) * f1 * (f1 - 1.0),
            ),
        ];
        for (allowed, m1, m2, amp2) in moves {
            if !allowed {
                continue;
            }
            let k = basis
                .index_of(BasisLabel::Occupation { n1: m1, n2: m2 })
                .expect("two-boson move stays inside the irrep");
            let elem = -0.5 * v * sqrt(amp2);
            h[(k, i)] += elem;
            h[(i, k)] += elem;
        }
    }
    Ok(HamiltonianMatrix { basis, entries: h })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two(n: u32, eps: f64, v: f64) -> HamiltonianMatrix {
        build_two_level_hamiltonian(&ModelParams::new(ModelKind::TwoLevel, n, eps, v).unwrap())
            .unwrap()
    }

    fn three(n: u32, eps: f64, v: f64) -> HamiltonianMatrix {
        build_three_level_hamiltonian(&ModelParams::new(ModelKind::ThreeLevel, n, eps, v).unwrap())
            .unwrap()
    }

    #[test]
    fn spin_half_has_no_two_step_ladder() {
        let h = two(1, 1.0, 1.0);
        assert_eq!(
            h.entries(),
            &DMatrix::from_row_slice(2, 2, &[-0.5, 0.0, 0.0, 0.5])
        );
    }

    #[test]
    fn two_particles() {
        let h = two(2, 1.0, 1.0);
        let expected =
            DMatrix::from_row_slice(3, 3, &[-1.0, 0.0, -1.0, 0.0, 0.0, 0.0, -1.0, 0.0, 1.0]);
        assert!((h.entries() - expected).abs().max() < 1e-15);
    }

    #[test]
    fn three_particles_off_diagonal() {
        let h = two(3, 1.0, 1.0);
        let b = h.basis();
        let lo = b.index_of(BasisLabel::Spin { twice_m: -3 }).unwrap();
        let hi = b.index_of(BasisLabel::Spin { twice_m: 1 }).unwrap();
        assert!((h.entries()[(hi, lo)] + 3f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn three_level_noninteracting_diagonal() {
        let h = three(2, 1.0, 0.0);
        let diag: alloc::vec::Vec<f64> = h.entries().diagonal().iter().copied().collect();
        // (0,0) (0,1) (0,2) (1,0) (1,1) (2,0)
        assert_eq!(diag, [-2.0, 0.0, 2.0, -1.0, 1.0, 0.0]);
        assert_eq!(h.max_abs(), 2.0);
    }

    #[test]
    fn three_level_k10_squared_element() {
        // V = −2 would give the bare amplitude; use V = 2 and flip the sign.
        let h = three(2, 1.0, 2.0);
        let b = h.basis();
        let from = b.index_of(BasisLabel::Occupation { n1: 0, n2: 0 }).unwrap();
        let to = b.index_of(BasisLabel::Occupation { n1: 2, n2: 0 }).unwrap();
        assert!((-h.entries()[(to, from)] - 2.0).abs() < 1e-14);
    }

    #[test]
    fn selection_rules_and_symmetry() {
        for n in 1..9 {
            let h = two(n, 1.0, 0.7);
            assert_eq!(h.asymmetry(), 0.0);
            let b = h.basis().clone();
            for i in 0..b.dimension() {
                for j in 0..b.dimension() {
                    let (BasisLabel::Spin { twice_m: a }, BasisLabel::Spin { twice_m: c }) =
                        (b.label(i), b.label(j))
                    else {
                        unreachable!()
                    };
                    if !matches!((a - c).abs(), 0 | 4) {
                        assert_eq!(h.entries()[(i, j)], 0.0);
                    }
                }
            }

            let h = three(n, 1.0, 0.7);
            assert_eq!(h.asymmetry(), 0.0);
            let b = h.basis().clone();
            let allowed = [(0, 0), (2, 0), (-2, 0), (0, 2), (0, -2), (-2, 2), (2, -2)];
            for i in 0..b.dimension() {
                for j in 0..b.dimension() {
                    let (
                        BasisLabel::Occupation { n1: a1, n2: a2 },
                        BasisLabel::Occupation { n1: c1, n2: c2 },
                    ) = (b.label(i), b.label(j))
                    else {
                        unreachable!()
                    };
                    let d = (a1 as i64 - c1 as i64, a2 as i64 - c2 as i64);
                    if !allowed.contains(&d) {
                        assert_eq!(h.entries()[(i, j)], 0.0);
                    }
                }
            }
        }
    }
}
