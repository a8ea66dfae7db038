use libm::sqrt;
use nalgebra::{DMatrix, DVector};

use super::basis::{BasisLabel, CollectiveBasis};
use super::spectrum::GroundState;
use crate::error::{Error, Result};
use crate::model::ModelKind;

/// Collective one-body operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KOperator {
    /// `½ Σ_p (n_{+p} − n_{−p})` (two-level).
    K0,
    /// `Σ_p c†_{+p} c_{−p}` (two-level).
    KPlus,
    /// `Σ_p c†_{−p} c_{+p}` (two-level).
    KMinus,
    /// `K_{σσ'} = Σ_p c†_{σp} c_{σ'p}` with levels `σ, σ' ∈ {0, 1, 2}` (three-level).
    Level { to: u8, from: u8 },
}

impl KOperator {
    fn name(self) -> &'static str {
        match self {
            KOperator::K0 => "K0",
            KOperator::KPlus => "K+",
            KOperator::KMinus => "K-",
            KOperator::Level { .. } => "K_{σσ'}",
        }
    }

    fn check(self, model: ModelKind) -> Result<()> {
        let ok = match (self, model) {
            (KOperator::Level { to, from }, ModelKind::ThreeLevel) => to < 3 && from < 3,
            (KOperator::Level { .. }, ModelKind::TwoLevel) => false,
            (_, ModelKind::TwoLevel) => true,
            (_, ModelKind::ThreeLevel) => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::OperatorMismatch {
                op: self.name(),
                model: model.name(),
            })
        }
    }
}

/// Non-zero matrix elements `(target index, amplitude)` of `op` acting on basis state `index`.
fn column(op: KOperator, basis: &CollectiveBasis, index: usize) -> Option<(usize, f64)> {
    let n = basis.n_particles();
    match (op, basis.label(index)) {
        (KOperator::K0, BasisLabel::Spin { twice_m }) => Some((index, 0.5 * twice_m as f64)),
        (KOperator::KPlus | KOperator::KMinus, BasisLabel::Spin { twice_m }) => {
            let j = 0.5 * f64::from(n);
            let m = 0.5 * twice_m as f64;
            let (step, amp) = if op == KOperator::KPlus {
                (2, sqrt(j * (j + 1.0) - m * (m + 1.0)))
            } else {
                (-2, sqrt(j * (j + 1.0) - m * (m - 1.0)))
            };
            basis
                .index_of(BasisLabel::Spin {
                    twice_m: twice_m + step,
                })
                .map(|target| (target, amp))
        }
        (KOperator::Level { to, from }, BasisLabel::Occupation { n1, n2 }) => {
            let mut occ = [n - n1 - n2, n1, n2];
            let (to, from) = (to as usize, from as usize);
            if to == from {
                return Some((index, f64::from(occ[to])));
            }
            if occ[from] == 0 {
                return None;
            }
            let amp = sqrt(f64::from(occ[to] + 1) * f64::from(occ[from]));
            occ[from] -= 1;
            occ[to] += 1;
            let target = basis
                .index_of(BasisLabel::Occupation {
                    n1: occ[1],
                    n2: occ[2],
                })
                .expect("one-boson move stays inside the irrep");
            Some((target, amp))
        }
        _ => None,
    }
}

/// `K |ψ⟩` for a vector expressed in `basis`.
pub fn apply_operator(
    op: KOperator,
    basis: &CollectiveBasis,
    vector: &DVector<f64>,
) -> Result<DVector<f64>> {
    op.check(basis.model())?;
    let mut out = DVector::zeros(basis.dimension());
    for (i, &amp) in vector.iter().enumerate() {
        if let Some((target, elem)) = column(op, basis, i) {
            out[target] += elem * amp;
        }
    }
    Ok(out)
}

/// Dense matrix of `op` in `basis`.
pub fn operator_matrix(op: KOperator, basis: &CollectiveBasis) -> Result<DMatrix<f64>> {
    op.check(basis.model())?;
    let dim = basis.dimension();
    let mut m = DMatrix::zeros(dim, dim);
    for i in 0..dim {
        if let Some((target, elem)) = column(op, basis, i) {
            m[(target, i)] += elem;
        }
    }
    Ok(m)
}

/// `⟨gs| K |gs⟩`, including single-step ladders.
pub fn expectation_k(gs: &GroundState, op: KOperator) -> Result<f64> {
    let kv = apply_operator(op, gs.basis(), gs.vector())?;
    Ok(gs.vector().dot(&kv))
}
