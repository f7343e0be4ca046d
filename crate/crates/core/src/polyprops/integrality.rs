use serde::Serialize;

use super::{OrderingWitness, PolyKind};
use crate::spectral::SpectralBasis;
use crate::{is_integral, Error, Result};

/// Integrality diagnostics for the ratios `K_j` of a Q-ordering.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IntegralityReport {
    /// Ranks `m_0..m_d` read along the witness ordering.
    pub multiplicities: Vec<usize>,
    /// `m_1 > 2` and some odd `t <= d/2` has `m_t != m_{d-t+1}`.
    pub hypothesis: bool,
    pub witness_t: Option<usize>,
    pub integral_flags: Vec<bool>,
    pub all_integral: bool,
    /// Hypothesis holds but some `K_j` is not integral.
    pub contradiction: bool,
}

pub fn integrality_report(
    basis: &SpectralBasis,
    witness: &OrderingWitness,
    k: &[f64],
) -> Result<IntegralityReport> {
    let d = basis.d();
    if witness.kind != PolyKind::Q || witness.order.len() != d + 1 {
        return Err(Error::BadParameters("integrality needs a Q-polynomial ordering of the scheme".into()));
    }
    if k.len() != d {
        return Err(Error::BadParameters(format!("expected {d} ratios, got {}", k.len())));
    }
    let ranks = basis.multiplicities();
    let multiplicities: Vec<usize> = witness.order.iter().map(|&i| ranks[i]).collect();
    let witness_t = (1..=d / 2)
        .step_by(2)
        .find(|&t| multiplicities[t] != multiplicities[d - t + 1]);
    let hypothesis = multiplicities[1] > 2 && witness_t.is_some();
    let integral_flags: Vec<bool> = k.iter().map(|&v| is_integral(v)).collect();
    let all_integral = integral_flags.iter().all(|&f| f);
    Ok(IntegralityReport {
        multiplicities,
        hypothesis,
        witness_t: witness_t.filter(|_| hypothesis),
        integral_flags,
        all_integral,
        contradiction: hypothesis && !all_integral,
    })
}
