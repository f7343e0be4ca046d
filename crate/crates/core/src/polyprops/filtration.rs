use nalgebra::DMatrix;
use serde::Serialize;

use crate::spectral::SpectralBasis;
use crate::{Error, Result};

/// Sets `N_h` of idempotents whose first appearance as a component of a
/// Hadamard power of `E_e` is at exponent `h`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FiltrationResult {
    pub e: usize,
    /// `N_0..N_d`.
    pub sets: Vec<Vec<usize>>,
    /// Indices that are not a component of any power up to `d`.
    pub leftover: Vec<usize>,
    /// `N_d` is nonempty.
    pub is_qpoly: bool,
    /// `(i_0, ..., i_d)` with `N_h = {i_h}`, when every set is a singleton.
    pub ordering: Option<Vec<usize>>,
    /// Smallest coefficient `c_j` over all normalised powers `sum_j c_j E_j`.
    /// Nonnegative up to rounding by the Krein condition.
    pub min_coefficient: f64,
}

impl FiltrationResult {
    /// An empty `N_i` (`1 <= i < d`) forces every later set to be empty.
    pub fn collapse_holds(&self) -> bool {
        let d = self.sets.len() - 1;
        (1..d).all(|i| !self.sets[i].is_empty() || self.sets[i + 1].is_empty())
    }

    pub fn coefficients_nonnegative(&self, tol: f64) -> bool {
        self.min_coefficient >= -tol
    }

    /// A positive verdict has `|N_h| = 1` for every `h`.
    pub fn singletons_when_positive(&self) -> bool {
        !self.is_qpoly || self.sets.iter().all(|s| s.len() == 1)
    }
}

/// Runs the `N_h` filtration for `E_e`.
///
/// `E_j` is a component of `M` when `||E_j M||_F > tol * ||M||_F`. Every
/// power lies in the algebra, so `E_j M = c_j E_j` and the norm is
/// `|<E_j, M>_F| / sqrt(m_j)`; powers are renormalised at each step.
pub fn hadamard_filtration(basis: &SpectralBasis, e: usize, tol: f64) -> Result<FiltrationResult> {
    let d = basis.d();
    if e == 0 || e > d {
        return Err(Error::IndexOutOfRange { index: e, d });
    }
    let n = basis.n();
    let idempotents = basis.idempotents();
    let ranks: Vec<f64> = idempotents.iter().map(|m| m.trace()).collect();
    let mut min_coefficient = f64::INFINITY;

    let mut first_seen: Vec<Option<usize>> = vec![None; d + 1];
    let mut power = DMatrix::from_element(n, n, 1.0);
    for h in 0..=d {
        if h > 0 {
            power.component_mul_assign(&idempotents[e]);
        }
        let norm = power.norm();
        if norm == 0.0 {
            break;
        }
        power /= norm;
        for j in 0..=d {
            let inner = idempotents[j].dot(&power);
            min_coefficient = min_coefficient.min(inner / ranks[j]);
            if first_seen[j].is_none() && inner.abs() / ranks[j].sqrt() > tol {
                first_seen[j] = Some(h);
            }
        }
    }

    let mut sets = vec![Vec::new(); d + 1];
    let mut leftover = Vec::new();
    for (j, seen) in first_seen.iter().enumerate() {
        match seen {
            Some(h) => sets[*h].push(j),
            None => leftover.push(j),
        }
    }
    let is_qpoly = !sets[d].is_empty();
    let ordering = (is_qpoly && sets.iter().all(|s| s.len() == 1)).then(|| sets.iter().map(|s| s[0]).collect());
    Ok(FiltrationResult { e, sets, leftover, is_qpoly, ordering, min_coefficient })
}
