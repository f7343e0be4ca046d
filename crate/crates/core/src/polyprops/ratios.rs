//! Ratio criteria: `K_i = prod_{j != i} (t_0 - t_j) / (t_i - t_j)` compared
//! against a column of the opposite eigenmatrix.

use serde::Serialize;

use super::PolyKind;
use crate::spectral::{dual_eigenvalue_row, eigenvalue_row, min_gap, SpectralBasis};
use crate::{is_integral, Error, Result};

/// Outcome of a ratio criterion for one distinguished index `e`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RatioResult {
    pub kind: PolyKind,
    pub e: usize,
    /// `K_1..K_d`.
    pub k: Vec<f64>,
    pub l_witness: Option<usize>,
    /// Whether the scheme is Q- (resp. P-) polynomial with respect to `e`.
    pub holds: bool,
    pub integral_flags: Vec<bool>,
    pub match_tol: f64,
    /// `min_l max_i |K_i + (column l)_i|`.
    pub best_residual: f64,
}

/// Generalised Larman–Rogers–Seidel ratios of a sequence `t_0..t_d`.
pub fn lrs_ratios(theta: &[f64], tol: f64) -> Result<Vec<f64>> {
    let d = theta.len().saturating_sub(1);
    if d < 2 {
        return Err(Error::ClassTooSmall(d));
    }
    if let Some((gap, a, b)) = min_gap(theta) {
        if gap <= tol {
            return Err(Error::NotDistinct(a, b));
        }
    }
    Ok((1..=d)
        .map(|i| {
            (1..=d)
                .filter(|&j| j != i)
                .map(|j| (theta[0] - theta[j]) / (theta[i] - theta[j]))
                .product()
        })
        .collect())
}

/// Q-polynomial criterion: `K_i` from the dual eigenvalues of `E_e` must
/// equal `-p_i(l)` for a single idempotent `l`, which is then the last one
/// in the Q-ordering.
pub fn qpoly_criterion_main(basis: &SpectralBasis, e: usize, tol: f64) -> Result<RatioResult> {
    if basis.d() < 2 {
        return Err(Error::ClassTooSmall(basis.d()));
    }
    let row = dual_eigenvalue_row(basis, e)?;
    let k = lrs_ratios(&row.values, tol)?;
    match_column(PolyKind::Q, e, k, basis.d(), |i, l| basis.p(i, l))
}

/// P-polynomial criterion: ratios from the eigenvalues of `A_e` matched
/// against `-q_i(l)`.
pub fn ppoly_criterion_dual(basis: &SpectralBasis, e: usize, tol: f64) -> Result<RatioResult> {
    if basis.d() < 2 {
        return Err(Error::ClassTooSmall(basis.d()));
    }
    let row = eigenvalue_row(basis, e)?;
    let k = lrs_ratios(&row.values, tol)?;
    match_column(PolyKind::P, e, k, basis.d(), |i, l| basis.q(i, l))
}

fn match_column(
    kind: PolyKind,
    e: usize,
    k: Vec<f64>,
    d: usize,
    column: impl Fn(usize, usize) -> f64,
) -> Result<RatioResult> {
    let match_tol = 1e-6 * k.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let mut matches = Vec::new();
    let mut best_residual = f64::INFINITY;
    for l in (1..=d).filter(|&l| l != e) {
        let residual = (1..=d).map(|i| (k[i - 1] + column(i, l)).abs()).fold(0.0, f64::max);
        best_residual = best_residual.min(residual);
        if residual <= match_tol {
            matches.push(l);
        }
    }
    if let [a, b, ..] = matches[..] {
        return Err(Error::AmbiguousWitness(a, b));
    }
    let l_witness = matches.first().copied();
    let integral_flags = k.iter().map(|&v| is_integral(v)).collect();
    Ok(RatioResult {
        kind,
        e,
        k,
        l_witness,
        holds: l_witness.is_some(),
        integral_flags,
        match_tol,
        best_residual,
    })
}
