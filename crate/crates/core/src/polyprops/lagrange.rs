use crate::{Error, Result};

/// Numerically checks the Lagrange interpolation identity
/// `sum_i b_i^j prod_{k != i} (x - b_k) / (b_i - b_k) = x^j` for `j < s`.
///
/// The comparison is relative to the largest magnitude among `x^j` and the
/// individual terms of the sum (and at least 1).
pub fn lagrange_identity_check(betas: &[f64], j: usize, x: f64, tol: f64) -> Result<bool> {
    let s = betas.len();
    if j >= s {
        return Err(Error::ExponentTooLarge { j, s });
    }
    for a in 0..s {
        for b in a + 1..s {
            if (betas[a] - betas[b]).abs() <= tol {
                return Err(Error::DegenerateNodes(a, b));
            }
        }
    }
    let target = x.powi(j as i32);
    let mut scale = target.abs().max(1.0);
    let mut sum = 0.0;
    for (i, &bi) in betas.iter().enumerate() {
        let basis: f64 = betas
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, &bk)| (x - bk) / (bi - bk))
            .product();
        let term = bi.powi(j as i32) * basis;
        scale = scale.max(term.abs());
        sum += term;
    }
    Ok((sum - target).abs() <= tol * scale)
}
