//! Primitive idempotents, eigenmatrices and Krein parameters.
//!
//! Conventions: `P[j][i] = p_i(j)` is the eigenvalue of `A_i` on the
//! eigenspace of `E_j`, and `Q[j][i] = q_i(j)` is the coefficient of `A_j`
//! in `n E_i`. Hence `m_i = Q[0][i]`, and the column `e` of `Q` is the
//! dual eigenvalue sequence attached to `E_e`.

use std::cmp::Ordering;

use nalgebra::{DMatrix, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scheme::{IntersectionTensor, RelationTable};
use crate::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-8;
pub const DEFAULT_SEED: u64 = 0xA55C13;
/// Seeds tried (`seed`, `seed + 1`, ...) before giving up on a split.
pub const MAX_ATTEMPTS: u32 = 16;
/// Eigenvalue clustering gap, relative to the spectral radius.
pub const CLUSTER_GAP: f64 = 1e-6;

/// The second basis `{E_i}` of the Bose–Mesner algebra and its eigenmatrices.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralBasis {
    n: usize,
    d: usize,
    idempotents: Vec<DMatrix<f64>>,
    p: DMatrix<f64>,
    q: DMatrix<f64>,
    mult: Vec<usize>,
    valency: Vec<usize>,
    tol: f64,
    seed: u64,
}

impl SpectralBasis {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// The seed that produced the split (the base seed plus retries).
    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn idempotents(&self) -> &[DMatrix<f64>] {
        &self.idempotents
    }

    pub fn idempotent(&self, j: usize) -> &DMatrix<f64> {
        &self.idempotents[j]
    }

    /// First eigenmatrix, `P[j][i] = p_i(j)`.
    pub fn eigenmatrix_p(&self) -> &DMatrix<f64> {
        &self.p
    }

    /// Second eigenmatrix, `Q[j][i] = q_i(j)`.
    pub fn eigenmatrix_q(&self) -> &DMatrix<f64> {
        &self.q
    }

    /// `p_i(j)`: eigenvalue of `A_i` on `E_j`.
    #[inline]
    pub fn p(&self, i: usize, j: usize) -> f64 {
        self.p[(j, i)]
    }

    /// `q_i(j)`: coefficient of `A_j` in `n E_i`.
    #[inline]
    pub fn q(&self, i: usize, j: usize) -> f64 {
        self.q[(j, i)]
    }

    /// Ranks of the idempotents (exact eigenspace dimensions).
    pub fn multiplicities(&self) -> Vec<usize> {
        self.mult.clone()
    }

    pub fn valencies(&self) -> &[usize] {
        &self.valency
    }

    /// Largest residual of each defining identity, in Frobenius norm.
    pub fn residuals(&self, table: &RelationTable) -> SpectralResiduals {
        let n = self.n;
        let w = self.d + 1;
        let nf = n as f64;
        let adj: Vec<_> = (0..w).map(|i| table.adjacency(i)).collect();

        let e0 = (&self.idempotents[0] - DMatrix::from_element(n, n, 1.0 / nf)).norm();
        let sum = self.idempotents.iter().fold(DMatrix::zeros(n, n), |acc, e| acc + e);
        let sum_to_identity = (sum - DMatrix::<f64>::identity(n, n)).norm();

        let mut orthogonality: f64 = 0.0;
        for i in 0..w {
            for j in i..w {
                let prod = &self.idempotents[i] * &self.idempotents[j];
                let r = if i == j { (prod - &self.idempotents[i]).norm() } else { prod.norm() };
                orthogonality = orthogonality.max(r);
            }
        }

        let pq = (&self.p * &self.q - DMatrix::<f64>::identity(w, w) * nf).norm();

        let mut reconstruct_p: f64 = 0.0;
        let mut reconstruct_q: f64 = 0.0;
        for i in 0..w {
            let mut a = -&adj[i];
            let mut e = &self.idempotents[i] * nf;
            for j in 0..w {
                a += &self.idempotents[j] * self.p(i, j);
                e -= &adj[j] * self.q(i, j);
            }
            reconstruct_p = reconstruct_p.max(a.norm());
            reconstruct_q = reconstruct_q.max(e.norm());
        }

        let multiplicity_drift = (0..w)
            .map(|i| (self.q(i, 0) - self.mult[i] as f64).abs())
            .fold(0.0, f64::max);

        SpectralResiduals {
            e0,
            sum_to_identity,
            orthogonality,
            pq,
            reconstruct_p,
            reconstruct_q,
            multiplicity_drift,
            multiplicities_sum_to_n: self.mult.iter().sum::<usize>() == n && self.mult.iter().all(|&m| m > 0),
        }
    }
}

/// Residuals of the identities a [`SpectralBasis`] must satisfy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralResiduals {
    /// `E_0 - J/n`
    pub e0: f64,
    /// `sum_i E_i - I`
    pub sum_to_identity: f64,
    /// `max_{i,j} E_i E_j - delta_ij E_i`
    pub orthogonality: f64,
    /// `P Q - n I`
    pub pq: f64,
    /// `max_i sum_j p_i(j) E_j - A_i`
    pub reconstruct_p: f64,
    /// `max_i n E_i - sum_j q_i(j) A_j`
    pub reconstruct_q: f64,
    /// `max_i |q_i(0) - m_i|`
    pub multiplicity_drift: f64,
    pub multiplicities_sum_to_n: bool,
}

impl SpectralResiduals {
    pub fn max(&self) -> f64 {
        [
            self.e0,
            self.sum_to_identity,
            self.orthogonality,
            self.pq,
            self.reconstruct_p,
            self.reconstruct_q,
            self.multiplicity_drift,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

/// Computes the primitive idempotents with the default seed.
pub fn primitive_idempotents(
    table: &RelationTable,
    tensor: &IntersectionTensor,
    tol: f64,
) -> Result<SpectralBasis> {
    primitive_idempotents_seeded(table, tensor, tol, DEFAULT_SEED)
}

/// Splits the algebra with a generic element `T = sum_i c_i A_i`.
///
/// Eigenspaces of `T` are the common eigenspaces of the `A_i` exactly when
/// `T` has `d + 1` distinct eigenvalues; otherwise the next seed is tried.
pub fn primitive_idempotents_seeded(
    table: &RelationTable,
    tensor: &IntersectionTensor,
    tol: f64,
    seed: u64,
) -> Result<SpectralBasis> {
    let n = table.n();
    let d = table.d();
    let w = d + 1;
    let adj: Vec<_> = (0..w).map(|i| table.adjacency(i)).collect();

    let mut found = 0;
    for attempt in 0..MAX_ATTEMPTS {
        let seed = seed.wrapping_add(attempt as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut generic = DMatrix::zeros(n, n);
        for a in &adj[1..] {
            generic += a * rng.gen_range(-1.0..1.0);
        }
        let eigen = SymmetricEigen::new(generic);
        let clusters = cluster_eigenvalues(eigen.eigenvalues.as_slice());
        found = clusters.len();
        if found != w {
            continue;
        }
        let projectors: Vec<DMatrix<f64>> = clusters
            .iter()
            .map(|cols| {
                let v = DMatrix::from_fn(n, cols.len(), |r, c| eigen.eigenvectors[(r, cols[c])]);
                &v * v.transpose()
            })
            .collect();
        let ranks: Vec<usize> = clusters.iter().map(Vec::len).collect();
        return Ok(assemble(table, tensor, projectors, ranks, tol, seed));
    }
    Err(Error::DegenerateSplit { expected: w, found, attempts: MAX_ATTEMPTS })
}

/// Groups eigenvalue indices whose sorted neighbours differ by less than the
/// clustering gap.
fn cluster_eigenvalues(values: &[f64]) -> Vec<Vec<usize>> {
    let radius = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let gap = CLUSTER_GAP * radius.max(f64::MIN_POSITIVE);
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut clusters: Vec<Vec<usize>> = Vec::new();
    let mut last = f64::NEG_INFINITY;
    for idx in order {
        if values[idx] - last > gap || clusters.is_empty() {
            clusters.push(Vec::new());
        }
        clusters.last_mut().unwrap().push(idx);
        last = values[idx];
    }
    clusters
}

fn assemble(
    table: &RelationTable,
    tensor: &IntersectionTensor,
    projectors: Vec<DMatrix<f64>>,
    ranks: Vec<usize>,
    tol: f64,
    seed: u64,
) -> SpectralBasis {
    let n = table.n();
    let w = table.d() + 1;
    let valency = tensor.valencies().to_vec();

    // gram[i][j] = <A_i, E_j>_F
    let mut gram = vec![vec![0.0; w]; w];
    for (j, e) in projectors.iter().enumerate() {
        for x in 0..n {
            for y in 0..n {
                gram[table.get(x, y)][j] += e[(x, y)];
            }
        }
    }
    let traces: Vec<f64> = projectors.iter().map(|e| e.trace()).collect();
    let eig = |i: usize, j: usize| gram[i][j] / traces[j];

    let trivial = (0..w)
        .max_by(|&a, &b| {
            let sa: f64 = (0..w).map(|i| gram[i][a]).sum();
            let sb: f64 = (0..w).map(|i| gram[i][b]).sum();
            sa.total_cmp(&sb)
        })
        .expect("at least one idempotent");

    // default order: E_0, then descending p_1(j), ties by ascending rank,
    // then by the remaining eigenvalue columns
    let key = |x: f64| (x * 1e6).round() as i64;
    let mut rest: Vec<usize> = (0..w).filter(|&j| j != trivial).collect();
    rest.sort_by(|&a, &b| {
        key(eig(1, b))
            .cmp(&key(eig(1, a)))
            .then(ranks[a].cmp(&ranks[b]))
            .then_with(|| {
                (2..w)
                    .map(|i| key(eig(i, b)).cmp(&key(eig(i, a))))
                    .find(|o| *o != Ordering::Equal)
                    .unwrap_or(Ordering::Equal)
            })
    });
    let order: Vec<usize> = std::iter::once(trivial).chain(rest).collect();

    let p = DMatrix::from_fn(w, w, |j, i| eig(i, order[j]));
    let q = DMatrix::from_fn(w, w, |j, i| gram[j][order[i]] / valency[j] as f64);
    let mult = order.iter().map(|&j| ranks[j]).collect();
    let mut slots: Vec<Option<DMatrix<f64>>> = projectors.into_iter().map(Some).collect();
    let idempotents = order.iter().map(|&j| slots[j].take().unwrap()).collect();

    SpectralBasis { n, d: w - 1, idempotents, p, q, mult, valency, tol, seed }
}

/// Krein parameters `q_ij^k`, defined by `E_i o E_j = (1/n) sum_k q_ij^k E_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct KreinTensor {
    d: usize,
    q: Vec<f64>,
    min_entry: f64,
    tol: f64,
}

impl KreinTensor {
    pub fn d(&self) -> usize {
        self.d
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> f64 {
        let w = self.d + 1;
        self.q[(i * w + j) * w + k]
    }

    /// Most negative (or smallest) entry found.
    pub fn min_entry(&self) -> f64 {
        self.min_entry
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }
}

/// `q_ij^k = (n / m_k) tr(E_k (E_i o E_j))`.
pub fn krein_parameters(basis: &SpectralBasis) -> Result<KreinTensor> {
    let w = basis.d + 1;
    let nf = basis.n as f64;
    let traces: Vec<f64> = basis.idempotents.iter().map(|e| e.trace()).collect();
    let mut q = vec![0.0; w * w * w];
    for i in 0..w {
        for j in i..w {
            let hadamard = basis.idempotents[i].component_mul(&basis.idempotents[j]);
            for k in 0..w {
                // E_k and the Hadamard product are symmetric: tr(E_k H) = <E_k, H>_F
                let value = nf / traces[k] * basis.idempotents[k].dot(&hadamard);
                q[(i * w + j) * w + k] = value;
                q[(j * w + i) * w + k] = value;
            }
        }
    }
    let mut min_entry = f64::INFINITY;
    let mut worst = (0, 0, 0);
    for i in 0..w {
        for j in 0..w {
            for k in 0..w {
                let v = q[(i * w + j) * w + k];
                if v < min_entry {
                    min_entry = v;
                    worst = (i, j, k);
                }
            }
        }
    }
    if min_entry < -10.0 * basis.tol {
        let (i, j, k) = worst;
        return Err(Error::KreinViolation { i, j, k, value: min_entry });
    }
    Ok(KreinTensor { d: w - 1, q, min_entry, tol: basis.tol })
}

/// A row of eigenvalues read off one eigenmatrix column, with a distinctness
/// flag.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenRow {
    pub e: usize,
    pub values: Vec<f64>,
    pub distinct: bool,
}

fn eigen_row(e: usize, d: usize, tol: f64, read: impl Fn(usize) -> f64) -> Result<EigenRow> {
    if e == 0 || e > d {
        return Err(Error::IndexOutOfRange { index: e, d });
    }
    let values: Vec<f64> = (0..=d).map(read).collect();
    let distinct = min_gap(&values).map_or(true, |(gap, _, _)| gap > tol);
    Ok(EigenRow { e, values, distinct })
}

/// Smallest pairwise distance and the pair attaining it.
pub(crate) fn min_gap(values: &[f64]) -> Option<(f64, usize, usize)> {
    let mut best: Option<(f64, usize, usize)> = None;
    for a in 0..values.len() {
        for b in a + 1..values.len() {
            let gap = (values[a] - values[b]).abs();
            if best.map_or(true, |(g, _, _)| gap < g) {
                best = Some((gap, a, b));
            }
        }
    }
    best
}

/// Dual eigenvalues `(q_e(0), ..., q_e(d))` attached to `E_e`.
pub fn dual_eigenvalue_row(basis: &SpectralBasis, e: usize) -> Result<EigenRow> {
    eigen_row(e, basis.d, basis.tol, |j| basis.q(e, j))
}

/// Eigenvalues `(p_e(0), ..., p_e(d))` of `A_e`.
pub fn eigenvalue_row(basis: &SpectralBasis, e: usize) -> Result<EigenRow> {
    eigen_row(e, basis.d, basis.tol, |j| basis.p(e, j))
}
