//! Test-only oracles, independent of the library's spectral path.
#![allow(dead_code)]

use bmscheme::RelationTable;

pub type Dense = Vec<Vec<f64>>;

pub fn adjacency(table: &RelationTable, i: usize) -> Dense {
    let n = table.n();
    (0..n).map(|x| (0..n).map(|y| f64::from(u8::from(table.get(x, y) == i))).collect()).collect()
}

/// Cyclic Jacobi eigensolver for a symmetric matrix. Returns eigenvalues and
/// eigenvectors (as columns of the second result).
pub fn jacobi_eigen(a: &Dense) -> (Vec<f64>, Dense) {
    let n = a.len();
    let mut m = a.clone();
    let mut v: Dense = (0..n).map(|i| (0..n).map(|j| f64::from(u8::from(i == j))).collect()).collect();
    for _sweep in 0..100 {
        let off: f64 = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).map(|(i, j)| m[i][j] * m[i][j]).sum();
        if off < 1e-26 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if m[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (mkp, mkq) = (m[k][p], m[k][q]);
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let (mpk, mqk) = (m[p][k], m[q][k]);
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
                for k in 0..n {
                    let (vkp, vkq) = (v[k][p], v[k][q]);
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }
    ((0..n).map(|i| m[i][i]).collect(), v)
}

/// Eigenvalues of `a` grouped within `gap`, with the orthogonal projector of
/// each group. Sorted by descending eigenvalue.
pub fn eigenspaces(a: &Dense, gap: f64) -> Vec<(f64, Dense)> {
    let n = a.len();
    let (vals, vecs) = jacobi_eigen(a);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| vals[y].total_cmp(&vals[x]));
    let mut groups: Vec<(f64, Vec<usize>)> = Vec::new();
    for idx in order {
        match groups.last_mut() {
            Some((lead, members)) if (*lead - vals[idx]).abs() < gap => members.push(idx),
            _ => groups.push((vals[idx], vec![idx])),
        }
    }
    groups
        .into_iter()
        .map(|(value, cols)| {
            let proj = (0..n)
                .map(|x| (0..n).map(|y| cols.iter().map(|&c| vecs[x][c] * vecs[y][c]).sum()).collect())
                .collect();
            (value, proj)
        })
        .collect()
}

/// Brute-force spectral data of a scheme generated by `A_1` (any
/// P-polynomial scheme): the eigenspaces of `A_1` are the idempotents.
pub struct BruteSpectrum {
    /// `(eigenvalue of A_1, projector)` in descending eigenvalue order.
    pub spaces: Vec<(f64, Dense)>,
}

impl BruteSpectrum {
    pub fn new(table: &RelationTable) -> Self {
        Self { spaces: eigenspaces(&adjacency(table, 1), 1e-6) }
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.spaces.iter().map(|(_, e)| (0..e.len()).map(|i| e[i][i]).sum::<f64>().round() as usize).collect()
    }

    /// `q_s(j)`: n times the entry of `E_s` on any pair of relation `j`.
    pub fn dual_row(&self, table: &RelationTable, s: usize) -> Vec<f64> {
        let n = table.n();
        let e = &self.spaces[s].1;
        (0..=table.d())
            .map(|j| {
                let y = (0..n).find(|&y| table.get(0, y) == j).unwrap();
                n as f64 * e[0][y]
            })
            .collect()
    }

    /// Eigenvalue of `A_i` on eigenspace `s`, read as `(A_i E_s)[x][x] / E_s[x][x]`
    /// at the point maximising the diagonal.
    pub fn eigenvalue(&self, table: &RelationTable, i: usize, s: usize) -> f64 {
        let e = &self.spaces[s].1;
        let a = adjacency(table, i);
        let n = table.n();
        let col: Vec<f64> = (0..n).map(|x| e[x][0]).collect();
        let image: Vec<f64> = (0..n).map(|x| (0..n).map(|z| a[x][z] * col[z]).sum()).collect();
        let pivot = (0..n).max_by(|&a, &b| col[a].abs().total_cmp(&col[b].abs())).unwrap();
        image[pivot] / col[pivot]
    }
}

/// Straight product formula, written independently of the library.
pub fn ratio_oracle(theta: &[f64]) -> Vec<f64> {
    let d = theta.len() - 1;
    let mut out = Vec::new();
    for i in 1..=d {
        let mut num = 1.0;
        let mut den = 1.0;
        for j in 1..=d {
            if j != i {
                num *= theta[0] - theta[j];
                den *= theta[i] - theta[j];
            }
        }
        out.push(num / den);
    }
    out
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Krawtchouk polynomial `K_i(j)` for `H(n, q)`: the eigenvalue of the
/// distance-`i` relation on the `j`-th eigenspace.
pub fn krawtchouk(n: i64, q: i64, i: i64, j: i64) -> f64 {
    (0..=i)
        .map(|h| {
            let sign = if h % 2 == 0 { 1 } else { -1 };
            sign * (q - 1).pow((i - h) as u32) * binomial(j, h) * binomial(n - j, i - h)
        })
        .sum::<i64>() as f64
}

/// Classical Krein formula from the first eigenmatrix:
/// `q_ij^k = (m_i m_j / n) sum_h p_h(i) p_h(j) p_h(k) / k_h^2`.
pub fn krein_from_eigenmatrix(p: impl Fn(usize, usize) -> f64, mult: &[usize], val: &[usize], n: usize, i: usize, j: usize, k: usize) -> f64 {
    let s: f64 = (0..val.len())
        .map(|h| p(h, i) * p(h, j) * p(h, k) / (val[h] * val[h]) as f64)
        .sum();
    (mult[i] * mult[j]) as f64 / n as f64 * s
}

/// Breadth-first valencies from vertex 0.
pub fn bfs_valencies(adj: &[Vec<u8>]) -> Vec<usize> {
    let n = adj.len();
    let mut dist = vec![usize::MAX; n];
    dist[0] = 0;
    let mut frontier = vec![0];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &u in &frontier {
            for v in 0..n {
                if adj[u][v] == 1 && dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    let d = dist.iter().copied().max().unwrap();
    (0..=d).map(|r| dist.iter().filter(|&&x| x == r).count()).collect()
}
