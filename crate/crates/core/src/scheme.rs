//! Relation tables, the scheme axioms and intersection numbers.
//!
//! A scheme on `n` points with class `d` is stored as a dense `n x n` class
//! map: entry `(x, y)` is the index `i` of the relation `R_i` containing the
//! pair. Adjacency matrices are materialised from it on demand.

use std::collections::VecDeque;

use nalgebra::DMatrix;

use crate::{Error, Result};

/// Partition of `X x X` into relations `R_0..R_d`, as a class map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationTable {
    n: usize,
    d: usize,
    rel: Vec<u16>,
}

impl RelationTable {
    /// Builds a table from rows, checking shape and entry range only.
    ///
    /// The scheme axioms are checked separately by [`validate_axioms`].
    pub fn from_rows(rows: &[Vec<usize>], d: usize) -> Result<Self> {
        let n = rows.len();
        if n < 2 {
            return Err(Error::TooFewPoints(n));
        }
        if d > u16::MAX as usize {
            return Err(Error::BadParameters(format!("class {d} is too large")));
        }
        let mut rel = Vec::with_capacity(n * n);
        for (x, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::RaggedTable { row: x, len: row.len(), n });
            }
            for (y, &value) in row.iter().enumerate() {
                if value > d {
                    return Err(Error::RelationOutOfRange { x, y, value, d });
                }
                rel.push(value as u16);
            }
        }
        Ok(Self { n, d, rel })
    }

    /// Like [`RelationTable::from_rows`] with `d` taken as the largest entry.
    pub fn from_rows_inferred(rows: &[Vec<usize>]) -> Result<Self> {
        let d = rows.iter().flatten().copied().max().unwrap_or(0);
        Self::from_rows(rows, d)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.rel[x * self.n + y] as usize
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.rel
            .chunks(self.n)
            .map(|row| row.iter().map(|&v| v as usize).collect())
            .collect()
    }

    /// The 0/1 adjacency matrix `A_i` of relation `i`.
    pub fn adjacency(&self, i: usize) -> DMatrix<f64> {
        DMatrix::from_fn(self.n, self.n, |x, y| if self.get(x, y) == i { 1.0 } else { 0.0 })
    }

    /// Number of pairs in each relation.
    pub fn relation_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.d + 1];
        for &v in &self.rel {
            sizes[v as usize] += 1;
        }
        sizes
    }
}

/// Intersection numbers `p_ij^k` of a validated symmetric scheme.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionTensor {
    d: usize,
    p: Vec<usize>,
    valency: Vec<usize>,
}

impl IntersectionTensor {
    pub fn d(&self) -> usize {
        self.d
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> usize {
        let w = self.d + 1;
        self.p[(i * w + j) * w + k]
    }

    /// Valencies `k_i = p_ii^0`.
    pub fn valencies(&self) -> &[usize] {
        &self.valency
    }

    /// The intersection matrix `B_i = (p_{i,j}^k)_{j,k}`.
    pub fn intersection_matrix(&self, i: usize) -> Vec<Vec<usize>> {
        (0..=self.d)
            .map(|j| (0..=self.d).map(|k| self.get(i, j, k)).collect())
            .collect()
    }
}

/// Checks the four scheme axioms and returns the intersection numbers.
///
/// Triples are counted by direct enumeration over all `(x, y, z)`.
pub fn validate_axioms(table: &RelationTable) -> Result<IntersectionTensor> {
    let n = table.n;
    let d = table.d;
    if n < 2 {
        return Err(Error::TooFewPoints(n));
    }
    for x in 0..n {
        for y in 0..n {
            let r = table.get(x, y);
            if (x == y) != (r == 0) {
                return Err(Error::BadDiagonal { x, y });
            }
            if r != table.get(y, x) {
                return Err(Error::NotSymmetric { x, y });
            }
        }
    }
    if let Some(empty) = table.relation_sizes().iter().position(|&s| s == 0) {
        return Err(Error::EmptyRelation(empty));
    }

    let w = d + 1;
    // per k: the first pair seen in R_k and its count table
    let mut reference: Vec<Option<((usize, usize), Vec<usize>)>> = vec![None; w];
    let mut counts = vec![0usize; w * w];
    for x in 0..n {
        for y in 0..n {
            counts.iter_mut().for_each(|c| *c = 0);
            for z in 0..n {
                counts[table.get(x, z) * w + table.get(z, y)] += 1;
            }
            let k = table.get(x, y);
            match &reference[k] {
                None => reference[k] = Some(((x, y), counts.clone())),
                Some((first, seen)) => {
                    if let Some(pos) = (0..w * w).find(|&t| seen[t] != counts[t]) {
                        return Err(Error::NotAScheme {
                            i: pos / w,
                            j: pos % w,
                            k,
                            first: *first,
                            first_count: seen[pos],
                            second: (x, y),
                            second_count: counts[pos],
                        });
                    }
                }
            }
        }
    }

    let mut p = vec![0usize; w * w * w];
    for (k, slot) in reference.into_iter().enumerate() {
        let (_, seen) = slot.expect("every relation is nonempty");
        for i in 0..w {
            for j in 0..w {
                p[(i * w + j) * w + k] = seen[i * w + j];
            }
        }
    }
    let valency = (0..w).map(|i| p[(i * w + i) * w]).collect();
    Ok(IntersectionTensor { d, p, valency })
}

/// Verifies `A_i A_j = sum_k p_ij^k A_k` for every `(i, j)` in exact integer
/// arithmetic.
pub fn product_identity_holds(table: &RelationTable, tensor: &IntersectionTensor) -> bool {
    let n = table.n;
    let w = table.d + 1;
    for x in 0..n {
        for y in 0..n {
            let mut walks = vec![0usize; w * w];
            for z in 0..n {
                walks[table.get(x, z) * w + table.get(z, y)] += 1;
            }
            let k = table.get(x, y);
            for i in 0..w {
                for j in 0..w {
                    // (A_i A_j)_{xy} against the single A_k that is nonzero at (x, y)
                    if walks[i * w + j] != tensor.get(i, j, k) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Distance partition of a connected graph: `rel[x][y]` is the graph
/// distance, `d` the diameter. The result is not guaranteed to be a scheme.
pub fn from_distance_partition(adjacency: &[Vec<u8>]) -> Result<RelationTable> {
    let n = adjacency.len();
    if n < 2 {
        return Err(Error::TooFewPoints(n));
    }
    for (x, row) in adjacency.iter().enumerate() {
        if row.len() != n {
            return Err(Error::BadAdjacency(format!("row {x} has {} entries, expected {n}", row.len())));
        }
        if row[x] != 0 {
            return Err(Error::BadAdjacency(format!("loop at vertex {x}")));
        }
        for (y, &a) in row.iter().enumerate() {
            if a > 1 {
                return Err(Error::BadAdjacency(format!("entry ({x},{y}) = {a} is not 0/1")));
            }
            if a != adjacency[y][x] {
                return Err(Error::BadAdjacency(format!("not symmetric at ({x},{y})")));
            }
        }
    }
    let neighbours: Vec<Vec<usize>> = adjacency
        .iter()
        .map(|row| row.iter().enumerate().filter(|(_, &a)| a == 1).map(|(y, _)| y).collect())
        .collect();

    let mut rel = vec![0u16; n * n];
    let mut diameter = 0;
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::with_capacity(n);
    for source in 0..n {
        dist.iter_mut().for_each(|v| *v = usize::MAX);
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &v in &neighbours[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        for (y, &dy) in dist.iter().enumerate() {
            if dy == usize::MAX {
                return Err(Error::Disconnected(source, y));
            }
            diameter = diameter.max(dy);
            rel[source * n + y] = dy as u16;
        }
    }
    Ok(RelationTable { n, d: diameter, rel })
}

/// Adjacency matrix of a simple graph given by its edge list.
pub fn adjacency_from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Vec<Vec<u8>>> {
    let mut adj = vec![vec![0u8; n]; n];
    for &(u, v) in edges {
        if u >= n || v >= n {
            return Err(Error::BadAdjacency(format!("edge ({u},{v}) has a vertex outside 0..{n}")));
        }
        if u == v {
            return Err(Error::BadAdjacency(format!("loop at vertex {u}")));
        }
        adj[u][v] = 1;
        adj[v][u] = 1;
    }
    Ok(adj)
}
