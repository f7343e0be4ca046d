use super::{OrderingWitness, PolyKind};
use crate::scheme::IntersectionTensor;
use crate::spectral::KreinTensor;

/// A three-index table of structure constants `c_ij^k`.
pub trait StructureConstants {
    const KIND: PolyKind;

    fn class(&self) -> usize;

    fn constant(&self, i: usize, j: usize, k: usize) -> f64;
}

impl StructureConstants for IntersectionTensor {
    const KIND: PolyKind = PolyKind::P;

    fn class(&self) -> usize {
        self.d()
    }

    fn constant(&self, i: usize, j: usize, k: usize) -> f64 {
        self.get(i, j, k) as f64
    }
}

impl StructureConstants for KreinTensor {
    const KIND: PolyKind = PolyKind::Q;

    fn class(&self) -> usize {
        self.d()
    }

    fn constant(&self, i: usize, j: usize, k: usize) -> f64 {
        self.get(i, j, k)
    }
}

/// Greedy search for an ordering starting `0, e` under which
/// `(c_{e, i_a}^{i_b})_{a,b}` is irreducible tridiagonal.
pub fn tridiagonal_witness<T: StructureConstants>(tensor: &T, e: usize, tol: f64) -> Option<OrderingWitness> {
    let d = tensor.class();
    if e == 0 || e > d {
        return None;
    }
    let mut order = vec![0, e];
    let mut used = vec![false; d + 1];
    used[0] = true;
    used[e] = true;
    while order.len() <= d {
        let current = *order.last().unwrap();
        let mut next = (0..=d).filter(|&k| !used[k] && tensor.constant(e, current, k) > tol);
        let (Some(k), None) = (next.next(), next.next()) else {
            return None;
        };
        used[k] = true;
        order.push(k);
    }
    let banded = (0..=d).all(|a| {
        (0..=d).all(|b| {
            let c = tensor.constant(e, order[a], order[b]);
            match a.abs_diff(b) {
                1 => c > tol,
                0 => true,
                _ => c.abs() <= tol,
            }
        })
    });
    banded.then_some(OrderingWitness { kind: T::KIND, order, e })
}

/// Every tridiagonal witness, one per successful `e` in `1..=d`.
pub fn tridiagonal_orderings<T: StructureConstants>(tensor: &T, tol: f64) -> Vec<OrderingWitness> {
    (1..=tensor.class()).filter_map(|e| tridiagonal_witness(tensor, e, tol)).collect()
}
