//! P- and Q-polynomial detection.
//!
//! Three independent routes decide whether a scheme is Q-polynomial with
//! respect to a given idempotent `E_e`:
//!
//! 1. [`tridiagonal_orderings`]: an ordering under which `(q_{e,i}^j)` is
//!    irreducible tridiagonal;
//! 2. [`hadamard_filtration`]: the sets `N_h` of idempotents first appearing
//!    in the `h`-th Hadamard power of `E_e`, with `N_d` nonempty;
//! 3. [`qpoly_criterion_main`]: the ratios `K_i` built from the dual
//!    eigenvalues coincide with `-p_i(l)` for some `l`.
//!
//! The dual statement for the P-polynomial property is
//! [`ppoly_criterion_dual`]. [`suzuki_consistency`] and
//! [`integrality_report`] check the structure of multiple Q-orderings and
//! the integrality of `K_i`.

mod filtration;
mod integrality;
mod lagrange;
mod ratios;
mod suzuki;
mod tridiagonal;

pub use filtration::{hadamard_filtration, FiltrationResult};
pub use integrality::{integrality_report, IntegralityReport};
pub use lagrange::lagrange_identity_check;
pub use ratios::{lrs_ratios, ppoly_criterion_dual, qpoly_criterion_main, RatioResult};
pub use suzuki::{suzuki_consistency, suzuki_pattern, SuzukiComparison, SuzukiReport, SuzukiStatus};
pub use tridiagonal::{tridiagonal_orderings, tridiagonal_witness, StructureConstants};

use serde::Serialize;

/// Support threshold for structure constants when deciding tridiagonality.
pub const SUPPORT_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PolyKind {
    #[serde(rename = "P-poly")]
    P,
    #[serde(rename = "Q-poly")]
    Q,
}

/// An ordering `0, e, i_2, ..., i_d` under which the structure constants of
/// `e` form an irreducible tridiagonal matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderingWitness {
    pub kind: PolyKind,
    pub order: Vec<usize>,
    pub e: usize,
}

impl OrderingWitness {
    /// The final index `i_d`.
    pub fn last(&self) -> usize {
        *self.order.last().expect("orderings are nonempty")
    }
}
