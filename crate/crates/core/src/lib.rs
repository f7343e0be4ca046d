//! Bose–Mesner spectral analysis of symmetric association schemes.
//!
//! The crate is organised bottom-up:
//!
//! | Module | Purpose |
//! |--------|---------|
//! | [`scheme`] | relation tables, axiom validation, intersection numbers |
//! | [`spectral`] | primitive idempotents, eigenmatrices `P`/`Q`, Krein parameters |
//! | [`polyprops`] | P-/Q-polynomial detection by three independent routes |
//! | [`catalog`] | reference schemes (cycles, Hamming, Johnson, icosahedron, ...) |
//! | [`io`] | scheme files |
//! | [`report`] | the full analysis pipeline and its reports |
//!
//! ```
//! use bmscheme::{catalog, scheme, spectral};
//!
//! let entry = catalog::petersen();
//! let tensor = scheme::validate_axioms(&entry.table).unwrap();
//! let basis = spectral::primitive_idempotents(&entry.table, &tensor, 1e-8).unwrap();
//! assert_eq!(basis.multiplicities(), vec![1, 5, 4]);
//! ```

pub mod catalog;
mod error;
pub mod io;
pub mod polyprops;
pub mod report;
pub mod scheme;
pub mod spectral;

pub use error::{Error, Result};
pub use scheme::{IntersectionTensor, RelationTable};
pub use spectral::{KreinTensor, SpectralBasis};

/// Snap distance used for every "is this an integer" diagnostic.
pub const INTEGRAL_TOL: f64 = 1e-6;

/// Whether `x` lies within [`INTEGRAL_TOL`] of an integer. Never rounds `x`.
pub fn is_integral(x: f64) -> bool {
    (x - x.round()).abs() <= INTEGRAL_TOL
}
