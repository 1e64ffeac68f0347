//! Chu spaces over arbitrary value sets, with an exact quantum representation.
//!
//! The crate has three layers:
//!
//! * [`scalar`] and [`hilbert`] provide exact linear algebra over the
//!   Gaussian rationals: vectors, inner products, closed subspaces in
//!   canonical reduced-basis form, projections, and semilinear maps.
//! * [`chu`] and [`solver`] provide finite Chu spaces, the Chu morphism
//!   condition, composition, biextensional collapse, and exhaustive
//!   morphism enumeration.
//! * [`quantum`] and [`reduction`] tie the two together: sampled quantum
//!   Chu spaces whose evaluations are exact rationals in `[0, 1]`,
//!   morphisms induced by semiunitaries, and the value-set reduction
//!   functors with their two- and three-valued behaviour.
//!
//! Everything is immutable after construction and every operation is pure,
//! so all types are safe to share across threads.

pub mod chu;
pub mod demo;
mod error;
pub mod hilbert;
pub mod quantum;
pub mod reduction;
pub mod scalar;
pub mod solver;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
