//! Condition classifiers and uniform-convergence diagnostics for
//! trigonometric series with null coefficient sequences.
//!
//! The crate is `no_std` and needs only `alloc`. It covers
//!
//! * [`seq_model`]: coefficient sequences, closed-form generator families,
//!   sectors `K(theta0)` and weights `R(n)`;
//! * [`classifiers`]: membership checks with minimal-constant estimates for
//!   quasimonotonicity, O-regular variation, rest and group bounded variation
//!   and the sector/summability conditions on two-sided series;
//! * [`series_eval`]: partial sums, tail sup-norm estimates on refined grids,
//!   the Dirichlet, Abel and dyadic-block bounds, and the test-point probe;
//! * [`theorem_harness`]: corpus-level numerical checks of the implications
//!   between those conditions.
//!
//! Everything is deterministic: sums are compensated and run in a fixed
//! order, and randomized corpora come from explicit 64-bit seeds.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod classifiers;
mod error;
pub mod seq_model;
pub mod series_eval;
pub mod sum;
pub mod theorem_harness;

pub use error::{Error, Result};

/// Double-precision complex number used for every coefficient.
pub type Complex = num_complex::Complex64;

/// Relative tolerance for "non-increasing" / "non-negative" / sector tests on
/// computed values.
pub const REL_TOL: f64 = 1e-12;
