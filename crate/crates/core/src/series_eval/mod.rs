//! Partial sums of sine and two-sided exponential series, tail sup-norm
//! estimates on refined grids, and the explicit bounds used in the
//! uniform-convergence argument: the Dirichlet kernel bound, the Abel
//! summation bound, the dyadic block split and the test-point probe.
//!
//! Explicit coefficient sequences are finitely supported here: terms past
//! the stored data count as zero.

mod bounds;
mod grid;
mod kernel;
mod probe;
mod tail;

pub use bounds::{
    abel_tail_bound, dyadic_variation_bound, low_frequency_estimate, variation, DecayStep,
    DyadicBlock, DyadicVariation, LowFrequencyEstimate,
};
pub use grid::{GridSpec, DEFAULT_OVERSAMPLE};
pub use kernel::{
    dirichlet_sine, partial_sum_sine, partial_sum_sine_range, partial_sum_two_sided,
    partial_sum_two_sided_split,
};
pub use probe::{lemma2_testpoint_probe, TestPointProbe};
pub use tail::{
    convergence_curve, default_reference_horizon, tail_sup_norm, tail_sup_norm_on, CurveEntry,
    CurveOptions, TailNormCurve, TailSupEstimate, MIN_REFERENCE_HORIZON,
};
