//! Sequence representations, generator families, sectors and weights.

mod family;
pub(crate) mod parse;
pub mod random;
mod sector;
mod sequence;
mod weight;

pub use family::{Family, FamilySpec};
pub use sector::{in_sector, sector_dominance_constant, Sector};
pub use sequence::{CoefficientSequence, TwoSidedSequence, DEFAULT_GENERATOR_HORIZON};
pub use weight::WeightSequence;

use crate::Complex;
use crate::Result;

/// The first `count` terms of `seq`.
pub fn prefix(seq: &CoefficientSequence, count: usize) -> Result<alloc::vec::Vec<Complex>> {
    seq.prefix(count)
}

/// A series to analyse: a sine series `sum b_k sin kx`, or a two-sided
/// exponential series `sum c_k e^{ikx}`.
#[derive(Debug, Clone, PartialEq)]
pub enum Target {
    Sine(CoefficientSequence),
    TwoSided(TwoSidedSequence),
}

impl Target {
    /// `b` for sine series, the positive side `c_k, k >= 1` otherwise.
    pub fn one_sided(&self) -> &CoefficientSequence {
        match self {
            Self::Sine(b) => b,
            Self::TwoSided(ts) => &ts.pos,
        }
    }

    /// Sine series embedded as `c_k = b_k`, `c_{-k} = -b_k`.
    pub fn two_sided(&self) -> TwoSidedSequence {
        match self {
            Self::Sine(b) => TwoSidedSequence::from_sine(b),
            Self::TwoSided(ts) => ts.clone(),
        }
    }

    pub fn natural_horizon(&self) -> usize {
        match self {
            Self::Sine(b) => b.natural_horizon(),
            Self::TwoSided(ts) => ts.natural_horizon(),
        }
    }
}
