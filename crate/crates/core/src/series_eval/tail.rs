use alloc::format;
use alloc::vec::Vec;

#[allow(unused_imports)] // float methods under no_std
use num_traits::Float;

use super::grid::{GridSpec, DEFAULT_OVERSAMPLE};
use super::kernel::Terms;
use crate::seq_model::Target;
use crate::{Error, Result};

/// Smallest reference horizon used by default.
pub const MIN_REFERENCE_HORIZON: usize = 1 << 16;

/// `max(2^16, 64 n)`.
pub fn default_reference_horizon(n: usize) -> usize {
    MIN_REFERENCE_HORIZON.max(n.saturating_mul(64))
}

/// Grid estimate of `sup_x |S_{N_ref}(x) - S_n(x)|`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TailSupEstimate {
    pub n: usize,
    pub n_ref: usize,
    /// Maximum over the grid: a lower estimate of the sup-norm of the
    /// truncated tail.
    pub sup_estimate: f64,
    /// Grid point attaining the maximum (`0` when the tail vanishes).
    pub argmax: f64,
    /// Upper bound for `sum_{k > N_ref} |c_k| + |c_{-k}|` when one is known;
    /// then the true tail sup-norm lies in
    /// `[sup_estimate - slack, sup + slack]`.
    pub truncation_slack: Option<f64>,
    pub grid_points: usize,
}

fn slack(target: &Target, n_ref: usize) -> Option<f64> {
    match target {
        Target::Sine(b) => b.abs_tail_after(n_ref),
        Target::TwoSided(ts) => Some(ts.pos.abs_tail_after(n_ref)? + ts.neg.abs_tail_after(n_ref)?),
    }
}

fn terms(target: &Target, lo: usize, hi: usize) -> Terms {
    match target {
        Target::Sine(b) => Terms::sine(b, lo, hi),
        Target::TwoSided(ts) => Terms::two_sided(ts, lo, hi),
    }
}

/// Maximum of `|sum_{k=lo}^{hi} ...|` over `points` (and their negatives for
/// two-sided series; sine series are odd). Returns `(max, argmax)`.
pub(crate) fn max_over(target: &Target, lo: usize, hi: usize, points: &[f64]) -> (f64, f64) {
    let t = terms(target, lo, hi);
    let mut best = (0.0, 0.0);
    if t.is_empty() {
        return best;
    }
    let two_sided = matches!(target, Target::TwoSided(_));
    for &x in points {
        let mut v = t.eval(x).norm();
        let mut at = x;
        if two_sided {
            let w = t.eval(-x).norm();
            if w > v {
                v = w;
                at = -x;
            }
        }
        if v > best.0 {
            best = (v, at);
        }
    }
    best
}

/// `max |S_{N_ref} - S_n|` over explicit points.
pub fn tail_sup_norm_on(
    target: &Target,
    n: usize,
    n_ref: usize,
    points: &[f64],
) -> Result<TailSupEstimate> {
    if points.is_empty() {
        return Err(Error::EmptyGrid);
    }
    if n_ref < n {
        return Err(Error::InvalidArgument(format!(
            "N_ref = {} is below n = {}",
            n_ref, n
        )));
    }
    let (sup_estimate, argmax) = max_over(target, n + 1, n_ref, points);
    Ok(TailSupEstimate {
        n,
        n_ref,
        sup_estimate,
        argmax,
        truncation_slack: slack(target, n_ref),
        grid_points: points.len(),
    })
}

/// `max |S_{N_ref} - S_n|` over the points of `grid`; `n_ref = None` picks
/// [`default_reference_horizon`].
pub fn tail_sup_norm(
    target: &Target,
    n: usize,
    n_ref: Option<usize>,
    grid: &GridSpec,
) -> Result<TailSupEstimate> {
    let n_ref = n_ref.unwrap_or_else(|| default_reference_horizon(n));
    tail_sup_norm_on(target, n, n_ref, &grid.points()?)
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CurveEntry {
    pub n: usize,
    pub sup_estimate: f64,
    pub truncation_slack: Option<f64>,
    /// `max_{n <= k < 2n} k |c_k|`.
    pub max_k_ck: f64,
}

/// How each row of a curve was evaluated.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CurveOptions {
    /// Fixed reference horizon, or `None` for `max(2^16, 64 n)` per row.
    pub n_ref: Option<usize>,
    /// Grid oversampling; row `n` uses `grid(n, oversample)`.
    pub oversample: usize,
}

impl Default for CurveOptions {
    fn default() -> Self {
        Self {
            n_ref: None,
            oversample: DEFAULT_OVERSAMPLE,
        }
    }
}

/// Tail sup-norm estimates against `max k |c_k|` on dyadic-like `n`.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TailNormCurve {
    pub entries: Vec<CurveEntry>,
    pub grid: CurveOptions,
}

/// One row per `n` in `n_list` (strictly ascending, `n >= 1`).
pub fn convergence_curve(
    target: &Target,
    n_list: &[usize],
    options: &CurveOptions,
) -> Result<TailNormCurve> {
    if n_list.is_empty() || n_list[0] == 0 || n_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument(format!(
            "n list must be nonempty, positive and strictly ascending: {:?}",
            n_list
        )));
    }
    let c = target.one_sided();
    let mut entries = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let grid = GridSpec::new(n).with_oversample(options.oversample);
        let est = tail_sup_norm(target, n, options.n_ref, &grid)?;
        let max_k_ck = (n..2 * n)
            .map(|k| k as f64 * c.value_or_zero(k).norm())
            .fold(0.0, f64::max);
        entries.push(CurveEntry {
            n,
            sup_estimate: est.sup_estimate,
            truncation_slack: est.truncation_slack,
            max_k_ck,
        });
    }
    Ok(TailNormCurve {
        entries,
        grid: *options,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq_model::{CoefficientSequence, FamilySpec, TwoSidedSequence};

    fn sine(spec: FamilySpec) -> Target {
        Target::Sine(CoefficientSequence::generator(spec))
    }

    #[test]
    fn zero_series_has_zero_tail() {
        let t = Target::TwoSided(TwoSidedSequence::zero());
        let e = tail_sup_norm(&t, 5, None, &GridSpec::new(5)).unwrap();
        assert_eq!(e.sup_estimate, 0.0);
        assert_eq!(e.truncation_slack, Some(0.0));
        assert!(matches!(
            tail_sup_norm_on(&t, 5, 100, &[]),
            Err(Error::EmptyGrid)
        ));
    }

    #[test]
    fn lacunary_tail_below_absolute_bound() {
        let t = sine(FamilySpec::lacunary(1.0));
        let e = tail_sup_norm(&t, 100, None, &GridSpec::new(100)).unwrap();
        let bound = 2f64.powi(-6);
        assert!(e.sup_estimate <= bound + e.truncation_slack.unwrap());
        assert!(e.sup_estimate > 0.5 * bound);
    }

    #[test]
    fn harmonic_tail_does_not_vanish() {
        let t = sine(FamilySpec::harmonic(1.0));
        for n in [64, 256] {
            let e = tail_sup_norm(&t, n, None, &GridSpec::new(n)).unwrap();
            assert!(e.sup_estimate >= 1.0, "n = {}: {}", n, e.sup_estimate);
            assert!(e.truncation_slack.is_none());
        }
    }

    #[test]
    fn enlarging_the_grid_never_lowers_the_estimate() {
        let t = sine(FamilySpec::log_damped());
        let g = GridSpec::new(50);
        let a = tail_sup_norm(&t, 50, Some(4096), &g).unwrap();
        let b =
            tail_sup_norm(&t, 50, Some(4096), &g.clone().with_extra([0.011, 0.5, 1.7])).unwrap();
        assert!(b.sup_estimate >= a.sup_estimate);
    }

    #[test]
    fn curve_rows() {
        let t = sine(FamilySpec::harmonic(1.0));
        let options = CurveOptions {
            n_ref: Some(4096),
            oversample: 4,
        };
        let curve = convergence_curve(&t, &[8, 16, 32], &options).unwrap();
        assert_eq!(curve.entries.len(), 3);
        assert!(curve
            .entries
            .iter()
            .all(|e| (e.max_k_ck - 1.0).abs() < 1e-15));
        assert!(convergence_curve(&t, &[16, 8], &options).is_err());

        let zero = sine(FamilySpec::new(crate::seq_model::Family::Zero));
        let curve = convergence_curve(&zero, &[8], &CurveOptions::default()).unwrap();
        assert_eq!(curve.entries[0].sup_estimate, 0.0);
        assert_eq!(curve.entries[0].max_k_ck, 0.0);
    }
}
