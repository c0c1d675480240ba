use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)] // float methods under no_std
use num_traits::Float;

use super::kernel::{check_domain, partial_sum_sine_range};
use crate::seq_model::CoefficientSequence;
use crate::sum::NeumaierSum;
use crate::{Error, Result, REL_TOL};

/// `sum_{k=from}^{to} |c_k - c_{k+1}|`, finite-support semantics.
pub fn variation(c: &CoefficientSequence, from: usize, to: usize) -> f64 {
    let mut acc = NeumaierSum::new();
    let mut prev = c.value_or_zero(from);
    for k in from..=to {
        let next = c.value_or_zero(k + 1);
        acc.add((prev - next).norm());
        prev = next;
    }
    acc.value()
}

/// Abel bound for `|sum_{k=N}^{H} c_k sin kx|`:
/// `(pi / x) (sum_{k=N}^{H} |Δc_k| + |c_{H+1}| + |c_N|)`.
///
/// Summation by parts gives
/// `sum_{k=N}^{H-1} Δc_k D_k(x) + c_H D_H(x) - c_N D_{N-1}(x)`, and
/// `|D_k(x)| <= pi / x` together with `|c_H| <= |Δc_H| + |c_{H+1}|` yields
/// the bound for every horizon `H`, stabilized or not. Test builds compare it
/// against the directly summed tail on every call.
pub fn abel_tail_bound(c: &CoefficientSequence, n: usize, x: f64, horizon: usize) -> Result<f64> {
    check_domain("x", x)?;
    if n == 0 || horizon < n {
        return Err(Error::InvalidArgument(format!(
            "Abel bound needs 1 <= N <= horizon, got N = {}, horizon = {}",
            n, horizon
        )));
    }
    let mut acc = NeumaierSum::new();
    acc.add(variation(c, n, horizon));
    acc.add(c.value_or_zero(horizon + 1).norm());
    acc.add(c.value_or_zero(n).norm());
    let bound = PI / x * acc.value();
    debug_assert!(
        {
            let actual = partial_sum_sine_range(c, n, horizon, x).norm();
            actual <= bound * (1.0 + 1e-9) + 1e-300
        },
        "Abel bound {} violated at N = {}, x = {}",
        bound,
        n,
        x
    );
    Ok(bound)
}

/// One dyadic block `[2^j N, min(2^{j+1} N - 1, H)]`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct DyadicBlock {
    pub start: usize,
    pub end: usize,
    /// `sum_{k=start}^{end} |Δc_k|`.
    pub variation: f64,
    /// `max |c_k|` over the window `[start, start + N0)`.
    pub window_max: f64,
    /// Index attaining `window_max`.
    pub argmax: usize,
}

/// Truncated total variation from `N` split into dyadic blocks.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct DyadicVariation {
    pub n: usize,
    pub n0: usize,
    pub horizon: usize,
    /// `sum_{k=N}^{H} |Δc_k|`.
    pub total_variation: f64,
    pub blocks: Vec<DyadicBlock>,
}

/// The terms of the geometric-decay step: if `k |c_k| <= eps` on the blocks
/// then `sum_j |c_{k_j}| <= (eps / N) sum_j 2^{-j}`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct DecayStep {
    /// `max_j k_j |c_{k_j}|`.
    pub eps: f64,
    /// `sum_j |c_{k_j}|`.
    pub lhs: f64,
    /// `(eps / N) sum_j 2^{-j}`.
    pub rhs: f64,
}

impl DyadicVariation {
    /// `sum_j |c_{k_j}|`.
    pub fn window_sum(&self) -> f64 {
        self.blocks
            .iter()
            .map(|b| b.window_max)
            .collect::<NeumaierSum>()
            .value()
    }

    /// `total_variation <= m sum_j |c_{k_j}|`.
    pub fn dominated(&self, m: f64) -> bool {
        let rhs = m * self.window_sum();
        self.total_variation <= rhs + REL_TOL * self.total_variation.max(rhs)
    }

    /// Starts of blocks whose variation exceeds `m |c_{k_j}|`.
    pub fn block_violations(&self, m: f64) -> Vec<usize> {
        self.blocks
            .iter()
            .filter(|b| {
                let rhs = m * b.window_max;
                b.variation > rhs + REL_TOL * b.variation.max(rhs)
            })
            .map(|b| b.start)
            .collect()
    }

    pub fn decay_step(&self) -> DecayStep {
        let eps = self
            .blocks
            .iter()
            .map(|b| b.argmax as f64 * b.window_max)
            .fold(0.0, f64::max);
        let geometric: f64 = (0..self.blocks.len()).map(|j| (-(j as f64)).exp2()).sum();
        DecayStep {
            eps,
            lhs: self.window_sum(),
            rhs: eps / self.n as f64 * geometric,
        }
    }
}

/// Splits `sum_{k=N}^{H} |Δc_k|` over the blocks `[2^j N, 2^{j+1} N)` and
/// records the largest `|c_k|` in the first `N0` indices of each block.
pub fn dyadic_variation_bound(
    c: &CoefficientSequence,
    n: usize,
    n0: usize,
    horizon: usize,
) -> Result<DyadicVariation> {
    if n == 0 || n0 == 0 || horizon < n {
        return Err(Error::InvalidArgument(format!(
            "dyadic bound needs N >= 1, N0 >= 1, horizon >= N; got N = {}, N0 = {}, horizon = {}",
            n, n0, horizon
        )));
    }
    let mut blocks = Vec::new();
    let mut start = n;
    while start <= horizon {
        let end = start.saturating_mul(2).saturating_sub(1).min(horizon);
        let (argmax, window_max) = (start..start + n0)
            .map(|k| (k, c.value_or_zero(k).norm()))
            .fold(
                (start, -1.0),
                |best, cur| if cur.1 > best.1 { cur } else { best },
            );
        blocks.push(DyadicBlock {
            start,
            end,
            variation: variation(c, start, end),
            window_max,
            argmax,
        });
        start = start.saturating_mul(2);
    }
    Ok(DyadicVariation {
        n,
        n0,
        horizon,
        total_variation: variation(c, n, horizon),
        blocks,
    })
}

/// The low-frequency piece of the tail split at `N = floor(1/x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct LowFrequencyEstimate {
    /// `floor(1 / x)`.
    pub split: usize,
    /// `|sum_{k=n}^{N-1} c_k sin kx|`.
    pub lhs: f64,
    /// `x sum_{k=n}^{N-1} k |c_k|`.
    pub rhs: f64,
    /// `N <= n`: the range is empty and only the high-frequency estimate applies.
    pub high_frequency_only: bool,
}

/// `|sum_{k=n}^{N-1} c_k sin kx| <= x sum_{k=n}^{N-1} k |c_k|` with
/// `N = floor(1/x)`, from `|sin kx| <= kx`.
pub fn low_frequency_estimate(
    c: &CoefficientSequence,
    n: usize,
    x: f64,
) -> Result<LowFrequencyEstimate> {
    check_domain("x", x)?;
    let split = (1.0 / x).floor() as usize;
    if split <= n {
        return Ok(LowFrequencyEstimate {
            split,
            lhs: 0.0,
            rhs: 0.0,
            high_frequency_only: true,
        });
    }
    let lhs = partial_sum_sine_range(c, n, split - 1, x).norm();
    let weighted: NeumaierSum = (n..split)
        .map(|k| k as f64 * c.value_or_zero(k).norm())
        .collect();
    Ok(LowFrequencyEstimate {
        split,
        lhs,
        rhs: x * weighted.value(),
        high_frequency_only: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq_model::FamilySpec;

    fn harmonic() -> CoefficientSequence {
        CoefficientSequence::generator(FamilySpec::harmonic(1.0))
    }

    #[test]
    fn abel_examples() {
        let b = abel_tail_bound(&harmonic(), 10, 0.1, 1 << 16).unwrap();
        assert!((b - 2.0 * PI).abs() < 1e-9);
        let actual = partial_sum_sine_range(&harmonic(), 10, 1 << 16, 0.1).norm();
        assert!(actual <= b);
        let zero = CoefficientSequence::explicit_real(&[0.0; 8]).unwrap();
        assert_eq!(abel_tail_bound(&zero, 2, 1.0, 6).unwrap(), 0.0);
        assert!(abel_tail_bound(&harmonic(), 10, 0.0, 100).is_err());
    }

    #[test]
    fn dyadic_examples() {
        let d = dyadic_variation_bound(&harmonic(), 16, 1, 1 << 16).unwrap();
        assert!((d.total_variation - (1.0 / 16.0 - 1.0 / 65537.0)).abs() < 1e-14);
        assert!((d.window_sum() - (1.0 / 8.0 - 1.0 / 65536.0)).abs() < 1e-14);
        assert!(d.dominated(2.0 / 3.0));
        assert!(d.block_violations(2.0 / 3.0).is_empty());
        let step = d.decay_step();
        assert!((step.eps - 1.0).abs() < 1e-15 && step.lhs <= step.rhs * (1.0 + 1e-12));

        let lac = CoefficientSequence::generator(FamilySpec::lacunary(1.0));
        let d = dyadic_variation_bound(&lac, 3, 1, 1 << 10).unwrap();
        assert_eq!(d.blocks[0].window_max, 0.0);
        assert!(d.blocks[0].variation > 0.0);
        assert!(!d.dominated(1e6));
        assert!(d.block_violations(1e6).contains(&3));
    }

    #[test]
    fn low_frequency_piece() {
        let e = low_frequency_estimate(&harmonic(), 3, 0.01).unwrap();
        assert_eq!(e.split, 100);
        assert!(e.lhs <= e.rhs);
        assert!((e.rhs - 0.01 * 97.0).abs() < 1e-12);
        assert!(
            low_frequency_estimate(&harmonic(), 3, 1.5)
                .unwrap()
                .high_frequency_only
        );
    }
}
