use alloc::format;
use alloc::vec::Vec;

#[allow(unused_imports)] // float methods under no_std
use num_traits::Float;

use super::outcome::{InstanceRecord, TheoremId, VerificationOutcome};
use crate::classifiers::{check_condition_2star, CheckConfig};
use crate::seq_model::{CoefficientSequence, FamilySpec, Target};
use crate::series_eval::{tail_sup_norm, GridSpec, DEFAULT_OVERSAMPLE};
use crate::sum::NeumaierSum;
use crate::{Error, Result};

/// Tail estimates must end below this at the last `n` of the curve.
pub const LACUNARY_TAIL_TARGET: f64 = 1e-3;

/// Settings for [`verify_lacunary_remark`].
#[derive(Debug, Clone, PartialEq)]
pub struct LacunaryOptions {
    /// Data horizon `N`; powers of two up to `N` are scanned.
    pub horizon: usize,
    pub n0_list: Vec<usize>,
    /// Ascending `n` for the tail curve; the last entry carries the
    /// [`LACUNARY_TAIL_TARGET`] requirement.
    pub n_list: Vec<usize>,
    pub oversample: usize,
}

impl Default for LacunaryOptions {
    fn default() -> Self {
        Self {
            horizon: 1 << 20,
            n0_list: alloc::vec![1, 2, 4, 8, 16],
            n_list: (6..=15).map(|j| 1usize << j).collect(),
            oversample: DEFAULT_OVERSAMPLE,
        }
    }
}

/// `sum_{2^k > n} 2^{-alpha k}`, the absolute tail of the lacunary series.
pub fn lacunary_absolute_tail(alpha: f64, n: usize) -> f64 {
    // smallest k >= 1 with 2^k > n
    let first = (usize::BITS - n.leading_zeros()).max(1) as i32;
    let q = (-alpha).exp2();
    (-alpha * first as f64).exp2() / (1.0 - q)
}

/// The lacunary series `sum 2^{-alpha k} sin(2^k x)`: block maxima of
/// `n^alpha b_n` stay at 1, group bounded variation fails for every window,
/// and still the series converges uniformly.
///
/// Three findings, each recorded as inequalities:
///
/// * `n^alpha b_n = 1` exactly at every `n = 2^k <= N` (via
///   `log2 b_n = -alpha k`, which is exact for the generator);
/// * for every `N0` the group condition fails, and its first witness `m`
///   is re-verified: zero window maximum, positive variation on `[m, 2m]`;
/// * on the `n` curve, `sup |S_ref - S_n| <= sum_{2^k > n} 2^{-alpha k}`
///   (plus truncation slack), the estimates do not increase, and the last
///   one lies below [`LACUNARY_TAIL_TARGET`].
pub fn verify_lacunary_remark(
    alpha: f64,
    options: &LacunaryOptions,
) -> Result<VerificationOutcome> {
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::OutOfDomain {
            what: "alpha",
            value: alpha,
        });
    }
    if options.n_list.is_empty() || options.n_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument(format!(
            "n list must be nonempty and strictly ascending: {:?}",
            options.n_list
        )));
    }
    let spec = FamilySpec::lacunary(alpha);
    let b = CoefficientSequence::generator(spec.clone());
    let label = format!("{}", spec);
    let h = options.horizon;

    let mut blocks = InstanceRecord::new(format!("{} block maxima", label));
    let mut k = 1usize;
    while (1usize << k) <= h {
        let n = 1usize << k;
        let scaled = (alpha * k as f64 + b.log2_magnitude(n)).exp2();
        blocks.check("n^alpha b_n = 1 at n = 2^k (upper)", Some(n), scaled, 1.0);
        blocks.check("n^alpha b_n = 1 at n = 2^k (lower)", Some(n), 1.0, scaled);
        if scaled != 1.0 {
            blocks.note(format!("n^alpha b_n = {:e} at n = {}", scaled, n));
        }
        k += 1;
    }
    blocks.quantity("powers_checked", (k - 1) as f64);

    let mut group = InstanceRecord::new(format!("{} group variation", label));
    let cfg = CheckConfig::new(h);
    let terms = b.aligned(h + 1)?;
    for &n0 in &options.n0_list {
        let report = check_condition_2star(&b, n0, &cfg)?;
        group.require("group condition fails", Some(n0), report.fails());
        let Some(&m) = report.witness.first() else {
            group.require("failure witness present", Some(n0), false);
            continue;
        };
        group.quantity(format!("witness_N0_{}", n0), m as f64);
        let window = terms[m..(m + n0).min(h + 2)]
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        let variation: f64 = (m..=2 * m)
            .map(|j| (terms[j] - terms[j + 1]).norm())
            .collect::<NeumaierSum>()
            .value();
        group.check("zero window maximum at witness", Some(m), window, 0.0);
        group.check(
            "positive variation at witness",
            Some(m),
            f64::MIN_POSITIVE,
            variation,
        );
    }

    let mut tail = InstanceRecord::new(format!("{} tail curve", label));
    let target = Target::Sine(b.clone());
    let mut previous = f64::INFINITY;
    let mut last = f64::INFINITY;
    for &n in &options.n_list {
        let grid = GridSpec::new(n).with_oversample(options.oversample);
        let est = tail_sup_norm(&target, n, None, &grid)?;
        let bound = lacunary_absolute_tail(alpha, n);
        let slack = est.truncation_slack.unwrap_or(0.0);
        tail.quantity(format!("sup_estimate_{}", n), est.sup_estimate);
        tail.check(
            "tail estimate <= absolute tail",
            Some(n),
            est.sup_estimate,
            bound + slack,
        );
        if previous.is_finite() {
            tail.check(
                "tail estimate non-increasing",
                Some(n),
                est.sup_estimate,
                previous,
            );
        }
        previous = est.sup_estimate;
        last = est.sup_estimate;
    }
    let last_n = *options.n_list.last().expect("nonempty");
    tail.check(
        "tail estimate below target",
        Some(last_n),
        last,
        LACUNARY_TAIL_TARGET,
    );

    Ok(VerificationOutcome::new(
        TheoremId::LacunaryRemark,
        alloc::vec![blocks, group, tail],
    ))
}
