use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)] // float methods under no_std
use num_traits::Float;

use super::corpus::{abel_family, sector_two_sided};
use super::outcome::{InstanceRecord, TheoremId, VerificationOutcome};
use crate::seq_model::random::SeededRng;
use crate::seq_model::CoefficientSequence;
use crate::series_eval::{
    abel_tail_bound, lemma2_testpoint_probe, low_frequency_estimate, partial_sum_sine_range,
};
use crate::Result;

/// Horizon of the Abel-dominance triples.
pub const ABEL_HORIZON: usize = 1 << 14;

/// Random `(family, N, x)` triples: the directly summed truncated tail
/// `|sum_{k=N}^{H} c_k sin kx|` against the Abel bound, and the
/// low-frequency piece against `x sum k |c_k|`.
pub fn verify_abel_dominance(seed: u64, count: usize) -> Result<VerificationOutcome> {
    let mut rng = SeededRng::new(seed);
    let mut records = Vec::with_capacity(count);
    for _ in 0..count {
        let spec = abel_family(&mut rng);
        let n = 1 + rng.below(2048) as usize;
        // log-uniform on [1e-4, pi] so both sides of x ~ 1/N occur
        let x = (rng.uniform((1e-4f64).ln(), PI.ln())).exp();
        let c = CoefficientSequence::generator(spec.clone());
        let mut rec = InstanceRecord::new(format!("{} N={} x={:.6e}", spec, n, x));
        let actual = partial_sum_sine_range(&c, n, ABEL_HORIZON, x).norm();
        let bound = abel_tail_bound(&c, n, x, ABEL_HORIZON)?;
        rec.quantity("tail", actual);
        rec.quantity("abel_bound", bound);
        rec.check("truncated tail <= Abel bound", Some(n), actual, bound);
        let low = low_frequency_estimate(&c, n, x)?;
        if !low.high_frequency_only {
            rec.check(
                "low-frequency piece <= x sum k|c_k|",
                Some(low.split),
                low.lhs,
                low.rhs,
            );
        }
        records.push(rec);
    }
    Ok(VerificationOutcome::new(TheoremId::T1Sufficiency, records))
}

/// Test-point scales of the probe experiment.
pub const PROBE_SCALES: [usize; 3] = [10, 100, 1000];

/// The test-point probe: the sine lower bound at each scale on the zero
/// series, then `count` constructed sector instances, cycling through the
/// scales, checking the three-term relation and the lower-bound chain.
pub fn verify_testpoint_probes(
    seed: u64,
    count: usize,
    oversample: usize,
) -> Result<VerificationOutcome> {
    let mut records = Vec::with_capacity(count + PROBE_SCALES.len());
    let horizon = 4 * PROBE_SCALES[PROBE_SCALES.len() - 1] + 1;
    for i in 0..count {
        let n = PROBE_SCALES[i % PROBE_SCALES.len()];
        let (label, ts, sector) = sector_two_sided(seed + i as u64, horizon);
        let mut rec = InstanceRecord::new(format!("{} n={}", label, n));
        let probe = lemma2_testpoint_probe(&ts, n, &sector, 1, oversample)?;
        rec.check(
            "sin(k x0) >= sin(pi/8)",
            Some(n),
            probe.sin_pi_over_8,
            probe.min_sin,
        );
        if !probe.sector_premise_holds {
            rec.premises_not_met("sector premise fails");
            records.push(rec);
            continue;
        }
        rec.quantity("lhs", probe.lhs);
        rec.quantity("norm_difference", probe.norm_difference);
        rec.quantity("coefficient_sum", probe.coefficient_sum);
        rec.quantity("slack", probe.slack);
        rec.check(
            "test-point relation",
            Some(n),
            probe.lhs,
            probe.norm_difference + probe.coefficient_sum,
        );
        match (probe.chain_lower, probe.local_group_constant) {
            (Some(lower), Some(m)) => {
                rec.quantity("local_group_constant", m);
                rec.quantity("chain_lower", lower);
                rec.quantity("chain_sum", probe.chain_sum);
                rec.check("lower-bound chain", Some(n), lower, probe.chain_sum);
            }
            _ => rec.note("group ratio unbounded on [n, 2n); lower-bound chain skipped"),
        }
        for note in probe.notes {
            rec.note(note);
        }
        records.push(rec);
    }
    let zero = crate::seq_model::TwoSidedSequence::zero();
    let real = crate::seq_model::Sector::real();
    for n in PROBE_SCALES {
        let probe = lemma2_testpoint_probe(&zero, n, &real, 1, oversample)?;
        let mut rec = InstanceRecord::new(format!("sine lower bound n={}", n));
        rec.quantity("min_sin", probe.min_sin);
        rec.check(
            "sin(k x0) >= sin(pi/8)",
            Some(n),
            probe.sin_pi_over_8,
            probe.min_sin,
        );
        rec.check(
            "zero series relation",
            Some(n),
            probe.lhs.abs() + probe.norm_difference,
            0.0,
        );
        records.push(rec);
    }
    Ok(VerificationOutcome::new(TheoremId::T1Necessity, records))
}
