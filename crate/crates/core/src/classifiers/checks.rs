use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

#[allow(unused_imports)] // float methods under no_std
use num_traits::Float;

use super::report::{
    CheckedRange, Condition, ConditionReport, RatioScan, TrendPoint, Verdict, MAX_WITNESSES,
};
use crate::seq_model::{CoefficientSequence, Sector, TwoSidedSequence, WeightSequence};
use crate::sum::{CompensatedPrefix, NeumaierSum};
use crate::{Complex, Error, Result, REL_TOL};

/// Default share of a truncated sum the last dyadic block may contribute
/// before the sum counts as unsettled.
pub const STABILIZATION_THRESHOLD: f64 = 1e-3;

/// Default factor by which the dyadic block maxima of `n |c_n|` must drop,
/// relative to their overall maximum, for `lim n c_n = 0` to be reported as
/// holding.
pub const DECAY_RATIO: f64 = 0.1;

/// Horizon and index range shared by the checkers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckConfig {
    /// Truncation horizon `N`; terms `1..=N+1` must be available.
    pub horizon: usize,
    pub m_min: usize,
    pub m_max: usize,
    pub stabilization_threshold: f64,
    pub decay_ratio: f64,
}

impl CheckConfig {
    /// `m` ranges over `[1, N/4]`.
    pub fn new(horizon: usize) -> Self {
        Self {
            horizon,
            m_min: 1,
            m_max: (horizon / 4).max(1),
            stabilization_threshold: STABILIZATION_THRESHOLD,
            decay_ratio: DECAY_RATIO,
        }
    }

    pub fn with_m_range(mut self, m_min: usize, m_max: usize) -> Self {
        self.m_min = m_min;
        self.m_max = m_max;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.horizon < 1
            || self.m_min < 1
            || self.m_min > self.m_max
            || self.m_max > self.horizon
        {
            return Err(Error::InvalidArgument(format!(
                "bad check range m in [{}, {}] with horizon {}",
                self.m_min, self.m_max, self.horizon
            )));
        }
        Ok(())
    }

    fn range(&self) -> CheckedRange {
        CheckedRange {
            m_min: self.m_min,
            m_max: self.m_max,
            horizon: self.horizon,
        }
    }
}

fn not_above(a: f64, b: f64) -> bool {
    a <= b + REL_TOL * a.abs().max(b.abs())
}

fn block_start(n: usize) -> usize {
    1usize << (usize::BITS - 1 - n.leading_zeros())
}

/// `b_n / n^alpha >= b_{n+1} / (n+1)^alpha` for `1 <= n < N`.
pub fn check_quasimonotone(
    b: &CoefficientSequence,
    alpha: f64,
    horizon: usize,
) -> Result<ConditionReport> {
    if !(alpha.is_finite() && alpha >= 0.0) {
        return Err(Error::InvalidArgument(format!(
            "alpha = {} must be nonnegative",
            alpha
        )));
    }
    let condition = if alpha == 0.0 {
        Condition::Monotone
    } else {
        Condition::Quasimonotone { alpha }
    };
    let terms = b.aligned_nonnegative(horizon)?;
    let mut report = ConditionReport::new(
        condition,
        CheckedRange {
            m_min: 1,
            m_max: horizon.saturating_sub(1).max(1),
            horizon,
        },
    );
    let scaled = |n: usize| {
        if alpha == 0.0 {
            terms[n]
        } else {
            terms[n] / (n as f64).powf(alpha)
        }
    };
    let mut count = 0usize;
    for n in 1..horizon {
        if !not_above(scaled(n + 1), scaled(n)) {
            count += 1;
            if report.witness.len() < MAX_WITNESSES {
                report.witness.push(n);
            }
        }
    }
    if count > 0 {
        report.verdict = Verdict::Fails;
        report
            .notes
            .push(format!("{} increases of b_n / n^alpha", count));
    }
    Ok(report)
}

/// `b` non-increasing: quasimonotone with `alpha = 0`.
pub fn check_monotone(b: &CoefficientSequence, horizon: usize) -> Result<ConditionReport> {
    check_quasimonotone(b, 0.0, horizon)
}

/// O-regular variation of `R`: the constant is `max_{n <= N/2} R(2n)/R(n)`.
///
/// Finite data cannot refute `limsup < inf`, so the verdict is `holds` when
/// the last dyadic block of `n` does not raise the running maximum and
/// `inconclusive` otherwise. The trend records, per block, the natural log
/// of the largest ratio.
pub fn check_orv_weight(weight: &WeightSequence, horizon: usize) -> Result<ConditionReport> {
    if horizon < 2 {
        return Err(Error::InvalidArgument(
            "horizon must be at least 2".to_string(),
        ));
    }
    weight.validate(horizon)?;
    let half = horizon / 2;
    let mut report = ConditionReport::new(
        Condition::OrvWeight {
            weight: weight.clone(),
        },
        CheckedRange {
            m_min: 1,
            m_max: half,
            horizon,
        },
    );
    let mut best = f64::NEG_INFINITY;
    let mut argmax = 1;
    let mut before_last = f64::NEG_INFINITY;
    let last_block = block_start(half);
    for n in 1..=half {
        let log_ratio = weight.ln_value(2 * n) - weight.ln_value(n);
        if log_ratio > best {
            best = log_ratio;
            argmax = n;
        }
        if n < last_block {
            before_last = before_last.max(log_ratio);
        }
        let b = block_start(n);
        match report.trend.last_mut() {
            Some(p) if p.index == b => p.value = p.value.max(log_ratio),
            _ => report.trend.push(TrendPoint {
                index: b,
                value: log_ratio,
            }),
        }
    }
    let direct = weight.value(2 * argmax) / weight.value(argmax);
    report.constant = Some(if direct.is_finite() {
        direct
    } else {
        best.exp()
    });
    report.witness.push(argmax);
    let settled = last_block == 1 || best <= before_last + REL_TOL * before_last.abs().max(1.0);
    if !settled {
        report.verdict = Verdict::Inconclusive;
        report.notes.push(format!(
            "R(2n)/R(n) still growing: ln ratio {:.6e} in the last block vs {:.6e} before",
            best, before_last
        ));
    }
    Ok(report)
}

/// Quotients `c_n / R(n)` for `n in 0..=upto`, robust to overflowing weights.
fn quotients(
    c: &CoefficientSequence,
    weight: &WeightSequence,
    upto: usize,
) -> Result<Vec<Complex>> {
    weight.validate(upto)?;
    let terms = c.aligned(upto)?;
    Ok(terms
        .iter()
        .enumerate()
        .map(|(n, z)| {
            if n == 0 {
                *z
            } else {
                z * (-weight.ln_value(n)).exp()
            }
        })
        .collect())
}

/// `Delta(c_n / R(n))` in `K(theta0)` for `1 <= n < N`.
pub fn check_orvqm(
    c: &CoefficientSequence,
    weight: &WeightSequence,
    sector: &Sector,
    horizon: usize,
) -> Result<ConditionReport> {
    let q = quotients(c, weight, horizon)?;
    let mut report = ConditionReport::new(
        Condition::Orvqm {
            weight: weight.clone(),
            theta0: sector.theta0(),
        },
        CheckedRange {
            m_min: 1,
            m_max: horizon.saturating_sub(1).max(1),
            horizon,
        },
    );
    let mut count = 0usize;
    for n in 1..horizon {
        let d = q[n] - q[n + 1];
        let slack = REL_TOL * q[n].norm().max(q[n + 1].norm());
        if !sector.contains_within(d, slack) {
            count += 1;
            if report.witness.len() < MAX_WITNESSES {
                report.witness.push(n);
            }
        }
    }
    if count > 0 {
        report.verdict = Verdict::Fails;
        report
            .notes
            .push(format!("{} differences outside the sector", count));
    }
    Ok(report)
}

/// Shared rest-variation protocol for (2), (2') and (2'').
///
/// `q` holds index-aligned terms `0..=N+1`. For each `m`,
/// `T_m = sum_{n=m}^{N} |q_n - q_{n+1}| + |q_{N+1}|`; the closing term is a
/// lower bound for the unseen variation of a null sequence, so `T_m` stays a
/// lower bound for the infinite sum. The ratio is `T_m / |q_m|`.
fn rest_variation(q: &[Complex], cfg: &CheckConfig, condition: Condition) -> ConditionReport {
    let n_max = cfg.horizon;
    let variation: Vec<f64> = (1..=n_max).map(|n| (q[n] - q[n + 1]).norm()).collect();
    let prefix = CompensatedPrefix::new(&variation);
    let closure = q[n_max + 1].norm();
    let tail = |m: usize| {
        let mut s = NeumaierSum::new();
        s.add(prefix.range(m - 1, n_max));
        s.add(closure);
        s.value()
    };

    let mut report = ConditionReport::new(condition, cfg.range());
    let mut scan = RatioScan::default();
    for m in cfg.m_min..=cfg.m_max {
        scan.push(m, tail(m), q[m].norm());
    }
    scan.finish(&mut report);

    let total = tail(cfg.m_min);
    let last_block = prefix.range(n_max.div_ceil(2) - 1, n_max);
    let stabilization = if total > 0.0 { last_block / total } else { 0.0 };
    report.stabilization = Some(stabilization);
    if report.verdict != Verdict::Fails && stabilization > cfg.stabilization_threshold {
        report.verdict = Verdict::Inconclusive;
        report.notes.push(format!(
            "tail variation from m = {} still growing: last dyadic block contributes {:.3e}",
            cfg.m_min, stabilization
        ));
    }
    report
}

/// Rest bounded variation (2): `sum_{n >= m} |b_n - b_{n+1}| <= M b_m`.
pub fn check_condition_2(b: &CoefficientSequence, cfg: &CheckConfig) -> Result<ConditionReport> {
    cfg.validate()?;
    let terms = b.aligned_nonnegative(cfg.horizon + 1)?;
    let q: Vec<Complex> = terms.iter().map(|&v| Complex::new(v, 0.0)).collect();
    Ok(rest_variation(&q, cfg, Condition::Cond2))
}

/// Weighted rest bounded variation (2''): the protocol of (2) applied to
/// `c_n / R(n)` with right-hand side `|c_m| / R(m)`. Complex `c` allowed.
pub fn check_condition_2weighted(
    c: &CoefficientSequence,
    weight: &WeightSequence,
    cfg: &CheckConfig,
) -> Result<ConditionReport> {
    cfg.validate()?;
    let q = quotients(c, weight, cfg.horizon + 1)?;
    Ok(rest_variation(
        &q,
        cfg,
        Condition::Cond2DoublePrime {
            weight: weight.clone(),
        },
    ))
}

/// (2'): the nonnegative real special case of (2'').
pub fn check_condition_2prime(
    b: &CoefficientSequence,
    weight: &WeightSequence,
    cfg: &CheckConfig,
) -> Result<ConditionReport> {
    b.aligned_nonnegative(cfg.horizon + 1)?;
    let mut report = check_condition_2weighted(b, weight, cfg)?;
    report.condition = Condition::Cond2Prime {
        weight: weight.clone(),
    };
    Ok(report)
}

/// Group bounded variation (2*):
/// `L_m = sum_{n=m}^{2m} |c_n - c_{n+1}| <= M max_{m <= n < m+N0} |c_n|`.
///
/// All sums are finite, so the verdict is exact on the checked range.
/// Windows reaching past `N + 1` are clipped to the available terms.
pub fn check_condition_2star(
    c: &CoefficientSequence,
    n0: usize,
    cfg: &CheckConfig,
) -> Result<ConditionReport> {
    cfg.validate()?;
    if n0 == 0 {
        return Err(Error::InvalidArgument("N0 must be at least 1".to_string()));
    }
    if 2 * cfg.m_max > cfg.horizon {
        return Err(Error::InvalidArgument(format!(
            "2 * m_max = {} exceeds the horizon {}",
            2 * cfg.m_max,
            cfg.horizon
        )));
    }
    let last = cfg.horizon + 1;
    let terms = c.aligned(last)?;
    let modulus: Vec<f64> = terms.iter().map(|z| z.norm()).collect();
    // variation[i] = |c_{i+1} - c_{i+2}|
    let variation: Vec<f64> = (1..=cfg.horizon)
        .map(|n| (terms[n] - terms[n + 1]).norm())
        .collect();
    let prefix = CompensatedPrefix::new(&variation);

    let mut report = ConditionReport::new(Condition::Cond2Star { n0 }, cfg.range());
    let mut scan = RatioScan::default();
    for m in cfg.m_min..=cfg.m_max {
        let lhs = prefix.range(m - 1, 2 * m);
        let window_end = (m + n0).min(last + 1);
        let rhs = modulus[m..window_end].iter().copied().fold(0.0, f64::max);
        scan.push(m, lhs, rhs);
    }
    scan.finish(&mut report);
    Ok(report)
}

/// Sector condition (4): `c_n + c_{-n}` and `c_n - c_{-n}` in `K(theta0)`
/// for `1 <= n <= N`.
pub fn check_condition_4(
    ts: &TwoSidedSequence,
    sector: &Sector,
    horizon: usize,
) -> Result<ConditionReport> {
    let pos = ts.pos.aligned(horizon)?;
    let neg = ts.neg.aligned(horizon)?;
    let mut report = ConditionReport::new(
        Condition::Cond4 {
            theta0: sector.theta0(),
        },
        CheckedRange {
            m_min: 1,
            m_max: horizon,
            horizon,
        },
    );
    let mut count = 0usize;
    let mut doubled_ok = true;
    for n in 1..=horizon {
        let slack = REL_TOL * pos[n].norm().max(neg[n].norm());
        let sum_ok = sector.contains_within(pos[n] + neg[n], slack);
        let diff_ok = sector.contains_within(pos[n] - neg[n], slack);
        if !(sum_ok && diff_ok) {
            count += 1;
            if report.witness.len() < MAX_WITNESSES {
                report.witness.push(n);
            }
        } else {
            doubled_ok &= sector.contains_within(pos[n] * 2.0, 2.0 * slack);
        }
    }
    if count > 0 {
        report.verdict = Verdict::Fails;
        report
            .notes
            .push(format!("{} indices outside the sector", count));
    }
    if doubled_ok {
        report.notes.push(
            "2 c_n lies in the sector wherever both c_n + c_-n and c_n - c_-n do".to_string(),
        );
    } else {
        report
            .notes
            .push("2 c_n left the sector at an index satisfying (4)".to_string());
    }
    Ok(report)
}

/// Conditions (5) `lim n c_n = 0` and (6) `sum |c_n + c_{-n}| < inf`.
///
/// (5): the trend holds the maximum of `n |c_n|` over each dyadic block
/// `[2^j, 2^{j+1})`. The verdict is `fails` when the last block maximum has
/// not dropped below the one in the middle block, `holds` when the block
/// maxima are non-increasing over the later half of the blocks and the last
/// one is at most `decay_ratio` times the overall maximum, and
/// `inconclusive` otherwise.
///
/// (6): partial sums at `n = 2^j`; `holds` when the last dyadic block
/// contributes at most the stabilization threshold of the total.
pub fn check_conditions_5_6(
    ts: &TwoSidedSequence,
    cfg: &CheckConfig,
) -> Result<(ConditionReport, ConditionReport)> {
    let horizon = cfg.horizon;
    let pos = ts.pos.aligned(horizon)?;
    let neg = ts.neg.aligned(horizon)?;
    let range = CheckedRange {
        m_min: 1,
        m_max: horizon,
        horizon,
    };

    let mut five = ConditionReport::new(Condition::Cond5, range);
    let mut argmax = 1;
    let mut best = 0.0f64;
    for n in 1..=horizon {
        let v = n as f64 * pos[n].norm();
        if v > best {
            best = v;
            argmax = n;
        }
        let b = block_start(n);
        match five.trend.last_mut() {
            Some(p) if p.index == b => p.value = p.value.max(v),
            _ => five.trend.push(TrendPoint { index: b, value: v }),
        }
    }
    five.constant = Some(best);
    five.witness.push(argmax);
    if best > 0.0 {
        let blocks: Vec<f64> = five.trend.iter().map(|p| p.value).collect();
        let last = *blocks.last().expect("horizon >= 1");
        let mid = blocks.len() / 2;
        let later_non_increasing = blocks[mid..].windows(2).all(|w| not_above(w[1], w[0]));
        if blocks.len() < 2 || last >= blocks[mid] * (1.0 - 1e-9) {
            five.verdict = Verdict::Fails;
            five.notes.push(format!(
                "block maxima of n|c_n| do not decay: last {:.6e}",
                last
            ));
        } else if later_non_increasing && last <= cfg.decay_ratio * best {
            five.verdict = Verdict::Holds;
        } else {
            five.verdict = Verdict::Inconclusive;
            five.notes.push(format!(
                "block maxima decay to {:.6e} of the maximum",
                last / best
            ));
        }
    }

    let mut six = ConditionReport::new(Condition::Cond6, range);
    let mut acc = NeumaierSum::new();
    let mut last_block = NeumaierSum::new();
    let half = horizon.div_ceil(2);
    for n in 1..=horizon {
        let v = (pos[n] + neg[n]).norm();
        acc.add(v);
        if n >= half {
            last_block.add(v);
        }
        if n.is_power_of_two() || n == horizon {
            six.trend.push(TrendPoint {
                index: n,
                value: acc.value(),
            });
        }
    }
    let total = acc.value();
    let stabilization = if total > 0.0 {
        last_block.value() / total
    } else {
        0.0
    };
    six.constant = Some(total);
    six.stabilization = Some(stabilization);
    if stabilization > cfg.stabilization_threshold {
        six.verdict = Verdict::Inconclusive;
        six.notes.push(format!(
            "partial sums still growing: last block contributes {:.3e}",
            stabilization
        ));
    }
    Ok((five, six))
}
