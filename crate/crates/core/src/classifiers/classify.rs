use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use super::checks::{
    check_condition_2, check_condition_2prime, check_condition_2star, check_condition_2weighted,
    check_condition_4, check_conditions_5_6, check_monotone, check_orv_weight, check_orvqm,
    check_quasimonotone, CheckConfig, DECAY_RATIO, STABILIZATION_THRESHOLD,
};
use super::report::ConditionReport;
use crate::seq_model::{Sector, Target, WeightSequence};
use crate::{Error, Result};

/// What to classify: a sine-series coefficient sequence or a two-sided one.
pub type ClassifyTarget = Target;

/// Shared horizons and parameters for [`classify`].
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ClassifyOptions {
    /// `None` picks the sequence's natural horizon.
    pub horizon: Option<usize>,
    /// `None` picks `max(1, N / 4)`.
    pub m_max: Option<usize>,
    pub n0_list: Vec<usize>,
    pub theta0: f64,
    pub weight: WeightSequence,
    pub alphas: Vec<f64>,
    pub stabilization_threshold: f64,
    pub decay_ratio: f64,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self {
            horizon: None,
            m_max: None,
            n0_list: vec![1, 2, 4, 8, 16],
            theta0: 0.0,
            weight: WeightSequence::One,
            alphas: vec![1.0],
            stabilization_threshold: STABILIZATION_THRESHOLD,
            decay_ratio: DECAY_RATIO,
        }
    }
}

impl ClassifyOptions {
    /// The horizon and check range [`classify`] will use for `target`.
    pub fn resolve(&self, target: &ClassifyTarget) -> Result<CheckConfig> {
        let horizon = self.horizon.unwrap_or_else(|| target.natural_horizon());
        if horizon < 2 {
            return Err(Error::InvalidArgument(
                "horizon must be at least 2".to_string(),
            ));
        }
        let mut cfg = CheckConfig::new(horizon);
        if let Some(m_max) = self.m_max {
            cfg.m_max = m_max;
        }
        cfg.stabilization_threshold = self.stabilization_threshold;
        cfg.decay_ratio = self.decay_ratio;
        Ok(cfg)
    }
}

/// Runs every applicable checker on `target` with shared horizons.
///
/// Checks that presuppose a nonnegative real sequence (monotone,
/// quasimonotone, (2) and (2')) are skipped when the data are not
/// nonnegative reals; everything else always runs. Reports come back in a
/// fixed order.
pub fn classify(
    target: &ClassifyTarget,
    options: &ClassifyOptions,
) -> Result<Vec<ConditionReport>> {
    let cfg = options.resolve(target)?;
    let sector = Sector::new(options.theta0)?;
    let c = target.one_sided();
    let ts = target.two_sided();
    let horizon = cfg.horizon;

    // Surfaces "insufficient length" before any checker runs.
    c.aligned(horizon + 1)?;
    let nonnegative = c.is_real() && c.aligned_nonnegative(horizon + 1).is_ok();

    let mut reports = Vec::new();
    if nonnegative {
        reports.push(check_monotone(c, horizon)?);
        for &alpha in &options.alphas {
            reports.push(check_quasimonotone(c, alpha, horizon)?);
        }
    }
    reports.push(check_orv_weight(&options.weight, horizon)?);
    reports.push(check_orvqm(c, &options.weight, &sector, horizon)?);
    if nonnegative {
        reports.push(check_condition_2(c, &cfg)?);
        if !options.weight.is_one() {
            reports.push(check_condition_2prime(c, &options.weight, &cfg)?);
        }
    }
    reports.push(check_condition_2weighted(c, &options.weight, &cfg)?);
    let star_cfg = cfg.with_m_range(cfg.m_min, cfg.m_max.min(horizon / 2).max(cfg.m_min));
    for &n0 in &options.n0_list {
        reports.push(check_condition_2star(c, n0, &star_cfg)?);
    }
    reports.push(check_condition_4(&ts, &sector, horizon)?);
    let (five, six) = check_conditions_5_6(&ts, &cfg)?;
    reports.push(five);
    reports.push(six);
    Ok(reports)
}
