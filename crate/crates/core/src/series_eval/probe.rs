use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)] // float methods under no_std
use num_traits::Float;

use super::grid::GridSpec;
use super::tail::max_over;
use crate::seq_model::{Sector, Target, TwoSidedSequence};
use crate::sum::NeumaierSum;
use crate::{Complex, Error, Result, REL_TOL};

/// Quantities at the test point `x0 = pi / (8n)` for a two-sided series.
///
/// For `k` in `(n, 4n]`, `k x0` lies in `(pi/8, pi/2]`, so
/// `sin(k x0) >= sin(pi/8)`. Writing
/// `S_{4n} - S_n = sum (c_k + c_{-k}) e^{-ikx} + 2i sum c_k sin kx`
/// gives the three-term relation
/// `2 sum Re c_k sin(k x0) <= ||S_{4n} - S_n|| + sum |c_k + c_{-k}|`.
/// The norm is estimated on `grid(n, oversample)`, which contains `x0`, so
/// the relation is exact up to rounding.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TestPointProbe {
    pub n: usize,
    pub x0: f64,
    /// `min_{n < k <= 4n} sin(k x0)`.
    pub min_sin: f64,
    pub sin_pi_over_8: f64,
    pub sin_bound_holds: bool,
    /// `c_k + c_{-k}` and `c_k - c_{-k}` in the sector for `1 <= k <= 4n`.
    pub sector_premise_holds: bool,
    /// `2 sum_{k=n+1}^{4n} Re c_k sin(k x0)`.
    pub lhs: f64,
    /// Grid maximum of `|S_{4n} - S_n|`.
    pub norm_difference: f64,
    /// `sum_{k=n+1}^{4n} |c_k + c_{-k}|`.
    pub coefficient_sum: f64,
    /// `norm_difference + coefficient_sum - lhs`.
    pub slack: f64,
    pub relation_holds: bool,
    pub n0: usize,
    /// `max_{n <= k < 2n} L_k / R_k` for the group-variation ratio with
    /// window `N0`, or `None` when some window is all zero under positive
    /// variation.
    pub local_group_constant: Option<f64>,
    /// `1 / cos(theta0)`.
    pub sector_constant: f64,
    /// `floor(n / N0) |c_{2n}| / ((1 + M) M(theta0))`.
    pub chain_lower: Option<f64>,
    /// `sum_{k=n}^{4n-1} Re c_k`.
    pub chain_sum: f64,
    pub chain_holds: Option<bool>,
    pub notes: Vec<String>,
}

/// Evaluates the test-point relations at `x0 = pi / (8n)`.
///
/// The lower-bound chain follows from the group-variation ratio on
/// `[n, 2n)`: `|c_{2n}| <= |c_k| + sum_{j=k}^{2k} |Δc_j| <= (1 + M) max` over
/// each of the `floor(n / N0)` disjoint windows `[n + i N0, n + (i+1) N0)`,
/// and `Re c_k >= |c_k| / M(theta0)` once `2 c_k` lies in the sector.
pub fn lemma2_testpoint_probe(
    ts: &TwoSidedSequence,
    n: usize,
    sector: &Sector,
    n0: usize,
    oversample: usize,
) -> Result<TestPointProbe> {
    if n == 0 || n0 == 0 {
        return Err(Error::InvalidArgument(format!(
            "probe needs n >= 1 and N0 >= 1, got {}, {}",
            n, n0
        )));
    }
    let top = 4 * n;
    let pos: Vec<Complex> = (0..=top).map(|k| ts.pos.value_or_zero(k)).collect();
    let neg: Vec<Complex> = (0..=top).map(|k| ts.neg.value_or_zero(k)).collect();
    let mut notes = Vec::new();

    let x0 = PI / (8.0 * n as f64);
    let min_sin = (n + 1..=top)
        .map(|k| (k as f64 * x0).sin())
        .fold(f64::INFINITY, f64::min);
    let sin_pi_over_8 = (PI / 8.0).sin();
    let sin_bound_holds = min_sin >= sin_pi_over_8 * (1.0 - REL_TOL);

    let sector_premise_holds = (1..=top).all(|k| {
        let slack = REL_TOL * pos[k].norm().max(neg[k].norm());
        sector.contains_within(pos[k] + neg[k], slack)
            && sector.contains_within(pos[k] - neg[k], slack)
    });
    if !sector_premise_holds {
        notes.push("sector premise fails on [1, 4n]; chain bound not applicable".into());
    }

    let lhs = 2.0
        * (n + 1..=top)
            .map(|k| pos[k].re * (k as f64 * x0).sin())
            .collect::<NeumaierSum>()
            .value();
    let points = GridSpec::new(n).with_oversample(oversample).points()?;
    let (norm_difference, _) = max_over(&Target::TwoSided(ts.clone()), n + 1, top, &points);
    let coefficient_sum = (n + 1..=top)
        .map(|k| (pos[k] + neg[k]).norm())
        .collect::<NeumaierSum>()
        .value();
    let rhs = norm_difference + coefficient_sum;
    let slack = rhs - lhs;
    let relation_holds = slack >= -REL_TOL * rhs.max(lhs.abs()).max(f64::MIN_POSITIVE);

    // group-variation ratio on [n, 2n)
    let mut local = Some(0.0f64);
    for k in n..2 * n {
        let l: f64 = (k..=2 * k)
            .map(|j| (pos[j] - pos[j + 1]).norm())
            .collect::<NeumaierSum>()
            .value();
        let r = (k..k + n0).map(|j| pos[j].norm()).fold(0.0, f64::max);
        if r > 0.0 {
            local = local.map(|m| m.max(l / r));
        } else if l > 0.0 {
            local = None;
            notes.push(format!("zero window at k = {} with positive variation", k));
            break;
        }
    }
    let sector_constant = sector.dominance_constant();
    let chain_sum = (n..top).map(|k| pos[k].re).collect::<NeumaierSum>().value();
    let chain_lower = match local {
        Some(m) if sector_premise_holds => {
            Some((n / n0) as f64 * pos[2 * n].norm() / ((1.0 + m) * sector_constant))
        }
        _ => None,
    };
    let chain_holds = chain_lower.map(|lo| lo <= chain_sum + REL_TOL * chain_sum.abs().max(lo));

    Ok(TestPointProbe {
        n,
        x0,
        min_sin,
        sin_pi_over_8,
        sin_bound_holds,
        sector_premise_holds,
        lhs,
        norm_difference,
        coefficient_sum,
        slack,
        relation_holds,
        n0,
        local_group_constant: local,
        sector_constant,
        chain_lower,
        chain_sum,
        chain_holds,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq_model::{CoefficientSequence, Family, FamilySpec};

    #[test]
    fn sine_bound_at_test_point() {
        for n in [10, 100, 1000] {
            let p = lemma2_testpoint_probe(&TwoSidedSequence::zero(), n, &Sector::real(), 1, 8)
                .unwrap();
            assert!(p.sin_bound_holds);
            assert!(p.min_sin >= p.sin_pi_over_8 - 1e-15);
        }
    }

    #[test]
    fn zero_series() {
        let p =
            lemma2_testpoint_probe(&TwoSidedSequence::zero(), 16, &Sector::real(), 1, 8).unwrap();
        assert_eq!(
            (p.lhs, p.norm_difference, p.coefficient_sum),
            (0.0, 0.0, 0.0)
        );
        assert!(p.relation_holds);
    }

    #[test]
    fn log_damped_one_sided() {
        let ts = TwoSidedSequence::new(
            Complex::default(),
            CoefficientSequence::generator(FamilySpec::log_damped()),
            CoefficientSequence::family(Family::Zero),
        )
        .unwrap();
        let p = lemma2_testpoint_probe(&ts, 256, &Sector::real(), 1, 8).unwrap();
        assert!(p.sector_premise_holds);
        assert!(p.relation_holds, "{:?}", p);
        assert!(p.slack >= 0.0);
        assert_eq!(p.chain_holds, Some(true));
    }
}
