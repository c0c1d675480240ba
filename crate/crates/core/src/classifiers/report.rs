use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::seq_model::WeightSequence;

/// Which condition a report is about, with the parameters it was checked at.
#[derive(Debug, Clone, PartialEq)]
pub enum Condition {
    Monotone,
    Quasimonotone { alpha: f64 },
    OrvWeight { weight: WeightSequence },
    Orvqm { weight: WeightSequence, theta0: f64 },
    Cond2,
    Cond2Prime { weight: WeightSequence },
    Cond2DoublePrime { weight: WeightSequence },
    Cond2Star { n0: usize },
    Cond4 { theta0: f64 },
    Cond5,
    Cond6,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Monotone => f.write_str("MONOTONE"),
            Self::Quasimonotone { alpha } => write!(f, "QUASIMONOTONE(alpha={:?})", alpha),
            Self::OrvWeight { weight } => write!(f, "ORV_WEIGHT(R={})", weight),
            Self::Orvqm { weight, theta0 } => write!(f, "ORVQM(R={},theta0={:?})", weight, theta0),
            Self::Cond2 => f.write_str("COND_2"),
            Self::Cond2Prime { weight } => write!(f, "COND_2PRIME(R={})", weight),
            Self::Cond2DoublePrime { weight } => write!(f, "COND_2DOUBLEPRIME(R={})", weight),
            Self::Cond2Star { n0 } => write!(f, "COND_2STAR(N0={})", n0),
            Self::Cond4 { theta0 } => write!(f, "COND_4(theta0={:?})", theta0),
            Self::Cond5 => f.write_str("COND_5"),
            Self::Cond6 => f.write_str("COND_6"),
        }
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for Condition {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> core::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Verdict {
    Holds,
    Fails,
    /// A truncated infinite quantity has not settled within the horizon.
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Holds => "holds",
            Self::Fails => "fails",
            Self::Inconclusive => "inconclusive",
        })
    }
}

/// Indices `m_min..=m_max` where per-`m` quantities were evaluated, and the
/// truncation horizon for infinite sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CheckedRange {
    pub m_min: usize,
    pub m_max: usize,
    pub horizon: usize,
}

/// One point of a per-dyadic-block summary; the meaning of `value` depends
/// on the condition (see each checker).
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TrendPoint {
    pub index: usize,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ConditionReport {
    pub condition: Condition,
    pub verdict: Verdict,
    /// Smallest constant consistent with the checked range, where the
    /// condition has one. A lower bound for the true constant.
    pub constant: Option<f64>,
    /// Violating indices (at most [`MAX_WITNESSES`]) when the verdict is
    /// `fails`, otherwise the index attaining the worst ratio.
    pub witness: Vec<usize>,
    pub range: CheckedRange,
    /// Share of the truncated sum contributed by the last dyadic block.
    pub stabilization: Option<f64>,
    pub trend: Vec<TrendPoint>,
    pub notes: Vec<String>,
}

pub const MAX_WITNESSES: usize = 16;

impl ConditionReport {
    pub(crate) fn new(condition: Condition, range: CheckedRange) -> Self {
        Self {
            condition,
            verdict: Verdict::Holds,
            constant: None,
            witness: Vec::new(),
            range,
            stabilization: None,
            trend: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    pub fn fails(&self) -> bool {
        self.verdict == Verdict::Fails
    }
}

/// Running maximum of per-index ratios with violation bookkeeping.
#[derive(Debug, Default)]
pub(crate) struct RatioScan {
    pub best: f64,
    pub argmax: Option<usize>,
    pub violations: Vec<usize>,
    pub violation_count: usize,
    pub blocks: Vec<TrendPoint>,
}

impl RatioScan {
    /// Records `lhs / rhs` at index `m`. Zero over zero is ratio zero;
    /// positive over zero is a violation.
    pub fn push(&mut self, m: usize, lhs: f64, rhs: f64) {
        let ratio = if rhs > 0.0 {
            lhs / rhs
        } else if lhs > 0.0 {
            self.violation_count += 1;
            if self.violations.len() < MAX_WITNESSES {
                self.violations.push(m);
            }
            return;
        } else {
            0.0
        };
        if self.argmax.is_none() || ratio > self.best {
            self.best = ratio;
            self.argmax = Some(m);
        }
        let block = 1usize << (usize::BITS - 1 - m.leading_zeros());
        match self.blocks.last_mut() {
            Some(p) if p.index == block => p.value = p.value.max(ratio),
            _ => self.blocks.push(TrendPoint {
                index: block,
                value: ratio,
            }),
        }
    }

    pub fn finish(self, report: &mut ConditionReport) {
        report.constant = Some(if self.argmax.is_some() {
            self.best
        } else {
            0.0
        });
        report.trend = self.blocks;
        if self.violation_count > 0 {
            report.verdict = Verdict::Fails;
            report.witness = self.violations;
            report.notes.push(alloc::format!(
                "{} indices with zero right-hand side and positive left-hand side",
                self.violation_count
            ));
        } else {
            report.witness = self.argmax.into_iter().collect();
        }
    }
}
