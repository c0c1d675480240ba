use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::REL_TOL;

/// Which statement a verification run exercises.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "SCREAMING_SNAKE_CASE"))]
pub enum TheoremId {
    /// Necessity side of the two-sided criterion: the test-point probe.
    T1Necessity,
    /// Sufficiency side: Abel and low-frequency tail estimates.
    T1Sufficiency,
    /// Equivalence of `n c_n -> 0` and uniform convergence under the group
    /// condition, as trend consistency.
    T2,
    /// Weighted rest bounded variation implies group bounded variation.
    T3,
    /// Sector quasimonotone sequences satisfy the weighted condition.
    Corollary,
    /// The lacunary series showing the window `N0` must stay fixed.
    LacunaryRemark,
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::T1Necessity => "T1_NECESSITY",
            Self::T1Sufficiency => "T1_SUFFICIENCY",
            Self::T2 => "T2",
            Self::T3 => "T3",
            Self::Corollary => "COROLLARY",
            Self::LacunaryRemark => "LACUNARY_REMARK",
        })
    }
}

/// A named measurement attached to an instance record.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Quantity {
    pub name: String,
    pub value: f64,
}

/// An inequality `lhs <= rhs` that did not hold.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Violation {
    pub inequality: String,
    pub index: Option<usize>,
    pub lhs: f64,
    pub rhs: f64,
}

/// One corpus member's verification.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct InstanceRecord {
    pub member: String,
    pub premises_met: bool,
    pub passed: bool,
    /// Inequalities evaluated for this member.
    pub checked: usize,
    /// Smallest relative slack `(rhs - lhs) / max(|lhs|, |rhs|)` seen;
    /// `None` when nothing was checked.
    pub worst_slack: Option<f64>,
    pub quantities: Vec<Quantity>,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
}

/// Per-member violations kept in a record; the count is always exact.
pub const MAX_RECORDED_VIOLATIONS: usize = 32;

impl InstanceRecord {
    pub fn new(member: impl Into<String>) -> Self {
        Self {
            member: member.into(),
            premises_met: true,
            passed: true,
            checked: 0,
            worst_slack: None,
            quantities: Vec::new(),
            violations: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn quantity(&mut self, name: impl Into<String>, value: f64) {
        self.quantities.push(Quantity {
            name: name.into(),
            value,
        });
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    /// Records `lhs <= rhs` (relative tolerance `1e-12`) and returns
    /// whether it held.
    pub fn check(&mut self, inequality: &str, index: Option<usize>, lhs: f64, rhs: f64) -> bool {
        self.checked += 1;
        let scale = lhs.abs().max(rhs.abs());
        let slack = if scale > 0.0 {
            (rhs - lhs) / scale
        } else {
            0.0
        };
        let slack = if slack.is_nan() {
            f64::NEG_INFINITY
        } else {
            slack
        };
        self.worst_slack = Some(self.worst_slack.map_or(slack, |w| w.min(slack)));
        let ok = lhs <= rhs + REL_TOL * scale;
        if !ok {
            self.passed = false;
            if self.violations.len() < MAX_RECORDED_VIOLATIONS {
                self.violations.push(Violation {
                    inequality: inequality.into(),
                    index,
                    lhs,
                    rhs,
                });
            }
        }
        ok
    }

    /// Records a boolean finding that is not an inequality between two
    /// measured sides; failures are stored as `lhs = 0 > rhs = -1`.
    pub fn require(&mut self, what: &str, index: Option<usize>, ok: bool) -> bool {
        if ok {
            self.checked += 1;
            true
        } else {
            self.check(what, index, 0.0, -1.0)
        }
    }

    /// Marks the premises as unmet; the record then counts as neither
    /// passed nor failed.
    pub fn premises_not_met(&mut self, why: impl Into<String>) {
        self.premises_met = false;
        self.notes.push(why.into());
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Summary {
    pub members: usize,
    pub passed: usize,
    pub failed: usize,
    pub premises_not_met: usize,
    pub worst_slack: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct VerificationOutcome {
    pub theorem: TheoremId,
    pub records: Vec<InstanceRecord>,
    pub summary: Summary,
    /// Every verdict here is numerical evidence on finite data.
    pub evidence: &'static str,
}

impl VerificationOutcome {
    pub fn new(theorem: TheoremId, records: Vec<InstanceRecord>) -> Self {
        let mut summary = Summary {
            members: records.len(),
            passed: 0,
            failed: 0,
            premises_not_met: 0,
            worst_slack: None,
        };
        for r in &records {
            if !r.premises_met {
                summary.premises_not_met += 1;
            } else if r.passed {
                summary.passed += 1;
            } else {
                summary.failed += 1;
            }
            if let Some(s) = r.worst_slack {
                summary.worst_slack = Some(summary.worst_slack.map_or(s, |w: f64| w.min(s)));
            }
        }
        Self {
            theorem,
            records,
            summary,
            evidence: "numerical evidence",
        }
    }

    /// True iff no member with met premises violated an inequality.
    pub fn all_hold(&self) -> bool {
        self.summary.failed == 0
    }

    /// `"k/m chains hold"` style one-line summary.
    pub fn headline(&self) -> String {
        alloc::format!(
            "{}: {}/{} hold, {} failed, {} premises not met",
            self.theorem,
            self.summary.passed,
            self.summary.members,
            self.summary.failed,
            self.summary.premises_not_met
        )
    }
}

impl fmt::Display for VerificationOutcome {
    /// Human-readable table, one row per member.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} ({})", self.headline(), self.evidence)?;
        writeln!(
            f,
            "{:<56} {:>8} {:>8} {:>12}",
            "member", "status", "checked", "worst_slack"
        )?;
        for r in &self.records {
            let status = if !r.premises_met {
                "n/a"
            } else if r.passed {
                "pass"
            } else {
                "FAIL"
            };
            let slack = r
                .worst_slack
                .map_or(String::from("-"), |s| alloc::format!("{:.3e}", s));
            writeln!(
                f,
                "{:<56} {:>8} {:>8} {:>12}",
                r.member, status, r.checked, slack
            )?;
            for v in &r.violations {
                match v.index {
                    Some(i) => writeln!(
                        f,
                        "    violated {} at {}: {:.6e} > {:.6e}",
                        v.inequality, i, v.lhs, v.rhs
                    )?,
                    None => writeln!(
                        f,
                        "    violated {}: {:.6e} > {:.6e}",
                        v.inequality, v.lhs, v.rhs
                    )?,
                }
            }
            for n in &r.notes {
                writeln!(f, "    note: {}", n)?;
            }
        }
        Ok(())
    }
}
