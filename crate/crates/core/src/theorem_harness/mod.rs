//! Corpus-level numerical verification: the weighted-to-group implication
//! with its explicit constant chain, its sector quasimonotone special case,
//! the lacunary counterexample, the coefficient/tail equivalence as trend
//! consistency, and the test-point and Abel estimates behind the
//! uniform-convergence criterion.
//!
//! Every verdict is numerical evidence on finite data; outcomes say so.

mod corpus;
mod equivalence;
mod experiments;
mod lacunary;
mod outcome;
mod theorem3;

pub use corpus::{
    abel_family, default_equivalence_corpus, premise_corpus, premise_member, sector_two_sided,
    CorpusMember, CORPUS_HORIZON, CORPUS_M_MAX,
};
pub use equivalence::{
    equivalence_record, verify_equivalence_diagnostics, EquivalenceOptions, VANISHING_THRESHOLD,
};
pub use experiments::{verify_abel_dominance, verify_testpoint_probes, ABEL_HORIZON, PROBE_SCALES};
pub use lacunary::{
    lacunary_absolute_tail, verify_lacunary_remark, LacunaryOptions, LACUNARY_TAIL_TARGET,
};
pub use outcome::{
    InstanceRecord, Quantity, Summary, TheoremId, VerificationOutcome, Violation,
    MAX_RECORDED_VIOLATIONS,
};
pub use theorem3::{
    verify_corollary, verify_corollary_record, verify_theorem3, verify_theorem3_record, ChainRange,
};

use alloc::vec::Vec;

use crate::Result;

/// The implication chain on premise corpus members `first..first + size`.
pub fn verify_theorem3_corpus(first: u64, size: usize) -> Result<VerificationOutcome> {
    let range = ChainRange::new(CORPUS_HORIZON, CORPUS_M_MAX);
    let records = premise_corpus(first, size, CORPUS_HORIZON)
        .iter()
        .map(|m| verify_theorem3_record(&m.label, &m.sequence, &m.weight, &range))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationOutcome::new(TheoremId::T3, records))
}

/// The sector special case on the same corpus; members not built as sector
/// quasimonotone are checked too and normally report unmet premises.
pub fn verify_corollary_corpus(first: u64, size: usize) -> Result<VerificationOutcome> {
    let range = ChainRange::new(CORPUS_HORIZON, CORPUS_M_MAX);
    let records = premise_corpus(first, size, CORPUS_HORIZON)
        .iter()
        .map(|m| verify_corollary_record(&m.label, &m.sequence, &m.weight, &m.sector, &range))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationOutcome::new(TheoremId::Corollary, records))
}

#[cfg(test)]
mod tests;
