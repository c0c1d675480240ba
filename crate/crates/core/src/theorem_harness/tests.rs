use alloc::vec::Vec;
use core::f64::consts::PI;

use super::*;
use crate::seq_model::{CoefficientSequence, FamilySpec, Sector, WeightSequence};
use crate::Complex;

fn quantity(rec: &InstanceRecord, name: &str) -> f64 {
    rec.quantities
        .iter()
        .find(|q| q.name == name)
        .map(|q| q.value)
        .unwrap_or_else(|| panic!("no quantity {}", name))
}

fn generator(text: &str) -> CoefficientSequence {
    CoefficientSequence::generator(text.parse().unwrap())
}

#[test]
fn theorem3_harmonic_unweighted() {
    let range = ChainRange::new(1 << 12, 1 << 10);
    let out = verify_theorem3(&generator("harmonic(1.0)"), &WeightSequence::One, &range).unwrap();
    assert!(out.all_hold(), "{}", out);
    let rec = &out.records[0];
    assert!((quantity(rec, "M_weighted") - 1.0).abs() < 1e-12);
    assert_eq!(quantity(rec, "rho"), 1.0);
    assert!((quantity(rec, "M_group_predicted") - 1.0).abs() < 1e-12);
    assert!((quantity(rec, "M_group_measured") - 2.0 / 3.0).abs() < 1e-12);
    assert_eq!(quantity(rec, "monotonicity_gaps"), 0.0);
}

#[test]
fn theorem3_zero_sequence() {
    let zero = CoefficientSequence::explicit_real(&[0.0; 64]).unwrap();
    let out = verify_theorem3(&zero, &WeightSequence::Log, &ChainRange::new(62, 16)).unwrap();
    assert_eq!(out.summary.passed, 1, "{}", out);
    assert_eq!(out.summary.worst_slack, Some(0.0));
}

#[test]
fn theorem3_square_root_weight() {
    // a_n = c_n / sqrt(n) = 1/n decreases, so the weighted constant is 1
    let out = verify_theorem3(
        &generator("harmonic(0.5)"),
        &WeightSequence::Power(0.5),
        &ChainRange::new(1 << 12, 1 << 10),
    )
    .unwrap();
    assert!(out.all_hold(), "{}", out);
    let rec = &out.records[0];
    assert!((quantity(rec, "M_weighted") - 1.0).abs() < 1e-12);
    // rho = max R(2n+1)/R(n) is attained at n = 1
    assert!((quantity(rec, "rho") - 3f64.sqrt()).abs() < 1e-12);
    assert!(quantity(rec, "M_group_measured") <= 2.0 * quantity(rec, "rho") - 1.0);
}

#[test]
fn theorem3_premises() {
    let range = ChainRange::new(1 << 10, 1 << 8);
    let constant = CoefficientSequence::explicit_real(&[1.0; 1100]).unwrap();
    let out = verify_theorem3(&constant, &WeightSequence::One, &range).unwrap();
    assert_eq!(out.summary.premises_not_met, 1);
    assert!(out.all_hold());

    let growing =
        verify_theorem3(&generator("harmonic(1.0)"), &WeightSequence::Exp2, &range).unwrap();
    assert_eq!(growing.summary.premises_not_met, 1, "{}", growing);
}

#[test]
fn theorem3_corpus_chains_hold() {
    let out = verify_theorem3_corpus(1, 6).unwrap();
    assert_eq!(out.summary.passed, 6, "{}", out);
    // the rebounding members exercise indices where |a_k| > |a_n| inside a block
    assert!(out
        .records
        .iter()
        .any(|r| quantity(r, "monotonicity_gaps") > 0.0));
}

#[test]
fn corollary_examples() {
    let range = ChainRange::new(1 << 12, 1 << 10);
    let real = verify_corollary(
        &generator("harmonic(1.0)"),
        &WeightSequence::One,
        &Sector::real(),
        &range,
    )
    .unwrap();
    assert!(real.all_hold() && real.summary.passed == 1, "{}", real);
    assert!((quantity(&real.records[0], "M_weighted") - 1.0).abs() < 1e-12);

    // differences of c_n / R(n) alternate between the two edges of the
    // pi/6 sector
    let h = 1 << 12;
    let sector = Sector::new(PI / 6.0).unwrap();
    let weight = WeightSequence::Log;
    let mut a = alloc::vec![Complex::default(); h + 2];
    for j in (1..=h).rev() {
        let edge = Complex::from_polar(1.0, if j % 2 == 0 { PI / 6.0 } else { -PI / 6.0 });
        a[j - 1] = a[j] + edge / (j * (j + 1)) as f64;
    }
    let c: Vec<Complex> = (1..=h + 1).map(|n| a[n - 1] * weight.value(n)).collect();
    let c = CoefficientSequence::explicit(c).unwrap();
    let out = verify_corollary(&c, &weight, &sector, &range).unwrap();
    assert!(out.all_hold() && out.summary.passed == 1, "{}", out);
    let m = quantity(&out.records[0], "M_weighted");
    assert!(m > 1.0 && m <= 2.0 / 3f64.sqrt() * (1.0 + 1e-9), "{}", m);

    let lac = verify_corollary(
        &generator("lacunary(1.0)"),
        &WeightSequence::One,
        &Sector::real(),
        &range,
    )
    .unwrap();
    assert_eq!(lac.summary.premises_not_met, 1);
}

#[test]
fn corollary_corpus_splits_by_construction() {
    let out = verify_corollary_corpus(1, 4).unwrap();
    assert_eq!(out.summary.failed, 0, "{}", out);
    assert_eq!(out.summary.passed, 2);
    assert_eq!(out.summary.premises_not_met, 2);
}

#[test]
fn lacunary_triad_alpha_one() {
    let out = verify_lacunary_remark(1.0, &LacunaryOptions::default()).unwrap();
    assert!(out.all_hold() && out.summary.passed == 3, "{}", out);
    let group = &out.records[1];
    // b_1 = 0 while |b_1 - b_2| = 1/2
    assert_eq!(quantity(group, "witness_N0_1"), 1.0);
    assert_eq!(quantity(group, "witness_N0_16"), 33.0);
    assert_eq!(quantity(&out.records[0], "powers_checked"), 20.0);
}

#[test]
fn lacunary_block_maxima_exact_for_half() {
    let options = LacunaryOptions {
        horizon: 1 << 12,
        n_list: alloc::vec![64, 128],
        ..LacunaryOptions::default()
    };
    let out = verify_lacunary_remark(0.5, &options).unwrap();
    assert!(out.records[0].passed && out.records[0].notes.is_empty());
    assert!(out.records[1].passed);
    assert!(verify_lacunary_remark(0.0, &options).is_err());
}

#[test]
fn lacunary_absolute_tail_values() {
    assert!((lacunary_absolute_tail(1.0, 100) - 2f64.powi(-6)).abs() < 1e-15);
    assert!((lacunary_absolute_tail(1.0, 128) - 2f64.powi(-7)).abs() < 1e-15);
    assert!((lacunary_absolute_tail(1.0, 0) - 1.0).abs() < 1e-15);
}

fn equivalence(text: &str) -> InstanceRecord {
    let spec: FamilySpec = text.parse().unwrap();
    verify_equivalence_diagnostics(&[spec], &EquivalenceOptions::default())
        .unwrap()
        .records
        .remove(0)
}

#[test]
fn equivalence_examples() {
    let harmonic = equivalence("harmonic(1.0)");
    assert!(harmonic.premises_met && harmonic.passed);
    assert!(quantity(&harmonic, "sup_estimate_last") >= 0.2);
    assert_eq!(quantity(&harmonic, "max_k_ck_last"), 1.0);

    let damped = equivalence("logdamped");
    assert!(damped.premises_met && damped.passed);
    assert!(quantity(&damped, "sup_estimate_last") < 0.13);

    let lac = equivalence("lacunary(1.0)");
    assert!(!lac.premises_met);
    assert!(lac
        .notes
        .iter()
        .any(|n| n.contains("attributed to the failed group condition")));
}

#[test]
fn abel_and_probe_experiments() {
    let abel = verify_abel_dominance(7, 20).unwrap();
    assert_eq!(abel.summary.passed, 20, "{}", abel);
    let probes = verify_testpoint_probes(1, 6, 4).unwrap();
    assert_eq!(probes.summary.passed, 6 + PROBE_SCALES.len(), "{}", probes);
}

#[test]
fn outcomes_are_deterministic() {
    assert_eq!(
        verify_theorem3_corpus(3, 3).unwrap(),
        verify_theorem3_corpus(3, 3).unwrap()
    );
    assert_eq!(
        verify_abel_dominance(5, 10).unwrap(),
        verify_abel_dominance(5, 10).unwrap()
    );
}

#[test]
fn record_bookkeeping() {
    let mut rec = InstanceRecord::new("x");
    assert!(rec.check("a", Some(1), 1.0, 2.0));
    assert!(rec.check("b", None, 1.0, 1.0 + 1e-14));
    assert!(!rec.check("c", Some(3), 2.0, 1.0));
    assert!(!rec.require("d", None, false));
    assert_eq!(rec.checked, 4);
    assert_eq!(rec.violations.len(), 2);
    assert_eq!(rec.violations[0].inequality, "c");
    assert!(!rec.passed);
    let out = VerificationOutcome::new(TheoremId::T3, alloc::vec![rec, InstanceRecord::new("y")]);
    assert_eq!((out.summary.passed, out.summary.failed), (1, 1));
    assert_eq!(out.headline(), "T3: 1/2 hold, 1 failed, 0 premises not met");
    assert!(!out.all_hold());
}
