//! Membership tests for the sequence-condition classes, with constant
//! estimates and witnesses.
//!
//! Conditions over infinite tails are evaluated on a truncation horizon `N`
//! (terms `1..=N+1` must be available). Per-`m` ratios are computed for
//! `m` in `[m_min, m_max]`; reported constants are the maxima over that
//! range and therefore lower bounds for the true constants.

mod checks;
mod classify;
mod report;

pub use checks::{
    check_condition_2, check_condition_2prime, check_condition_2star, check_condition_2weighted,
    check_condition_4, check_conditions_5_6, check_monotone, check_orv_weight, check_orvqm,
    check_quasimonotone, CheckConfig, DECAY_RATIO, STABILIZATION_THRESHOLD,
};
pub use classify::{classify, ClassifyOptions, ClassifyTarget};
pub use report::{CheckedRange, Condition, ConditionReport, TrendPoint, Verdict, MAX_WITNESSES};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq_model::{
        CoefficientSequence, Family, FamilySpec, Sector, TwoSidedSequence, WeightSequence,
    };
    use crate::{Complex, Error};
    use alloc::boxed::Box;
    use alloc::vec::Vec;
    use core::f64::consts::PI;

    fn harmonic() -> CoefficientSequence {
        CoefficientSequence::generator(FamilySpec::harmonic(1.0))
    }

    fn lacunary() -> CoefficientSequence {
        CoefficientSequence::generator(FamilySpec::lacunary(1.0))
    }

    fn real(f: impl Fn(usize) -> f64, len: usize) -> CoefficientSequence {
        let v: Vec<f64> = (1..=len).map(f).collect();
        CoefficientSequence::explicit_real(&v).unwrap()
    }

    #[test]
    fn quasimonotone_examples() {
        assert!(check_monotone(&harmonic(), 10_000).unwrap().holds());
        let b = CoefficientSequence::family(Family::Harmonic { p: 0.5 });
        assert!(check_quasimonotone(&b, 1.0, 10_000).unwrap().holds());

        let alternating = real(
            |n| {
                if n % 2 == 1 {
                    1.0 / n as f64
                } else {
                    2.0 / n as f64
                }
            },
            100,
        );
        let r = check_quasimonotone(&alternating, 0.0, 99).unwrap();
        assert!(r.fails());
        // b_1 = b_2 = 1 is a plateau; the first increase is b_3 = 1/3 < b_4 = 1/2.
        assert_eq!(r.witness[0], 3);

        let negative = real(|n| if n == 5 { -1.0 } else { 1.0 }, 10);
        assert!(matches!(
            check_monotone(&negative, 9),
            Err(Error::NotNonnegative { index: 5 })
        ));
    }

    #[test]
    fn orv_weight_examples() {
        let r = check_orv_weight(&WeightSequence::Log, 1 << 16).unwrap();
        assert!(r.holds());
        // ln 6 / ln 4 at n = 2 beats ln 4 / ln 3 at n = 1.
        assert!((r.constant.unwrap() - 6f64.ln() / 4f64.ln()).abs() < 1e-12);
        assert_eq!(r.witness, [2]);

        let r = check_orv_weight(&WeightSequence::Power(0.5), 1 << 12).unwrap();
        assert!(r.holds());
        assert!((r.constant.unwrap() - 2f64.sqrt()).abs() < 1e-12);

        let r = check_orv_weight(&WeightSequence::Exp2, 1 << 12).unwrap();
        assert_eq!(r.verdict, Verdict::Inconclusive);
        let last = r.trend.last().unwrap();
        assert!((last.value - 2048.0 * 2f64.ln()).abs() < 1e-6);

        assert!(check_orv_weight(
            &WeightSequence::Explicit(alloc::vec![2.0, 1.0, 3.0, 4.0]),
            4
        )
        .is_err());
    }

    #[test]
    fn orvqm_examples() {
        let sector = Sector::new(PI / 6.0).unwrap();
        assert!(
            check_orvqm(&harmonic(), &WeightSequence::One, &Sector::real(), 1000)
                .unwrap()
                .holds()
        );
        let tilted = CoefficientSequence::family(Family::Tilted {
            slope: (PI / 6.0).tan(),
            base: Box::new(Family::Harmonic { p: 1.0 }),
        });
        assert!(check_orvqm(&tilted, &WeightSequence::One, &sector, 1000)
            .unwrap()
            .holds());
        let narrower = Sector::new(PI / 7.0).unwrap();
        assert!(check_orvqm(&tilted, &WeightSequence::One, &narrower, 1000)
            .unwrap()
            .fails());

        let r = check_orvqm(
            &lacunary(),
            &WeightSequence::Power(1.0),
            &Sector::real(),
            1000,
        )
        .unwrap();
        assert!(r.fails());
        assert_eq!(&r.witness[..3], &[1, 3, 7]);
    }

    #[test]
    fn condition_2_harmonic_telescopes() {
        let cfg = CheckConfig::new(1 << 16);
        let r = check_condition_2(&harmonic(), &cfg).unwrap();
        assert!(r.holds());
        assert!((r.constant.unwrap() - 1.0).abs() < 1e-12);
        let w = check_condition_2weighted(&harmonic(), &WeightSequence::One, &cfg).unwrap();
        assert_eq!(w.constant, r.constant);
        assert_eq!(w.verdict, r.verdict);
        assert_eq!(w.witness, r.witness);
        assert_eq!(w.stabilization, r.stabilization);
    }

    #[test]
    fn condition_2_oscillating_is_inconclusive() {
        let b = real(
            |n| (2.0 + if n % 2 == 0 { 1.0 } else { -1.0 }) / n as f64,
            1 << 16,
        );
        let cfg = CheckConfig::new((1 << 16) - 1);
        let r = check_condition_2(&b, &cfg).unwrap();
        assert_eq!(r.verdict, Verdict::Inconclusive);
        assert!(r.constant.unwrap() > 10.0);
        assert!(r.stabilization.unwrap() > 1e-3);
    }

    #[test]
    fn lacunary_fails_variation_conditions() {
        let cfg = CheckConfig::new(1 << 12);
        let r = check_condition_2(&lacunary(), &cfg).unwrap();
        assert!(r.fails());
        assert!(r.witness.contains(&3));
        let w = check_condition_2weighted(&lacunary(), &WeightSequence::Power(1.0), &cfg).unwrap();
        assert!(w.fails());
        assert_eq!(w.witness[0], 1);
        assert!(w.witness.contains(&3));
    }

    #[test]
    fn condition_2star_examples() {
        let cfg = CheckConfig::new(20_000).with_m_range(1, 10_000);
        let r = check_condition_2star(&harmonic(), 1, &cfg).unwrap();
        assert!(r.holds());
        assert!((r.constant.unwrap() - 2.0 / 3.0).abs() < 1e-12);
        assert_eq!(r.witness, [1]);

        let cfg = CheckConfig::new(1 << 16).with_m_range(1, 1 << 15);
        for n0 in [1, 2, 4, 8, 16] {
            let r = check_condition_2star(&lacunary(), n0, &cfg).unwrap();
            assert!(r.fails(), "N0 = {}", n0);
            assert!(!r.witness.is_empty());
        }
        let r = check_condition_2star(&lacunary(), 16, &cfg).unwrap();
        assert_eq!(r.witness[0], 33);

        assert!(
            check_condition_2star(&harmonic(), 1, &CheckConfig::new(100).with_m_range(1, 60))
                .is_err()
        );
    }

    #[test]
    fn condition_4_examples() {
        let zero = CoefficientSequence::family(Family::Zero);
        let one_sided = |c: CoefficientSequence| {
            TwoSidedSequence::new(Complex::default(), c, zero.clone()).unwrap()
        };
        assert!(
            check_condition_4(&one_sided(harmonic()), &Sector::real(), 100)
                .unwrap()
                .holds()
        );

        let imaginary = CoefficientSequence::explicit(
            (1..=100)
                .map(|n| Complex::new(0.0, 1.0 / n as f64))
                .collect(),
        )
        .unwrap();
        let zeros = CoefficientSequence::explicit(alloc::vec![Complex::default(); 100]).unwrap();
        let ts = TwoSidedSequence::new(Complex::default(), imaginary, zeros).unwrap();
        let r = check_condition_4(&ts, &Sector::new(1.5).unwrap(), 100).unwrap();
        assert!(r.fails());
        assert_eq!(r.witness[0], 1);

        let pos = CoefficientSequence::explicit(
            (1..=50)
                .map(|n| Complex::new(1.0, 1.0) / (n * n) as f64)
                .collect(),
        )
        .unwrap();
        let neg = CoefficientSequence::explicit(
            (1..=50)
                .map(|n| Complex::new(1.0, -1.0) / (n * n) as f64)
                .collect(),
        )
        .unwrap();
        let ts = TwoSidedSequence::new(Complex::default(), pos, neg).unwrap();
        let r = check_condition_4(&ts, &Sector::new(PI / 4.0).unwrap(), 50).unwrap();
        assert!(r.fails());
        assert_eq!(r.witness[0], 1);
    }

    #[test]
    fn conditions_5_6_examples() {
        let ld = CoefficientSequence::generator(FamilySpec::log_damped());
        let cfg = CheckConfig::new(1 << 20);
        let (five, six) = check_conditions_5_6(&TwoSidedSequence::from_sine(&ld), &cfg).unwrap();
        assert!(five.holds());
        assert!((five.trend[3].value - 8.0 / (8.0 * 10f64.ln())).abs() < 1e-12);
        assert!(six.holds());
        assert_eq!(six.constant, Some(0.0));

        let zero = CoefficientSequence::family(Family::Zero);
        let cfg = CheckConfig::new(1 << 12);
        let ts = TwoSidedSequence::new(Complex::default(), harmonic(), zero.clone()).unwrap();
        let (five, six) = check_conditions_5_6(&ts, &cfg).unwrap();
        assert!(five.fails());
        assert!(five.trend.iter().all(|p| (p.value - 1.0).abs() < 1e-12));
        assert_eq!(six.verdict, Verdict::Inconclusive);

        let (five, six) = check_conditions_5_6(&TwoSidedSequence::zero(), &cfg).unwrap();
        assert!(five.holds() && six.holds());
        assert_eq!((five.constant, six.constant), (Some(0.0), Some(0.0)));
    }

    fn find<'a>(reports: &'a [ConditionReport], name: &str) -> &'a ConditionReport {
        reports
            .iter()
            .find(|r| alloc::format!("{}", r.condition) == name)
            .unwrap_or_else(|| panic!("missing {}", name))
    }

    #[test]
    fn classify_examples() {
        let options = ClassifyOptions {
            horizon: Some(1 << 14),
            ..ClassifyOptions::default()
        };
        let reports = classify(&ClassifyTarget::Sine(harmonic()), &options).unwrap();
        assert!(find(&reports, "MONOTONE").holds());
        let c2 = find(&reports, "COND_2");
        assert!(c2.holds());
        assert!((c2.constant.unwrap() - 1.0).abs() < 1e-9);
        let star = find(&reports, "COND_2STAR(N0=1)");
        assert!(star.holds());
        assert!((star.constant.unwrap() - 2.0 / 3.0).abs() < 1e-12);

        let reports = classify(&ClassifyTarget::Sine(lacunary()), &options).unwrap();
        assert!(find(&reports, "COND_2").fails());
        assert!(find(&reports, "ORVQM(R=one,theta0=0.0)").fails());
        for n0 in [1, 2, 4, 8, 16] {
            assert!(find(&reports, &alloc::format!("COND_2STAR(N0={})", n0)).fails());
        }

        let zeros = CoefficientSequence::explicit_real(&[0.0; 64]).unwrap();
        let reports = classify(&ClassifyTarget::Sine(zeros), &ClassifyOptions::default()).unwrap();
        for r in &reports {
            assert!(r.holds(), "{}", r.condition);
            if let Some(c) = r.constant {
                if !matches!(r.condition, Condition::OrvWeight { .. }) {
                    assert_eq!(c, 0.0, "{}", r.condition);
                }
            }
        }

        let short = CoefficientSequence::explicit_real(&[1.0, 0.5]).unwrap();
        let options = ClassifyOptions {
            horizon: Some(10),
            ..ClassifyOptions::default()
        };
        assert!(matches!(
            classify(&ClassifyTarget::Sine(short), &options),
            Err(Error::InsufficientLength { .. })
        ));
    }
}
