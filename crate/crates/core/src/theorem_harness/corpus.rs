use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::seq_model::random::{orvqm_sequence, weighted_rbv_sequence, SeededRng};
use crate::seq_model::{CoefficientSequence, FamilySpec, Sector, TwoSidedSequence, WeightSequence};
use crate::Complex;

/// Horizon of generated corpus members; terms `1..=H+1` are stored and the
/// sequences vanish beyond.
pub const CORPUS_HORIZON: usize = 1 << 12;

/// Largest `m` at which corpus chains are checked.
pub const CORPUS_M_MAX: usize = 1 << 10;

/// A generated sequence together with the premises it was built to satisfy.
#[derive(Debug, Clone, PartialEq)]
pub struct CorpusMember {
    pub label: String,
    pub sequence: CoefficientSequence,
    pub weight: WeightSequence,
    pub sector: Sector,
    /// Built so that `Δ(c_n / R(n))` lies in the sector.
    pub sector_quasimonotone: bool,
}

fn weight_for(i: u64) -> WeightSequence {
    match i % 3 {
        0 => WeightSequence::One,
        1 => WeightSequence::Power(0.5),
        _ => WeightSequence::Log,
    }
}

/// One premise-satisfying member per seed.
///
/// Odd seeds give sector quasimonotone sequences (half-angle alternating
/// between `0` and `pi/6`), even seeds give real weighted rest-bounded-
/// variation sequences with occasional rebounds. Weights cycle through
/// `one`, `power(0.5)` and `log`; the decay exponent of the quotient
/// `c_n / R(n)` is drawn from `[0.75, 1.5)`, so `c_n -> 0` for every weight.
pub fn premise_member(seed: u64, horizon: usize) -> CorpusMember {
    let mut rng = SeededRng::new(seed);
    let weight = weight_for(seed / 2);
    let decay = rng.uniform(0.75, 1.5);
    if !seed.is_multiple_of(2) {
        let theta0 = if (seed / 2).is_multiple_of(2) { 0.0 } else { PI / 6.0 };
        let sector = Sector::new(theta0).expect("valid half-angle");
        let sequence = orvqm_sequence(&mut rng, horizon, &sector, &weight, decay);
        CorpusMember {
            label: format!(
                "orvqm(seed={},theta0={:.6},R={},decay={:.4})",
                seed, theta0, weight, decay
            ),
            sequence,
            weight,
            sector,
            sector_quasimonotone: true,
        }
    } else {
        let sequence = weighted_rbv_sequence(&mut rng, horizon, &weight, decay, 0.2);
        CorpusMember {
            label: format!(
                "weighted_rbv(seed={},R={},decay={:.4})",
                seed, weight, decay
            ),
            sequence,
            weight,
            sector: Sector::real(),
            sector_quasimonotone: false,
        }
    }
}

/// Members for seeds `first..first + size`.
pub fn premise_corpus(first: u64, size: usize, horizon: usize) -> Vec<CorpusMember> {
    (first..first + size as u64)
        .map(|s| premise_member(s, horizon))
        .collect()
}

/// A two-sided sequence satisfying the sector condition on both
/// `c_k + c_{-k}` and `c_k - c_{-k}`: `c_k` is sector quasimonotone (hence
/// in the sector) and `c_{-k} = lambda_k c_k` with real `|lambda_k| < 1`.
/// Every fourth seed uses `lambda_k = -1`, the embedded sine series.
pub fn sector_two_sided(seed: u64, horizon: usize) -> (String, TwoSidedSequence, Sector) {
    let mut rng = SeededRng::new(seed);
    let theta0 = [0.0, PI / 6.0, PI / 4.0, PI / 3.0][(seed % 4) as usize];
    let sector = Sector::new(theta0).expect("valid half-angle");
    let decay = rng.uniform(0.1, 1.0);
    let pos = orvqm_sequence(&mut rng, horizon, &sector, &WeightSequence::One, decay);
    let values = pos.aligned(horizon + 1).expect("generated to the horizon");
    let sine = seed % 4 == 3;
    let neg: Vec<Complex> = values[1..]
        .iter()
        .map(|c| if sine { -c } else { c * rng.uniform(-0.9, 0.9) })
        .collect();
    let neg = CoefficientSequence::explicit(neg).expect("finite");
    let label = format!(
        "sector_two_sided(seed={},theta0={:.6},decay={:.4}{})",
        seed,
        theta0,
        decay,
        if sine { ",sine" } else { "" }
    );
    (
        label,
        TwoSidedSequence::new(Complex::default(), pos, neg).expect("equal lengths"),
        sector,
    )
}

/// Families used for the equivalence diagnostics by default.
pub fn default_equivalence_corpus() -> Vec<FamilySpec> {
    [
        "harmonic(1.0)",
        "logdamped",
        "harmonic(2.0)",
        "quasimono(0.5,1.5)",
        "lacunary(1.0)",
    ]
    .iter()
    .map(|s| s.parse().expect("valid family"))
    .collect()
}

/// Families drawn for the Abel-dominance experiment.
pub fn abel_family(rng: &mut SeededRng) -> FamilySpec {
    let text = match rng.below(8) {
        0 => format!("harmonic({:?})", rng.uniform(0.3, 2.0)),
        1 => "logdamped".into(),
        2 => format!(
            "quasimono({:?},{:?})",
            rng.uniform(0.0, 1.0),
            rng.uniform(0.5, 2.0)
        ),
        3 => format!("lacunary({:?})", rng.uniform(0.25, 2.0)),
        4 => format!(
            "rbv_block({},{:?})",
            1 + rng.below(8),
            rng.uniform(0.5, 1.5)
        ),
        5 => format!(
            "perturbed({},harmonic(1.0),0.3)@{}",
            rng.below(4),
            rng.below(1000)
        ),
        6 => format!(
            "tilted({:?},harmonic({:?}))",
            rng.uniform(-1.0, 1.0),
            rng.uniform(0.5, 1.5)
        ),
        _ => format!(
            "orvqm(power({:?}),harmonic({:?}))",
            rng.uniform(0.0, 0.5),
            rng.uniform(1.0, 2.0)
        ),
    };
    text.parse().expect("valid family")
}
