//! Seeded constructions of sequences that satisfy weighted-variation premises
//! by construction.
//!
//! All randomness comes from ChaCha8 (`rand_chacha`) seeded through
//! `SeedableRng::seed_from_u64`. Uniform reals in `[0, 1)` take the top 53
//! bits of `next_u64`.
//!
//! The quotient `a_n = c_n / R(n)` is assembled backward from a zero tail,
//! `a_n = sum_{k=n}^{H+1} d_k`, and then `c_n = R(n) a_n` for `n = 1..=H+1`,
//! so the returned sequence covers horizon `H`.

use alloc::vec::Vec;

#[allow(unused_imports)] // float methods under no_std
use num_traits::Float;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::{CoefficientSequence, Sector, WeightSequence};
use crate::sum::ComplexSum;
use crate::Complex;

/// Thin wrapper giving the handful of draws the constructions need.
#[derive(Debug, Clone)]
pub struct SeededRng(ChaCha8Rng);

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        Self(ChaCha8Rng::seed_from_u64(seed))
    }

    /// Uniform on `[0, 1)`.
    pub fn unit(&mut self) -> f64 {
        (self.0.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform on `[lo, hi)`.
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.unit()
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.0.next_u64() % n
    }
}

fn assemble(decrements: &[Complex], weight: &WeightSequence) -> CoefficientSequence {
    // decrements[i] is d_{i+1}
    let mut acc = ComplexSum::new();
    let mut quotient = alloc::vec![Complex::default(); decrements.len()];
    for i in (0..decrements.len()).rev() {
        acc.add(decrements[i]);
        quotient[i] = acc.value();
    }
    let values: Vec<Complex> = quotient
        .iter()
        .enumerate()
        .map(|(i, a)| a * weight.value(i + 1))
        .collect();
    CoefficientSequence::explicit(values).expect("finite by construction")
}

/// A complex O-regularly varying quasimonotone sequence: every difference
/// `a_n - a_{n+1}` has modulus `U[0.5, 1.5) n^{-(1+decay)}` and argument
/// uniform on `[-theta0, theta0]`.
pub fn orvqm_sequence(
    rng: &mut SeededRng,
    horizon: usize,
    sector: &Sector,
    weight: &WeightSequence,
    decay: f64,
) -> CoefficientSequence {
    let theta0 = sector.theta0();
    let decrements: Vec<Complex> = (1..=horizon + 1)
        .map(|k| {
            let r = rng.uniform(0.5, 1.5) * (k as f64).powf(-(1.0 + decay));
            let phi = if theta0 > 0.0 {
                rng.uniform(-theta0, theta0)
            } else {
                0.0
            };
            Complex::from_polar(r, phi)
        })
        .collect();
    assemble(&decrements, weight)
}

/// A real sequence satisfying a weighted rest-bounded-variation condition
/// without being quasimonotone: decrements are positive except for
/// occasional rebounds of at most half the local step.
pub fn weighted_rbv_sequence(
    rng: &mut SeededRng,
    horizon: usize,
    weight: &WeightSequence,
    decay: f64,
    rebound_probability: f64,
) -> CoefficientSequence {
    let decrements: Vec<Complex> = (1..=horizon + 1)
        .map(|k| {
            let r = rng.uniform(0.5, 1.5) * (k as f64).powf(-(1.0 + decay));
            let sign = if rng.unit() < rebound_probability {
                -0.5
            } else {
                1.0
            };
            Complex::new(sign * r, 0.0)
        })
        .collect();
    assemble(&decrements, weight)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orvqm_differences_lie_in_sector() {
        let sector = Sector::new(0.4).unwrap();
        let w = WeightSequence::Power(0.3);
        let c = orvqm_sequence(&mut SeededRng::new(5), 500, &sector, &w, 0.8);
        let terms = c.aligned(501).unwrap();
        for n in 1..501 {
            let d = terms[n] / w.value(n) - terms[n + 1] / w.value(n + 1);
            assert!(sector.contains_within(d, 1e-12 * terms[n].norm()));
        }
    }

    #[test]
    fn same_seed_same_sequence() {
        let w = WeightSequence::Log;
        let a = weighted_rbv_sequence(&mut SeededRng::new(9), 100, &w, 0.7, 0.2);
        let b = weighted_rbv_sequence(&mut SeededRng::new(9), 100, &w, 0.7, 0.2);
        assert_eq!(a, b);
        let c = weighted_rbv_sequence(&mut SeededRng::new(10), 100, &w, 0.7, 0.2);
        assert_ne!(a, c);
    }
}
