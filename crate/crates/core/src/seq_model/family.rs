//! Closed-form generator families.
//!
//! Every family is a pure function of `n >= 1`. The one randomized family,
//! `perturbed`, draws its noise from ChaCha8 (`rand_chacha`) seeded with
//! `SeedableRng::seed_from_u64(seed)`, positioned on stream `stream` at word
//! offset `2 n`. Noise for index `n` is therefore the `n`-th 64-bit output of
//! that stream and does not depend on which other indices were evaluated.

use alloc::boxed::Box;
use alloc::format;
use core::fmt;
use core::str::FromStr;

#[allow(unused_imports)] // float methods under no_std
use num_traits::Float;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::parse::{parse_term, Arg, Term};
use super::WeightSequence;
use crate::{Complex, Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// `b_n = 0`.
    Zero,
    /// `b_n = n^-p`.
    Harmonic { p: f64 },
    /// `b_n = 1 / (n ln(n + 2))`.
    LogDamped,
    /// `b_n = n^alpha 2^{-(alpha + p) j}` on the dyadic block `2^j <= n < 2^{j+1}`.
    /// `b_n / n^alpha` is non-increasing while `b_n` itself rises inside
    /// every block.
    Quasimono { alpha: f64, p: f64 },
    /// `b_n = 2^{-alpha k}` if `n = 2^k` with `k >= 1`, else `0`.
    Lacunary { alpha: f64 },
    /// Constant on consecutive blocks of `len` terms, equal to `s^-p` where
    /// `s` is the first index of the block.
    RbvBlock { len: usize, p: f64 },
    /// `c_n = R(n) base_n`, so `c_n / R(n)` inherits the base's monotonicity.
    Orvqm {
        weight: WeightSequence,
        base: Box<Family>,
    },
    /// `b_n = base_n (1 + eps u_n)` with `u_n` uniform on `[-1, 1)`.
    Perturbed {
        stream: u64,
        base: Box<Family>,
        eps: f64,
    },
    /// `c_n = (1 + i slope) base_n`.
    Tilted { slope: f64, base: Box<Family> },
    /// `c_n = factor base_n`.
    Scaled { factor: f64, base: Box<Family> },
}

fn dyadic_level(n: usize) -> u32 {
    usize::BITS - 1 - n.leading_zeros()
}

fn unit_noise(seed: u64, stream: u64, n: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng.set_word_pos(2 * n as u128);
    let bits = rng.next_u64() >> 11;
    2.0 * (bits as f64 * (1.0 / (1u64 << 53) as f64)) - 1.0
}

impl Family {
    /// Term `n >= 1`; `seed` only affects randomized families.
    pub fn value(&self, n: usize, seed: u64) -> Complex {
        debug_assert!(n >= 1);
        let x = n as f64;
        match self {
            Self::Zero => Complex::new(0.0, 0.0),
            Self::Harmonic { p } => Complex::new(x.powf(-p), 0.0),
            Self::LogDamped => Complex::new(1.0 / (x * (x + 2.0).ln()), 0.0),
            Self::Quasimono { alpha, p } => {
                let j = dyadic_level(n) as f64;
                Complex::new(x.powf(*alpha) * (-(alpha + p) * j).exp2(), 0.0)
            }
            Self::Lacunary { alpha } => {
                if n >= 2 && n.is_power_of_two() {
                    Complex::new((-alpha * n.trailing_zeros() as f64).exp2(), 0.0)
                } else {
                    Complex::new(0.0, 0.0)
                }
            }
            Self::RbvBlock { len, p } => {
                let start = (n - 1) / len * len + 1;
                Complex::new((start as f64).powf(-p), 0.0)
            }
            Self::Orvqm { weight, base } => base.value(n, seed) * weight.value(n),
            Self::Perturbed { stream, base, eps } => {
                base.value(n, seed) * (1.0 + eps * unit_noise(seed, *stream, n))
            }
            Self::Tilted { slope, base } => base.value(n, seed) * Complex::new(1.0, *slope),
            Self::Scaled { factor, base } => base.value(n, seed) * *factor,
        }
    }

    pub fn is_real(&self) -> bool {
        match self {
            Self::Tilted { slope, base } => *slope == 0.0 && base.is_real(),
            Self::Orvqm { base, .. } | Self::Perturbed { base, .. } | Self::Scaled { base, .. } => {
                base.is_real()
            }
            _ => true,
        }
    }

    /// `log2 |b_n|`, evaluated without forming `b_n` where the family
    /// allows it (`-inf` for a zero term).
    pub fn log2_magnitude(&self, n: usize, seed: u64) -> f64 {
        match self {
            Self::Lacunary { alpha } => {
                if n >= 2 && n.is_power_of_two() {
                    -alpha * n.trailing_zeros() as f64
                } else {
                    f64::NEG_INFINITY
                }
            }
            Self::Harmonic { p } => -p * (n as f64).log2(),
            _ => self.value(n, seed).norm().log2(),
        }
    }

    /// An upper bound for `sum_{k > after} |b_k|`, when one is available in
    /// closed form.
    pub fn abs_tail_after(&self, after: usize) -> Option<f64> {
        let start = after.max(1) as f64;
        match self {
            Self::Zero => Some(0.0),
            Self::Harmonic { p } if *p > 1.0 => Some(start.powf(1.0 - p) / (p - 1.0)),
            Self::Lacunary { alpha } if *alpha > 0.0 => {
                // first k >= 1 with 2^k > after
                let k = if after < 2 {
                    1.0
                } else {
                    dyadic_level(after) as f64 + 1.0
                };
                Some((-alpha * k).exp2() / (1.0 - (-alpha).exp2()))
            }
            Self::Quasimono { alpha, p } if *p > 1.0 => {
                let j = dyadic_level(after.max(1)) as f64;
                Some(alpha.exp2() * ((1.0 - p) * j).exp2() / (1.0 - (1.0 - p).exp2()))
            }
            Self::Perturbed { base, eps, .. } => {
                base.abs_tail_after(after).map(|t| t * (1.0 + eps.abs()))
            }
            Self::Tilted { slope, base } => base
                .abs_tail_after(after)
                .map(|t| t * (1.0 + slope * slope).sqrt()),
            Self::Scaled { factor, base } => base.abs_tail_after(after).map(|t| t * factor.abs()),
            _ => None,
        }
    }

    pub(crate) fn from_term(term: &Term) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown or malformed family `{}`", term));
        let num = |i: usize| match term.args.get(i) {
            Some(Arg::Number(v)) => Ok(*v),
            _ => Err(bad()),
        };
        let sub = |i: usize| match term.args.get(i) {
            Some(Arg::Term(t)) => Family::from_term(t).map(Box::new),
            _ => Err(bad()),
        };
        let arity = |k: usize| {
            if term.args.len() == k {
                Ok(())
            } else {
                Err(bad())
            }
        };
        let family = match term.name.as_str() {
            "zero" => {
                arity(0)?;
                Self::Zero
            }
            "harmonic" => {
                arity(1)?;
                Self::Harmonic { p: num(0)? }
            }
            "logdamped" | "log_damped" => {
                arity(0)?;
                Self::LogDamped
            }
            "quasimono" => {
                arity(2)?;
                Self::Quasimono {
                    alpha: num(0)?,
                    p: num(1)?,
                }
            }
            "lacunary" => {
                arity(1)?;
                Self::Lacunary { alpha: num(0)? }
            }
            "rbv_block" | "rbvblock" => {
                arity(2)?;
                let len = num(0)?;
                if !(len >= 1.0 && len.fract() == 0.0) {
                    return Err(bad());
                }
                Self::RbvBlock {
                    len: len as usize,
                    p: num(1)?,
                }
            }
            "orvqm" => {
                arity(2)?;
                let weight = match term.args.first() {
                    Some(Arg::Term(t)) => WeightSequence::from_term(t)?,
                    _ => return Err(bad()),
                };
                Self::Orvqm {
                    weight,
                    base: sub(1)?,
                }
            }
            "perturbed" => {
                arity(3)?;
                let stream = num(0)?;
                if !(stream >= 0.0 && stream.fract() == 0.0) {
                    return Err(bad());
                }
                Self::Perturbed {
                    stream: stream as u64,
                    base: sub(1)?,
                    eps: num(2)?,
                }
            }
            "tilted" => {
                arity(2)?;
                Self::Tilted {
                    slope: num(0)?,
                    base: sub(1)?,
                }
            }
            "scaled" => {
                arity(2)?;
                Self::Scaled {
                    factor: num(0)?,
                    base: sub(1)?,
                }
            }
            _ => return Err(bad()),
        };
        if term
            .args
            .iter()
            .any(|a| matches!(a, Arg::Term(t) if t.seed.is_some()))
        {
            return Err(Error::Parse(format!(
                "seed must follow the outermost family in `{}`",
                term
            )));
        }
        Ok(family)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Zero => f.write_str("zero"),
            Self::Harmonic { p } => write!(f, "harmonic({:?})", p),
            Self::LogDamped => f.write_str("logdamped"),
            Self::Quasimono { alpha, p } => write!(f, "quasimono({:?},{:?})", alpha, p),
            Self::Lacunary { alpha } => write!(f, "lacunary({:?})", alpha),
            Self::RbvBlock { len, p } => write!(f, "rbv_block({},{:?})", len, p),
            Self::Orvqm { weight, base } => write!(f, "orvqm({},{})", weight, base),
            Self::Perturbed { stream, base, eps } => {
                write!(f, "perturbed({},{},{:?})", stream, base, eps)
            }
            Self::Tilted { slope, base } => write!(f, "tilted({:?},{})", slope, base),
            Self::Scaled { factor, base } => write!(f, "scaled({:?},{})", factor, base),
        }
    }
}

/// A family together with the seed for its randomized parts; text form
/// `family_id(param1,param2,...)[@seed]`.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilySpec {
    pub family: Family,
    pub seed: Option<u64>,
}

impl FamilySpec {
    pub fn new(family: Family) -> Self {
        Self { family, seed: None }
    }

    pub fn with_seed(family: Family, seed: u64) -> Self {
        Self {
            family,
            seed: Some(seed),
        }
    }

    pub fn value(&self, n: usize) -> Complex {
        self.family.value(n, self.seed.unwrap_or(0))
    }

    pub fn harmonic(p: f64) -> Self {
        Self::new(Family::Harmonic { p })
    }

    pub fn lacunary(alpha: f64) -> Self {
        Self::new(Family::Lacunary { alpha })
    }

    pub fn log_damped() -> Self {
        Self::new(Family::LogDamped)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)?;
        if let Some(seed) = self.seed {
            write!(f, "@{}", seed)?;
        }
        Ok(())
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let term = parse_term(s)?;
        Ok(Self {
            family: Family::from_term(&term)?,
            seed: term.seed,
        })
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for FamilySpec {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> core::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn canonical_text_round_trips() {
        for text in [
            "harmonic(1.0)",
            "lacunary(0.5)",
            "perturbed(3,harmonic(1.0),0.01)@42",
            "orvqm(power(0.5),harmonic(1.0))",
            "quasimono(0.5,1.5)",
            "rbv_block(4,1.0)",
            "tilted(0.5,harmonic(2.0))",
            "scaled(-1.0,logdamped)",
            "zero",
            "logdamped",
        ] {
            let spec: FamilySpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
        assert_eq!(
            "log_damped".parse::<FamilySpec>().unwrap().to_string(),
            "logdamped"
        );
    }

    #[test]
    fn malformed_specs_are_rejected() {
        for text in [
            "harmonic",
            "harmonic(1,2)",
            "bogus(1)",
            "rbv_block(2.5,1)",
            "orvqm(1,harmonic(1))",
        ] {
            assert!(text.parse::<FamilySpec>().is_err(), "{text}");
        }
        assert!("perturbed(0,harmonic(1.0)@3,0.1)"
            .parse::<FamilySpec>()
            .is_err());
    }

    #[test]
    fn lacunary_starts_at_k_equal_one() {
        let lac = FamilySpec::lacunary(1.0);
        let got: alloc::vec::Vec<f64> = (1..=5).map(|n| lac.value(n).re).collect();
        assert_eq!(got, [0.0, 0.5, 0.0, 0.25, 0.0]);
    }

    #[test]
    fn quasimono_is_quasimonotone_but_not_monotone() {
        let f = Family::Quasimono { alpha: 0.5, p: 1.5 };
        let mut rising = false;
        for n in 1..200 {
            let (a, b) = (f.value(n, 0).re, f.value(n + 1, 0).re);
            assert!(a / (n as f64).sqrt() >= b / ((n + 1) as f64).sqrt() * (1.0 - 1e-12));
            rising |= b > a;
        }
        assert!(rising);
    }

    #[test]
    fn perturbation_is_random_access() {
        let spec: FamilySpec = "perturbed(3,harmonic(1.0),0.01)@42".parse().unwrap();
        let forward: alloc::vec::Vec<Complex> = (1..50).map(|n| spec.value(n)).collect();
        let backward: alloc::vec::Vec<Complex> = (1..50).rev().map(|n| spec.value(n)).collect();
        assert!(forward.iter().eq(backward.iter().rev()));
        for (i, z) in forward.iter().enumerate() {
            let base = 1.0 / (i + 1) as f64;
            assert!((z.re / base - 1.0).abs() <= 0.01);
        }
        let other: FamilySpec = "perturbed(3,harmonic(1.0),0.01)@43".parse().unwrap();
        assert_ne!(other.value(7), spec.value(7));
    }

    #[test]
    fn lacunary_tail_bound_matches_geometric_sum() {
        let f = Family::Lacunary { alpha: 1.0 };
        // 2^7 = 128 is the first power above 100
        assert!((f.abs_tail_after(100).unwrap() - (1.0f64 / 64.0)).abs() < 1e-15);
        assert!((f.abs_tail_after(0).unwrap() - 1.0).abs() < 1e-15);
    }
}
