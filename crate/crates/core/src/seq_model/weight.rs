use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

#[allow(unused_imports)] // float methods under no_std
use num_traits::Float;

use super::parse::{parse_term, Arg, Term};
use crate::{Error, Result};

/// A positive non-decreasing weight `R(n)`, `n >= 1`.
#[derive(Debug, Clone, PartialEq)]
pub enum WeightSequence {
    /// `R(n) = 1`.
    One,
    /// `R(n) = n^beta`.
    Power(f64),
    /// `R(n) = ln(n + 2)`.
    Log,
    /// `R(n) = 2^n`. Not O-regularly varying; kept as a negative example.
    Exp2,
    /// `R(n) = values[n - 1]`.
    Explicit(Vec<f64>),
}

impl WeightSequence {
    pub fn value(&self, n: usize) -> f64 {
        let x = n as f64;
        match self {
            Self::One => 1.0,
            Self::Power(beta) => x.powf(*beta),
            Self::Log => (x + 2.0).ln(),
            Self::Exp2 => x.exp2(),
            Self::Explicit(values) => values.get(n.wrapping_sub(1)).copied().unwrap_or(f64::NAN),
        }
    }

    /// `ln R(n)`, finite wherever `R(n)` is positive even when `R(n)`
    /// itself overflows.
    pub fn ln_value(&self, n: usize) -> f64 {
        let x = n as f64;
        match self {
            Self::One => 0.0,
            Self::Power(beta) => beta * x.ln(),
            Self::Log => (x + 2.0).ln().ln(),
            Self::Exp2 => x * core::f64::consts::LN_2,
            Self::Explicit(_) => self.value(n).ln(),
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Self::One) || matches!(self, Self::Power(b) if *b == 0.0)
    }

    /// Checks positivity and monotonicity of `R(1..=upto)`.
    pub fn validate(&self, upto: usize) -> Result<()> {
        if let Self::Explicit(values) = self {
            if values.len() < upto {
                return Err(Error::InsufficientLength {
                    needed: upto,
                    available: values.len(),
                });
            }
        }
        if let Self::Power(beta) = self {
            if !(beta.is_finite() && *beta >= 0.0) {
                return Err(Error::InvalidWeight {
                    index: 1,
                    reason: "power exponent must be finite and nonnegative",
                });
            }
            return Ok(());
        }
        if matches!(self, Self::One | Self::Log | Self::Exp2) {
            return Ok(());
        }
        let mut prev = f64::NEG_INFINITY;
        for n in 1..=upto {
            let r = self.value(n);
            if !(r.is_finite() && r > 0.0) {
                return Err(Error::InvalidWeight {
                    index: n,
                    reason: "weight must be positive and finite",
                });
            }
            if r < prev - crate::REL_TOL * prev.abs().max(r.abs()) {
                return Err(Error::InvalidWeight {
                    index: n,
                    reason: "weight must be non-decreasing",
                });
            }
            prev = r;
        }
        Ok(())
    }

    pub(crate) fn from_term(term: &Term) -> Result<Self> {
        match (term.name.as_str(), term.args.as_slice()) {
            ("one" | "const", []) => Ok(Self::One),
            ("power" | "pow", [Arg::Number(beta)]) => Ok(Self::Power(*beta)),
            ("log", []) => Ok(Self::Log),
            ("exp2", []) => Ok(Self::Exp2),
            _ => Err(Error::Parse(format!("unknown weight `{}`", term))),
        }
    }
}

impl fmt::Display for WeightSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::One => f.write_str("one"),
            Self::Power(beta) => write!(f, "power({:?})", beta),
            Self::Log => f.write_str("log"),
            Self::Exp2 => f.write_str("exp2"),
            Self::Explicit(values) => write!(f, "explicit[{}]", values.len()),
        }
    }
}

impl FromStr for WeightSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let term = parse_term(s)?;
        if term.seed.is_some() {
            return Err(Error::Parse(format!("weight `{}` takes no seed", s.trim())));
        }
        Self::from_term(&term)
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for WeightSequence {
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
    use alloc::vec;

    #[test]
    fn parses_and_displays_canonical_forms() {
        for text in ["one", "power(0.5)", "log", "exp2"] {
            let w: WeightSequence = text.parse().unwrap();
            assert_eq!(w.to_string(), text);
        }
        assert!("power()".parse::<WeightSequence>().is_err());
        assert!("harmonic(1.0)".parse::<WeightSequence>().is_err());
    }

    #[test]
    fn validation_rejects_decreasing_and_nonpositive() {
        assert!(WeightSequence::Explicit(vec![1.0, 2.0, 1.5])
            .validate(3)
            .is_err());
        assert!(WeightSequence::Explicit(vec![0.0, 1.0])
            .validate(2)
            .is_err());
        assert!(WeightSequence::Power(-1.0).validate(10).is_err());
        assert!(WeightSequence::Explicit(vec![1.0, 1.0, 3.0])
            .validate(3)
            .is_ok());
    }

    #[test]
    fn ln_value_survives_overflow() {
        let w = WeightSequence::Exp2;
        assert!(w.value(2000).is_infinite());
        assert!((w.ln_value(2000) - 2000.0 * core::f64::consts::LN_2).abs() < 1e-9);
    }
}
