use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

#[allow(unused_imports)] // float methods under no_std
use num_traits::Float;

use super::parse::parse_real_list;
use super::{Family, FamilySpec};
use crate::{Complex, Error, Result};

/// Horizon used for generator sequences when the caller does not pick one.
pub const DEFAULT_GENERATOR_HORIZON: usize = 1 << 20;

/// A one-sided coefficient sequence, either stored or generated.
///
/// Stored sequences are finitely supported for series evaluation: terms past
/// the data are zero. Condition checkers instead demand that the data cover
/// the requested horizon.
#[derive(Debug, Clone, PartialEq)]
pub enum CoefficientSequence {
    Explicit {
        values: Vec<Complex>,
        n_start: usize,
    },
    Generator(FamilySpec),
}

impl CoefficientSequence {
    pub fn explicit(values: Vec<Complex>) -> Result<Self> {
        Self::explicit_from(values, 1)
    }

    pub fn explicit_from(values: Vec<Complex>, n_start: usize) -> Result<Self> {
        if n_start == 0 {
            return Err(Error::InvalidArgument("n_start must be at least 1".into()));
        }
        if let Some(i) = values
            .iter()
            .position(|z| !(z.re.is_finite() && z.im.is_finite()))
        {
            return Err(Error::NonFinite { index: n_start + i });
        }
        Ok(Self::Explicit { values, n_start })
    }

    pub fn explicit_real(values: &[f64]) -> Result<Self> {
        Self::explicit(values.iter().map(|&v| Complex::new(v, 0.0)).collect())
    }

    pub fn generator(spec: FamilySpec) -> Self {
        Self::Generator(spec)
    }

    pub fn family(family: Family) -> Self {
        Self::Generator(FamilySpec::new(family))
    }

    pub fn n_start(&self) -> usize {
        match self {
            Self::Explicit { n_start, .. } => *n_start,
            Self::Generator(_) => 1,
        }
    }

    /// Last index carrying data; `None` for generators.
    pub fn support_end(&self) -> Option<usize> {
        match self {
            Self::Explicit { values, n_start } => Some(n_start + values.len() - 1),
            Self::Generator(_) => None,
        }
    }

    /// Largest horizon `N` such that terms `1..=N+1` are available.
    pub fn natural_horizon(&self) -> usize {
        match self.support_end() {
            Some(end) => end.saturating_sub(1),
            None => DEFAULT_GENERATOR_HORIZON,
        }
    }

    pub fn is_real(&self) -> bool {
        match self {
            Self::Explicit { values, .. } => values.iter().all(|z| z.im == 0.0),
            Self::Generator(spec) => spec.family.is_real(),
        }
    }

    /// Term `n`, or `None` outside the available data.
    pub fn get(&self, n: usize) -> Option<Complex> {
        match self {
            Self::Explicit { values, n_start } => {
                n.checked_sub(*n_start).and_then(|i| values.get(i).copied())
            }
            Self::Generator(spec) => (n >= 1).then(|| spec.value(n)),
        }
    }

    /// Term `n` with finite-support semantics.
    pub fn value_or_zero(&self, n: usize) -> Complex {
        self.get(n).unwrap_or_default()
    }

    /// The first `count` terms, starting at `n_start`.
    pub fn prefix(&self, count: usize) -> Result<Vec<Complex>> {
        if count == 0 {
            return Err(Error::InvalidArgument(
                "prefix length must be at least 1".into(),
            ));
        }
        match self {
            Self::Explicit { values, .. } => {
                if values.len() < count {
                    return Err(Error::InsufficientLength {
                        needed: count,
                        available: values.len(),
                    });
                }
                Ok(values[..count].to_vec())
            }
            Self::Generator(spec) => Ok((1..=count).map(|n| spec.value(n)).collect()),
        }
    }

    /// Index-aligned terms `0..=upto`: slot `n` holds `c_n`, slot 0 and any
    /// index below `n_start` hold zero.
    pub fn aligned(&self, upto: usize) -> Result<Vec<Complex>> {
        let mut out = vec![Complex::new(0.0, 0.0); upto + 1];
        match self {
            Self::Explicit { values, n_start } => {
                let end = n_start + values.len() - 1;
                if values.is_empty() || end < upto {
                    return Err(Error::InsufficientLength {
                        needed: upto.saturating_sub(*n_start) + 1,
                        available: values.len(),
                    });
                }
                out[*n_start..=upto].copy_from_slice(&values[..=upto - n_start]);
            }
            Self::Generator(spec) => {
                for (n, slot) in out.iter_mut().enumerate().skip(1) {
                    *slot = spec.value(n);
                }
            }
        }
        Ok(out)
    }

    /// Index-aligned terms with finite-support semantics (never fails).
    pub fn aligned_or_zero(&self, upto: usize) -> Vec<Complex> {
        (0..=upto)
            .map(|n| {
                if n == 0 {
                    Complex::default()
                } else {
                    self.value_or_zero(n)
                }
            })
            .collect()
    }

    /// Real parts of `aligned`, failing on any negative or non-real term.
    pub fn aligned_nonnegative(&self, upto: usize) -> Result<Vec<f64>> {
        let terms = self.aligned(upto)?;
        terms
            .iter()
            .enumerate()
            .map(|(n, z)| {
                if z.im != 0.0 || z.re < 0.0 {
                    Err(Error::NotNonnegative { index: n })
                } else {
                    Ok(z.re)
                }
            })
            .collect()
    }

    /// Upper bound for `sum_{k > after} |c_k|` when available.
    pub fn abs_tail_after(&self, after: usize) -> Option<f64> {
        match self {
            Self::Explicit { values, n_start } => {
                let skip = (after + 1).saturating_sub(*n_start);
                Some(crate::sum::compensated_sum(
                    values.iter().skip(skip).map(|z| z.norm()),
                ))
            }
            Self::Generator(spec) => spec.family.abs_tail_after(after),
        }
    }

    /// `log2 |c_n|` without forming `c_n` where the family permits.
    pub fn log2_magnitude(&self, n: usize) -> f64 {
        match self {
            Self::Generator(spec) => spec.family.log2_magnitude(n, spec.seed.unwrap_or(0)),
            Self::Explicit { .. } => self.value_or_zero(n).norm().log2(),
        }
    }

    pub fn scaled(&self, factor: f64) -> Self {
        match self {
            Self::Explicit { values, n_start } => Self::Explicit {
                values: values.iter().map(|z| z * factor).collect(),
                n_start: *n_start,
            },
            Self::Generator(spec) => Self::Generator(FamilySpec {
                family: Family::Scaled {
                    factor,
                    base: alloc::boxed::Box::new(spec.family.clone()),
                },
                seed: spec.seed,
            }),
        }
    }
}

impl fmt::Display for CoefficientSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Generator(spec) => write!(f, "{}", spec),
            Self::Explicit { values, n_start } if values.iter().all(|z| z.im == 0.0) => {
                f.write_str("explicit:[")?;
                for (i, z) in values.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{:?}", z.re)?;
                }
                f.write_str("]")?;
                if *n_start != 1 {
                    write!(f, "@n{}", n_start)?;
                }
                Ok(())
            }
            Self::Explicit { values, .. } => write!(f, "explicit-complex[{}]", values.len()),
        }
    }
}

impl FromStr for CoefficientSequence {
    type Err = Error;

    /// Accepts a family spec or an inline `explicit:[v1,v2,...]` list.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(list) = s.strip_prefix("explicit:") {
            let values = parse_real_list(list)?;
            if values.is_empty() {
                return Err(Error::Parse("explicit sequence is empty".into()));
            }
            return Self::explicit_real(&values);
        }
        Ok(Self::Generator(s.parse()?))
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for CoefficientSequence {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> core::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Two-sided coefficients `{c_k}_{k in Z}`: `c_0`, `c_k` and `c_{-k}` for `k >= 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoSidedSequence {
    pub c0: Complex,
    pub pos: CoefficientSequence,
    pub neg: CoefficientSequence,
}

impl TwoSidedSequence {
    pub fn new(c0: Complex, pos: CoefficientSequence, neg: CoefficientSequence) -> Result<Self> {
        let extent = |s: &CoefficientSequence| s.support_end().map(|e| e + 1 - s.n_start());
        if extent(&pos) != extent(&neg) || pos.n_start() != neg.n_start() {
            return Err(Error::InvalidArgument(format!(
                "positive and negative sides differ in length ({:?} vs {:?})",
                extent(&pos),
                extent(&neg)
            )));
        }
        Ok(Self { c0, pos, neg })
    }

    /// The sine series `sum b_k sin kx` written as `c_k = b_k`, `c_{-k} = -b_k`;
    /// its exponential partial sums equal `2i` times the sine partial sums.
    pub fn from_sine(b: &CoefficientSequence) -> Self {
        Self {
            c0: Complex::default(),
            pos: b.clone(),
            neg: b.scaled(-1.0),
        }
    }

    pub fn zero() -> Self {
        let z = CoefficientSequence::family(Family::Zero);
        Self {
            c0: Complex::default(),
            pos: z.clone(),
            neg: z,
        }
    }

    pub fn natural_horizon(&self) -> usize {
        self.pos.natural_horizon()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn prefix_examples() {
        let h = CoefficientSequence::generator(FamilySpec::harmonic(1.0));
        let p = h.prefix(3).unwrap();
        assert_eq!(
            p,
            [
                Complex::new(1.0, 0.0),
                Complex::new(0.5, 0.0),
                Complex::new(1.0 / 3.0, 0.0)
            ]
        );

        let lac = CoefficientSequence::generator(FamilySpec::lacunary(1.0));
        let re: Vec<f64> = lac.prefix(5).unwrap().iter().map(|z| z.re).collect();
        assert_eq!(re, [0.0, 0.5, 0.0, 0.25, 0.0]);

        let short = CoefficientSequence::explicit_real(&[5.0, 4.0]).unwrap();
        let err = short.prefix(3).unwrap_err();
        assert!(err.to_string().contains("insufficient length"));
    }

    #[test]
    fn prefix_is_deterministic() {
        let spec: FamilySpec = "perturbed(1,logdamped,0.2)@7".parse().unwrap();
        let s = CoefficientSequence::generator(spec);
        let a = s.prefix(1000).unwrap();
        let b = s.prefix(1000).unwrap();
        assert!(a
            .iter()
            .zip(&b)
            .all(|(x, y)| x.re.to_bits() == y.re.to_bits() && x.im.to_bits() == y.im.to_bits()));
    }

    #[test]
    fn explicit_rejects_non_finite() {
        assert!(CoefficientSequence::explicit_real(&[1.0, f64::NAN]).is_err());
        assert!(CoefficientSequence::explicit_real(&[f64::INFINITY]).is_err());
    }

    #[test]
    fn aligned_layout_and_bounds() {
        let s = CoefficientSequence::explicit_real(&[1.0, 0.5, 0.25]).unwrap();
        let a = s.aligned(3).unwrap();
        assert_eq!(a[0], Complex::default());
        assert_eq!(a[3].re, 0.25);
        assert!(s.aligned(4).is_err());
        assert_eq!(s.natural_horizon(), 2);
        assert_eq!(s.aligned_or_zero(5)[5], Complex::default());
    }

    #[test]
    fn inline_explicit_parse() {
        let s: CoefficientSequence = "explicit:[1,0.5]".parse().unwrap();
        assert_eq!(s.support_end(), Some(2));
        assert_eq!(s.to_string(), "explicit:[1.0,0.5]");
        assert!("explicit:[]".parse::<CoefficientSequence>().is_err());
    }

    #[test]
    fn two_sided_length_mismatch() {
        let a = CoefficientSequence::explicit_real(&[1.0, 2.0]).unwrap();
        let b = CoefficientSequence::explicit_real(&[1.0]).unwrap();
        assert!(TwoSidedSequence::new(Complex::default(), a.clone(), b).is_err());
        assert!(TwoSidedSequence::new(Complex::default(), a.clone(), a).is_ok());
    }
}
