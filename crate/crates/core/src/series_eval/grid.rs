use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;
use core::str::FromStr;

#[allow(unused_imports)] // float methods under no_std
use num_traits::Float;

use crate::seq_model::parse::{parse_term, Arg};
use crate::{Error, Result};

/// Default points per `pi / n_ref` in the local band.
pub const DEFAULT_OVERSAMPLE: usize = 8;

/// Quarter-octave factors `2^{j/4}`, `j = 0..4`.
const QUARTER_OCTAVES: [f64; 4] = [
    1.0,
    1.189_207_115_002_721,
    core::f64::consts::SQRT_2,
    1.681_792_830_507_429,
];

/// Evaluation points in `(0, pi]` for sup-norm estimates of series whose
/// interesting behaviour sits at `x ~ 1 / n_ref`.
///
/// The point set is the union of
///
/// * the geometric ladder `x0 2^{j/4}`, `j >= 0`, with `x0 = pi / (8 n_ref)`;
/// * the local band `i pi / (oversample n_ref)`, `1 <= i <= 8 oversample`;
/// * the coarse global set `i pi / (16 oversample)`, `1 <= i <= 16 oversample`;
/// * the explicit extra points,
///
/// sorted and deduplicated. `x0` is always included exactly.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct GridSpec {
    pub n_ref: usize,
    pub oversample: usize,
    pub extra: Vec<f64>,
}

impl GridSpec {
    pub fn new(n_ref: usize) -> Self {
        Self {
            n_ref,
            oversample: DEFAULT_OVERSAMPLE,
            extra: Vec::new(),
        }
    }

    pub fn with_oversample(mut self, oversample: usize) -> Self {
        self.oversample = oversample;
        self
    }

    pub fn with_extra(mut self, points: impl IntoIterator<Item = f64>) -> Self {
        self.extra.extend(points);
        self
    }

    /// `pi / (8 n_ref)`.
    pub fn x0(&self) -> f64 {
        PI / (8.0 * self.n_ref as f64)
    }

    pub fn points(&self) -> Result<Vec<f64>> {
        if self.n_ref == 0 || self.oversample == 0 {
            return Err(Error::InvalidArgument(format!(
                "grid needs n_ref >= 1 and oversample >= 1, got {}",
                self
            )));
        }
        if let Some(&x) = self.extra.iter().find(|&&x| !(x > 0.0 && x <= PI)) {
            return Err(Error::OutOfDomain {
                what: "grid point",
                value: x,
            });
        }
        let mut pts = Vec::new();
        let x0 = self.x0();
        for j in 0.. {
            let x = x0 * (1u64 << (j / 4)) as f64 * QUARTER_OCTAVES[j % 4];
            if x > PI {
                break;
            }
            pts.push(x);
        }
        let band = (self.oversample * self.n_ref) as f64;
        for i in 1..=8 * self.oversample {
            pts.push(i as f64 * PI / band);
        }
        let coarse = (16 * self.oversample) as f64;
        for i in 1..=16 * self.oversample {
            pts.push(i as f64 * PI / coarse);
        }
        pts.extend_from_slice(&self.extra);
        pts.retain(|&x| x > 0.0 && x <= PI);
        pts.sort_by(f64::total_cmp);
        pts.dedup();
        Ok(pts)
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "grid({},{}", self.n_ref, self.oversample)?;
        for x in &self.extra {
            write!(f, ",{:?}", x)?;
        }
        f.write_str(")")
    }
}

impl FromStr for GridSpec {
    type Err = Error;

    /// `grid(n_ref,oversample[,extra...])`.
    fn from_str(s: &str) -> Result<Self> {
        let term = parse_term(s)?;
        let bad = || {
            Error::Parse(format!(
                "expected grid(n_ref,oversample[,x...]), got `{}`",
                s.trim()
            ))
        };
        if term.name != "grid" || term.seed.is_some() || term.args.len() < 2 {
            return Err(bad());
        }
        let mut nums = Vec::with_capacity(term.args.len());
        for a in &term.args {
            match a {
                Arg::Number(v) => nums.push(*v),
                Arg::Term(_) => return Err(bad()),
            }
        }
        let count = |v: f64| {
            if v >= 1.0 && v.fract() == 0.0 && v <= u32::MAX as f64 {
                Ok(v as usize)
            } else {
                Err(bad())
            }
        };
        Ok(Self {
            n_ref: count(nums[0])?,
            oversample: count(nums[1])?,
            extra: nums[2..].to_vec(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn contains_x0_and_stays_in_range() {
        for n in [1, 7, 100, 1 << 15] {
            let g = GridSpec::new(n);
            let pts = g.points().unwrap();
            assert!(pts.contains(&g.x0()));
            assert!(pts.iter().all(|&x| x > 0.0 && x <= PI));
            assert!(pts.windows(2).all(|w| w[0] < w[1]));
            assert_eq!(*pts.last().unwrap(), PI);
            // every quarter-octave ladder point below pi
            assert!(pts.contains(&(g.x0() * 2.0)));
        }
    }

    #[test]
    fn text_round_trip() {
        let g: GridSpec = "grid(64,8)".parse().unwrap();
        assert_eq!(g, GridSpec::new(64));
        assert_eq!(g.to_string(), "grid(64,8)");
        let g = GridSpec::new(10).with_oversample(4).with_extra([0.5]);
        assert_eq!(g.to_string().parse::<GridSpec>().unwrap(), g);
        assert!("grid(0,8)".parse::<GridSpec>().is_err());
        assert!("grid(8)".parse::<GridSpec>().is_err());
        assert!(GridSpec::new(4).with_extra([4.0]).points().is_err());
    }
}
