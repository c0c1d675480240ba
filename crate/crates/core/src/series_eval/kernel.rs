use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)] // float methods under no_std
use num_traits::Float;

use crate::seq_model::{CoefficientSequence, TwoSidedSequence};
use crate::sum::ComplexSum;
use crate::{Complex, Error, Result};

/// Consecutive frequencies advance the phasor by multiplication; it is
/// recomputed from `sin`/`cos` this often to keep the drift near 1e-14.
const RESYNC: usize = 128;

pub(crate) fn check_domain(what: &'static str, x: f64) -> Result<()> {
    if x > 0.0 && x <= PI {
        Ok(())
    } else {
        Err(Error::OutOfDomain { what, value: x })
    }
}

/// `D_n(x) = sum_{k=1}^n sin kx` in closed form,
/// `sin(nx/2) sin((n+1)x/2) / sin(x/2)`, for `x` in `(0, pi]`.
pub fn dirichlet_sine(n: usize, x: f64) -> Result<f64> {
    check_domain("x", x)?;
    if n == 0 || x == PI {
        return Ok(0.0);
    }
    let nf = n as f64;
    Ok((0.5 * nf * x).sin() * (0.5 * (nf + 1.0) * x).sin() / (0.5 * x).sin())
}

/// Reduces `x` by oddness and `2 pi`-periodicity of `sin`: returns `(sign, y)`
/// with `y` in `[0, pi]` and `sin(kx) = sign sin(ky)` for every integer `k`.
pub(crate) fn reduce_sine_argument(x: f64) -> (f64, f64) {
    let two_pi = 2.0 * PI;
    let mut y = x % two_pi;
    if y < 0.0 {
        y += two_pi;
    }
    if y > PI {
        (-1.0, two_pi - y)
    } else {
        (1.0, y)
    }
}

/// Nonzero coefficients over a frequency range, ready for repeated
/// evaluation at many points.
#[derive(Debug, Clone)]
pub(crate) struct Terms {
    /// `(k, c_k, c_{-k})`; for sine series `c_{-k}` is unused.
    entries: Vec<(usize, Complex, Complex)>,
    sine: bool,
}

impl Terms {
    /// `b_k` for `k` in `lo..=hi`, finite-support semantics.
    pub fn sine(b: &CoefficientSequence, lo: usize, hi: usize) -> Self {
        let entries = (lo.max(1)..=hi)
            .filter_map(|k| {
                let c = b.value_or_zero(k);
                (c != Complex::default()).then_some((k, c, Complex::default()))
            })
            .collect();
        Self {
            entries,
            sine: true,
        }
    }

    /// `(c_k, c_{-k})` for `k` in `lo..=hi`.
    pub fn two_sided(ts: &TwoSidedSequence, lo: usize, hi: usize) -> Self {
        let entries = (lo.max(1)..=hi)
            .filter_map(|k| {
                let (p, q) = (ts.pos.value_or_zero(k), ts.neg.value_or_zero(k));
                (p != Complex::default() || q != Complex::default()).then_some((k, p, q))
            })
            .collect();
        Self {
            entries,
            sine: false,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `sum b_k sin kx` or `sum c_k e^{ikx} + c_{-k} e^{-ikx}` over the stored
    /// range, compensated, in increasing `k`.
    pub fn eval(&self, x: f64) -> Complex {
        let mut acc = ComplexSum::new();
        let step = Complex::new(x.cos(), x.sin());
        let mut phasor = Complex::default();
        let mut prev = usize::MAX;
        let mut since = 0usize;
        for &(k, p, q) in &self.entries {
            if prev != usize::MAX && k == prev + 1 && since < RESYNC {
                phasor *= step;
                since += 1;
            } else {
                let t = k as f64 * x;
                phasor = Complex::new(t.cos(), t.sin());
                since = 0;
            }
            prev = k;
            if self.sine {
                acc.add(p * phasor.im);
            } else {
                acc.add(p * phasor);
                acc.add(q * phasor.conj());
            }
        }
        acc.value()
    }
}

/// `sum_{k=1}^n b_k sin kx` with compensated summation. Exactly zero at
/// multiples of `pi`.
pub fn partial_sum_sine(b: &CoefficientSequence, n: usize, x: f64) -> Complex {
    partial_sum_sine_range(b, 1, n, x)
}

/// `sum_{k=lo}^{hi} b_k sin kx`.
pub fn partial_sum_sine_range(b: &CoefficientSequence, lo: usize, hi: usize, x: f64) -> Complex {
    let (sign, y) = reduce_sine_argument(x);
    if y == 0.0 || y == PI {
        return Complex::default();
    }
    Terms::sine(b, lo, hi).eval(y) * sign
}

/// `S_n(x) = c_0 + sum_{k=1}^n (c_k e^{ikx} + c_{-k} e^{-ikx})`.
pub fn partial_sum_two_sided(ts: &TwoSidedSequence, n: usize, x: f64) -> Complex {
    ts.c0 + Terms::two_sided(ts, 1, n).eval(x)
}

/// The same partial sum assembled as `c_0 + I_1(x) + 2i I_2(x)` with
/// `I_1 = sum (c_k + c_{-k}) e^{-ikx}` and `I_2 = sum c_k sin kx`.
pub fn partial_sum_two_sided_split(ts: &TwoSidedSequence, n: usize, x: f64) -> Complex {
    let mut first = ComplexSum::new();
    let mut second = ComplexSum::new();
    for k in 1..=n {
        let (p, q) = (ts.pos.value_or_zero(k), ts.neg.value_or_zero(k));
        let t = k as f64 * x;
        first.add((p + q) * Complex::new(t.cos(), -t.sin()));
        second.add(p * t.sin());
    }
    ts.c0 + first.value() + Complex::new(0.0, 2.0) * second.value()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq_model::random::SeededRng;
    use crate::seq_model::FamilySpec;

    #[test]
    fn dirichlet_examples() {
        assert!((dirichlet_sine(2, PI / 2.0).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(dirichlet_sine(17, PI).unwrap(), 0.0);
        let v = dirichlet_sine(1000, 0.01).unwrap();
        let direct: f64 = (1..=1000).map(|k| (k as f64 * 0.01).sin()).sum();
        assert!((v - direct).abs() < 1e-9);
        assert!(v.abs() <= PI / 0.01);
        assert!(dirichlet_sine(3, 0.0).is_err());
        assert!(dirichlet_sine(3, 3.2).is_err());
    }

    #[test]
    fn sine_partial_sums() {
        let unit = CoefficientSequence::explicit_real(&[1.0, 0.0, 0.0]).unwrap();
        assert!((partial_sum_sine(&unit, 3, PI / 2.0) - 1.0).norm() < 1e-15);
        let h = CoefficientSequence::generator(FamilySpec::harmonic(1.0));
        assert!((partial_sum_sine(&h, 4, PI / 2.0).re - 2.0 / 3.0).abs() < 1e-15);
        assert_eq!(partial_sum_sine(&h, 100, 0.0), Complex::default());
        assert_eq!(partial_sum_sine(&h, 100, PI), Complex::default());
        assert_eq!(partial_sum_sine(&h, 100, -2.0 * PI), Complex::default());
        let a = partial_sum_sine(&h, 300, 1.3);
        let b = partial_sum_sine(&h, 300, -1.3);
        let c = partial_sum_sine(&h, 300, 1.3 + 2.0 * PI);
        assert!((a + b).norm() < 1e-13 && (a - c).norm() < 1e-12);
    }

    #[test]
    fn recurrence_matches_direct_sin() {
        let h = CoefficientSequence::generator(FamilySpec::harmonic(0.5));
        for &x in &[1e-4, 0.37, 2.9, PI - 1e-6] {
            let fast = Terms::sine(&h, 1, 5000).eval(x).re;
            let direct: f64 = (1..=5000)
                .map(|k| (k as f64 * x).sin() / (k as f64).sqrt())
                .sum();
            assert!((fast - direct).abs() < 1e-10, "x = {}", x);
        }
    }

    #[test]
    fn two_sided_euler_and_split() {
        let half_i = Complex::new(0.0, -0.5); // 1 / (2i)
        let pos = CoefficientSequence::explicit(alloc::vec![half_i]).unwrap();
        let neg = CoefficientSequence::explicit(alloc::vec![-half_i]).unwrap();
        let ts = TwoSidedSequence::new(Complex::default(), pos, neg).unwrap();
        for &x in &[0.3, 1.0, -2.0] {
            assert!((partial_sum_two_sided(&ts, 5, x) - Complex::new(x.sin(), 0.0)).norm() < 1e-15);
        }
        assert_eq!(
            partial_sum_two_sided(&TwoSidedSequence::zero(), 10, 0.7),
            Complex::default()
        );

        let mut rng = SeededRng::new(3);
        let mut draw = |len: usize| {
            CoefficientSequence::explicit(
                (0..len)
                    .map(|_| Complex::new(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)))
                    .collect(),
            )
            .unwrap()
        };
        let ts = TwoSidedSequence::new(Complex::new(0.25, -0.5), draw(50), draw(50)).unwrap();
        let a = partial_sum_two_sided(&ts, 50, 1.0);
        let b = partial_sum_two_sided_split(&ts, 50, 1.0);
        assert!((a - b).norm() <= 1e-10 * a.norm().max(1.0));
    }
}
