//! Compensated summation.
//!
//! Every long sum in the crate goes through [`NeumaierSum`] (or its complex
//! counterpart) in a fixed order, so repeated runs reproduce bit-identical
//! results.

use alloc::vec::Vec;
use core::ops::AddAssign;

use crate::Complex;

/// Kahan summation with Neumaier's improvement for addends larger than the
/// running sum.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct NeumaierSum {
    sum: f64,
    comp: f64,
}

impl NeumaierSum {
    pub const fn new() -> Self {
        Self {
            sum: 0.0,
            comp: 0.0,
        }
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.comp += (self.sum - t) + value;
        } else {
            self.comp += (value - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }

    /// Raw (sum, compensation) pair.
    pub(crate) fn parts(&self) -> (f64, f64) {
        (self.sum, self.comp)
    }
}

impl AddAssign<f64> for NeumaierSum {
    fn add_assign(&mut self, rhs: f64) {
        self.add(rhs);
    }
}

impl FromIterator<f64> for NeumaierSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = Self::new();
        for v in iter {
            s.add(v);
        }
        s
    }
}

/// Compensated sum of an iterator, left to right.
pub fn compensated_sum<I: IntoIterator<Item = f64>>(iter: I) -> f64 {
    iter.into_iter().collect::<NeumaierSum>().value()
}

/// Componentwise compensated complex accumulator.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ComplexSum {
    re: NeumaierSum,
    im: NeumaierSum,
}

impl ComplexSum {
    pub const fn new() -> Self {
        Self {
            re: NeumaierSum::new(),
            im: NeumaierSum::new(),
        }
    }

    #[inline]
    pub fn add(&mut self, z: Complex) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    #[inline]
    pub fn value(&self) -> Complex {
        Complex::new(self.re.value(), self.im.value())
    }
}

impl AddAssign<Complex> for ComplexSum {
    fn add_assign(&mut self, rhs: Complex) {
        self.add(rhs);
    }
}

/// Prefix sums stored as unevaluated (sum, compensation) pairs so that range
/// sums keep close to full relative precision even when the range total is
/// tiny next to the running prefix.
#[derive(Debug, Clone)]
pub struct CompensatedPrefix {
    // parts[i] = sum of the first i inputs
    parts: Vec<(f64, f64)>,
}

impl CompensatedPrefix {
    pub fn new(values: &[f64]) -> Self {
        let mut parts = Vec::with_capacity(values.len() + 1);
        let mut acc = NeumaierSum::new();
        parts.push(acc.parts());
        for &v in values {
            acc.add(v);
            parts.push(acc.parts());
        }
        Self { parts }
    }

    /// Sum of inputs with positions in `lo..hi`.
    pub fn range(&self, lo: usize, hi: usize) -> f64 {
        debug_assert!(lo <= hi && hi < self.parts.len());
        let (s_hi, c_hi) = self.parts[hi];
        let (s_lo, c_lo) = self.parts[lo];
        (s_hi - s_lo) + (c_hi - c_lo)
    }

    pub fn len(&self) -> usize {
        self.parts.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
