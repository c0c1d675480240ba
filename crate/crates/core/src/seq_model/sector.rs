use core::f64::consts::FRAC_PI_2;

#[allow(unused_imports)] // float methods under no_std
use num_traits::Float;

use crate::{Complex, Error, Result};

/// The closed sector `K(theta0) = { z : |arg z| <= theta0 }` around the
/// positive real axis. Zero belongs to every sector.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Sector {
    theta0: f64,
}

impl Sector {
    pub fn new(theta0: f64) -> Result<Self> {
        if theta0.is_finite() && (0.0..FRAC_PI_2).contains(&theta0) {
            Ok(Self { theta0 })
        } else {
            Err(Error::InvalidSector(theta0))
        }
    }

    /// The positive half-line, `theta0 = 0`.
    pub const fn real() -> Self {
        Self { theta0: 0.0 }
    }

    pub fn theta0(&self) -> f64 {
        self.theta0
    }

    pub fn contains(&self, z: Complex) -> bool {
        z == Complex::new(0.0, 0.0) || z.im.atan2(z.re).abs() <= self.theta0
    }

    /// Euclidean distance from `z` to the sector.
    pub fn distance(&self, z: Complex) -> f64 {
        if self.contains(z) {
            return 0.0;
        }
        let excess = z.im.atan2(z.re).abs() - self.theta0;
        let r = z.norm();
        if excess >= FRAC_PI_2 {
            r
        } else {
            r * excess.sin()
        }
    }

    /// Membership up to an absolute slack, used on computed differences
    /// where round-off can push a boundary value marginally outside.
    pub fn contains_within(&self, z: Complex, slack: f64) -> bool {
        self.distance(z) <= slack
    }

    /// `1 / cos(theta0)`: the least `M` with `|z| <= M Re z` on the sector.
    pub fn dominance_constant(&self) -> f64 {
        1.0 / self.theta0.cos()
    }
}

impl Default for Sector {
    fn default() -> Self {
        Self::real()
    }
}

pub fn in_sector(z: Complex, s: &Sector) -> bool {
    s.contains(z)
}

pub fn sector_dominance_constant(s: &Sector) -> f64 {
    s.dominance_constant()
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::{FRAC_PI_3, FRAC_PI_4, PI, SQRT_2};

    #[test]
    fn membership_examples() {
        let q = Sector::new(FRAC_PI_4).unwrap();
        assert!(in_sector(Complex::new(1.0, 1.0), &q));
        for theta in [0.0, 0.3, 1.5] {
            let s = Sector::new(theta).unwrap();
            assert!(!in_sector(Complex::new(-1.0, 0.0), &s));
        }
        assert!(in_sector(Complex::new(0.0, 0.0), &Sector::real()));
        assert!(in_sector(Complex::new(-0.0, 0.0), &Sector::real()));
    }

    #[test]
    fn dominance_constant_examples() {
        assert_eq!(Sector::new(0.0).unwrap().dominance_constant(), 1.0);
        assert!((Sector::new(FRAC_PI_4).unwrap().dominance_constant() - SQRT_2).abs() < 1e-12);
        assert!((Sector::new(FRAC_PI_3).unwrap().dominance_constant() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_half_plane_and_negative_angles() {
        assert!(Sector::new(FRAC_PI_2).is_err());
        assert!(Sector::new(-0.1).is_err());
        assert!(Sector::new(f64::NAN).is_err());
        assert!(Sector::new(PI).is_err());
    }

    #[test]
    fn distance_is_zero_inside_and_modulus_behind() {
        let s = Sector::new(0.2).unwrap();
        assert_eq!(s.distance(Complex::new(2.0, 0.1)), 0.0);
        assert!((s.distance(Complex::new(-3.0, 0.0)) - 3.0).abs() < 1e-15);
        let tiny_negative = Complex::new(-1e-18, 0.0);
        assert!(s.contains_within(tiny_negative, 1e-15));
    }
}
