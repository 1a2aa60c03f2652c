use std::f64::consts::PI;

use super::NumericError;

/// Volume `ω_d = π^{d/2}/Γ(d/2 + 1)` of the unit ball of ℝ^d.
///
/// Computed with the recurrence `ω_d = (2π/d)·ω_{d−2}` from `ω₀ = 1`,
/// `ω₁ = 2`, which keeps `ω₁` exact.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BallVolume {
    dim: usize,
    omega: f64,
}

impl BallVolume {
    pub fn new(dim: usize) -> Result<Self, NumericError> {
        if dim == 0 {
            return Err(NumericError::InvalidDimension(dim));
        }
        let mut omega = if dim.is_multiple_of(2) { 1.0 } else { 2.0 };
        let mut k = 2 + dim % 2;
        while k <= dim {
            omega *= 2.0 * PI / k as f64;
            k += 2;
        }
        Ok(Self { dim, omega })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    /// Measure of the ball of radius `r`.
    pub fn ball(&self, r: f64) -> f64 {
        self.omega * r.powi(self.dim as i32)
    }

    /// Radius of the ball with measure `m`.
    pub fn radius_of(&self, m: f64) -> f64 {
        (m / self.omega).powf(1.0 / self.dim as f64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use statrs::function::gamma::gamma;

    fn by_gamma(d: usize) -> f64 {
        let half = d as f64 / 2.0;
        PI.powf(half) / gamma(half + 1.0)
    }

    #[test]
    fn low_dimensions() {
        assert_eq!(BallVolume::new(1).unwrap().omega(), 2.0);
        assert!((BallVolume::new(2).unwrap().omega() - PI).abs() < 1e-12);
        assert!((BallVolume::new(3).unwrap().omega() - 4.0 * PI / 3.0).abs() < 1e-12);
        assert!(BallVolume::new(0).is_err());
    }

    #[test]
    fn matches_gamma_formula() {
        for d in 1..=20 {
            let omega = BallVolume::new(d).unwrap().omega();
            let expected = by_gamma(d);
            assert!(((omega - expected) / expected).abs() < 1e-12, "d={d}");
        }
    }

    #[test]
    fn radius_round_trip() {
        let b = BallVolume::new(3).unwrap();
        assert!((b.radius_of(b.ball(0.7)) - 0.7).abs() < 1e-14);
    }
}
