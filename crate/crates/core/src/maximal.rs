//! Maximal function `f**(t) = (1/t)∫₀ᵗ f#(s) ds` of a monotone step.
//!
//! On each piece `[t_{j-1}, t_j)` of `f#` the running average has the exact
//! form `a_j + b_j/t` with `a_j = v_j` and `b_j = C_j − v_j·t_{j-1}`, where
//! `C_j` is the integral up to `t_{j-1}`. Past the support only the tail
//! `B/t` with `B = ∫f#` remains.

use thiserror::Error;

use crate::step::MonotoneStep;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MaximalError {
    #[error("the maximal function is defined for t > 0, got {0}")]
    NonPositiveArgument(f64),
}

/// One hyperbolic piece `t ↦ constant + coefficient/t` on `[left, right)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperbolicPiece {
    pub left: f64,
    pub right: f64,
    pub constant: f64,
    pub coefficient: f64,
}

impl HyperbolicPiece {
    pub fn at(&self, t: f64) -> f64 {
        if self.coefficient == 0.0 {
            self.constant
        } else {
            self.constant + self.coefficient / t
        }
    }
}

/// Piecewise-hyperbolic representation of `f**`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct MaximalFunction {
    ends: Vec<f64>,
    coefficients: Vec<(f64, f64)>,
    tail: f64,
}

/// Builds `f**` from `f#`.
pub fn maximal(s: &MonotoneStep) -> MaximalFunction {
    let mut coefficients = Vec::with_capacity(s.len());
    // b_{j+1} = b_j + (v_j − v_{j+1})·t_j keeps every coefficient a sum of
    // non-negative terms.
    let mut b = 0.0;
    let mut prev: Option<(f64, f64)> = None;
    for piece in s.pieces() {
        if let Some((v_prev, t_prev)) = prev {
            b += (v_prev - piece.value) * t_prev;
        }
        coefficients.push((piece.value, b));
        prev = Some((piece.value, piece.right));
    }
    let tail = match prev {
        Some((v, t)) => b + v * t,
        None => 0.0,
    };
    MaximalFunction {
        ends: s.ends().to_vec(),
        coefficients,
        tail,
    }
}

impl MaximalFunction {
    /// `f**(t)` for `t > 0`.
    pub fn eval(&self, t: f64) -> Result<f64, MaximalError> {
        if !(t > 0.0) {
            return Err(MaximalError::NonPositiveArgument(t));
        }
        Ok(self.value_at(t))
    }

    pub(crate) fn value_at(&self, t: f64) -> f64 {
        let idx = self.ends.partition_point(|&e| e <= t);
        match self.coefficients.get(idx) {
            Some(&(a, 0.0)) => a,
            Some(&(a, b)) => a + b / t,
            None => self.tail / t,
        }
    }

    /// Limit as `t → 0⁺`, which equals `f#(0)`.
    pub fn limit_at_zero(&self) -> f64 {
        self.coefficients.first().map(|&(a, _)| a).unwrap_or(0.0)
    }

    /// `B = ∫₀^∞ f#`, the coefficient of the tail `B/t`.
    pub fn tail(&self) -> f64 {
        self.tail
    }

    /// Right end of the last finite piece.
    pub fn support(&self) -> f64 {
        self.ends.last().copied().unwrap_or(0.0)
    }

    pub fn is_zero(&self) -> bool {
        self.tail == 0.0
    }

    /// Finite pieces followed by the tail piece on `[t_k, ∞)`.
    pub fn pieces(&self) -> impl Iterator<Item = HyperbolicPiece> + '_ {
        let finite = self
            .ends
            .iter()
            .zip(&self.coefficients)
            .enumerate()
            .map(|(j, (&right, &(constant, coefficient)))| HyperbolicPiece {
                left: if j == 0 { 0.0 } else { self.ends[j - 1] },
                right,
                constant,
                coefficient,
            });
        let tail = (!self.is_zero()).then(|| HyperbolicPiece {
            left: self.support(),
            right: f64::INFINITY,
            constant: 0.0,
            coefficient: self.tail,
        });
        finite.chain(tail)
    }

    /// `∫₀ᵗ f**(s)·g**(s) ds` in closed form.
    ///
    /// Cells touching zero lie inside both first pieces, where the `1/s`
    /// coefficients vanish, so the integral is always finite.
    pub fn product_integral_upto(&self, other: &Self, t: f64) -> f64 {
        let mut cuts: Vec<f64> = std::iter::once(0.0)
            .chain(self.ends.iter().copied())
            .chain(other.ends.iter().copied())
            .filter(|&c| c < t)
            .chain(std::iter::once(t))
            .collect();
        cuts.sort_by(f64::total_cmp);
        cuts.dedup();
        let mut total = 0.0;
        for w in cuts.windows(2) {
            let (l, r) = (w[0], w[1]);
            let mid = 0.5 * (l + r);
            let (a1, b1) = self.coefficients_at(mid);
            let (a2, b2) = other.coefficients_at(mid);
            total += a1 * a2 * (r - l);
            let linear = a1 * b2 + a2 * b1;
            let quadratic = b1 * b2;
            if l > 0.0 {
                total += linear * (r / l).ln() + quadratic * (1.0 / l - 1.0 / r);
            } else {
                debug_assert!(linear == 0.0 && quadratic == 0.0);
            }
        }
        total
    }

    fn coefficients_at(&self, t: f64) -> (f64, f64) {
        let idx = self.ends.partition_point(|&e| e <= t);
        self.coefficients.get(idx).copied().unwrap_or((0.0, self.tail))
    }
}
