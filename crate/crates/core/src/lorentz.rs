//! Lebesgue and Lorentz norms.
//!
//! * `‖f‖_{L^p}`: exact for simple functions and steps, quadrature for
//!   radial profiles.
//! * `‖f‖_{L^{p,q}} = (∫₀^∞ (t^{1/p} f#(t))^q dt/t)^{1/q}`, the quasi-norm.
//! * `‖f‖_{L^{p,∞}} = sup_t t^{1/p} f#(t)`, the weak norm.
//! * `|||f|||_{L^{p,q}}`, the same integral with `f**` in place of `f#`.
//!
//! Divergent integrals are reported as `+∞` together with the reason, so
//! that a divergent norm is never confused with a large one.

use std::fmt;

use thiserror::Error;

use crate::maximal::MaximalFunction;
use crate::numeric::{integrate, Decreasing, Domain, NumericError, NumericRearrangement, QuadratureSpec, RadialProfile};
use crate::step::{MonotoneStep, SimpleFunction};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LorentzError {
    #[error("invalid Lorentz index (p = {p}, q = {q}): need p, q > 0 and q = ∞ whenever p = ∞")]
    InvalidIndex { p: f64, q: f64 },
    #[error("Lebesgue exponent must satisfy p ≥ 1, got {0}")]
    InvalidExponent(f64),
    #[error("{0}")]
    Unsupported(&'static str),
    #[error(transparent)]
    Numeric(#[from] NumericError),
}

/// Exponent pair `(p, q)` with `p, q ∈ (0, ∞]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LorentzIndex {
    p: f64,
    q: f64,
}

impl LorentzIndex {
    pub fn new(p: f64, q: f64) -> Result<Self, LorentzError> {
        let positive = |x: f64| x > 0.0 && !x.is_nan();
        if !(positive(p) && positive(q)) || (p.is_infinite() && q.is_finite()) {
            return Err(LorentzError::InvalidIndex { p, q });
        }
        Ok(Self { p, q })
    }

    /// `(p, p)`, for which the Lorentz quasi-norm is the `L^p` norm.
    pub fn diagonal(p: f64) -> Result<Self, LorentzError> {
        Self::new(p, p)
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        self.q
    }
}

impl fmt::Display for LorentzIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L^({}, {})", self.p, self.q)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormMethod {
    ExactClosedForm,
    Quadrature,
}

impl fmt::Display for NormMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NormMethod::ExactClosedForm => "exact-closed-form",
            NormMethod::Quadrature => "quadrature",
        })
    }
}

/// A norm value with the way it was obtained.
#[derive(Debug, Clone, PartialEq)]
pub struct NormReport {
    pub value: f64,
    pub method: NormMethod,
    pub error_bound: f64,
    /// Set when `value` is `+∞`.
    pub divergence: Option<String>,
}

impl NormReport {
    pub fn exact(value: f64) -> Self {
        Self {
            value,
            method: NormMethod::ExactClosedForm,
            error_bound: 0.0,
            divergence: None,
        }
    }

    pub fn quadrature(value: f64, error_bound: f64) -> Self {
        Self {
            value,
            method: NormMethod::Quadrature,
            error_bound,
            divergence: None,
        }
    }

    pub fn diverged(method: NormMethod, reason: impl Into<String>) -> Self {
        Self {
            value: f64::INFINITY,
            method,
            error_bound: 0.0,
            divergence: Some(reason.into()),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.value.is_finite()
    }

    // Value and error of I^{1/q} from those of I.
    fn root(integral: f64, error: f64, q: f64, method: NormMethod) -> Self {
        let value = integral.max(0.0).powf(1.0 / q);
        let error_bound = if integral > 0.0 {
            error * value / (q * integral)
        } else {
            error.powf(1.0 / q)
        };
        Self {
            value,
            method,
            error_bound,
            divergence: None,
        }
    }
}

impl fmt::Display for NormReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "value: {}\nmethod: {}\nerror_bound: {:e}", self.value, self.method, self.error_bound)?;
        if let Some(reason) = &self.divergence {
            write!(f, "\ndivergence: {reason}")?;
        }
        Ok(())
    }
}

fn check_lebesgue(p: f64) -> Result<(), LorentzError> {
    if p >= 1.0 {
        Ok(())
    } else {
        Err(LorentzError::InvalidExponent(p))
    }
}

/// Objects with an `L^p` norm.
pub trait LpNorm {
    fn lp_norm(&self, p: f64) -> Result<NormReport, LorentzError>;
}

impl LpNorm for SimpleFunction {
    fn lp_norm(&self, p: f64) -> Result<NormReport, LorentzError> {
        check_lebesgue(p)?;
        if p.is_infinite() {
            return Ok(NormReport::exact(self.max_value()));
        }
        Ok(NormReport::exact(self.power_integral(p).powf(1.0 / p)))
    }
}

impl LpNorm for MonotoneStep {
    fn lp_norm(&self, p: f64) -> Result<NormReport, LorentzError> {
        check_lebesgue(p)?;
        if p.is_infinite() {
            return Ok(NormReport::exact(self.sup()));
        }
        Ok(NormReport::exact(self.power_integral(p).powf(1.0 / p)))
    }
}

// ∫ over (0, end) where `end` may be infinite.
fn integrate_from_zero<F>(g: F, end: f64, q: &QuadratureSpec) -> Result<(f64, f64), String>
where
    F: Fn(f64) -> f64,
{
    if end == 0.0 {
        return Ok((0.0, 0.0));
    }
    let near = integrate(&g, Domain::Finite(0.0, end.min(1.0)), q).map_err(|e| e.to_string())?;
    if end <= 1.0 {
        return Ok((near.value, near.error));
    }
    let far_domain = if end.is_infinite() {
        Domain::HalfLine(1.0)
    } else {
        Domain::Finite(1.0, end)
    };
    let far = integrate(&g, far_domain, &q.singular_start(false)).map_err(|e| e.to_string())?;
    Ok((near.value + far.value, near.error + far.error))
}

/// `∫_{ℝ^d} φ(|x|)^p dx` through the radial Jacobian `d·ω_d·r^{d−1}`.
pub fn lp_norm_profile(f: &RadialProfile, p: f64, q: &QuadratureSpec) -> Result<NormReport, LorentzError> {
    check_lebesgue(p)?;
    if p.is_infinite() {
        return Err(LorentzError::Unsupported("L^∞ norms of profiles are not computed"));
    }
    let d = f.dim();
    let jacobian = d as f64 * f.ball().omega();
    let spec = q
        .singular_start(f.singular_at_zero())
        .singular_end(f.singular_at_radius());
    let integrand = |r: f64| {
        let v = f.eval(r);
        if v == 0.0 {
            0.0
        } else {
            jacobian * r.powi(d as i32 - 1) * v.powf(p)
        }
    };
    Ok(match integrate_from_zero(integrand, f.radius(), &spec) {
        Ok((integral, error)) => NormReport::root(integral, error, p, NormMethod::Quadrature),
        Err(reason) => NormReport::diverged(NormMethod::Quadrature, reason),
    })
}

impl LpNorm for RadialProfile {
    fn lp_norm(&self, p: f64) -> Result<NormReport, LorentzError> {
        lp_norm_profile(self, p, &QuadratureSpec::from_env())
    }
}

impl LpNorm for NumericRearrangement {
    fn lp_norm(&self, p: f64) -> Result<NormReport, LorentzError> {
        check_lebesgue(p)?;
        if p.is_infinite() {
            return Ok(NormReport::quadrature(self.value(0.0), 0.0));
        }
        let spec = self
            .quadrature()
            .singular_start(self.singular_at_zero())
            .singular_end(self.profile().singular_at_radius());
        let integrand = |t: f64| {
            let v = self.value(t);
            if v == 0.0 {
                0.0
            } else {
                v.powf(p)
            }
        };
        Ok(match integrate_from_zero(integrand, self.support_measure(), &spec) {
            Ok((integral, error)) => NormReport::root(integral, error, p, NormMethod::Quadrature),
            Err(reason) => NormReport::diverged(NormMethod::Quadrature, reason),
        })
    }
}

pub fn lp_norm<F: LpNorm + ?Sized>(f: &F, p: f64) -> Result<NormReport, LorentzError> {
    f.lp_norm(p)
}

/// Lorentz quantities computed from a decreasing rearrangement.
pub trait Rearrangement {
    /// `‖·‖_{L^{p,q}}`; falls back to the weak norm when `q = ∞`.
    fn lorentz_quasinorm(&self, idx: LorentzIndex) -> Result<NormReport, LorentzError>;
    /// `sup_{t>0} t^{1/p} f#(t)`.
    fn weak_norm(&self, p: f64) -> Result<NormReport, LorentzError>;
}

fn check_weak(p: f64) -> Result<(), LorentzError> {
    if p > 0.0 && !p.is_nan() {
        Ok(())
    } else {
        Err(LorentzError::InvalidIndex { p, q: f64::INFINITY })
    }
}

impl Rearrangement for MonotoneStep {
    fn lorentz_quasinorm(&self, idx: LorentzIndex) -> Result<NormReport, LorentzError> {
        let (p, q) = (idx.p, idx.q);
        if q.is_infinite() {
            return self.weak_norm(p);
        }
        // ∫_{l}^{r} t^{q/p − 1} dt = (p/q)(r^{q/p} − l^{q/p})
        let e = q / p;
        let integral: f64 = self
            .pieces()
            .map(|pc| pc.value.powf(q) * (p / q) * (pc.right.powf(e) - pc.left.powf(e)))
            .sum();
        Ok(NormReport::exact(integral.powf(1.0 / q)))
    }

    fn weak_norm(&self, p: f64) -> Result<NormReport, LorentzError> {
        check_weak(p)?;
        if p.is_infinite() {
            return Ok(NormReport::exact(self.sup()));
        }
        // The supremum over each piece is approached at its right endpoint.
        let sup = self
            .pieces()
            .map(|pc| pc.value * pc.right.powf(1.0 / p))
            .fold(0.0, f64::max);
        Ok(NormReport::exact(sup))
    }
}

impl Rearrangement for NumericRearrangement {
    fn lorentz_quasinorm(&self, idx: LorentzIndex) -> Result<NormReport, LorentzError> {
        let (p, q) = (idx.p, idx.q);
        if q.is_infinite() {
            return self.weak_norm(p);
        }
        let spec = self
            .quadrature()
            .singular_start(true)
            .singular_end(self.profile().singular_at_radius());
        let exponent = q / p - 1.0;
        let integrand = |t: f64| {
            let v = self.value(t);
            if v == 0.0 {
                0.0
            } else {
                t.powf(exponent) * v.powf(q)
            }
        };
        Ok(match integrate_from_zero(integrand, self.support_measure(), &spec) {
            Ok((integral, error)) => NormReport::root(integral, error, q, NormMethod::Quadrature),
            Err(reason) => NormReport::diverged(NormMethod::Quadrature, reason),
        })
    }

    fn weak_norm(&self, p: f64) -> Result<NormReport, LorentzError> {
        check_weak(p)?;
        if p.is_infinite() {
            let sup = self.value(0.0);
            return Ok(if sup.is_finite() {
                NormReport::quadrature(sup, 0.0)
            } else {
                NormReport::diverged(NormMethod::Quadrature, "f# is unbounded at the origin")
            });
        }
        let support = self.support_measure();
        let top = if support.is_finite() { support } else { 1e12 };
        let bottom = top * 1e-12;
        let n = 600;
        let ratio = (top / bottom).powf(1.0 / n as f64);
        let weighted = |t: f64| t.powf(1.0 / p) * self.value(t);
        let grid: Vec<f64> = (0..n).map(|i| bottom * ratio.powi(i)).collect();
        let (best_idx, coarse) = grid
            .iter()
            .map(|&t| weighted(t))
            .enumerate()
            .fold((0, 0.0), |acc, (i, v)| if v > acc.1 { (i, v) } else { acc });
        if !coarse.is_finite() {
            return Ok(NormReport::diverged(NormMethod::Quadrature, "t^{1/p} f#(t) is unbounded"));
        }
        // Golden-section refinement around the best grid point.
        let mut a = grid[best_idx.saturating_sub(1)];
        let mut b = grid.get(best_idx + 1).copied().unwrap_or(top).min(top);
        let phi = 0.5 * (5f64.sqrt() - 1.0);
        for _ in 0..100 {
            let c = b - phi * (b - a);
            let d = a + phi * (b - a);
            if weighted(c) > weighted(d) {
                b = d;
            } else {
                a = c;
            }
        }
        let refined = weighted(0.5 * (a + b)).max(coarse);
        Ok(NormReport::quadrature(refined, refined - coarse))
    }
}

pub fn lorentz_quasinorm<R: Rearrangement + ?Sized>(s: &R, idx: LorentzIndex) -> Result<NormReport, LorentzError> {
    s.lorentz_quasinorm(idx)
}

pub fn weak_norm<R: Rearrangement + ?Sized>(s: &R, p: f64) -> Result<NormReport, LorentzError> {
    s.weak_norm(p)
}

fn binomial(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * f64::from(n - i) / f64::from(i + 1))
}

// ∫_l^r t^e dt for l > 0, or l = 0 with e > −1.
fn power_integral(e: f64, l: f64, r: f64) -> f64 {
    let e1 = e + 1.0;
    if e1.abs() < 1e-14 {
        (r / l).ln()
    } else {
        (r.powf(e1) - l.powf(e1)) / e1
    }
}

/// `|||f|||_{L^{p,q}}` from the piecewise-hyperbolic `f**`.
///
/// Integer `q` uses the binomial expansion of `(a + b/t)^q` on every piece;
/// otherwise the finite pieces with a `1/t` part go through quadrature. The
/// tail `B/t` is integrable only for `p > 1`; for `p ≤ 1` the value is
/// reported as divergent.
pub fn triple_norm(m: &MaximalFunction, idx: LorentzIndex) -> Result<NormReport, LorentzError> {
    triple_norm_with(m, idx, &QuadratureSpec::default())
}

pub fn triple_norm_with(m: &MaximalFunction, idx: LorentzIndex, spec: &QuadratureSpec) -> Result<NormReport, LorentzError> {
    let (p, q) = (idx.p, idx.q);
    if q.is_infinite() || q < 1.0 {
        return Err(LorentzError::Unsupported("the maximal-function norm is computed for 1 ≤ q < ∞"));
    }
    if m.is_zero() {
        return Ok(NormReport::exact(0.0));
    }
    if p <= 1.0 {
        return Ok(NormReport::diverged(
            NormMethod::ExactClosedForm,
            format!("tail ∫ t^(q/p − 1 − q) dt diverges at infinity for p = {p} ≤ 1"),
        ));
    }
    let e = q / p - 1.0;
    let integer_q = (q.fract() == 0.0 && q <= 64.0).then_some(q as u32);
    let mut method = NormMethod::ExactClosedForm;
    let mut integral = 0.0;
    let mut error = 0.0;
    for piece in m.pieces() {
        let (a, b, l, r) = (piece.constant, piece.coefficient, piece.left, piece.right);
        if r.is_infinite() {
            // ∫_{t_k}^∞ t^{q/p − 1 − q} B^q dt = B^q t_k^{q/p − q}/(q − q/p)
            integral += b.powf(q) * l.powf(q / p - q) / (q - q / p);
        } else if b == 0.0 {
            integral += a.powf(q) * (p / q) * (r.powf(q / p) - l.powf(q / p));
        } else if let Some(n) = integer_q {
            integral += (0..=n)
                .map(|k| {
                    binomial(n, k) * a.powi((n - k) as i32) * b.powi(k as i32) * power_integral(e - f64::from(k), l, r)
                })
                .sum::<f64>();
        } else {
            let est = integrate(|t: f64| t.powf(e) * piece.at(t).powf(q), Domain::Finite(l, r), spec)
                .map_err(NumericError::from)?;
            integral += est.value;
            error += est.error;
            method = NormMethod::Quadrature;
        }
    }
    Ok(NormReport::root(integral, error, q, method))
}
