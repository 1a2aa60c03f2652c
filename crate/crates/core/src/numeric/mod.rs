//! Numeric rearrangement of radial functions on ℝ^d.
//!
//! A [`RadialProfile`] describes `x ↦ φ(|x|)` on the ball of radius `R`.
//! For a non-increasing profile the function is already symmetric
//! decreasing and its rearrangement is `f#(t) = φ((t/ω_d)^{1/d})`. Other
//! profiles are split into monotone segments on the radial axis; level-set
//! measures are then exact up to root-finding tolerance and `f#` is obtained
//! by bisection on the level.
//!
//! In one dimension `ω₁ = 2`, so the symmetric rearrangement of `f#` is
//! `f*(x) = f#(2|x|)`.

mod ball;
mod quad;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

pub use ball::BallVolume;
pub use quad::{integrate, Domain, Estimate, QuadratureError, QuadratureSpec, QUAD_TOL_ENV};

use crate::step::{MonotoneStep, TOL};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericError {
    #[error("dimension must be at least 1, got {0}")]
    InvalidDimension(usize),
    #[error("support radius must be positive, got {0}")]
    InvalidRadius(f64),
    #[error("profile flagged monotone increases between r = {0} and r = {1}")]
    NotMonotone(f64, f64),
    #[error("profile value {value} at r = {r} is negative or undefined")]
    BadValue { r: f64, value: f64 },
    #[error("non-monotone profiles need a finite support radius")]
    UnboundedNonMonotone,
    #[error("level must be non-negative, got {0}")]
    NegativeLevel(f64),
    #[error("tabulated profile needs increasing positive radii and finite non-negative values")]
    BadTable,
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
}

/// How a profile was built; used for reporting and serialization.
#[derive(Debug, Clone, PartialEq)]
pub enum ProfileKind {
    Bertrand { alpha: f64, beta: f64 },
    Constant(f64),
    Tabulated(Vec<(f64, f64)>),
    Symmetric,
    Custom,
}

pub type ProfileFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Radial profile `r ↦ φ(r) ≥ 0` on `(0, R]` in dimension `d`.
#[derive(Clone)]
pub struct RadialProfile {
    ball: BallVolume,
    radius: f64,
    monotone: bool,
    singular_at_zero: bool,
    singular_at_radius: bool,
    at_zero: f64,
    kind: ProfileKind,
    map: ProfileFn,
}

impl fmt::Debug for RadialProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RadialProfile")
            .field("dim", &self.dim())
            .field("radius", &self.radius)
            .field("monotone", &self.monotone)
            .field("singular_at_zero", &self.singular_at_zero)
            .field("kind", &self.kind)
            .finish()
    }
}

// Radii used to spot-check monotonicity and to locate extrema: a geometric
// sweep towards the origin merged with a uniform one.
fn probe_radii(radius: f64, n: usize) -> Vec<f64> {
    let top = if radius.is_finite() { radius } else { 1e9 };
    let bottom = top * 1e-10;
    let ratio = (top / bottom).powf(1.0 / (n - 1) as f64);
    let mut radii: Vec<f64> = (0..n).map(|i| bottom * ratio.powi(i as i32)).collect();
    radii.extend((1..=n).map(|i| top * i as f64 / n as f64));
    radii.sort_by(f64::total_cmp);
    radii.dedup();
    radii
}

impl RadialProfile {
    /// Generic profile from an evaluable map. Monotone profiles are
    /// spot-checked on a probe grid.
    pub fn new<F>(dim: usize, radius: f64, monotone: bool, map: F) -> Result<Self, NumericError>
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        let ball = BallVolume::new(dim)?;
        if !(radius >= 0.0) {
            return Err(NumericError::InvalidRadius(radius));
        }
        let map: ProfileFn = Arc::new(map);
        let mut prev: Option<(f64, f64)> = None;
        for r in probe_radii(radius, 128) {
            let v = map(r);
            if !(v >= 0.0) {
                return Err(NumericError::BadValue { r, value: v });
            }
            if let Some((r0, v0)) = prev {
                if monotone && v > v0 + TOL * v0.abs().max(1.0) {
                    return Err(NumericError::NotMonotone(r0, r));
                }
            }
            prev = Some((r, v));
        }
        let at_zero = map(f64::MIN_POSITIVE);
        Ok(Self {
            ball,
            radius,
            monotone,
            singular_at_zero: false,
            singular_at_radius: false,
            at_zero,
            kind: ProfileKind::Custom,
            map,
        })
    }

    /// Marks the origin as a singular endpoint for quadrature purposes and
    /// sets the limit value there.
    pub fn with_singularity_at_zero(mut self, limit: f64) -> Self {
        self.singular_at_zero = true;
        self.at_zero = limit;
        self
    }

    pub fn constant(dim: usize, radius: f64, c: f64) -> Result<Self, NumericError> {
        let mut p = Self::new(dim, radius, true, move |_| c.abs())?;
        p.kind = ProfileKind::Constant(c.abs());
        p.at_zero = c.abs();
        Ok(p)
    }

    /// Piecewise-linear interpolation through `(r, value)` samples, extended
    /// by the first value down to the origin. The last radius is the support.
    pub fn tabulated(dim: usize, points: Vec<(f64, f64)>) -> Result<Self, NumericError> {
        let valid = !points.is_empty()
            && points[0].0 > 0.0
            && points.windows(2).all(|w| w[0].0 < w[1].0)
            && points.iter().all(|&(r, v)| r.is_finite() && v.is_finite() && v >= 0.0);
        if !valid {
            return Err(NumericError::BadTable);
        }
        let monotone = points.windows(2).all(|w| w[0].1 >= w[1].1);
        let radius = points.last().unwrap().0;
        let table = points.clone();
        let mut p = Self::new(dim, radius, monotone, move |r| interpolate(&table, r))?;
        p.kind = ProfileKind::Tabulated(points);
        Ok(p)
    }

    pub fn dim(&self) -> usize {
        self.ball.dim()
    }

    pub fn ball(&self) -> BallVolume {
        self.ball
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn is_monotone(&self) -> bool {
        self.monotone
    }

    pub fn singular_at_zero(&self) -> bool {
        self.singular_at_zero
    }

    pub fn singular_at_radius(&self) -> bool {
        self.singular_at_radius
    }

    pub fn kind(&self) -> &ProfileKind {
        &self.kind
    }

    /// Measure of the support ball.
    pub fn support_measure(&self) -> f64 {
        if self.radius.is_infinite() {
            f64::INFINITY
        } else {
            self.ball.ball(self.radius)
        }
    }

    /// `φ(r)`; the limit at the origin for `r ≤ 0` and zero beyond the support.
    pub fn eval(&self, r: f64) -> f64 {
        if r <= 0.0 {
            self.at_zero
        } else if r > self.radius {
            0.0
        } else {
            (self.map)(r)
        }
    }

    /// Value of the function at a point `x ∈ ℝ^d`.
    pub fn eval_point(&self, x: &[f64]) -> f64 {
        self.eval(x.iter().map(|c| c * c).sum::<f64>().sqrt())
    }

    pub fn limit_at_zero(&self) -> f64 {
        self.at_zero
    }
}

fn interpolate(table: &[(f64, f64)], r: f64) -> f64 {
    let idx = table.partition_point(|&(x, _)| x <= r);
    if idx == 0 {
        return table[0].1;
    }
    if idx == table.len() {
        return table[idx - 1].1;
    }
    let (x0, y0) = table[idx - 1];
    let (x1, y1) = table[idx];
    y0 + (y1 - y0) * (r - x0) / (x1 - x0)
}

/// `r ↦ (−ln r)^β · r^{−α}` on the unit ball of ℝ.
///
/// Evaluation clamps `r` to `(0, 1 − 1e−15]` so that `(−ln r)^β` stays
/// finite at the boundary when `β < 0`.
pub fn bertrand(alpha: f64, beta: f64) -> RadialProfile {
    const EDGE: f64 = 1.0 - 1e-15;
    let map: ProfileFn = Arc::new(move |r: f64| {
        let r = r.min(EDGE);
        let log_part = if beta == 0.0 { 1.0 } else { (-r.ln()).powf(beta) };
        let power_part = if alpha == 0.0 { 1.0 } else { r.powf(-alpha) };
        log_part * power_part
    });
    let at_zero = if alpha > 0.0 || (alpha == 0.0 && beta > 0.0) {
        f64::INFINITY
    } else if alpha == 0.0 && beta == 0.0 {
        1.0
    } else {
        0.0
    };
    RadialProfile {
        ball: BallVolume::new(1).expect("dimension 1"),
        radius: 1.0,
        monotone: alpha >= 0.0 && beta >= 0.0,
        singular_at_zero: alpha > 0.0 || beta > 0.0,
        singular_at_radius: beta < 0.0,
        at_zero,
        kind: ProfileKind::Bertrand { alpha, beta },
        map,
    }
}

/// A non-increasing function on `[0, ∞)` with a (possibly infinite) support
/// measure, such as `f#`.
pub trait Decreasing {
    fn value(&self, t: f64) -> f64;
    fn support_measure(&self) -> f64;
}

impl Decreasing for MonotoneStep {
    fn value(&self, t: f64) -> f64 {
        self.value_at(t.max(0.0))
    }

    fn support_measure(&self) -> f64 {
        self.support()
    }
}

/// Symmetric decreasing rearrangement `f*(x) = f#(ω_d |x|^d)` as a radial
/// profile.
pub fn symmetric_rearrangement<S>(s: &S, dim: usize) -> Result<RadialProfile, NumericError>
where
    S: Decreasing + Clone + Send + Sync + 'static,
{
    let ball = BallVolume::new(dim)?;
    let measure = s.support_measure();
    let radius = if measure.is_infinite() {
        f64::INFINITY
    } else {
        ball.radius_of(measure)
    };
    let source = s.clone();
    let at_zero = s.value(0.0);
    let map: ProfileFn = Arc::new(move |r: f64| source.value(ball.ball(r)));
    Ok(RadialProfile {
        ball,
        radius,
        monotone: true,
        singular_at_zero: at_zero.is_infinite(),
        singular_at_radius: false,
        at_zero,
        kind: ProfileKind::Symmetric,
        map,
    })
}

// Bisection for the boundary of a super-level set on [a, b]. `above(x)`
// must hold at `a` and fail at `b` (or the reverse when `rising`). Splits
// geometrically while the bracket spans several octaves.
fn bisect(mut a: f64, mut b: f64, tol: f64, above: impl Fn(f64) -> bool) -> (f64, f64) {
    for _ in 0..400 {
        if b - a <= tol * b.abs().max(f64::MIN_POSITIVE) {
            break;
        }
        let mid = if a > 0.0 && b / a > 4.0 { (a * b).sqrt() } else { 0.5 * (a + b) };
        if !(mid > a && mid < b) {
            break;
        }
        if above(mid) {
            a = mid;
        } else {
            b = mid;
        }
    }
    (a, b)
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    lo: f64,
    hi: f64,
    at_lo: f64,
    at_hi: f64,
}

impl Segment {
    fn rising(&self) -> bool {
        self.at_hi > self.at_lo
    }
}

fn golden_extremum(p: &RadialProfile, mut a: f64, mut b: f64, maximize: bool) -> f64 {
    let sign = if maximize { -1.0 } else { 1.0 };
    let g = |r: f64| sign * p.eval(r);
    let phi = 0.5 * (5f64.sqrt() - 1.0);
    let mut c = b - phi * (b - a);
    let mut d = a + phi * (b - a);
    for _ in 0..200 {
        if (b - a) <= 1e-15 * b.abs() {
            break;
        }
        if g(c) < g(d) {
            b = d;
        } else {
            a = c;
        }
        c = b - phi * (b - a);
        d = a + phi * (b - a);
    }
    0.5 * (a + b)
}

// Splits a bounded profile into radial segments on which it is monotone.
fn monotone_segments(p: &RadialProfile) -> Vec<Segment> {
    let radii = probe_radii(p.radius, 1024);
    let values: Vec<f64> = radii.iter().map(|&r| p.eval(r)).collect();
    let mut cuts = vec![0.0];
    let mut direction = 0.0f64;
    let mut last_lo = 0;
    for i in 1..radii.len() {
        let delta = values[i] - values[i - 1];
        if delta == 0.0 {
            continue;
        }
        let sign = delta.signum();
        if direction != 0.0 && sign != direction {
            let extremum = golden_extremum(p, radii[last_lo], radii[i], direction > 0.0);
            if extremum > *cuts.last().unwrap() && extremum < p.radius {
                cuts.push(extremum);
            }
        }
        direction = sign;
        last_lo = i - 1;
    }
    cuts.push(p.radius);
    cuts.windows(2)
        .map(|w| Segment {
            lo: w[0],
            hi: w[1],
            at_lo: p.eval(w[0]),
            at_hi: p.eval(w[1]),
        })
        .collect()
}

fn segment_measure(p: &RadialProfile, seg: &Segment, lambda: f64, tol: f64) -> f64 {
    let ball = p.ball;
    let (lo, hi) = if seg.rising() {
        if seg.at_hi <= lambda {
            return 0.0;
        }
        if seg.at_lo > lambda {
            (seg.lo, seg.hi)
        } else {
            let (a, _) = bisect(seg.lo.max(f64::MIN_POSITIVE), seg.hi, tol, |r| p.eval(r) <= lambda);
            (a, seg.hi)
        }
    } else {
        if seg.at_lo <= lambda {
            return 0.0;
        }
        if seg.at_hi > lambda {
            (seg.lo, seg.hi)
        } else {
            let (_, b) = bisect(seg.lo.max(f64::MIN_POSITIVE), seg.hi, tol, |r| p.eval(r) > lambda);
            (seg.lo, b)
        }
    };
    ball.ball(hi) - ball.ball(lo)
}

// sup{r : φ(r) > λ} for a non-increasing profile.
fn monotone_level_radius(p: &RadialProfile, lambda: f64, tol: f64) -> Result<f64, NumericError> {
    let tiny = f64::MIN_POSITIVE;
    if !(p.eval(tiny) > lambda) && !(p.at_zero > lambda) {
        return Ok(0.0);
    }
    let mut hi = p.radius;
    if hi.is_infinite() {
        hi = 1.0;
        while p.eval(hi) > lambda {
            hi *= 2.0;
            if hi > 1e300 {
                return Ok(f64::INFINITY);
            }
        }
    } else if p.eval(hi) > lambda {
        return Ok(hi);
    }
    let (_, r_star) = bisect(tiny, hi, tol, |r| p.eval(r) > lambda);
    // A monotone profile cannot come back above λ past the crossing.
    let top = if p.radius.is_finite() { p.radius } else { 4.0 * r_star };
    for k in 1..=16 {
        let r = r_star + (top - r_star) * k as f64 / 16.0;
        let v = p.eval(r);
        if r > r_star && v > lambda + TOL * lambda.max(1.0) {
            return Err(NumericError::NotMonotone(r_star, r));
        }
    }
    Ok(r_star)
}

/// `mes{x ∈ ℝ^d : |f(x)| > λ}`.
///
/// Uses bisection on the radius for monotone profiles and a monotone-segment
/// decomposition otherwise. `q.abs_tol` is the relative root tolerance.
pub fn numeric_distribution(p: &RadialProfile, lambda: f64, q: &QuadratureSpec) -> Result<f64, NumericError> {
    if !(lambda >= 0.0) {
        return Err(NumericError::NegativeLevel(lambda));
    }
    if p.monotone {
        let r = monotone_level_radius(p, lambda, q.abs_tol)?;
        return Ok(if r.is_infinite() { f64::INFINITY } else { p.ball.ball(r) });
    }
    if p.radius.is_infinite() {
        return Err(NumericError::UnboundedNonMonotone);
    }
    Ok(monotone_segments(p)
        .iter()
        .map(|seg| segment_measure(p, seg, lambda, q.abs_tol))
        .sum())
}

#[derive(Debug, Clone)]
enum LevelSets {
    Monotone,
    Segments { segments: Vec<Segment>, sup: f64 },
}

/// Numeric decreasing rearrangement `t ↦ f#(t)` of a radial profile.
#[derive(Debug, Clone)]
pub struct NumericRearrangement {
    profile: RadialProfile,
    quad: QuadratureSpec,
    levels: LevelSets,
}

/// [`numeric_rearrange_with`] under the default quadrature spec.
pub fn numeric_rearrange(p: &RadialProfile) -> Result<NumericRearrangement, NumericError> {
    numeric_rearrange_with(p, &QuadratureSpec::default())
}

pub fn numeric_rearrange_with(p: &RadialProfile, q: &QuadratureSpec) -> Result<NumericRearrangement, NumericError> {
    let levels = if p.monotone {
        LevelSets::Monotone
    } else {
        if p.radius.is_infinite() {
            return Err(NumericError::UnboundedNonMonotone);
        }
        let segments = monotone_segments(p);
        let sup = segments
            .iter()
            .flat_map(|s| [s.at_lo, s.at_hi])
            .fold(0.0, f64::max);
        LevelSets::Segments { segments, sup }
    };
    Ok(NumericRearrangement {
        profile: p.clone(),
        quad: *q,
        levels,
    })
}

impl NumericRearrangement {
    pub fn profile(&self) -> &RadialProfile {
        &self.profile
    }

    pub fn quadrature(&self) -> &QuadratureSpec {
        &self.quad
    }

    /// Whether `f#(t) → ∞` as `t → 0`.
    pub fn singular_at_zero(&self) -> bool {
        self.value(0.0).is_infinite() || self.profile.singular_at_zero
    }

    /// `mes{x : |f(x)| > λ}` from the cached level-set structure.
    pub fn distribution(&self, lambda: f64) -> f64 {
        match &self.levels {
            LevelSets::Monotone => {
                numeric_distribution(&self.profile, lambda.max(0.0), &self.quad).unwrap_or(f64::NAN)
            }
            LevelSets::Segments { segments, .. } => segments
                .iter()
                .map(|seg| segment_measure(&self.profile, seg, lambda.max(0.0), self.quad.abs_tol))
                .sum(),
        }
    }

    /// `mes{s ≥ 0 : f#(s) > λ}`, found by bisection on `f#` itself.
    pub fn level_measure(&self, lambda: f64) -> f64 {
        let support = self.support_measure();
        if !(self.value(0.0) > lambda) && !(self.value(f64::MIN_POSITIVE) > lambda) {
            return 0.0;
        }
        let mut hi = support;
        if hi.is_infinite() {
            hi = 1.0;
            while self.value(hi) > lambda {
                hi *= 2.0;
                if hi > 1e300 {
                    return f64::INFINITY;
                }
            }
        }
        bisect(f64::MIN_POSITIVE, hi, 1e-13, |t| self.value(t) > lambda).1
    }
}

impl Decreasing for NumericRearrangement {
    fn value(&self, t: f64) -> f64 {
        let t = t.max(0.0);
        let support = self.support_measure();
        if t >= support {
            return 0.0;
        }
        match &self.levels {
            LevelSets::Monotone => {
                if t == 0.0 {
                    self.profile.at_zero
                } else {
                    self.profile.eval(self.profile.ball.radius_of(t))
                }
            }
            LevelSets::Segments { sup, .. } => {
                if self.distribution(0.0) <= t {
                    return 0.0;
                }
                let mut hi = *sup;
                if hi.is_infinite() {
                    hi = 1.0;
                    while self.distribution(hi) > t {
                        hi *= 2.0;
                    }
                }
                let (_, b) = bisect(0.0, hi, 1e-14, |lambda| self.distribution(lambda) > t);
                b
            }
        }
    }

    fn support_measure(&self) -> f64 {
        self.profile.support_measure()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::step::{rearrange, three_level_example};

    fn q() -> QuadratureSpec {
        QuadratureSpec::default()
    }

    #[test]
    fn bertrand_values() {
        let one = bertrand(0.0, 0.0);
        assert_eq!(one.eval(0.3), 1.0);
        assert_eq!(one.eval(1.0), 1.0);
        let b = bertrand(-1.0, 2.0);
        let r = (-1.0f64).exp();
        assert!((b.eval(r) - r).abs() < 1e-15);
        assert!(!b.is_monotone());
        let s = bertrand(0.5, 0.0);
        assert!(s.is_monotone() && s.singular_at_zero());
        assert!(s.limit_at_zero().is_infinite());
        assert!(bertrand(0.0, -1.0).singular_at_radius());
        assert!(bertrand(0.0, -1.0).eval(1.0).is_finite());
    }

    #[test]
    fn constant_rearrangement() {
        let p = RadialProfile::constant(1, 1.0, 3.0).unwrap();
        let fs = numeric_rearrange(&p).unwrap();
        assert_eq!(fs.value(0.0), 3.0);
        assert_eq!(fs.value(1.999), 3.0);
        assert_eq!(fs.value(2.0), 0.0);
    }

    #[test]
    fn tent_rearrangement() {
        let p = RadialProfile::new(1, 1.0, true, |r| 1.0 - r).unwrap();
        let fs = numeric_rearrange(&p).unwrap();
        for t in [0.1, 0.5, 1.0, 1.7] {
            assert!((fs.value(t) - (1.0 - t / 2.0)).abs() < 1e-14);
        }
        let m = numeric_distribution(&p, 0.5, &q()).unwrap();
        assert!((m - 1.0).abs() < 1e-11, "{m}");
        assert_eq!(numeric_distribution(&p, 1.0, &q()).unwrap(), 0.0);
        assert!((numeric_distribution(&p, 0.0, &q()).unwrap() - 2.0).abs() < 1e-11);
        assert!(numeric_distribution(&p, -1.0, &q()).is_err());
    }

    #[test]
    fn inverse_square_root_rearrangement() {
        let p = bertrand(0.5, 0.0);
        let fs = numeric_rearrange(&p).unwrap();
        for t in [0.01, 0.3, 1.0, 1.9] {
            let expected = (t / 2.0f64).powf(-0.5);
            assert!((fs.value(t) - expected).abs() < 1e-12 * expected);
        }
        // μ(λ) = 2λ^{-2} above λ = 1
        let m = numeric_distribution(&p, 2.0, &q()).unwrap();
        assert!((m - 0.5).abs() < 1e-10);
        assert!((fs.level_measure(2.0) - 0.5).abs() < 1e-10);
    }

    #[test]
    fn symmetric_of_steps() {
        let s = MonotoneStep::new(vec![2.0], vec![1.0]).unwrap();
        let star = symmetric_rearrangement(&s, 1).unwrap();
        assert_eq!(star.eval(0.999), 1.0);
        assert!((star.radius() - 1.0).abs() < 1e-12);
        let s = MonotoneStep::new(vec![std::f64::consts::PI], vec![1.0]).unwrap();
        let star = symmetric_rearrangement(&s, 2).unwrap();
        assert_eq!(star.eval(0.999), 1.0);
        assert!((star.radius() - 1.0).abs() < 1e-12);

        let star = symmetric_rearrangement(&rearrange(&three_level_example()), 1).unwrap();
        assert_eq!(star.eval(0.2), 3.0);
        assert_eq!(star.eval(0.25), 2.0);
        assert_eq!(star.eval(0.7), 2.0);
        assert_eq!(star.eval(0.75), 1.0);
        assert_eq!(star.eval(1.7), 1.0);
        assert_eq!(star.eval(1.8), 0.0);
        let m = numeric_distribution(&star, 1.5, &q()).unwrap();
        assert!((m - 1.5).abs() < 1e-11);
    }

    #[test]
    fn monotone_flag_is_checked() {
        assert!(matches!(
            RadialProfile::new(1, 1.0, true, |r| r),
            Err(NumericError::NotMonotone(..))
        ));
        assert!(RadialProfile::new(1, 1.0, false, |r| r - 0.5).is_err());
        assert!(RadialProfile::new(0, 1.0, false, |r| r).is_err());
    }

    #[test]
    fn non_monotone_tent() {
        // φ(r) = 1 − |2r − 1| on (0, 1]: mes{φ > λ} = 2·(1 − λ)
        let p = RadialProfile::new(1, 1.0, false, |r| 1.0 - (2.0 * r - 1.0).abs()).unwrap();
        let fs = numeric_rearrange(&p).unwrap();
        for lambda in [0.0, 0.25, 0.5, 0.9] {
            let m = numeric_distribution(&p, lambda, &q()).unwrap();
            assert!((m - 2.0 * (1.0 - lambda)).abs() < 1e-9, "λ={lambda}: {m}");
        }
        for t in [0.2, 1.0, 1.5] {
            assert!((fs.value(t) - (1.0 - t / 2.0)).abs() < 1e-9);
        }
    }

    #[test]
    fn tabulated_profile() {
        let p = RadialProfile::tabulated(2, vec![(0.5, 2.0), (1.0, 0.0)]).unwrap();
        assert!(p.is_monotone());
        assert_eq!(p.eval(0.25), 2.0);
        assert!((p.eval(0.75) - 1.0).abs() < 1e-15);
        assert!(RadialProfile::tabulated(1, vec![(1.0, 1.0), (0.5, 1.0)]).is_err());
        let bumpy = RadialProfile::tabulated(1, vec![(0.5, 1.0), (1.0, 2.0), (2.0, 0.0)]).unwrap();
        assert!(!bumpy.is_monotone());
    }

    #[test]
    fn round_trip_through_symmetric() {
        let p = RadialProfile::new(3, 2.0, true, |r| (-r * r).exp()).unwrap();
        let star = symmetric_rearrangement(&numeric_rearrange(&p).unwrap(), 3).unwrap();
        for r in [0.05, 0.5, 1.0, 1.9] {
            assert!((star.eval(r) - p.eval(r)).abs() < 1e-7);
        }
    }
}
