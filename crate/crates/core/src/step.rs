//! Exact algebra of non-negative simple functions on the real line.
//!
//! A [`SimpleFunction`] is a finite sum `Σ aᵢ·1_{[lᵢ, rᵢ)}` over pairwise
//! disjoint half-open intervals. Its distribution function and its
//! decreasing rearrangement are both [`MonotoneStep`]s: non-increasing,
//! right-continuous step functions on `[0, ∞)` that vanish past their last
//! breakpoint.
//!
//! All breakpoint arithmetic is plain `f64` addition of lengths and values.
//! When the inputs are dyadic rationals (as the verification generator
//! produces) every operation in this module is exact.
//!
//! The rearrangement is defined by `f#(t) = inf{λ ≥ 0 : μ_f(λ) ≤ t}`. Written
//! as slots, the j-th largest value `v_j` occupies `[m_{j-1}, m_j)` where
//! `m_j` is the measure of `{|f| ≥ v_j}`, i.e. the level-set lengths are
//! accumulated from the top value downwards. [`oracle_rearrange`] evaluates
//! the infimum literally and is used to cross-check [`rearrange`].

use thiserror::Error;

/// Absolute tolerance used to identify two levels as the same value.
pub const TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StepError {
    #[error("interval [{left}, {right}) must be finite with left < right")]
    BadInterval { left: f64, right: f64 },
    #[error("value {0} is not finite")]
    NonFiniteValue(f64),
    #[error("intervals [{0}, {1}) and [{2}, {3}) overlap")]
    Overlap(f64, f64, f64, f64),
    #[error("dilation factor must be positive and finite, got {0}")]
    NonPositiveDilation(f64),
    #[error("scale factor must be non-negative and finite, got {0}")]
    NegativeScale(f64),
    #[error("evaluation point must be non-negative, got {0}")]
    NegativeArgument(f64),
    #[error("step breakpoints must be positive and strictly increasing")]
    BadBreakpoints,
    #[error("step values must be finite, non-negative and non-increasing")]
    NotMonotone,
    #[error("a step needs one value per breakpoint ({ends} breakpoints, {values} values)")]
    LengthMismatch { ends: usize, values: usize },
}

/// One constant piece `value·1_{[left, right)}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Piece {
    pub left: f64,
    pub right: f64,
    pub value: f64,
}

impl Piece {
    pub fn len(&self) -> f64 {
        self.right - self.left
    }

    pub fn is_empty(&self) -> bool {
        self.right <= self.left
    }

    pub fn contains(&self, x: f64) -> bool {
        self.left <= x && x < self.right
    }
}

fn same_level(a: f64, b: f64) -> bool {
    (a - b).abs() <= TOL
}

/// Non-negative simple function on ℝ, kept in canonical form: pieces sorted
/// by left endpoint, pairwise disjoint, no zero-valued pieces and no two
/// touching pieces carrying the same value.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SimpleFunction {
    pieces: Vec<Piece>,
}

impl SimpleFunction {
    /// Builds `Σ |value|·1_{[left, right)}` from `(left, right, value)` triples.
    ///
    /// Signed values are replaced by their absolute value. Intervals may be
    /// given in any order but must not overlap.
    pub fn new<I>(pieces: I) -> Result<Self, StepError>
    where
        I: IntoIterator<Item = (f64, f64, f64)>,
    {
        let mut raw = Vec::new();
        for (left, right, value) in pieces {
            if !(left.is_finite() && right.is_finite() && left < right) {
                return Err(StepError::BadInterval { left, right });
            }
            if !value.is_finite() {
                return Err(StepError::NonFiniteValue(value));
            }
            raw.push(Piece {
                left,
                right,
                value: value.abs(),
            });
        }
        raw.sort_by(|a, b| a.left.total_cmp(&b.left));
        for w in raw.windows(2) {
            if w[0].right > w[1].left {
                return Err(StepError::Overlap(w[0].left, w[0].right, w[1].left, w[1].right));
            }
        }
        Ok(Self::from_sorted(raw))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// `c·1_{[left, right)}`.
    pub fn indicator(left: f64, right: f64, c: f64) -> Result<Self, StepError> {
        Self::new([(left, right, c)])
    }

    // Pieces must already be sorted and disjoint with non-negative values.
    fn from_sorted(raw: Vec<Piece>) -> Self {
        let mut pieces: Vec<Piece> = Vec::with_capacity(raw.len());
        for p in raw {
            if p.value == 0.0 || p.is_empty() {
                continue;
            }
            match pieces.last_mut() {
                Some(last) if last.right == p.left && same_level(last.value, p.value) => {
                    last.right = p.right;
                }
                _ => pieces.push(p),
            }
        }
        Self { pieces }
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn is_zero(&self) -> bool {
        self.pieces.is_empty()
    }

    /// Pointwise value `f(x)`.
    pub fn eval(&self, x: f64) -> f64 {
        let idx = self.pieces.partition_point(|p| p.right <= x);
        match self.pieces.get(idx) {
            Some(p) if p.left <= x => p.value,
            _ => 0.0,
        }
    }

    /// Lebesgue measure of `{f ≠ 0}`.
    pub fn support_measure(&self) -> f64 {
        self.pieces.iter().map(Piece::len).sum()
    }

    pub fn max_value(&self) -> f64 {
        self.pieces.iter().map(|p| p.value).fold(0.0, f64::max)
    }

    /// `∫ f`.
    pub fn integral(&self) -> f64 {
        self.pieces.iter().map(|p| p.value * p.len()).sum()
    }

    /// `∫ |f|^p` for `p > 0`.
    pub fn power_integral(&self, p: f64) -> f64 {
        self.pieces.iter().map(|pc| pc.value.powf(p) * pc.len()).sum()
    }

    /// Smallest left endpoint and largest right endpoint, if any piece exists.
    pub fn hull(&self) -> Option<(f64, f64)> {
        Some((self.pieces.first()?.left, self.pieces.last()?.right))
    }

    /// Distinct levels in decreasing order with the measure of each level set.
    ///
    /// Levels closer than [`TOL`] are merged into the larger one.
    pub fn level_sets(&self) -> Vec<(f64, f64)> {
        let mut by_value: Vec<&Piece> = self.pieces.iter().collect();
        by_value.sort_by(|a, b| b.value.total_cmp(&a.value).then(a.left.total_cmp(&b.left)));
        let mut levels: Vec<(f64, f64)> = Vec::new();
        for p in by_value {
            match levels.last_mut() {
                Some((v, mass)) if same_level(*v, p.value) => *mass += p.len(),
                _ => levels.push((p.value, p.len())),
            }
        }
        levels
    }

    fn combine(&self, other: &Self, op: impl Fn(f64, f64) -> f64) -> Self {
        let mut cuts: Vec<f64> = self
            .pieces
            .iter()
            .chain(other.pieces.iter())
            .flat_map(|p| [p.left, p.right])
            .collect();
        cuts.sort_by(f64::total_cmp);
        cuts.dedup();
        let raw = cuts
            .windows(2)
            .map(|w| Piece {
                left: w[0],
                right: w[1],
                value: op(self.eval(w[0]), other.eval(w[0])),
            })
            .collect();
        Self::from_sorted(raw)
    }

    /// Pointwise sum on the common refinement.
    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a + b)
    }

    /// Pointwise product on the common refinement.
    pub fn mul(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a * b)
    }

    /// `|f − g|` on the common refinement.
    pub fn abs_diff(&self, other: &Self) -> Self {
        self.combine(other, |a, b| (a - b).abs())
    }

    /// Pointwise maximum.
    pub fn max(&self, other: &Self) -> Self {
        self.combine(other, f64::max)
    }

    /// `x ↦ f(Λx)`: every interval `[l, r)` becomes `[l/Λ, r/Λ)`.
    pub fn dilate(&self, factor: f64) -> Result<Self, StepError> {
        if !(factor.is_finite() && factor > 0.0) {
            return Err(StepError::NonPositiveDilation(factor));
        }
        let raw = self
            .pieces
            .iter()
            .map(|p| Piece {
                left: p.left / factor,
                right: p.right / factor,
                value: p.value,
            })
            .collect();
        Ok(Self::from_sorted(raw))
    }

    /// `c·f` for `c ≥ 0`.
    pub fn scale(&self, c: f64) -> Result<Self, StepError> {
        if !(c.is_finite() && c >= 0.0) {
            return Err(StepError::NegativeScale(c));
        }
        let raw = self.pieces.iter().map(|p| Piece { value: p.value * c, ..*p }).collect();
        Ok(Self::from_sorted(raw))
    }

    /// Translation `x ↦ f(x − h)`.
    pub fn shift(&self, h: f64) -> Self {
        let raw = self
            .pieces
            .iter()
            .map(|p| Piece {
                left: p.left + h,
                right: p.right + h,
                value: p.value,
            })
            .collect();
        Self::from_sorted(raw)
    }
}

/// Non-increasing, right-continuous step function on `[0, ∞)` with finite
/// support.
///
/// Piece `j` is `[ends[j-1], ends[j])` (with an implicit `ends[-1] = 0`) and
/// carries `values[j]`; the function is zero on `[ends[k-1], ∞)`. Values are
/// strictly decreasing and strictly positive in canonical form.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct MonotoneStep {
    ends: Vec<f64>,
    values: Vec<f64>,
}

impl MonotoneStep {
    pub fn new(ends: Vec<f64>, values: Vec<f64>) -> Result<Self, StepError> {
        if ends.len() != values.len() {
            return Err(StepError::LengthMismatch {
                ends: ends.len(),
                values: values.len(),
            });
        }
        let mut prev_end = 0.0;
        for &e in &ends {
            if !(e.is_finite() && e > prev_end) {
                return Err(StepError::BadBreakpoints);
            }
            prev_end = e;
        }
        let mut prev_value = f64::INFINITY;
        for &v in &values {
            if !(v.is_finite() && v >= 0.0 && v <= prev_value) {
                return Err(StepError::NotMonotone);
            }
            prev_value = v;
        }
        Ok(Self::canonical(ends, values))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    // Assumes validated input; merges equal levels and trims the zero tail.
    fn canonical(ends: Vec<f64>, values: Vec<f64>) -> Self {
        let mut out = Self::default();
        for (e, v) in ends.into_iter().zip(values) {
            if v == 0.0 {
                break;
            }
            match out.values.last() {
                Some(&last) if same_level(last, v) => *out.ends.last_mut().unwrap() = e,
                _ => {
                    out.ends.push(e);
                    out.values.push(v);
                }
            }
        }
        out
    }

    /// Right endpoints `t₁ < … < t_k`.
    pub fn ends(&self) -> &[f64] {
        &self.ends
    }

    /// Values `v₁ > … > v_k > 0`.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn pieces(&self) -> impl Iterator<Item = Piece> + '_ {
        self.ends.iter().zip(&self.values).enumerate().map(|(j, (&right, &value))| Piece {
            left: if j == 0 { 0.0 } else { self.ends[j - 1] },
            right,
            value,
        })
    }

    /// Right-continuous evaluation.
    pub fn eval(&self, t: f64) -> Result<f64, StepError> {
        if !(t >= 0.0) {
            return Err(StepError::NegativeArgument(t));
        }
        Ok(self.value_at(t))
    }

    // Caller guarantees t >= 0.
    pub(crate) fn value_at(&self, t: f64) -> f64 {
        let idx = self.ends.partition_point(|&e| e <= t);
        self.values.get(idx).copied().unwrap_or(0.0)
    }

    /// Right end of the support.
    pub fn support(&self) -> f64 {
        self.ends.last().copied().unwrap_or(0.0)
    }

    /// Value on the first piece, i.e. the essential supremum.
    pub fn sup(&self) -> f64 {
        self.values.first().copied().unwrap_or(0.0)
    }

    /// `∫₀ᵗ s`.
    pub fn integral_upto(&self, t: f64) -> f64 {
        self.pieces()
            .take_while(|p| p.left < t)
            .map(|p| p.value * (p.right.min(t) - p.left))
            .sum()
    }

    /// `∫₀^∞ s`.
    pub fn integral(&self) -> f64 {
        self.pieces().map(|p| p.value * p.len()).sum()
    }

    /// `∫₀^∞ s^p`.
    pub fn power_integral(&self, p: f64) -> f64 {
        self.pieces().map(|pc| pc.value.powf(p) * pc.len()).sum()
    }

    /// Distribution function `λ ↦ mes{t : s(t) > λ}` of the step itself.
    ///
    /// For a monotone step this is the transpose: levels and breakpoints
    /// swap roles.
    pub fn distribution(&self) -> MonotoneStep {
        let ends = self.values.iter().rev().copied().collect();
        let values = self.ends.iter().rev().copied().collect();
        Self::canonical(ends, values)
    }

    // Shared breakpoints of two steps, including 0.
    fn refinement(&self, other: &Self) -> Vec<f64> {
        let mut cuts: Vec<f64> = std::iter::once(0.0)
            .chain(self.ends.iter().copied())
            .chain(other.ends.iter().copied())
            .collect();
        cuts.sort_by(f64::total_cmp);
        cuts.dedup();
        cuts
    }

    /// `∫₀ᵗ s·o` for two monotone steps.
    pub fn product_integral_upto(&self, other: &Self, t: f64) -> f64 {
        self.refinement(other)
            .windows(2)
            .take_while(|w| w[0] < t)
            .map(|w| self.value_at(w[0]) * other.value_at(w[0]) * (w[1].min(t) - w[0]))
            .sum()
    }

    /// `∫₀^∞ |s − o|^p`; the difference of two monotone steps is a signed step.
    pub fn power_distance(&self, other: &Self, p: f64) -> f64 {
        self.refinement(other)
            .windows(2)
            .map(|w| (self.value_at(w[0]) - other.value_at(w[0])).abs().powf(p) * (w[1] - w[0]))
            .sum()
    }

    /// Pointwise `c·s`.
    pub fn scale(&self, c: f64) -> Result<Self, StepError> {
        if !(c.is_finite() && c >= 0.0) {
            return Err(StepError::NegativeScale(c));
        }
        Ok(Self::canonical(
            self.ends.clone(),
            self.values.iter().map(|v| v * c).collect(),
        ))
    }

    /// The step as a simple function on ℝ supported in `[0, support)`.
    pub fn to_simple(&self) -> SimpleFunction {
        SimpleFunction::from_sorted(self.pieces().collect())
    }
}

/// Distribution function `λ ↦ mes{x : |f(x)| > λ}`.
///
/// Breakpoints are the distinct values of `f`; the value on
/// `[a_{i-1}, a_i)` is the measure of `{|f| ≥ a_i}`.
pub fn distribution(f: &SimpleFunction) -> MonotoneStep {
    let levels = f.level_sets();
    let mut cumulative = Vec::with_capacity(levels.len());
    let mut mass = 0.0;
    for &(_, m) in &levels {
        mass += m;
        cumulative.push(mass);
    }
    let ends = levels.iter().rev().map(|&(v, _)| v).collect();
    let values = cumulative.into_iter().rev().collect();
    MonotoneStep::canonical(ends, values)
}

/// Decreasing rearrangement `f#` as a monotone step on the measure axis.
///
/// The largest value fills `[0, m₁)`, the next one `[m₁, m₂)` and so on,
/// where `mⱼ` accumulates level-set measures from the top value down.
pub fn rearrange(f: &SimpleFunction) -> MonotoneStep {
    let mut ends = Vec::new();
    let mut values = Vec::new();
    let mut slot_end = 0.0;
    for (v, m) in f.level_sets() {
        slot_end += m;
        ends.push(slot_end);
        values.push(v);
    }
    MonotoneStep::canonical(ends, values)
}

/// `inf{λ ≥ 0 : μ_f(λ) ≤ t}` evaluated by scanning the candidate levels
/// `{0} ∪ {values of f}` in increasing order.
///
/// Returns `+∞` when no candidate qualifies, which cannot happen for a
/// finite-support `f` since `μ_f(max f) = 0`.
pub fn oracle_rearrange(f: &SimpleFunction, t: f64) -> Result<f64, StepError> {
    if !(t >= 0.0) {
        return Err(StepError::NegativeArgument(t));
    }
    let mu = distribution(f);
    let mut candidates: Vec<f64> = std::iter::once(0.0)
        .chain(f.pieces().iter().map(|p| p.value))
        .collect();
    candidates.sort_by(f64::total_cmp);
    let found = candidates.into_iter().find(|&lambda| mu.value_at(lambda) <= t);
    debug_assert!(found.is_some(), "finite support guarantees μ_f(max f) = 0");
    Ok(found.unwrap_or(f64::INFINITY))
}

/// `1·1_{[0,2)} + 2·1_{[3,4)} + 3·1_{[5,5.5)}`, the three-level instance used
/// in the documentation, the figures and the tests.
pub fn three_level_example() -> SimpleFunction {
    SimpleFunction::new([(0.0, 2.0, 1.0), (3.0, 4.0, 2.0), (5.0, 5.5, 3.0)])
        .expect("static pieces are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn step(ends: &[f64], values: &[f64]) -> MonotoneStep {
        MonotoneStep::new(ends.to_vec(), values.to_vec()).unwrap()
    }

    #[test]
    fn distribution_of_three_level_example() {
        let mu = distribution(&three_level_example());
        assert_eq!(mu, step(&[1.0, 2.0, 3.0], &[3.5, 1.5, 0.5]));
        assert_eq!(mu.eval(1.0).unwrap(), 1.5);
        assert_eq!(mu.eval(0.999).unwrap(), 3.5);
        assert_eq!(mu.eval(3.0).unwrap(), 0.0);
    }

    #[test]
    fn distribution_trivial_cases() {
        assert!(distribution(&SimpleFunction::zero()).is_empty());
        let f = SimpleFunction::indicator(-1.0, 2.0, 4.0).unwrap();
        assert_eq!(distribution(&f), step(&[4.0], &[3.0]));
    }

    #[test]
    fn rearrangement_of_three_level_example() {
        let fs = rearrange(&three_level_example());
        assert_eq!(fs, step(&[0.5, 1.5, 3.5], &[3.0, 2.0, 1.0]));
        assert_eq!(oracle_rearrange(&three_level_example(), 0.25).unwrap(), 3.0);
    }

    #[test]
    fn rearrangement_is_translation_invariant_and_merges_levels() {
        let f = SimpleFunction::indicator(7.25, 9.25, 3.0).unwrap();
        assert_eq!(rearrange(&f), step(&[2.0], &[3.0]));
        let twice = SimpleFunction::new([(0.0, 1.0, 1.0), (2.0, 3.0, 1.0)]).unwrap();
        assert_eq!(rearrange(&twice), step(&[2.0], &[1.0]));
    }

    #[test]
    fn oracle_edge_cases() {
        let f = three_level_example();
        assert_eq!(oracle_rearrange(&f, 3.5).unwrap(), 0.0);
        assert_eq!(oracle_rearrange(&f, 100.0).unwrap(), 0.0);
        assert_eq!(oracle_rearrange(&SimpleFunction::zero(), 0.0).unwrap(), 0.0);
        assert!(oracle_rearrange(&f, -1.0).is_err());
    }

    #[test]
    fn signed_values_are_absolute_valued() {
        let f = SimpleFunction::new([(0.0, 1.0, -2.0)]).unwrap();
        assert_eq!(f.eval(0.5), 2.0);
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert!(matches!(
            SimpleFunction::new([(1.0, 1.0, 1.0)]),
            Err(StepError::BadInterval { .. })
        ));
        assert!(matches!(
            SimpleFunction::new([(0.0, 2.0, 1.0), (1.0, 3.0, 1.0)]),
            Err(StepError::Overlap(..))
        ));
        assert!(SimpleFunction::new([(0.0, f64::INFINITY, 1.0)]).is_err());
        assert!(SimpleFunction::new([(0.0, 1.0, f64::NAN)]).is_err());
        assert!(MonotoneStep::new(vec![1.0, 2.0], vec![1.0, 2.0]).is_err());
        assert!(MonotoneStep::new(vec![2.0, 1.0], vec![2.0, 1.0]).is_err());
        assert!(MonotoneStep::new(vec![1.0], vec![]).is_err());
    }

    #[test]
    fn add_on_common_refinement() {
        let a = SimpleFunction::indicator(0.0, 1.0, 1.0).unwrap();
        assert_eq!(a.add(&a), SimpleFunction::indicator(0.0, 1.0, 2.0).unwrap());
        let f = SimpleFunction::indicator(0.0, 2.0, 1.0).unwrap();
        let g = SimpleFunction::indicator(1.0, 3.0, 1.0).unwrap();
        let expected = SimpleFunction::new([(0.0, 1.0, 1.0), (1.0, 2.0, 2.0), (2.0, 3.0, 1.0)]).unwrap();
        assert_eq!(f.add(&g), expected);
        let e = three_level_example();
        assert_eq!(e.add(&SimpleFunction::zero()), e);
    }

    #[test]
    fn mul_on_common_refinement() {
        let two = SimpleFunction::indicator(0.0, 1.0, 2.0).unwrap();
        let three = SimpleFunction::indicator(0.0, 1.0, 3.0).unwrap();
        assert_eq!(two.mul(&three), SimpleFunction::indicator(0.0, 1.0, 6.0).unwrap());
        let a = SimpleFunction::indicator(0.0, 1.0, 1.0).unwrap();
        let b = SimpleFunction::indicator(2.0, 3.0, 1.0).unwrap();
        assert!(a.mul(&b).is_zero());
        let f = SimpleFunction::indicator(0.0, 2.0, 1.0).unwrap();
        let g = SimpleFunction::indicator(1.0, 3.0, 1.0).unwrap();
        assert_eq!(f.mul(&g), SimpleFunction::indicator(1.0, 2.0, 1.0).unwrap());
    }

    #[test]
    fn dilate_and_scale() {
        let f = SimpleFunction::indicator(0.0, 2.0, 1.0).unwrap();
        assert_eq!(f.dilate(2.0).unwrap(), SimpleFunction::indicator(0.0, 1.0, 1.0).unwrap());
        let e = three_level_example();
        assert_eq!(e.dilate(1.0).unwrap(), e);
        assert!(e.dilate(0.0).is_err());
        assert!(e.dilate(-2.0).is_err());
        assert!(e.scale(0.0).unwrap().is_zero());
        let one = SimpleFunction::indicator(0.0, 1.0, 1.0).unwrap();
        assert_eq!(one.scale(5.0).unwrap(), SimpleFunction::indicator(0.0, 1.0, 5.0).unwrap());
        assert!(one.scale(-1.0).is_err());
    }

    #[test]
    fn dilation_law_on_example() {
        let e = three_level_example();
        let lhs = rearrange(&e.dilate(2.0).unwrap());
        for t in [0.1, 0.5, 1.0] {
            let expected = oracle_rearrange(&e, 2.0 * t).unwrap();
            assert_eq!(lhs.eval(t).unwrap(), expected);
            assert_eq!(oracle_rearrange(&e.dilate(2.0).unwrap(), t).unwrap(), expected);
        }
    }

    #[test]
    fn scaling_commutes_with_rearrangement() {
        let e = three_level_example();
        let scaled = rearrange(&e.scale(2.0).unwrap());
        for i in 0..10 {
            let t = 0.4 * i as f64;
            assert_eq!(scaled.eval(t).unwrap(), 2.0 * oracle_rearrange(&e, t).unwrap());
        }
    }

    #[test]
    fn eval_contract() {
        let mu = distribution(&three_level_example());
        assert_eq!(mu.eval(1.0).unwrap(), 1.5);
        assert_eq!(mu.eval(7.0).unwrap(), 0.0);
        assert_eq!(MonotoneStep::zero().eval(3.0).unwrap(), 0.0);
        assert!(mu.eval(-0.5).is_err());
        assert!(mu.eval(f64::NAN).is_err());
    }

    #[test]
    fn step_distribution_is_transpose() {
        let fs = rearrange(&three_level_example());
        assert_eq!(fs.distribution(), distribution(&three_level_example()));
        assert_eq!(fs.distribution().distribution(), fs);
    }

    #[test]
    fn step_integrals() {
        let fs = rearrange(&three_level_example());
        assert_eq!(fs.integral(), 5.5);
        assert_eq!(fs.integral_upto(1.0), 2.5);
        assert_eq!(fs.product_integral_upto(&fs, 10.0), 10.5);
        assert_eq!(fs.power_integral(2.0), 10.5);
        assert_eq!(fs.power_distance(&MonotoneStep::zero(), 1.0), 5.5);
        assert_eq!(fs.to_simple().integral(), 5.5);
    }

    #[test]
    fn sorting_oracle_for_equal_lengths() {
        let values = [4.0, 1.0, 7.0, 2.0];
        let f = SimpleFunction::new(
            values.iter().enumerate().map(|(i, &v)| (2.0 * i as f64, 2.0 * i as f64 + 0.5, v)),
        )
        .unwrap();
        let fs = rearrange(&f);
        assert_eq!(fs.values(), &[7.0, 4.0, 2.0, 1.0]);
        assert_eq!(fs.ends(), &[0.5, 1.0, 1.5, 2.0]);
    }
}
