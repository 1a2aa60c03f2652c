//! Randomized verification of rearrangement inequalities.
//!
//! Every check draws simple functions from a seeded [`Generator`], computes
//! a margin per inequality instance (non-negative when the inequality holds)
//! and collects the results in a [`CheckReport`]. Inputs use dyadic values
//! and lengths so that step arithmetic is exact in `f64`.

mod checks;

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::spec_file::FunctionSpec;
use crate::step::SimpleFunction;

pub use checks::*;

/// Seeded source of random simple functions.
///
/// Values are multiples of 1/16 in `(0, 10]`, lengths and gaps multiples of
/// 1/64, lengths in `(0.1, 5]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Generator {
    seed: u64,
    max_pieces: usize,
    placement: (f64, f64),
    support_bound: Option<f64>,
}

impl Generator {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            max_pieces: 8,
            placement: (-8.0, 24.0),
            support_bound: None,
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn max_pieces(mut self, n: usize) -> Self {
        self.max_pieces = n.max(1);
        self
    }

    /// Range for the left endpoints of the pieces.
    pub fn placement(mut self, lo: f64, hi: f64) -> Self {
        self.placement = (lo, hi);
        self
    }

    /// Restricts every support to `[0, bound]`.
    pub fn bounded(mut self, bound: f64) -> Self {
        self.placement = (0.0, bound);
        self.support_bound = Some(bound);
        self
    }

    pub fn support_bound(&self) -> Option<f64> {
        self.support_bound
    }

    /// Independent stream for one trial; the result does not depend on the
    /// order in which trials are run.
    pub fn rng(&self, trial: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(trial);
        rng
    }

    pub fn function<R: Rng>(&self, rng: &mut R) -> SimpleFunction {
        let (lo, hi) = self.placement;
        let n = rng.random_range(1..=self.max_pieces);
        let span = ((hi - lo) * 32.0).max(0.0) as u64;
        let mut left = lo + rng.random_range(0..=span) as f64 / 64.0;
        let mut pieces = Vec::with_capacity(n);
        for _ in 0..n {
            if left > hi {
                break;
            }
            let mut right = left + rng.random_range(7..=320u32) as f64 / 64.0;
            if let Some(bound) = self.support_bound {
                right = right.min(bound);
                if right - left < 1.0 / 64.0 {
                    break;
                }
            }
            let value = rng.random_range(1..=160u32) as f64 / 16.0;
            pieces.push((left, right, value));
            left = right + rng.random_range(0..=192u32) as f64 / 64.0;
        }
        let f = SimpleFunction::new(pieces).expect("generated pieces are disjoint");
        assert_sound(&f, self.support_bound);
        f
    }

    pub fn sample(&self, trial: u64) -> SimpleFunction {
        self.function(&mut self.rng(trial))
    }

    pub fn pair(&self, trial: u64) -> (SimpleFunction, SimpleFunction) {
        let mut rng = self.rng(trial);
        let f = self.function(&mut rng);
        let g = self.function(&mut rng);
        (f, g)
    }
}

fn assert_sound(f: &SimpleFunction, bound: Option<f64>) {
    let pieces = f.pieces();
    assert!(pieces
        .iter()
        .all(|p| p.left < p.right && p.value > 0.0 && p.value.is_finite()));
    assert!(pieces.windows(2).all(|w| w[0].right <= w[1].left));
    if let (Some(bound), Some((lo, hi))) = (bound, f.hull()) {
        assert!(lo >= 0.0 && hi <= bound);
    }
}

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub name: String,
    pub trials: usize,
    /// Instances whose margin fell below `−tolerance`.
    pub violations: usize,
    pub tolerance: f64,
    pub min_margin: f64,
    /// Inputs that produced `min_margin`, in the function-spec text format.
    pub worst_case: Option<String>,
    pub empirical_constant: Option<f64>,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {} ({} trials, {} violations, min margin {:e}, tolerance {:e})",
            self.name,
            if self.passed() { "pass" } else { "FAIL" },
            self.trials,
            self.violations,
            self.min_margin,
            self.tolerance
        )?;
        if let Some(c) = self.empirical_constant {
            writeln!(f, "  empirical constant: {c}")?;
        }
        for note in &self.notes {
            writeln!(f, "  {note}")?;
        }
        if let Some(w) = &self.worst_case {
            writeln!(f, "  worst case:")?;
            for line in w.lines() {
                writeln!(f, "    {line}")?;
            }
        }
        Ok(())
    }
}

/// Running minimum of margins.
#[derive(Debug)]
pub(crate) struct Tally {
    tolerance: f64,
    violations: usize,
    min_margin: f64,
    worst: Option<String>,
}

impl Tally {
    pub(crate) fn new(tolerance: f64) -> Self {
        Self {
            tolerance,
            violations: 0,
            min_margin: f64::INFINITY,
            worst: None,
        }
    }

    pub(crate) fn record(&mut self, margin: f64, describe: impl FnOnce() -> String) {
        // Turns −0 into +0.
        let margin = margin + 0.0;
        // NaN counts as a violation.
        if !(margin >= -self.tolerance) {
            self.violations += 1;
        }
        if !(margin >= self.min_margin) {
            self.min_margin = margin;
            self.worst = Some(describe());
        }
    }

    pub(crate) fn finish(self, name: impl Into<String>, trials: usize) -> CheckReport {
        CheckReport {
            name: name.into(),
            trials,
            violations: self.violations,
            tolerance: self.tolerance,
            min_margin: self.min_margin,
            worst_case: self.worst,
            empirical_constant: None,
            notes: Vec::new(),
        }
    }
}

pub(crate) fn describe(functions: &[(&str, &SimpleFunction)], detail: impl fmt::Display) -> String {
    let mut out = String::new();
    for (label, f) in functions {
        out.push_str(&format!("# {label}\n{}", FunctionSpec::Step((*f).clone())));
    }
    out.push_str(&format!("# {detail}\n"));
    out
}

/// Names accepted by [`run_suite`].
pub const SUITES: &[&str] = &[
    "oracle",
    "lp_invariance",
    "hardy_littlewood",
    "contractivity",
    "sum_product",
    "maximal_domination",
    "maximal_monotonicity",
    "subadditive_maximal",
    "norm_equivalence",
    "embedding_q",
    "embedding_p",
    "max_lower_bound",
    "product_maximal",
    "scaling",
    "equimeasurable",
];

/// Runs one named suite with its default parameters, or `None` for an
/// unknown name.
pub fn run_suite(name: &str, seed: u64, trials: usize) -> Option<Vec<CheckReport>> {
    let gen = Generator::new(seed);
    let reports = match name {
        "oracle" => vec![check_oracle(&gen, trials, 1000)],
        "lp_invariance" => vec![check_lp_invariance(&gen, trials, &[1.0, 2.0, 3.0])],
        "hardy_littlewood" => vec![check_hardy_littlewood(&gen, trials)],
        "contractivity" => vec![check_contractivity(&gen, trials, &[1.0, 1.5, 2.0, 3.0])],
        "sum_product" => vec![check_sum_product(&gen, trials)],
        "maximal_domination" => vec![check_maximal_domination(&gen, trials)],
        "maximal_monotonicity" => vec![check_maximal_monotonicity(&gen, trials)],
        "subadditive_maximal" => vec![check_subadditive_maximal(&gen, trials)],
        "norm_equivalence" => default_indices()
            .into_iter()
            .map(|idx| check_norm_equivalence(&gen, trials, idx))
            .collect(),
        "embedding_q" => vec![check_embedding_q(&gen, trials, 2.0, 1.0, 2.0)],
        "embedding_p" => vec![check_embedding_p(&gen, trials, 3.0, 2.0, 2.0, 8.0)],
        "max_lower_bound" => vec![check_max_lower_bound(&gen, trials, &max_bound_indices())],
        "product_maximal" => vec![check_product_maximal(&gen, trials)],
        "scaling" => vec![check_scaling(&gen, trials, &[0.5, 2.0, 4.0], &default_indices())],
        "equimeasurable" => vec![check_equimeasurable(&gen, trials)],
        _ => return None,
    };
    Some(reports)
}

fn default_indices() -> Vec<crate::lorentz::LorentzIndex> {
    [(2.0, 2.0), (3.0, 1.0), (2.0, 4.0)]
        .into_iter()
        .map(|(p, q)| crate::lorentz::LorentzIndex::new(p, q).expect("valid index"))
        .collect()
}

fn max_bound_indices() -> Vec<crate::lorentz::LorentzIndex> {
    [1.0, 2.0, 4.0]
        .into_iter()
        .map(|q| crate::lorentz::LorentzIndex::new(2.0, q).expect("valid index"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_is_deterministic() {
        let a = Generator::new(7);
        let b = Generator::new(7);
        for trial in 0..20 {
            assert_eq!(a.pair(trial), b.pair(trial));
        }
        assert_ne!(Generator::new(8).sample(0), a.sample(0));
    }

    #[test]
    fn generator_respects_ranges() {
        let gen = Generator::new(1);
        for trial in 0..500 {
            let f = gen.sample(trial);
            assert!(!f.is_zero() && f.pieces().len() <= 8);
            for p in f.pieces() {
                assert!(p.value > 0.0 && p.value <= 10.0);
                assert_eq!((p.value * 16.0).fract(), 0.0);
                assert_eq!((p.left * 64.0).fract(), 0.0);
            }
        }
        let bounded = Generator::new(1).bounded(4.0);
        for trial in 0..200 {
            let (lo, hi) = bounded.sample(trial).hull().unwrap();
            assert!(lo >= 0.0 && hi <= 4.0);
        }
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nosuch", 1, 1).is_none());
        for name in SUITES {
            assert!(run_suite(name, 3, 2).is_some(), "{name}");
        }
    }
}
