use rand::Rng;

use super::{describe, CheckReport, Generator, Tally};
use crate::lorentz::{lorentz_quasinorm, lp_norm, lp_norm_profile, triple_norm, weak_norm, LorentzIndex};
use crate::maximal::{maximal, MaximalFunction};
use crate::numeric::{
    bertrand, numeric_distribution, numeric_rearrange, symmetric_rearrangement, QuadratureSpec,
    RadialProfile,
};
use crate::step::{distribution, oracle_rearrange, rearrange, MonotoneStep};

const EXACT: f64 = 1e-12;
const MAXIMAL: f64 = 1e-10;

// n evenly spaced points in (0, end].
fn grid(end: f64, n: usize) -> impl Iterator<Item = f64> {
    (1..=n).map(move |i| end * i as f64 / n as f64)
}

// Grid plus every breakpoint and a point just left of it.
fn probe_points(steps: &[&MonotoneStep], n: usize) -> Vec<f64> {
    let end = steps.iter().map(|s| s.support()).fold(0.0, f64::max).max(1.0) * 1.25;
    let mut ts: Vec<f64> = grid(end, n).collect();
    for s in steps {
        for &e in s.ends() {
            ts.push(e);
            ts.push(e * (1.0 - 1e-9));
        }
    }
    ts.sort_by(f64::total_cmp);
    ts.dedup();
    ts
}

fn quasi(s: &MonotoneStep, idx: LorentzIndex) -> f64 {
    lorentz_quasinorm(s, idx).expect("step quasi-norms are closed form").value
}

fn triple(m: &MaximalFunction, idx: LorentzIndex) -> f64 {
    triple_norm(m, idx).expect("index checked by caller").value
}

/// `eval(rearrange(f), t)` against the level-scanning oracle on the grid
/// `t = i/16`, `i < points`.
pub fn check_oracle(gen: &Generator, trials: usize, points: usize) -> CheckReport {
    let mut tally = Tally::new(EXACT);
    let mut exact = 0usize;
    for trial in 0..trials {
        let f = gen.sample(trial as u64);
        let fs = rearrange(&f);
        for i in 0..points {
            let t = i as f64 / 16.0;
            let got = fs.value_at(t);
            let want = oracle_rearrange(&f, t).expect("t ≥ 0");
            exact += usize::from(got == want);
            tally.record(-(got - want).abs(), || describe(&[("f", &f)], format_args!("t = {t}: {got} vs {want}")));
        }
    }
    let mut report = tally.finish("oracle", trials);
    report
        .notes
        .push(format!("{exact} of {} evaluations agree exactly", trials * points));
    report
}

/// `‖f#‖_p = ‖f‖_p` exactly on steps, plus the profile `r^{−1/2}` on the
/// unit ball of ℝ, whose `L^1` norm is 4.
pub fn check_lp_invariance(gen: &Generator, trials: usize, ps: &[f64]) -> CheckReport {
    let mut tally = Tally::new(0.0);
    for trial in 0..trials {
        let f = gen.sample(trial as u64);
        let fs = rearrange(&f);
        for &p in ps {
            let a = lp_norm(&f, p).expect("p ≥ 1").value;
            let b = lp_norm(&fs, p).expect("p ≥ 1").value;
            tally.record(-(a - b).abs(), || describe(&[("f", &f)], format_args!("p = {p}: {a} vs {b}")));
        }
    }
    let mut profile_tally = Tally::new(1e-6);
    let half = bertrand(0.5, 0.0);
    let direct = lp_norm_profile(&half, 1.0, &QuadratureSpec::default()).expect("p ≥ 1");
    let sharp = numeric_rearrange(&half).map(|s| lp_norm(&s, 1.0).expect("p ≥ 1"));
    let sharp_value = sharp.map(|r| r.value).unwrap_or(f64::NAN);
    for value in [direct.value, sharp_value] {
        profile_tally.record(-((value - 4.0) / 4.0).abs(), || {
            format!("# r^(-1/2) on (-1, 1), p = 1: {value} vs 4\n")
        });
    }
    let mut report = merge(tally, profile_tally).finish("lp_invariance", trials);
    report.notes.push("tolerance 0 on steps, 1e-6 relative on the profile".to_string());
    report.notes.push(format!(
        "‖r^(-1/2)‖_1 = {} (profile), {} (rearranged), exact 4",
        direct.value, sharp_value
    ));
    report
}

// Combines two tallies; each keeps counting violations against its own
// tolerance, and the larger one is shown.
fn merge(mut a: Tally, b: Tally) -> Tally {
    a.violations += b.violations;
    a.tolerance = a.tolerance.max(b.tolerance);
    if b.min_margin < a.min_margin {
        a.min_margin = b.min_margin;
        a.worst = b.worst;
    }
    a
}

/// `∫ f g ≤ ∫ f# g#`.
pub fn check_hardy_littlewood(gen: &Generator, trials: usize) -> CheckReport {
    let mut tally = Tally::new(EXACT);
    for trial in 0..trials {
        let (f, g) = gen.pair(trial as u64);
        let lhs = f.mul(&g).integral();
        let rhs = rearrange(&f).product_integral_upto(&rearrange(&g), f64::INFINITY);
        tally.record(rhs - lhs, || {
            describe(&[("f", &f), ("g", &g)], format_args!("∫fg = {lhs}, ∫f#g# = {rhs}"))
        });
    }
    tally.finish("hardy_littlewood", trials)
}

/// `‖f# − g#‖_p ≤ ‖f − g‖_p`; the empirical constant is the largest observed
/// ratio of the two sides.
pub fn check_contractivity(gen: &Generator, trials: usize, ps: &[f64]) -> CheckReport {
    let mut tally = Tally::new(EXACT);
    let mut worst_ratio: f64 = 0.0;
    for trial in 0..trials {
        let (f, g) = gen.pair(trial as u64);
        let (fs, gs) = (rearrange(&f), rearrange(&g));
        let diff = f.abs_diff(&g);
        for &p in ps {
            let lhs = diff.power_integral(p).powf(1.0 / p);
            let rhs = fs.power_distance(&gs, p).powf(1.0 / p);
            if lhs > 0.0 {
                worst_ratio = worst_ratio.max(rhs / lhs);
            }
            tally.record(lhs - rhs, || {
                describe(&[("f", &f), ("g", &g)], format_args!("p = {p}: ‖f−g‖ = {lhs}, ‖f#−g#‖ = {rhs}"))
            });
        }
    }
    let mut report = tally.finish("contractivity", trials);
    report.empirical_constant = Some(worst_ratio);
    report
}

/// `(fg)#(t₁+t₂) ≤ f#(t₁)g#(t₂)` and `(f+g)#(t₁+t₂) ≤ f#(t₁) + g#(t₂)` at
/// 50 random pairs per trial.
pub fn check_sum_product(gen: &Generator, trials: usize) -> CheckReport {
    let mut tally = Tally::new(EXACT);
    for trial in 0..trials {
        let mut rng = gen.rng(trial as u64);
        let f = gen.function(&mut rng);
        let g = gen.function(&mut rng);
        let (fs, gs) = (rearrange(&f), rearrange(&g));
        let product = rearrange(&f.mul(&g));
        let sum = rearrange(&f.add(&g));
        let span = |s: &MonotoneStep| ((s.support() + 1.0) * 64.0) as u32;
        let (sf, sg) = (span(&fs), span(&gs));
        for _ in 0..50 {
            let t1 = rng.random_range(0..=sf) as f64 / 64.0;
            let t2 = rng.random_range(0..=sg) as f64 / 64.0;
            let (a, b) = (fs.value_at(t1), gs.value_at(t2));
            let p = product.value_at(t1 + t2);
            let s = sum.value_at(t1 + t2);
            let detail = || format!("t1 = {t1}, t2 = {t2}: (fg)# = {p}, (f+g)# = {s}, f# = {a}, g# = {b}");
            tally.record(a * b - p, || describe(&[("f", &f), ("g", &g)], detail()));
            tally.record(a + b - s, || describe(&[("f", &f), ("g", &g)], detail()));
        }
    }
    tally.finish("sum_product", trials)
}

/// `f# ≤ f**`.
pub fn check_maximal_domination(gen: &Generator, trials: usize) -> CheckReport {
    let mut tally = Tally::new(EXACT);
    for trial in 0..trials {
        let f = gen.sample(trial as u64);
        let fs = rearrange(&f);
        let m = maximal(&fs);
        for t in probe_points(&[&fs], 50) {
            let (a, b) = (fs.value_at(t), m.value_at(t));
            tally.record(b - a, || describe(&[("f", &f)], format_args!("t = {t}: f# = {a}, f** = {b}")));
        }
    }
    tally.finish("maximal_domination", trials)
}

/// `f**` is non-increasing.
pub fn check_maximal_monotonicity(gen: &Generator, trials: usize) -> CheckReport {
    let mut tally = Tally::new(MAXIMAL);
    for trial in 0..trials {
        let f = gen.sample(trial as u64);
        let fs = rearrange(&f);
        let m = maximal(&fs);
        let ts = probe_points(&[&fs], 50);
        for w in ts.windows(2) {
            let (a, b) = (m.value_at(w[0]), m.value_at(w[1]));
            tally.record(a - b, || {
                describe(&[("f", &f)], format_args!("f**({}) = {a} < f**({}) = {b}", w[0], w[1]))
            });
        }
    }
    tally.finish("maximal_monotonicity", trials)
}

/// `(f+g)** ≤ f** + g**`.
pub fn check_subadditive_maximal(gen: &Generator, trials: usize) -> CheckReport {
    let mut tally = Tally::new(MAXIMAL);
    for trial in 0..trials {
        let (f, g) = gen.pair(trial as u64);
        let (fs, gs, ss) = (rearrange(&f), rearrange(&g), rearrange(&f.add(&g)));
        let (mf, mg, ms) = (maximal(&fs), maximal(&gs), maximal(&ss));
        let end = ss.support().max(1.0) * 1.25;
        for t in grid(end, 50) {
            let (a, b, s) = (mf.value_at(t), mg.value_at(t), ms.value_at(t));
            tally.record(a + b - s, || {
                describe(&[("f", &f), ("g", &g)], format_args!("t = {t}: (f+g)** = {s}, f** + g** = {}", a + b))
            });
        }
    }
    tally.finish("subadditive_maximal", trials)
}

/// `‖f‖ ≤ |||f||| ≤ p/(p−1)·‖f‖`. The empirical constant is the largest
/// observed `|||f|||/‖f‖`.
pub fn check_norm_equivalence(gen: &Generator, trials: usize, idx: LorentzIndex) -> CheckReport {
    let (p, q) = (idx.p(), idx.q());
    let hardy = p / (p - 1.0);
    let mut order = Tally::new(MAXIMAL);
    let mut bound = Tally::new(1e-9);
    let mut sup_ratio: f64 = 0.0;
    for trial in 0..trials {
        let f = gen.sample(trial as u64);
        let fs = rearrange(&f);
        let n = quasi(&fs, idx);
        let t = triple(&maximal(&fs), idx);
        let ratio = t / n;
        sup_ratio = sup_ratio.max(ratio);
        let detail = || describe(&[("f", &f)], format_args!("{idx}: ‖f‖ = {n}, |||f||| = {t}"));
        order.record(t - n, detail);
        bound.record(hardy - ratio, detail);
    }
    let mut report = merge(order, bound).finish(format!("norm_equivalence[p={p},q={q}]"), trials);
    report.empirical_constant = Some(sup_ratio);
    report.notes.push("tolerance 1e-10 on ‖f‖ ≤ |||f|||, 1e-9 on the ratio bound".to_string());
    report.notes.push(format!(
        "candidates: q/(q-1+q/p) = {}, p/(p+1-p/q) = {}, p/(p-1) = {hardy}",
        q / (q - 1.0 + q / p),
        p / (p + 1.0 - p / q)
    ));
    report
}

/// The chain `‖f‖_{p,q₂} ≤ ‖f‖_{p,∞}^{1−q₁/q₂} ‖f‖_{p,q₁}^{q₁/q₂}` with
/// `‖f‖_{p,∞} ≤ (p/q₁)^{1/q₁} ‖f‖_{p,q₁}`.
///
/// The sharp weak-norm constant is `(q₁/p)^{1/q₁}`, attained by indicators,
/// so the printed constant is a valid (weaker) bound only when `p ≥ q₁`.
/// The empirical constant is the largest observed weak/`L^{p,q₁}` ratio.
pub fn check_embedding_q(gen: &Generator, trials: usize, p: f64, q1: f64, q2: f64) -> CheckReport {
    let idx1 = LorentzIndex::new(p, q1).expect("valid index");
    let idx2 = LorentzIndex::new(p, q2).expect("valid index");
    let c = (p / q1).powf(1.0 / q1);
    let theta = (q2 - q1) / q2;
    let mut tally = Tally::new(MAXIMAL);
    let mut sup_ratio: f64 = 0.0;
    for trial in 0..trials {
        let f = gen.sample(trial as u64);
        let fs = rearrange(&f);
        let w = weak_norm(&fs, p).expect("p > 0").value;
        let n1 = quasi(&fs, idx1);
        let n2 = quasi(&fs, idx2);
        sup_ratio = sup_ratio.max(w / n1);
        let detail = || {
            describe(&[("f", &f)], format_args!("weak = {w}, ‖f‖_(p,q1) = {n1}, ‖f‖_(p,q2) = {n2}"))
        };
        tally.record(c * n1 - w, detail);
        tally.record(w.powf(theta) * n1.powf(q1 / q2) - n2, detail);
        tally.record(c.powf(theta) * n1 - n2, detail);
    }
    let mut report = tally.finish(format!("embedding_q[p={p},q1={q1},q2={q2}]"), trials);
    report.empirical_constant = Some(sup_ratio);
    report.notes.push(format!(
        "printed constant (p/q1)^(1/q1) = {c}; sharp constant (q1/p)^(1/q1) = {}",
        (q1 / p).powf(1.0 / q1)
    ));
    report
}

/// Exponent comparison on supports inside `[0, bound]`.
///
/// On a set of measure `D` the valid direction is
/// `‖f‖_{p₂,q} ≤ D^{1/p₂−1/p₁} ‖f‖_{p₁,q}` for `p₁ ≥ p₂`; violations count
/// this bound. The reverse ratio `‖f‖_{p₁,q}/‖f‖_{p₂,q}` is reported as the
/// empirical constant, and shrinking indicators show it is unbounded.
pub fn check_embedding_p(gen: &Generator, trials: usize, p1: f64, p2: f64, q: f64, bound: f64) -> CheckReport {
    let gen = gen.clone().bounded(bound);
    let idx1 = LorentzIndex::new(p1, q).expect("valid index");
    let idx2 = LorentzIndex::new(p2, q).expect("valid index");
    let c = bound.powf(1.0 / p2 - 1.0 / p1);
    let mut tally = Tally::new(MAXIMAL);
    let mut sup_ratio: f64 = 0.0;
    for trial in 0..trials {
        let f = gen.sample(trial as u64);
        let fs = rearrange(&f);
        let (n1, n2) = (quasi(&fs, idx1), quasi(&fs, idx2));
        sup_ratio = sup_ratio.max(n1 / n2);
        tally.record(c * n1 - n2, || {
            describe(&[("f", &f)], format_args!("‖f‖_(p1,q) = {n1}, ‖f‖_(p2,q) = {n2}"))
        });
    }
    let probes: Vec<String> = [0u32, 10, 20, 40]
        .into_iter()
        .map(|k| {
            let eps = 0.5f64.powi(k as i32);
            let s = MonotoneStep::new(vec![eps], vec![1.0]).expect("valid step");
            format!("{:.3e}", quasi(&s, idx1) / quasi(&s, idx2))
        })
        .collect();
    let mut report = tally.finish(format!("embedding_p[p1={p1},p2={p2},q={q},D={bound}]"), trials);
    report.empirical_constant = Some(sup_ratio);
    report.notes.push(format!("valid-direction constant D^(1/p2-1/p1) = {c}"));
    report.notes.push(format!(
        "‖1_[0,ε)‖_(p1,q)/‖1_[0,ε)‖_(p2,q) for ε = 1, 2^-10, 2^-20, 2^-40: {}",
        probes.join(", ")
    ));
    report
}

/// `(f+g)# ≥ max(f#, g#)` pointwise and `|||f+g||| ≥ max(|||f|||, |||g|||)`
/// for non-negative `f, g`.
pub fn check_max_lower_bound(gen: &Generator, trials: usize, indices: &[LorentzIndex]) -> CheckReport {
    let mut tally = Tally::new(MAXIMAL);
    for trial in 0..trials {
        let (f, g) = gen.pair(trial as u64);
        let (fs, gs, ss) = (rearrange(&f), rearrange(&g), rearrange(&f.add(&g)));
        for t in probe_points(&[&fs, &gs, &ss], 50) {
            let (a, b, s) = (fs.value_at(t), gs.value_at(t), ss.value_at(t));
            tally.record(s - a.max(b), || {
                describe(&[("f", &f), ("g", &g)], format_args!("t = {t}: (f+g)# = {s}, f# = {a}, g# = {b}"))
            });
        }
        let (mf, mg, ms) = (maximal(&fs), maximal(&gs), maximal(&ss));
        for &idx in indices {
            let (a, b, s) = (triple(&mf, idx), triple(&mg, idx), triple(&ms, idx));
            tally.record(s - a.max(b), || {
                describe(&[("f", &f), ("g", &g)], format_args!("{idx}: |||f+g||| = {s}, |||f||| = {a}, |||g||| = {b}"))
            });
        }
    }
    tally.finish("max_lower_bound", trials)
}

/// `(fg)**(t) ≤ (2/t)∫₀ᵗ f#g# ≤ (2/t)∫₀ᵗ f**g**`.
pub fn check_product_maximal(gen: &Generator, trials: usize) -> CheckReport {
    let mut tally = Tally::new(MAXIMAL);
    for trial in 0..trials {
        let (f, g) = gen.pair(trial as u64);
        let (fs, gs) = (rearrange(&f), rearrange(&g));
        let (mf, mg) = (maximal(&fs), maximal(&gs));
        let mh = maximal(&rearrange(&f.mul(&g)));
        let end = fs.support().max(gs.support()).max(1.0) * 1.25;
        for t in grid(end, 50) {
            let lhs = mh.value_at(t);
            let mid = 2.0 / t * fs.product_integral_upto(&gs, t);
            let top = 2.0 / t * mf.product_integral_upto(&mg, t);
            let detail = || describe(&[("f", &f), ("g", &g)], format_args!("t = {t}: {lhs} ≤ {mid} ≤ {top}"));
            tally.record(mid - lhs, detail);
            tally.record(top - mid, detail);
        }
    }
    tally.finish("product_maximal", trials)
}

// Least-squares slope of y against x.
fn slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

/// Dilations `f(Λ·)` and multiples `c·f`:
///
/// * `(f(Λ·))#(t) = f#(Λt)` on a probe grid,
/// * `‖f(Λ·)‖_{p,q} = Λ^{−1/p}‖f‖_{p,q}` and `‖c f‖ = c‖f‖`,
/// * the exponent `e` in `|||f(Λ·)||| = Λ^{−e}|||f|||`, fitted over `Λ`,
///   equals `1/p` to `1e−9`.
pub fn check_scaling(gen: &Generator, trials: usize, lambdas: &[f64], indices: &[LorentzIndex]) -> CheckReport {
    let mut exact = Tally::new(EXACT);
    let mut laws = Tally::new(MAXIMAL);
    let mut exponent = Tally::new(1e-9);
    let mut fitted = vec![(0.0f64, 0.0f64); indices.len()];
    for trial in 0..trials {
        let f = gen.sample(trial as u64);
        let fs = rearrange(&f);
        let dilated: Vec<(f64, MonotoneStep)> = lambdas
            .iter()
            .map(|&l| (l, rearrange(&f.dilate(l).expect("Λ > 0"))))
            .collect();
        for (l, ds) in &dilated {
            for t in probe_points(&[&fs, ds], 50) {
                let (a, b) = (ds.value_at(t), fs.value_at(l * t));
                exact.record(-(a - b).abs(), || describe(&[("f", &f)], format_args!("Λ = {l}, t = {t}: {a} vs {b}")));
            }
        }
        for (k, &idx) in indices.iter().enumerate() {
            let p = idx.p();
            let base = quasi(&fs, idx);
            for (l, ds) in &dilated {
                let scaled = quasi(ds, idx);
                let expected = l.powf(-1.0 / p) * base;
                laws.record(-(scaled - expected).abs() / base, || {
                    describe(&[("f", &f)], format_args!("Λ = {l}, {idx}: {scaled} vs {expected}"))
                });
            }
            let c = 3.0;
            let multiple = quasi(&fs.scale(c).expect("c ≥ 0"), idx);
            laws.record(-(multiple - c * base).abs() / base, || {
                describe(&[("f", &f)], format_args!("c = {c}, {idx}: {multiple} vs {}", c * base))
            });
            let mut points = vec![(0.0, triple(&maximal(&fs), idx).ln())];
            points.extend(dilated.iter().map(|(l, ds)| (l.ln(), triple(&maximal(ds), idx).ln())));
            let e = -slope(&points);
            fitted[k].0 += e;
            fitted[k].1 = fitted[k].1.max((e - 1.0 / p).abs());
            exponent.record(-(e - 1.0 / p).abs(), || {
                describe(&[("f", &f)], format_args!("{idx}: fitted exponent {e}, expected {}", 1.0 / p))
            });
        }
    }
    let mut report = merge(merge(exact, laws), exponent).finish("scaling", trials);
    report
        .notes
        .push("tolerance 1e-12 on f#, 1e-10 relative on norm laws, 1e-9 on fitted exponents".to_string());
    for (idx, (sum, dev)) in indices.iter().zip(&fitted) {
        report.notes.push(format!(
            "{idx}: mean fitted exponent of |||f(Λ·)||| = {} (1/p = {}, max deviation {dev:e}); a Λ^(-d) law would give 1",
            sum / trials.max(1) as f64,
            1.0 / idx.p()
        ));
    }
    report
}

fn profile_corpus() -> Vec<(&'static str, RadialProfile)> {
    let mut corpus = vec![
        ("r^(-1/2), d = 1", bertrand(0.5, 0.0)),
        ("(-ln r) r^(-1/4), d = 1", bertrand(0.25, 1.0)),
    ];
    corpus.push(("1 - r, d = 1", RadialProfile::new(1, 1.0, true, |r| 1.0 - r).expect("valid profile")));
    corpus.push(("exp(-r^2), d = 3", RadialProfile::new(3, f64::INFINITY, true, |r| (-r * r).exp()).expect("valid profile")));
    corpus.push(("2 on the unit disc", RadialProfile::constant(2, 1.0, 2.0).expect("valid profile")));
    corpus
}

/// Equal distribution functions for `f`, `f#` and `f*`.
///
/// Steps: the distribution of `f` equals that of `f#` piece by piece, and
/// the one-dimensional `f*` has the same level-set measures. Profiles: the
/// three measures agree to `1e−7` at 20 random levels.
pub fn check_equimeasurable(gen: &Generator, trials: usize) -> CheckReport {
    let quad = QuadratureSpec::default();
    let mut steps = Tally::new(0.0);
    let mut numeric = Tally::new(1e-7);
    let relative = |a: f64, b: f64| (a - b).abs() / a.abs().max(b.abs()).max(1e-300);
    for trial in 0..trials {
        let f = gen.sample(trial as u64);
        let fs = rearrange(&f);
        let mu = distribution(&f);
        let same = mu == fs.distribution() && mu == distribution(&fs.to_simple());
        steps.record(if same { 0.0 } else { -1.0 }, || describe(&[("f", &f)], "distribution piece lists differ"));
        let star = symmetric_rearrangement(&fs, 1).expect("d = 1");
        let levels: Vec<f64> = std::iter::once(0.0).chain(mu.ends().iter().copied()).collect();
        for w in levels.windows(2) {
            let lambda = 0.5 * (w[0] + w[1]);
            let a = mu.value_at(lambda);
            let b = numeric_distribution(&star, lambda, &quad).unwrap_or(f64::NAN);
            numeric.record(if a == 0.0 && b == 0.0 { 0.0 } else { -relative(a, b) }, || {
                describe(&[("f", &f)], format_args!("λ = {lambda}: μ_f = {a}, μ_f* = {b}"))
            });
        }
    }
    let mut rng = gen.rng(u64::MAX);
    for (name, profile) in profile_corpus() {
        let sharp = match numeric_rearrange(&profile) {
            Ok(s) => s,
            Err(e) => {
                numeric.record(f64::NAN, || format!("# {name}: {e}\n"));
                continue;
            }
        };
        let star = symmetric_rearrangement(&sharp, profile.dim()).expect("valid dimension");
        let top = profile.limit_at_zero();
        let top = if top.is_finite() { top } else { 20.0 };
        for _ in 0..20 {
            let lambda = top * rng.random_range(0.02..0.98);
            let a = numeric_distribution(&profile, lambda, &quad).unwrap_or(f64::NAN);
            let b = numeric_distribution(&star, lambda, &quad).unwrap_or(f64::NAN);
            let c = sharp.level_measure(lambda);
            numeric.record(-relative(a, b).max(relative(a, c)), || {
                format!("# {name}, λ = {lambda}: μ_f = {a}, μ_f* = {b}, μ_f# = {c}\n")
            });
        }
    }
    let mut report = merge(steps, numeric).finish("equimeasurable", trials);
    report
        .notes
        .push("tolerance 0 on distribution piece lists, 1e-7 relative on level-set measures".to_string());
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::Decreasing;
    use crate::step::SimpleFunction;

    fn indicator(l: f64, r: f64, c: f64) -> SimpleFunction {
        SimpleFunction::indicator(l, r, c).unwrap()
    }

    #[test]
    fn structured_cases() {
        let f = indicator(0.0, 1.0, 1.0);
        let g = indicator(2.0, 3.0, 1.0);
        let (fs, gs) = (rearrange(&f), rearrange(&g));
        assert_eq!(f.mul(&g).integral(), 0.0);
        assert_eq!(fs.product_integral_upto(&gs, f64::INFINITY), 1.0);
        assert_eq!(f.abs_diff(&g).power_integral(1.0), 2.0);
        assert_eq!(fs.power_distance(&gs, 1.0), 0.0);
        let sum = rearrange(&f.add(&g));
        assert_eq!(sum, MonotoneStep::new(vec![2.0], vec![1.0]).unwrap());
        let product = rearrange(&f.mul(&f));
        assert_eq!(product.value_at(0.8), fs.value_at(0.4) * fs.value_at(0.4));
        let m = maximal(&fs);
        let lhs = maximal(&product).value_at(1.0);
        assert_eq!((lhs, 2.0 * fs.product_integral_upto(&fs, 1.0)), (1.0, 2.0));
        let box2 = MonotoneStep::new(vec![2.0], vec![1.0]).unwrap();
        let idx = LorentzIndex::diagonal(2.0).unwrap();
        let dilated = rearrange(&indicator(0.0, 2.0, 1.0).dilate(2.0).unwrap());
        assert!((quasi(&dilated, idx) - 0.5f64.sqrt() * quasi(&box2, idx)).abs() < 1e-15);
        assert!((triple(&m, idx) / quasi(&fs, idx) - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn one_piece_embedding_ratio() {
        for (c, l) in [(1.0, 1.0), (3.0, 0.25), (0.5, 7.0)] {
            let s = MonotoneStep::new(vec![l], vec![c]).unwrap();
            let idx = LorentzIndex::new(2.0, 1.0).unwrap();
            let ratio = weak_norm(&s, 2.0).unwrap().value / quasi(&s, idx);
            assert!((ratio - 0.5).abs() < 1e-15);
        }
    }

    #[test]
    fn equimeasurable_examples() {
        let f = crate::step::three_level_example();
        let star = symmetric_rearrangement(&rearrange(&f), 1).unwrap();
        let q = QuadratureSpec::default();
        assert!((numeric_distribution(&star, 1.5, &q).unwrap() - 1.5).abs() < 1e-10);
        assert_eq!(distribution(&f).value_at(1.5), 1.5);
        let half = bertrand(0.5, 0.0);
        let sharp = numeric_rearrange(&half).unwrap();
        assert!((numeric_distribution(&half, 2.0, &q).unwrap() - 0.5).abs() < 1e-10);
        assert!((sharp.level_measure(2.0) - 0.5).abs() < 1e-10);
        assert!((sharp.value(0.5) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn slope_fit() {
        let points: Vec<(f64, f64)> = [0.5f64, 1.0, 2.0, 4.0].iter().map(|&l| (l.ln(), -0.5 * l.ln() + 3.0)).collect();
        assert!((slope(&points) + 0.5).abs() < 1e-15);
    }

    #[test]
    fn small_runs_pass() {
        let gen = Generator::new(42);
        let reports = [
            check_oracle(&gen, 20, 200),
            check_lp_invariance(&gen, 20, &[1.0, 2.0, 3.0]),
            check_hardy_littlewood(&gen, 20),
            check_contractivity(&gen, 20, &[1.0, 1.5, 2.0, 3.0]),
            check_sum_product(&gen, 20),
            check_maximal_domination(&gen, 20),
            check_maximal_monotonicity(&gen, 20),
            check_subadditive_maximal(&gen, 20),
            check_norm_equivalence(&gen, 20, LorentzIndex::diagonal(2.0).unwrap()),
            check_embedding_q(&gen, 20, 2.0, 1.0, 2.0),
            check_embedding_p(&gen, 20, 3.0, 2.0, 2.0, 8.0),
            check_product_maximal(&gen, 20),
            check_scaling(&gen, 10, &[0.5, 2.0, 4.0], &[LorentzIndex::diagonal(2.0).unwrap()]),
            check_equimeasurable(&gen, 10),
        ];
        for r in reports {
            assert!(r.passed(), "{r}");
            assert!(r.min_margin.is_finite(), "{r}");
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let gen = Generator::new(9);
        assert_eq!(check_contractivity(&gen, 30, &[1.5]), check_contractivity(&gen, 30, &[1.5]));
        assert_eq!(check_scaling(&gen, 5, &[2.0], &[LorentzIndex::diagonal(3.0).unwrap()]), check_scaling(&gen, 5, &[2.0], &[LorentzIndex::diagonal(3.0).unwrap()]));
    }
}
