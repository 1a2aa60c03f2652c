use proptest::prelude::*;

use rearrange::cli::format_number;
use rearrange::lorentz::{lorentz_quasinorm, lp_norm, triple_norm, weak_norm, LorentzIndex};
use rearrange::maximal::maximal;
use rearrange::spec_file::{parse, FunctionSpec};
use rearrange::step::{distribution, oracle_rearrange, rearrange, SimpleFunction};

// Dyadic pieces: gaps and lengths in 1/64, values in 1/16.
fn simple() -> impl Strategy<Value = SimpleFunction> {
    (-512i64..512, prop::collection::vec((0u32..=192, 1u32..=320, 1u32..=160), 0..8)).prop_map(|(start, raw)| {
        let mut left = start as f64 / 64.0;
        let mut pieces = Vec::new();
        for (gap, len, value) in raw {
            left += gap as f64 / 64.0;
            let right = left + len as f64 / 64.0;
            pieces.push((left, right, value as f64 / 16.0));
            left = right;
        }
        SimpleFunction::new(pieces).unwrap()
    })
}

fn exponent() -> impl Strategy<Value = f64> {
    prop::sample::select(vec![1.0, 1.25, 1.5, 2.0, 3.0, 4.5])
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn rearrangement_matches_the_oracle(f in simple(), k in 0u32..2048) {
        let t = k as f64 / 64.0;
        prop_assert_eq!(rearrange(&f).eval(t).unwrap(), oracle_rearrange(&f, t).unwrap());
    }

    #[test]
    fn rearrangement_is_decreasing_and_equimeasurable(f in simple()) {
        let fs = rearrange(&f);
        prop_assert!(fs.values().windows(2).all(|w| w[0] > w[1]));
        prop_assert_eq!(fs.support(), f.support_measure());
        prop_assert_eq!(fs.integral(), f.integral());
        prop_assert_eq!(distribution(&f), fs.distribution());
    }

    #[test]
    fn translation_does_not_change_the_rearrangement(f in simple(), h in -256i32..256) {
        prop_assert_eq!(rearrange(&f.shift(h as f64 / 64.0)), rearrange(&f));
    }

    #[test]
    fn lp_norm_is_invariant(f in simple(), p in exponent()) {
        let (a, b) = (lp_norm(&f, p).unwrap().value, lp_norm(&rearrange(&f), p).unwrap().value);
        // Fractional powers round differently once pieces are regrouped.
        if p.fract() == 0.0 {
            prop_assert_eq!(a, b);
        } else {
            prop_assert!((a - b).abs() <= 1e-14 * a, "{} vs {}", a, b);
        }
    }

    #[test]
    fn diagonal_lorentz_norm_is_lp(f in simple(), p in exponent()) {
        prop_assume!(!f.is_zero());
        let quasi = lorentz_quasinorm(&rearrange(&f), LorentzIndex::diagonal(p).unwrap()).unwrap().value;
        let lp = lp_norm(&f, p).unwrap().value;
        prop_assert!(((quasi - lp) / lp).abs() <= 1e-10, "{} vs {}", quasi, lp);
    }

    #[test]
    fn quasinorm_below_triple_norm(f in simple(), p in exponent(), q in exponent()) {
        let fs = rearrange(&f);
        let idx = LorentzIndex::new(p + 0.5, q).unwrap();
        let quasi = lorentz_quasinorm(&fs, idx).unwrap().value;
        let triple = triple_norm(&maximal(&fs), idx).unwrap().value;
        prop_assert!(quasi <= triple * (1.0 + 1e-10), "{} vs {}", quasi, triple);
    }

    #[test]
    fn weak_norm_bounds_the_sup(f in simple(), p in exponent()) {
        let fs = rearrange(&f);
        let weak = weak_norm(&fs, p).unwrap().value;
        for (end, value) in fs.ends().iter().zip(fs.values()) {
            prop_assert!(end.powf(1.0 / p) * value <= weak * (1.0 + 1e-12));
        }
    }

    #[test]
    fn maximal_function_dominates(f in simple(), k in 1u32..2048) {
        let fs = rearrange(&f);
        let t = k as f64 / 64.0;
        prop_assert!(maximal(&fs).eval(t).unwrap() >= fs.eval(t).unwrap());
    }

    #[test]
    fn spec_text_round_trips(f in simple()) {
        let spec = FunctionSpec::Step(f);
        prop_assert_eq!(parse(&spec.to_string()).unwrap(), spec);
    }

    #[test]
    fn number_format_keeps_twelve_digits(x in -1e12f64..1e12) {
        let back: f64 = format_number(x).parse().unwrap();
        prop_assert!((back - x).abs() <= 1e-11 * x.abs(), "{} -> {}", x, back);
    }
}
