//! Radial profiles: numeric f#, the symmetric rearrangement f* and the
//! equimeasurability of f, f# and f*.

use rearrange::numeric::{
    numeric_distribution, numeric_rearrange, symmetric_rearrangement, Decreasing, QuadratureSpec, RadialProfile,
};
use rearrange::step::{rearrange, three_level_example};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = QuadratureSpec::default();

    // Step example in d = 1: f*(x) = f#(2|x|).
    let star = symmetric_rearrangement(&rearrange(&three_level_example()), 1)?;
    for x in [0.1, 0.5, 1.0, 1.8] {
        println!("f*({x}) = {}", star.eval(x));
    }

    // A Gaussian in R^3.
    let gauss = RadialProfile::new(3, f64::INFINITY, true, |r| (-r * r).exp())?;
    let sharp = numeric_rearrange(&gauss)?;
    let round_trip = symmetric_rearrangement(&sharp, 3)?;
    for lambda in [0.1, 0.5, 0.9] {
        println!(
            "λ = {lambda}: μ_f = {:.9}  μ_f# = {:.9}  μ_f* = {:.9}",
            numeric_distribution(&gauss, lambda, &q)?,
            sharp.level_measure(lambda),
            numeric_distribution(&round_trip, lambda, &q)?
        );
    }

    // A tent that is not monotone in r falls back to level-set inversion.
    let tent = RadialProfile::tabulated(1, vec![(0.25, 0.0), (0.5, 1.0), (1.0, 0.0)])?;
    let sharp = numeric_rearrange(&tent)?;
    for t in [0.0, 0.25, 0.5, 0.75] {
        println!("tent f#({t}) = {:.9}", sharp.value(t));
    }
    Ok(())
}
