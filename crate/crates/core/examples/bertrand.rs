//! The family r ↦ (−ln r)^β r^(−α) on the unit ball of ℝ: L^p norms cannot
//! tell β apart when α·p < 1, Lorentz norms can.

use rearrange::lorentz::{lorentz_quasinorm, lp_norm_profile, LorentzIndex};
use rearrange::numeric::{bertrand, numeric_rearrange, QuadratureSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = QuadratureSpec::from_env();

    for (alpha, beta) in [(0.5, 0.0), (0.5, 1.0), (0.5, 4.0), (1.0, 0.0), (1.0, 2.0)] {
        let f = bertrand(alpha, beta);
        let report = lp_norm_profile(&f, 1.0, &q)?;
        match report.divergence {
            None => println!("α = {alpha}, β = {beta}: ‖f‖_1 = {:.9} ± {:.1e}", report.value, report.error_bound),
            Some(why) => println!("α = {alpha}, β = {beta}: ‖f‖_1 = ∞ ({why})"),
        }
    }

    let idx = LorentzIndex::new(1.0, 2.0)?;
    for beta in [2.0, 4.0] {
        let sharp = numeric_rearrange(&bertrand(-1.0, beta))?;
        let report = lorentz_quasinorm(&sharp, idx)?;
        println!("β = {beta}: ‖f‖_(1,2) = {:.9}", report.value);
    }
    Ok(())
}
