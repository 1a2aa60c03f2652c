//! L^p, Lorentz, weak and maximal-function norms of a step function.

use rearrange::lorentz::{lorentz_quasinorm, lp_norm, triple_norm, weak_norm, LorentzIndex};
use rearrange::maximal::maximal;
use rearrange::step::{rearrange, three_level_example};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = three_level_example();
    let sharp = rearrange(&f);
    let m = maximal(&sharp);

    println!("‖f‖_2 = {}", lp_norm(&f, 2.0)?.value);
    println!("‖f‖_(2,1) = {}", lorentz_quasinorm(&sharp, LorentzIndex::new(2.0, 1.0)?)?.value);
    println!("‖f‖_(1,∞) = {}", weak_norm(&sharp, 1.0)?.value);

    for (p, q) in [(2.0, 2.0), (3.0, 1.0), (2.0, 4.0), (1.5, 2.5)] {
        let idx = LorentzIndex::new(p, q)?;
        let quasi = lorentz_quasinorm(&sharp, idx)?;
        let triple = triple_norm(&m, idx)?;
        println!(
            "{idx}: ‖f‖ = {:.6}  |||f||| = {:.6} ({})  ratio {:.4}",
            quasi.value,
            triple.value,
            triple.method,
            triple.value / quasi.value
        );
    }

    // The tail B/t is not integrable for p ≤ 1.
    let report = triple_norm(&m, LorentzIndex::new(1.0, 2.0)?)?;
    println!("|||f|||_(1,2) = {} ({})", report.value, report.divergence.unwrap_or_default());
    Ok(())
}
