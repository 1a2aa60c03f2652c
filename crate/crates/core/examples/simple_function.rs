//! Distribution function and decreasing rearrangement of a step function.
//!
//! ```bash
//! cargo run --example simple_function
//! ```

use rearrange::step::{distribution, oracle_rearrange, rearrange, SimpleFunction};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // 1 on [0,2), 2 on [3,4), 3 on [5,5.5)
    let f = SimpleFunction::new([(0.0, 2.0, 1.0), (3.0, 4.0, 2.0), (5.0, 5.5, 3.0)])?;

    let mu = distribution(&f);
    println!("mu_f breakpoints {:?} values {:?}", mu.ends(), mu.values());

    let sharp = rearrange(&f);
    println!("f#   breakpoints {:?} values {:?}", sharp.ends(), sharp.values());

    for t in [0.0, 0.5, 1.0, 1.5, 3.4, 3.5] {
        println!("f#({t}) = {}  oracle {}", sharp.eval(t)?, oracle_rearrange(&f, t)?);
    }

    // Algebra happens on the common refinement.
    let g = SimpleFunction::indicator(1.0, 3.5, 0.5)?;
    let sum = f.add(&g);
    println!("(f+g)# = {:?}", rearrange(&sum).pieces().collect::<Vec<_>>());
    println!("∫fg = {}, ∫f#g# = {}", f.mul(&g).integral(), sharp.product_integral_upto(&rearrange(&g), f64::INFINITY));
    Ok(())
}
