//! The maximal function f**(t) = (1/t)∫₀ᵗ f# as hyperbolic pieces a + b/t.

use rearrange::maximal::maximal;
use rearrange::step::{rearrange, three_level_example};

fn main() {
    let sharp = rearrange(&three_level_example());
    let m = maximal(&sharp);

    for piece in m.pieces() {
        println!(
            "[{}, {}): {} + {}/t",
            piece.left, piece.right, piece.constant, piece.coefficient
        );
    }
    for t in [0.25, 1.0, 2.0, 3.5, 10.0] {
        println!("f**({t}) = {:.6}  f#({t}) = {}", m.eval(t).unwrap(), sharp.eval(t).unwrap());
    }
    println!("tail coefficient ∫f# = {}", m.tail());
}
