//! Adaptive Gauss–Kronrod integration with endpoint singularities and
//! divergence reports.

use rearrange::numeric::{integrate, Domain, QuadratureSpec};

fn main() {
    let spec = QuadratureSpec::default().singular_start(true);

    let cases: [(&str, fn(f64) -> f64, Domain); 4] = [
        ("∫₀¹ t^(-1/2)", |t| t.powf(-0.5), Domain::Finite(0.0, 1.0)),
        ("∫₀¹ ln² t", |t| t.ln().powi(2), Domain::Finite(0.0, 1.0)),
        ("∫₀^∞ e^(-t)", |t| (-t).exp(), Domain::HalfLine(0.0)),
        ("∫₀¹ 1/t", |t| 1.0 / t, Domain::Finite(0.0, 1.0)),
    ];
    for (name, g, domain) in cases {
        match integrate(g, domain, &spec) {
            Ok(e) => println!("{name} = {:.12} ± {:.1e} ({} subdivisions)", e.value, e.error, e.subdivisions),
            Err(e) => println!("{name}: {e}"),
        }
    }
}
