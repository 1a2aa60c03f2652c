//! Figure datasets.
//!
//! * 1 to 3: `f`, `μ_f` and `f#`, `f**` of the three-level example.
//! * 4 and 5: cumulative integrals `∫₀^T` of the `L^{1,2}([0,1])` and
//!   `L²([0,1])` integrands of `r ↦ r(−ln r)^β` for `β = 2, 4`.
//! * 6 to 8: `f = 1·1_{I₁}`, `g = 2·1_{I₂}` for disjoint `I₁ = [0,2)`,
//!   `I₂ = [3,4)` and for identical `I₁ = I₂ = [0,2)`: the functions, their
//!   rearrangements, and `(f+g)#` next to `max(f#, g#)`.

use super::{rearrange_tables, CliError, Table};
use crate::numeric::{bertrand, integrate, numeric_rearrange_with, Decreasing, Domain, QuadratureSpec};
use crate::spec_file::FunctionSpec;
use crate::step::{rearrange, three_level_example, SimpleFunction};

pub const FIGURES: [usize; 8] = [1, 2, 3, 4, 5, 6, 7, 8];

const EXAMPLE_GRID: usize = 201;
const SWEEP: usize = 100;
const PAIR_GRID: usize = 181;

pub fn figure(id: usize) -> Result<Table, CliError> {
    match id {
        1..=3 => {
            let (table, _) = rearrange_tables(&FunctionSpec::Step(three_level_example()), EXAMPLE_GRID)?;
            Ok(match id {
                1 => table.select(&["t", "f"]),
                2 => table.select(&["t", "mu_f"]),
                _ => table.select(&["t", "f_sharp", "f_starstar"]),
            })
        }
        4 => bertrand_sweep(Integrand::Lorentz),
        5 => bertrand_sweep(Integrand::Lebesgue),
        6..=8 => Ok(two_indicators(id)),
        _ => Err(CliError::Usage(format!("unknown figure {id}"))),
    }
}

#[derive(Clone, Copy)]
enum Integrand {
    /// `t·f#(t)²`, where `f#` is taken on `[0, 1]`.
    Lorentz,
    /// `f(r)²`.
    Lebesgue,
}

// Running integral over T = i/SWEEP as (value, accumulated error bound).
fn sweep<F: Fn(f64) -> f64>(g: F, quad: &QuadratureSpec) -> Vec<(f64, f64)> {
    let mut total = 0.0;
    let mut error = 0.0;
    (1..=SWEEP)
        .map(|i| {
            let (a, b) = ((i - 1) as f64 / SWEEP as f64, i as f64 / SWEEP as f64);
            match integrate(&g, Domain::Finite(a, b), quad) {
                Ok(e) => {
                    total += e.value;
                    error += e.error;
                }
                Err(_) => total = f64::INFINITY,
            }
            (total, error)
        })
        .collect()
}

fn bertrand_sweep(kind: Integrand) -> Result<Table, CliError> {
    let quad = QuadratureSpec::from_env();
    let mut series = Vec::new();
    for beta in [2.0, 4.0] {
        let profile = bertrand(-1.0, beta);
        let values = match kind {
            Integrand::Lorentz => {
                let sharp =
                    numeric_rearrange_with(&profile, &quad).map_err(|e| CliError::Failed(e.to_string()))?;
                // (−1, 1) has twice the measure of [0, 1]: f#_[0,1](t) = f#(2t).
                sweep(|t| t * sharp.value(2.0 * t).powi(2), &quad)
            }
            Integrand::Lebesgue => sweep(|r| profile.eval(r).powi(2), &quad),
        };
        series.push(values);
    }
    let mut table = Table::new(&["T", "beta2", "beta4", "beta2_error", "beta4_error", "delta"]);
    for i in 0..SWEEP {
        let (a, ea) = series[0][i];
        let (b, eb) = series[1][i];
        table.push(vec![(i + 1) as f64 / SWEEP as f64, a, b, ea, eb, a - b]);
    }
    Ok(table)
}

fn two_indicators(id: usize) -> Table {
    let f = SimpleFunction::indicator(0.0, 2.0, 1.0).expect("valid piece");
    let g_disjoint = SimpleFunction::indicator(3.0, 4.0, 2.0).expect("valid piece");
    let g_identical = SimpleFunction::indicator(0.0, 2.0, 2.0).expect("valid piece");
    let fs = rearrange(&f);
    let (gds, gis) = (rearrange(&g_disjoint), rearrange(&g_identical));
    let (sds, sis) = (rearrange(&f.add(&g_disjoint)), rearrange(&f.add(&g_identical)));
    let header: &[&str] = match id {
        6 => &["x", "f_disjoint", "g_disjoint", "f_identical", "g_identical"],
        7 => &["t", "f_sharp_disjoint", "g_sharp_disjoint", "f_sharp_identical", "g_sharp_identical"],
        _ => &["t", "sum_sharp_disjoint", "max_sharp_disjoint", "sum_sharp_identical", "max_sharp_identical"],
    };
    let mut table = Table::new(header);
    for i in 0..PAIR_GRID {
        let x = 4.5 * i as f64 / (PAIR_GRID - 1) as f64;
        let (a, b, c) = (fs.value(x), gds.value(x), gis.value(x));
        table.push(match id {
            6 => vec![x, f.eval(x), g_disjoint.eval(x), f.eval(x), g_identical.eval(x)],
            7 => vec![x, a, b, a, c],
            _ => vec![x, sds.value(x), a.max(b), sis.value(x), a.max(c)],
        });
    }
    table
}
