//! Runs every verification suite and prints the summary table.
//!
//! ```bash
//! cargo run --release --example verify_inequalities -- 42 1000
//! ```

use rearrange::cli::summary_table;
use rearrange::verify::{run_suite, SUITES};

fn main() {
    let mut args = std::env::args().skip(1);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(42);
    let trials = args.next().and_then(|s| s.parse().ok()).unwrap_or(200);

    let reports: Vec<_> = SUITES
        .iter()
        .flat_map(|name| run_suite(name, seed, trials).expect("known suite"))
        .collect();
    print!("{}", summary_table(&reports));
    for r in &reports {
        if !r.notes.is_empty() {
            print!("{r}");
        }
    }
}
