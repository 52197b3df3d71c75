//! Run the randomized invariant suite over mixed materials.
//!
//! ```bash
//! cargo run --release --example verify_suite -- 1000
//! ```

use elastic_riemann::verify::suite::{run, SuiteConfig};

fn main() {
    let trials = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(300);
    let report = run(&SuiteConfig { seed: 42, trials, refinement: false, ..SuiteConfig::default() });
    for p in &report.properties {
        println!("{:<18} {}  {}", p.name, if p.passed { "PASS" } else { "FAIL" }, p.detail);
    }
    std::process::exit(if report.passed() { 0 } else { 1 });
}
