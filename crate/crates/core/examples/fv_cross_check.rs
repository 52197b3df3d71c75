//! Compare the exact solution with a first-order finite-volume computation
//! under grid refinement.
//!
//! ```bash
//! cargo run --release --example fv_cross_check
//! ```

use elastic_riemann::verify::refinement_study;
use elastic_riemann::verify::suite::canonical_cases;
use elastic_riemann::{solve, Material, State};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cells = [200, 400, 800, 1600];
    let linear = Material::preset("linear")?;
    let mut cases: Vec<_> = canonical_cases().into_iter().collect();
    cases.push(("linear", linear, State::new(-1.0, 0.0), State::new(-2.0, 0.0)));
    println!("{:<9} {:<12} {}", "case", "pattern", cells.map(|c| format!("{c:>8}")).join(""));
    for (name, m, left, right) in cases {
        let pattern = solve(&m, left, right)?;
        let errors = refinement_study(&pattern, &cells, 0.45, 0.5)?;
        println!("{name:<9} {:<12} {}", pattern.composition(), errors.iter().map(|e| format!("{e:>8.4}")).collect::<String>());
    }
    Ok(())
}
