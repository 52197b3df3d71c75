//! Threshold stresses separating the zero-velocity cases.
//!
//! ```bash
//! cargo run --example thresholds
//! ```

use elastic_riemann::{thresholds, Material};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for name in ["cubic", "paper-like"] {
        let m = Material::preset(name)?;
        println!("{name}");
        println!("  {:>6} {:>12} {:>12} {:>12}", "T_l", "tangent", "T_star", "T_star_star");
        for t_l in [-2.0, -1.0, -0.5, 0.5, 1.0, 2.0] {
            let th = thresholds(&m, t_l)?;
            println!("  {:>6.2} {:>12.8} {:>12.8} {:>12.8}", t_l, th.tangent, th.t_star, th.t_star_star);
        }
    }
    Ok(())
}
