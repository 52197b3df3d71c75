//! Driving force on a stress discontinuity: closed form against quadrature,
//! and its sign structure.
//!
//! ```bash
//! cargo run --example driving_force
//! ```

use elastic_riemann::Material;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = Material::preset("paper-like")?;
    let t_l = -1.0;
    println!("{:>6} {:>16} {:>16} {:>10}", "T_r", "closed form", "quadrature", "sign");
    for k in 0..=16 {
        let t_r = -2.0 + 0.25 * k as f64;
        let f = m.driving_force(t_l, t_r);
        let g = m.driving_force_integral(t_l, t_r);
        let sign = match f.partial_cmp(&0.0) {
            Some(std::cmp::Ordering::Greater) if f.abs() > 1e-12 => "+",
            Some(std::cmp::Ordering::Less) if f.abs() > 1e-12 => "-",
            _ => "0",
        };
        println!("{t_r:>6.2} {f:>16.10} {g:>16.10} {sign:>10}");
    }
    Ok(())
}
