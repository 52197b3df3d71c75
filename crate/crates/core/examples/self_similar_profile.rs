//! Sample a solution as a function of xi = x / t and write `xi,T,v` rows.
//!
//! ```bash
//! cargo run --example self_similar_profile > profile.csv
//! ```

use elastic_riemann::{profile, solve_zero_velocity, Material};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = Material::preset("paper-like")?;
    let pattern = solve_zero_velocity(&m, -1.0, 2.5)?;
    eprintln!("case {:?}, pattern {}", pattern.zero_velocity_case, pattern.composition());

    let reach = 1.2 * m.max_char_speed();
    let prof = profile(&pattern, -reach, reach, 241)?;
    println!("xi,T,v");
    for (xi, s) in prof.xi_grid.iter().zip(&prof.states) {
        println!("{xi:.10},{:.10},{:.10}", s.t, s.v);
    }
    Ok(())
}
