//! With gamma = 0 every wave is a contact travelling at the linear sound
//! speed; compare the solver with the closed-form middle state.
//!
//! ```bash
//! cargo run --example linear_material
//! ```

use elastic_riemann::{solve, Material, State};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = Material::linear(1.5, -0.5, 1.0, 1.0)?;
    let (left, right) = (State::new(1.0, 0.3), State::new(-0.4, -1.2));
    let pattern = solve(&m, left, right)?;
    let z = ((m.alpha() + m.beta()) / m.rho()).sqrt();
    let expected = State::new(
        0.5 * (right.t + left.t) + 0.5 * (right.v - left.v) / z,
        0.5 * (right.v + left.v) + 0.5 * z * (right.t - left.t),
    );
    println!("middle state {:?}", pattern.middle_states[0]);
    println!("closed form  {expected:?}");
    println!("speeds {:?}", pattern.waves.iter().map(|w| w.speed_head).collect::<Vec<_>>());
    Ok(())
}
