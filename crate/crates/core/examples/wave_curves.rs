//! Tabulate the backward and forward wave curves through a state and show
//! how each point decomposes into elementary legs.
//!
//! ```bash
//! cargo run --example wave_curves
//! ```

use elastic_riemann::{backward_v, decompose_backward, decompose_forward, forward_v, Material, State, WaveKind};

fn legs(legs: &[elastic_riemann::CurveLeg]) -> String {
    legs.iter()
        .map(|l| match (l.kind, l.degenerate) {
            (WaveKind::Rarefaction, _) => format!("R[{:.3}->{:.3}]", l.start.t, l.end.t),
            (WaveKind::Shock, true) => format!("S*[{:.3}->{:.3}]", l.start.t, l.end.t),
            (WaveKind::Shock, false) => format!("S[{:.3}->{:.3}]", l.start.t, l.end.t),
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = Material::preset("cubic")?;
    let origin = State::new(-1.0, 0.0);
    println!("tangent point of T = {}: {}", origin.t, m.tangent_point(origin.t)?);
    println!("{:>6} {:>12} {:>12}  backward legs | forward legs", "T", "W1 v", "W2 v");
    for k in 0..=12 {
        let t = -3.0 + 0.5 * k as f64;
        println!(
            "{t:>6.2} {:>12.6} {:>12.6}  {} | {}",
            backward_v(&m, origin, t)?,
            forward_v(&m, origin, t)?,
            legs(&decompose_backward(&m, origin, t)?),
            legs(&decompose_forward(&m, origin, t)?)
        );
    }
    Ok(())
}
