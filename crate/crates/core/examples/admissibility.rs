//! Check the jump conditions and entropy admissibility of every shock in a
//! solution, and show that an inadmissible jump is caught.
//!
//! ```bash
//! cargo run --example admissibility
//! ```

use elastic_riemann::verify::{check_dissipation, check_lax, check_liu, check_rh};
use elastic_riemann::{solve, Family, Material, State, Wave, WaveKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = Material::preset("cubic")?;
    let mut pattern = solve(&m, State::new(-1.0, 0.0), State::new(2.0, 0.0))?;
    println!("pattern {}", pattern.composition());
    println!("max RH residual {:.3e}", check_rh(&pattern));
    println!("min dissipation slack {:.6}", check_dissipation(&pattern).min_slack);
    for w in pattern.shocks() {
        println!(
            "  {} shock s={:+.6}: lax {:?}, liu margin {:.3e}, driving force {:+.6}",
            w.family.as_str(),
            w.speed_head,
            check_lax(&m, w),
            check_liu(&m, w, 64),
            m.driving_force(w.left.t, w.right.t)
        );
    }

    // one backward shock straight from T = -1 to T = 2 satisfies the jump
    // conditions but dissipates negatively
    let s = m.shock_speed(-1.0, 2.0, Family::Backward);
    pattern.waves = vec![Wave {
        kind: WaveKind::Shock,
        family: Family::Backward,
        left: pattern.left_state,
        right: State::new(2.0, m.jump_velocity(-1.0, 2.0)),
        speed_head: s,
        speed_tail: s,
        degenerate: false,
    }];
    println!("single jump: RH residual {:.3e}, dissipation slack {:.6}", check_rh(&pattern), check_dissipation(&pattern).min_slack);
    Ok(())
}
