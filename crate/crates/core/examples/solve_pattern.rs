//! Solve one Riemann problem and print its wave pattern.
//!
//! ```bash
//! cargo run --example solve_pattern
//! cargo run --example solve_pattern -- -1 0 2 0
//! ```

use elastic_riemann::{solve, Material, State, WaveKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<f64> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let [t_l, v_l, t_r, v_r] = match args.as_slice() {
        [] => [-1.0, 0.0, 2.0, 0.0],
        &[a, b, c, d] => [a, b, c, d],
        _ => return Err("expected four numbers: T_l v_l T_r v_r".into()),
    };

    let m = Material::preset("cubic")?;
    let pattern = solve(&m, State::new(t_l, v_l), State::new(t_r, v_r))?;

    println!("region {}  pattern {}", pattern.region_label, pattern.composition());
    for w in &pattern.waves {
        let kind = match w.kind {
            WaveKind::Shock if w.degenerate => "degenerate shock",
            WaveKind::Shock => "shock",
            WaveKind::Rarefaction => "rarefaction",
        };
        println!(
            "  {:<8} {:<17} xi in [{:+.6}, {:+.6}]  ({:+.6}, {:+.6}) -> ({:+.6}, {:+.6})",
            w.family.as_str(),
            kind,
            w.speed_head,
            w.speed_tail,
            w.left.t,
            w.left.v,
            w.right.t,
            w.right.v
        );
    }
    Ok(())
}
