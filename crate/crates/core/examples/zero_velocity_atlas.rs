//! Sweep zero-velocity problems over a (T_l, T_r) grid and count the
//! distinct wave patterns, then map the six regions around a zero left state.
//!
//! ```bash
//! cargo run --release --example zero_velocity_atlas
//! ```

use std::collections::BTreeMap;

use elastic_riemann::atlas::{distinct_regions, phase_plane_atlas, zero_velocity_atlas};
use elastic_riemann::{solve_zero_velocity, Material, State};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = Material::preset("cubic")?;
    let rows = zero_velocity_atlas(&m, (-2.0, 2.0), (-3.0, 3.0), 81)?;

    let mut counts = BTreeMap::new();
    for r in &rows {
        if let Some(case) = r.case_label {
            *counts.entry(case).or_insert(0usize) += 1;
        }
    }
    println!("{} problems, {} distinct cases", rows.len(), counts.len());
    for (case, n) in &counts {
        let sample = rows.iter().find(|r| r.case_label == Some(*case)).unwrap();
        let pattern = solve_zero_velocity(&m, sample.t_l, sample.t_r)?;
        println!("  {:<5} {:>5} points  region {:<4} e.g. T_l={:+.2} T_r={:+.3}: {}", case.to_string(), n, case.region(), sample.t_l, sample.t_r, pattern.composition());
    }

    let plane = phase_plane_atlas(&m, State::new(0.0, 0.0), (-3.0, 3.0), (-4.0, 4.0), 81)?;
    let regions = distinct_regions(plane.iter().map(|r| r.region_label));
    println!("regions around U_l = (0, 0): {}", regions.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(" "));
    Ok(())
}
