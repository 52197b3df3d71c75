//! Grid sweeps labelling many Riemann problems at once.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::material::Material;
use crate::riemann::{solve, solve_zero_velocity, RegionLabel, ZeroVelocityCase};
use crate::wave_curves::State;

/// `count` equally spaced points from `lo` to `hi` inclusive.
pub fn linspace(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..count)
            .map(|k| if k + 1 == count { hi } else { lo + (hi - lo) * k as f64 / (count - 1) as f64 })
            .collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AtlasRow {
    #[serde(rename = "T_l")]
    pub t_l: f64,
    #[serde(rename = "T_r")]
    pub t_r: f64,
    pub case_label: Option<ZeroVelocityCase>,
    pub region_label: RegionLabel,
}

/// Labels every zero-velocity problem `(T_l, 0) | (T_r, 0)` on the
/// `resolution x resolution` grid, row-major in `T_l`. Diagonal points
/// `T_l = T_r` are omitted.
pub fn zero_velocity_atlas(
    m: &Material,
    t_l_range: (f64, f64),
    t_r_range: (f64, f64),
    resolution: usize,
) -> Result<Vec<AtlasRow>> {
    if resolution < 2 {
        return Err(Error::InvalidArgument(format!("resolution must be at least 2, got {resolution}")));
    }
    let t_ls = linspace(t_l_range.0, t_l_range.1, resolution);
    let t_rs = linspace(t_r_range.0, t_r_range.1, resolution);
    let points: Vec<(f64, f64)> = t_ls
        .iter()
        .flat_map(|&l| t_rs.iter().map(move |&r| (l, r)))
        .filter(|(l, r)| l != r)
        .collect();
    points
        .par_iter()
        .map(|&(t_l, t_r)| {
            let p = solve_zero_velocity(m, t_l, t_r)?;
            Ok(AtlasRow { t_l, t_r, case_label: p.zero_velocity_case, region_label: p.region_label })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PlaneRow {
    #[serde(rename = "T_r")]
    pub t_r: f64,
    pub v_r: f64,
    pub region_label: RegionLabel,
}

/// Region of every right state on a `(T_r, v_r)` grid for a fixed left state.
pub fn phase_plane_atlas(
    m: &Material,
    left: State,
    t_r_range: (f64, f64),
    v_r_range: (f64, f64),
    resolution: usize,
) -> Result<Vec<PlaneRow>> {
    if resolution < 2 {
        return Err(Error::InvalidArgument(format!("resolution must be at least 2, got {resolution}")));
    }
    let t_rs = linspace(t_r_range.0, t_r_range.1, resolution);
    let v_rs = linspace(v_r_range.0, v_r_range.1, resolution);
    let points: Vec<State> = t_rs.iter().flat_map(|&t| v_rs.iter().map(move |&v| State::new(t, v))).collect();
    points
        .par_iter()
        .map(|&right| {
            let label = solve(m, left, right)?.region_label;
            Ok(PlaneRow { t_r: right.t, v_r: right.v, region_label: label })
        })
        .collect()
}

/// Distinct zero-velocity cases in a sweep, sorted.
pub fn distinct_cases(rows: &[AtlasRow]) -> Vec<ZeroVelocityCase> {
    let mut cases: Vec<_> = rows.iter().filter_map(|r| r.case_label).collect();
    cases.sort();
    cases.dedup();
    cases
}

/// Distinct region labels (boundaries excluded), sorted.
pub fn distinct_regions<I: IntoIterator<Item = RegionLabel>>(labels: I) -> Vec<RegionLabel> {
    let mut regions: Vec<_> = labels.into_iter().filter(|l| matches!(l, RegionLabel::Region(..))).collect();
    regions.sort();
    regions.dedup();
    regions
}
