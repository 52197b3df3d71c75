//! Independent checks of solved patterns: jump conditions, entropy
//! admissibility, and a finite-volume reference solution.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::material::{Family, Material};
use crate::riemann::{Wave, WavePattern};
use crate::sampler::Profile;
use crate::wave_curves::{State, WaveKind};

pub mod suite;

/// Largest normalized Rankine–Hugoniot residual over the shocks of a pattern:
/// `|s rho [v] + [T]| / max(1, |T|)` and `|s [eps] + [v]| / max(1, |v|)`.
/// Zero for shock-free patterns.
pub fn check_rh(pattern: &WavePattern) -> f64 {
    pattern.shocks().map(|w| rh_residual(&pattern.material, w)).fold(0.0, f64::max)
}

pub fn rh_residual(m: &Material, w: &Wave) -> f64 {
    let (a, b) = (w.left, w.right);
    let s = w.speed_head;
    let momentum = (s * m.rho() * (b.v - a.v) + (b.t - a.t)).abs() / 1f64.max(a.t.abs()).max(b.t.abs());
    let kinematic = (s * (m.strain(b.t) - m.strain(a.t)) + (b.v - a.v)).abs() / 1f64.max(a.v.abs()).max(b.v.abs());
    momentum.max(kinematic)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Dissipation {
    /// Minimum of `s (T_r - T_l)(T_r + T_l)` over shocks; `+inf` without shocks.
    pub min_slack: f64,
    /// Shocks where `f s` (driving force times speed) disagrees in sign.
    pub sign_mismatches: usize,
}

/// Dissipation inequality at every stress discontinuity. Contacts of the
/// linear material carry no driving force and are skipped.
pub fn check_dissipation(pattern: &WavePattern) -> Dissipation {
    let m = &pattern.material;
    let mut report = Dissipation { min_slack: f64::INFINITY, sign_mismatches: 0 };
    if m.is_linear() {
        return report;
    }
    for w in pattern.shocks() {
        let (t_l, t_r) = (w.left.t, w.right.t);
        let s = w.speed_head;
        let slack = s * (t_r - t_l) * (t_r + t_l);
        let rate = m.driving_force(t_l, t_r) * s;
        report.min_slack = report.min_slack.min(slack);
        if slack.abs() > 1e-12 && rate.abs() > 1e-12 && slack.signum() != rate.signum() {
            report.sign_mismatches += 1;
        }
    }
    report
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LaxStatus {
    /// `lambda(left) > s > lambda(right)`.
    Strict,
    /// `s = lambda(left)`.
    DegenerateLeft,
    /// `s = lambda(right)`.
    DegenerateRight,
    /// `s` equals both characteristic speeds.
    Contact,
    Violated,
    NotAShock,
}

/// Lax inequalities `lambda(left) >= s >= lambda(right)` within `1e-12`.
pub fn check_lax(m: &Material, w: &Wave) -> LaxStatus {
    if w.kind != WaveKind::Shock {
        return LaxStatus::NotAShock;
    }
    let s = w.speed_head;
    let tol = 1e-12 * s.abs().max(1.0);
    let before = m.lambda(w.left.t, w.family) - s;
    let after = s - m.lambda(w.right.t, w.family);
    if before < -tol || after < -tol {
        return LaxStatus::Violated;
    }
    match (before <= tol, after <= tol) {
        (true, true) => LaxStatus::Contact,
        (true, false) => LaxStatus::DegenerateLeft,
        (false, true) => LaxStatus::DegenerateRight,
        (false, false) => LaxStatus::Strict,
    }
}

/// Liu margin: minimum over `samples` stresses strictly between the end
/// states of `s(U_l, U) - s(U_l, U_r)`. `+inf` for rarefactions and contacts.
pub fn check_liu(m: &Material, w: &Wave, samples: usize) -> f64 {
    if w.kind != WaveKind::Shock || m.is_linear() {
        return f64::INFINITY;
    }
    let (a, b) = (w.left.t, w.right.t);
    let s = m.shock_speed(a, b, w.family);
    (1..=samples)
        .map(|k| {
            let t = a + (b - a) * k as f64 / (samples + 1) as f64;
            m.shock_speed(a, t, w.family) - s
        })
        .fold(f64::INFINITY, f64::min)
}

/// Finite-volume solution at `t_end` on cell centers.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FvSolution {
    pub t_end: f64,
    pub x: Vec<f64>,
    pub states: Vec<State>,
    /// Largest per-step imbalance of the discrete integrals of `eps` and
    /// `rho v` against the boundary fluxes.
    pub conservation_defect: [f64; 2],
    pub steps: usize,
}

impl FvSolution {
    /// The solution as a function of `xi = x / t_end`.
    pub fn to_profile(&self) -> Profile {
        Profile {
            xi_grid: self.x.iter().map(|x| x / self.t_end).collect(),
            states: self.states.clone(),
        }
    }
}

/// Largest characteristic speed over the stresses between `t_a` and `t_b`.
fn hull_speed(m: &Material, t_a: f64, t_b: f64) -> f64 {
    let (lo, hi) = (t_a.min(t_b), t_a.max(t_b));
    // eps' is smallest at the stress of least magnitude
    let t = if lo <= 0.0 && hi >= 0.0 { 0.0 } else { lo.abs().min(hi.abs()) };
    m.lambda(t, Family::Forward)
}

/// Global Lax–Friedrichs (Rusanov flux with one speed for the whole run)
/// solution of `eps_t - v_x = 0`, `(rho v)_t - T_x = 0` on `[-L, L]`,
/// `L = 1.2 t_end a`, with outflow boundaries.
pub fn fv_evolve(m: &Material, left: State, right: State, cells: usize, cfl: f64, t_end: f64) -> Result<FvSolution> {
    if cells < 50 {
        return Err(Error::InvalidArgument(format!("need at least 50 cells, got {cells}")));
    }
    if !(cfl > 0.0 && cfl <= 0.9) {
        return Err(Error::InvalidArgument(format!("cfl must lie in (0, 0.9], got {cfl}")));
    }
    if !(t_end > 0.0 && t_end.is_finite()) {
        return Err(Error::InvalidArgument(format!("t_end must be positive, got {t_end}")));
    }
    if !left.is_finite() || !right.is_finite() {
        return Err(Error::NonFiniteData);
    }
    let rho = m.rho();
    let a = hull_speed(m, left.t, right.t);
    let half = 1.2 * t_end * a;
    let dx = 2.0 * half / cells as f64;
    let x: Vec<f64> = (0..cells).map(|i| -half + (i as f64 + 0.5) * dx).collect();

    let mut eps: Vec<f64> = x.iter().map(|&xi| m.strain(if xi < 0.0 { left.t } else { right.t })).collect();
    let mut q: Vec<f64> = x.iter().map(|&xi| rho * if xi < 0.0 { left.v } else { right.v }).collect();
    let mut stress: Vec<f64> = x.iter().map(|&xi| if xi < 0.0 { left.t } else { right.t }).collect();

    let mut flux_eps = vec![0.0; cells + 1];
    let mut flux_q = vec![0.0; cells + 1];
    let mut defect = [0.0f64; 2];
    let mut time = 0.0;
    let mut steps = 0;
    while time < t_end {
        let dt = (cfl * dx / a).min(t_end - time);
        for face in 0..=cells {
            // outflow ghosts copy the boundary cells
            let il = face.saturating_sub(1);
            let ir = face.min(cells - 1);
            let (e_l, q_l, t_l) = (eps[il], q[il], stress[il]);
            let (e_r, q_r, t_r) = (eps[ir], q[ir], stress[ir]);
            flux_eps[face] = -0.5 * (q_l + q_r) / rho - 0.5 * a * (e_r - e_l);
            flux_q[face] = -0.5 * (t_l + t_r) - 0.5 * a * (q_r - q_l);
        }
        let ratio = dt / dx;
        let totals_before = (eps.iter().sum::<f64>(), q.iter().sum::<f64>());
        for i in 0..cells {
            eps[i] -= ratio * (flux_eps[i + 1] - flux_eps[i]);
            q[i] -= ratio * (flux_q[i + 1] - flux_q[i]);
        }
        let totals_after = (eps.iter().sum::<f64>(), q.iter().sum::<f64>());
        defect[0] = defect[0].max(
            ((totals_after.0 - totals_before.0) * dx + dt * (flux_eps[cells] - flux_eps[0])).abs(),
        );
        defect[1] = defect[1].max(((totals_after.1 - totals_before.1) * dx + dt * (flux_q[cells] - flux_q[0])).abs());
        for i in 0..cells {
            stress[i] = m.invert_strain_near(eps[i], Some(stress[i]));
        }
        time = if t_end - time <= dt { t_end } else { time + dt };
        steps += 1;
        let fastest = stress.iter().map(|&t| m.lambda(t, Family::Forward)).fold(0.0, f64::max);
        if fastest > a * (1.0 + 1e-9) {
            return Err(Error::CflViolation { speed: fastest, bound: a, time });
        }
    }
    let states = stress.iter().zip(&q).map(|(&t, &qi)| State::new(t, qi / rho)).collect();
    Ok(FvSolution { t_end, x, states, conservation_defect: defect, steps })
}

/// [`fv_evolve`] as a similarity profile.
pub fn fv_reference(m: &Material, left: State, right: State, cells: usize, cfl: f64, t_end: f64) -> Result<Profile> {
    Ok(fv_evolve(m, left, right, cells, cfl, t_end)?.to_profile())
}

/// Trapezoidal L1 distance of `|(ΔT, Δv)|` over the common range, with both
/// profiles interpolated linearly onto the union of their grids.
pub fn l1_distance(a: &Profile, b: &Profile) -> f64 {
    if a.is_empty() || b.is_empty() {
        return 0.0;
    }
    let lo = a.xi_grid[0].max(b.xi_grid[0]);
    let hi = a.xi_grid[a.len() - 1].min(b.xi_grid[b.len() - 1]);
    if !(lo < hi) {
        return 0.0;
    }
    let mut grid: Vec<f64> = a.xi_grid.iter().chain(&b.xi_grid).copied().filter(|&x| x >= lo && x <= hi).collect();
    grid.push(lo);
    grid.push(hi);
    grid.sort_by(f64::total_cmp);
    grid.dedup();
    let gap = |x: f64| {
        let (p, q) = (interpolate(a, x), interpolate(b, x));
        (p.t - q.t).hypot(p.v - q.v)
    };
    let values: Vec<f64> = grid.iter().map(|&x| gap(x)).collect();
    grid.windows(2).zip(values.windows(2)).map(|(x, g)| 0.5 * (x[1] - x[0]) * (g[0] + g[1])).sum()
}

/// L1 distance between [`fv_reference`] and the exact pattern sampled on the
/// same grid, for each cell count.
pub fn refinement_study(pattern: &WavePattern, cells: &[usize], cfl: f64, t_end: f64) -> Result<Vec<f64>> {
    cells
        .iter()
        .map(|&n| {
            let fv = fv_reference(&pattern.material, pattern.left_state, pattern.right_state, n, cfl, t_end)?;
            let exact = crate::sampler::profile_on_grid(pattern, &fv.xi_grid);
            Ok(l1_distance(&fv, &exact))
        })
        .collect()
}

/// Largest deviation between `mirrored` (the solution of the reflected
/// problem `(T_r, -v_r) | (T_l, -v_l)`) and the reflection of `pattern`:
/// waves in reverse order with families swapped, velocities and speeds
/// negated. `+inf` when the wave structure differs.
pub fn mirror_deviation(pattern: &WavePattern, mirrored: &WavePattern) -> f64 {
    if pattern.waves.len() != mirrored.waves.len() {
        return f64::INFINITY;
    }
    let reflect = |s: State| State::new(s.t, -s.v);
    let gap = |a: State, b: State| (a.t - b.t).abs().max((a.v - b.v).abs());
    let mut worst = 0.0f64;
    for (w, r) in pattern.waves.iter().rev().zip(&mirrored.waves) {
        if w.kind != r.kind || w.family != r.family.other() {
            return f64::INFINITY;
        }
        worst = worst
            .max(gap(reflect(w.right), r.left))
            .max(gap(reflect(w.left), r.right))
            .max((w.speed_tail + r.speed_head).abs())
            .max((w.speed_head + r.speed_tail).abs());
    }
    worst
}

fn interpolate(p: &Profile, x: f64) -> State {
    let k = p.xi_grid.partition_point(|&g| g <= x);
    if k == 0 {
        return p.states[0];
    }
    if k == p.len() {
        return p.states[k - 1];
    }
    let (x0, x1) = (p.xi_grid[k - 1], p.xi_grid[k]);
    if x == x0 {
        return p.states[k - 1];
    }
    let w = (x - x0) / (x1 - x0);
    let (s0, s1) = (p.states[k - 1], p.states[k]);
    State::new(s0.t + w * (s1.t - s0.t), s0.v + w * (s1.v - s0.v))
}
