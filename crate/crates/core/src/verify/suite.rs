//! Randomized invariant suite over solved Riemann problems.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{check_dissipation, check_lax, check_liu, check_rh, mirror_deviation, refinement_study, LaxStatus};
use crate::error::Result;
use crate::material::{Family, Material};
use crate::riemann::{solve, WavePattern};
use crate::sampler::sample;
use crate::wave_curves::{curve_v, State, TangentMemo};

pub const RH_TOL: f64 = 1e-9;
pub const SLACK_TOL: f64 = -1e-12;
pub const LIU_TOL: f64 = -1e-10;
pub const LIU_SAMPLES: usize = 64;
pub const ORDER_TOL: f64 = 1e-12;
pub const MIRROR_TOL: f64 = 1e-10;
pub const CONTINUITY_STEP: f64 = 1e-6;
/// Bound on `L_inf` profile change per unit step across a dividing curve.
pub const CONTINUITY_GAIN: f64 = 1e2;
pub const REFINEMENT_CELLS: [usize; 4] = [200, 400, 800, 1600];
pub const REFINEMENT_CFL: f64 = 0.45;
pub const REFINEMENT_T_END: f64 = 0.5;
pub const REFINEMENT_L1_TARGET: f64 = 0.05;

/// Random admissible material: one of the presets or random constants with
/// `alpha in [0.5, 3]`, `beta = -u alpha` with `u in [0.05, 0.9]`,
/// `gamma in [0.25, 3]`, `n in [0.5, 3]`, `rho in [0.5, 2]`.
pub fn random_material<R: Rng>(rng: &mut R) -> Material {
    match rng.gen_range(0..10) {
        0 => Material::preset("cubic").unwrap(),
        1 => Material::preset("paper-like").unwrap(),
        2 => Material::preset("linear").unwrap(),
        _ => {
            let alpha = rng.gen_range(0.5..3.0);
            let beta = -alpha * rng.gen_range(0.05..0.9);
            let gamma = rng.gen_range(0.25..3.0);
            let n = rng.gen_range(0.5..3.0);
            let rho = rng.gen_range(0.5..2.0);
            Material::new(alpha, beta, gamma, n, rho).expect("sampled constants are admissible")
        }
    }
}

/// Random Riemann data: stresses in `[-3, 3]`, velocities in `[-5, 5]`.
pub fn random_states<R: Rng>(rng: &mut R) -> (State, State) {
    let mut state = || State::new(rng.gen_range(-3.0..3.0), rng.gen_range(-5.0..5.0));
    (state(), state())
}

/// `L_inf` change of the sampled solution when the right state moves from
/// `v_on - step` to `v_on + step` across the dividing curve through
/// `(t_r, v_on)`. Grid points within `1e-5` of a shock are skipped.
pub fn continuity_jump(m: &Material, left: State, t_r: f64, v_on: f64, step: f64) -> Result<f64> {
    let below = solve(m, left, State::new(t_r, v_on - step))?;
    let above = solve(m, left, State::new(t_r, v_on + step))?;
    let shocks: Vec<f64> = below.shocks().chain(above.shocks()).map(|w| w.speed_head).collect();
    let reach = m.max_char_speed() * 1.1;
    let mut worst = 0.0f64;
    for k in 0..=400 {
        let xi = -reach + 2.0 * reach * k as f64 / 400.0;
        if shocks.iter().any(|s| (s - xi).abs() < 1e-5) {
            continue;
        }
        let (a, b) = (sample(&below, xi), sample(&above, xi));
        worst = worst.max((a.t - b.t).abs()).max((a.v - b.v).abs());
    }
    Ok(worst)
}

/// Velocities of the dividing curves through stress `t_r` for the left state.
pub fn dividing_curve_velocities(m: &Material, left: State, t_r: f64) -> Result<Vec<f64>> {
    let memo = TangentMemo::new(m);
    let mut vs = vec![
        curve_v(m, &memo, Family::Backward, left, t_r)?,
        curve_v(m, &memo, Family::Forward, left, t_r)?,
    ];
    if !m.is_linear() && left.t != 0.0 {
        for anchor in [0.0, memo.get(left.t)?] {
            let joint = State::new(anchor, curve_v(m, &memo, Family::Backward, left, anchor)?);
            vs.push(curve_v(m, &memo, Family::Forward, joint, t_r)?);
        }
    }
    Ok(vs)
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub seed: u64,
    pub trials: usize,
    /// Add `1e-3` to every shock speed before checking.
    pub corrupt_speed: bool,
    pub refinement: bool,
    /// Use this material for every trial instead of a random mix.
    pub material: Option<Material>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 0, trials: 200, corrupt_speed: false, refinement: true, material: None }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertyResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub trials: usize,
    pub properties: Vec<PropertyResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(|p| p.passed)
    }

    pub fn first_failure(&self) -> Option<&PropertyResult> {
        self.properties.iter().find(|p| !p.passed)
    }
}

/// Running extremum of a per-problem metric.
struct Tally {
    name: &'static str,
    worst: f64,
    failures: usize,
    maximize: bool,
}

impl Tally {
    fn max(name: &'static str) -> Self {
        Tally { name, worst: 0.0, failures: 0, maximize: true }
    }

    fn min(name: &'static str) -> Self {
        Tally { name, worst: f64::INFINITY, failures: 0, maximize: false }
    }

    fn record(&mut self, value: f64, ok: bool) {
        self.worst = if self.maximize { self.worst.max(value) } else { self.worst.min(value) };
        if !ok {
            self.failures += 1;
        }
    }

    fn finish(self, bound: &str) -> PropertyResult {
        PropertyResult {
            name: self.name,
            passed: self.failures == 0,
            detail: format!("worst {:.3e} (bound {bound}), {} failing", self.worst, self.failures),
        }
    }
}

fn corrupt(pattern: &mut WavePattern) {
    for w in pattern.waves.iter_mut().filter(|w| w.is_shock()) {
        w.speed_head += 1e-3;
        w.speed_tail += 1e-3;
    }
}

pub fn run(config: &SuiteConfig) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut solved = Tally::max("solve");
    let mut rh = Tally::max("rankine-hugoniot");
    let mut dissipation = Tally::min("dissipation");
    let mut lax = Tally::max("lax");
    let mut liu = Tally::min("liu");
    let mut order = Tally::max("speed-order");
    let mut mirror = Tally::max("mirror-symmetry");
    let mut continuity = Tally::max("continuity");

    for _ in 0..config.trials {
        let drawn = random_material(&mut rng);
        let m = config.material.unwrap_or(drawn);
        let (left, right) = random_states(&mut rng);
        let (mut pattern, reflected) = match (
            solve(&m, left, right),
            solve(&m, State::new(right.t, -right.v), State::new(left.t, -left.v)),
        ) {
            (Ok(p), Ok(q)) => (p, q),
            _ => {
                solved.record(1.0, false);
                continue;
            }
        };
        if config.corrupt_speed {
            corrupt(&mut pattern);
        }
        let r = check_rh(&pattern);
        rh.record(r, r < RH_TOL);
        let d = check_dissipation(&pattern);
        dissipation.record(d.min_slack, d.min_slack >= SLACK_TOL && d.sign_mismatches == 0);
        let bad_lax = pattern
            .shocks()
            .filter(|w| {
                let status = check_lax(&m, w);
                status == LaxStatus::Violated || (!w.degenerate && status != LaxStatus::Strict)
            })
            .count();
        lax.record(bad_lax as f64, bad_lax == 0);
        let margin = pattern.shocks().map(|w| check_liu(&m, w, LIU_SAMPLES)).fold(f64::INFINITY, f64::min);
        liu.record(margin, margin >= LIU_TOL);
        let overlap = pattern
            .waves
            .windows(2)
            .map(|w| w[0].speed_tail - w[1].speed_head)
            .chain(pattern.waves.iter().map(|w| w.speed_head - w.speed_tail))
            .fold(0.0, f64::max);
        order.record(overlap, overlap <= ORDER_TOL);
        let dev = mirror_deviation(&pattern, &reflected);
        mirror.record(dev, dev <= MIRROR_TOL);

        let t_r = rng.gen_range(-3.0..3.0);
        let jump = dividing_curve_velocities(&m, left, t_r).and_then(|vs| {
            let v_on = vs[rng.gen_range(0..vs.len())];
            continuity_jump(&m, left, t_r, v_on, CONTINUITY_STEP)
        });
        match jump {
            Ok(j) => continuity.record(j / (2.0 * CONTINUITY_STEP), j <= CONTINUITY_GAIN * 2.0 * CONTINUITY_STEP),
            Err(_) => continuity.record(f64::INFINITY, false),
        }
    }

    let mut properties = vec![
        solved.finish("no errors"),
        rh.finish(&format!("< {RH_TOL:e}")),
        dissipation.finish(&format!(">= {SLACK_TOL:e}")),
        lax.finish("0 violations"),
        liu.finish(&format!(">= {LIU_TOL:e}")),
        order.finish(&format!("<= {ORDER_TOL:e}")),
        mirror.finish(&format!("<= {MIRROR_TOL:e}")),
        continuity.finish(&format!("gain <= {CONTINUITY_GAIN:e}")),
    ];
    if config.refinement {
        properties.push(refinement());
    }
    SuiteReport { seed: config.seed, trials: config.trials, properties }
}

/// Zero-velocity data on the cubic preset for three of the twelve cases.
pub fn canonical_cases() -> [(&'static str, Material, State, State); 3] {
    let m = Material::preset("cubic").unwrap();
    let at = |t: f64| State::new(t, 0.0);
    [
        ("case I", m, at(-1.0), at(-2.0)),
        ("case IV", m, at(-1.0), at(1.2)),
        ("case V", m, at(-1.0), at(2.0)),
    ]
}

fn refinement() -> PropertyResult {
    let mut passed = true;
    let mut notes = Vec::new();
    for (name, m, left, right) in canonical_cases() {
        match solve(&m, left, right).and_then(|p| {
            refinement_study(&p, &REFINEMENT_CELLS, REFINEMENT_CFL, REFINEMENT_T_END)
        }) {
            Ok(errors) => {
                let monotone = errors.windows(2).all(|w| w[1] < w[0]);
                passed &= monotone;
                let finest = errors[errors.len() - 1];
                let flag = if finest < REFINEMENT_L1_TARGET { "" } else { " above target" };
                notes.push(format!(
                    "{name}: {}{}{flag}",
                    errors.iter().map(|e| format!("{e:.4}")).collect::<Vec<_>>().join(" "),
                    if monotone { "" } else { " not decreasing" },
                ));
            }
            Err(e) => {
                passed = false;
                notes.push(format!("{name}: {e}"));
            }
        }
    }
    PropertyResult { name: "fv-refinement", passed, detail: notes.join("; ") }
}
