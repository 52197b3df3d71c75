//! Evaluation of a solved pattern as a function of the similarity variable
//! `xi = x / t`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::material::Material;
use crate::riemann::{Wave, WavePattern};
use crate::roots;
use crate::wave_curves::{State, WaveKind};

/// States on an increasing grid of similarity coordinates.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Profile {
    pub xi_grid: Vec<f64>,
    pub states: Vec<State>,
}

impl Profile {
    pub fn len(&self) -> usize {
        self.xi_grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xi_grid.is_empty()
    }
}

/// State at similarity coordinate `xi`. At a shock the right limit is returned.
pub fn sample(pattern: &WavePattern, xi: f64) -> State {
    for wave in &pattern.waves {
        if xi < wave.speed_head {
            return wave.left;
        }
        if wave.kind == WaveKind::Rarefaction && xi < wave.speed_tail {
            return invert_fan(&pattern.material, wave, xi);
        }
    }
    pattern.right_state
}

/// State inside a fan whose characteristic speed equals `xi`.
pub(crate) fn invert_fan(m: &Material, wave: &Wave, xi: f64) -> State {
    let family = wave.family;
    let (a, b) = (wave.left.t, wave.right.t);
    let f = |t: f64| m.lambda(t, family) - xi;
    let (f_a, f_b) = (f(a), f(b));
    if f_a >= 0.0 {
        return wave.left;
    }
    if f_b <= 0.0 {
        return wave.right;
    }
    let bracket = roots::bisect(f, a, b, f_a, f_b);
    let dlambda = |t: f64| {
        let k = m.rho() * m.strain_prime(t);
        -0.5 * family.sign() * m.rho() * m.strain_second(t) / (k * k.sqrt())
    };
    let (t, _) = bracket.newton_polish(f, dlambda);
    let v = wave.left.v - family.sign() * m.rarefaction_integral(a, t);
    State::new(t, v)
}

/// Wave-edge speeds (head and tail of every wave), increasing.
pub fn wave_edges(pattern: &WavePattern) -> Vec<f64> {
    let mut edges: Vec<f64> = pattern.waves.iter().flat_map(|w| [w.speed_head, w.speed_tail]).collect();
    edges.sort_by(f64::total_cmp);
    edges.dedup();
    edges
}

/// Samples `count` uniform points of `[xi_min, xi_max]` together with every
/// wave edge inside the range.
pub fn profile(pattern: &WavePattern, xi_min: f64, xi_max: f64, count: usize) -> Result<Profile> {
    if !(xi_min < xi_max) || !xi_min.is_finite() || !xi_max.is_finite() {
        return Err(Error::InvalidArgument(format!("need finite xi_min < xi_max, got [{xi_min}, {xi_max}]")));
    }
    if count < 2 {
        return Err(Error::InvalidArgument(format!("need at least 2 grid points, got {count}")));
    }
    let step = (xi_max - xi_min) / (count - 1) as f64;
    let mut grid: Vec<f64> = (0..count)
        .map(|k| if k + 1 == count { xi_max } else { xi_min + step * k as f64 })
        .collect();
    grid.extend(wave_edges(pattern).into_iter().filter(|&e| e > xi_min && e < xi_max));
    grid.sort_by(f64::total_cmp);
    grid.dedup();
    Ok(profile_on_grid(pattern, &grid))
}

/// Samples the pattern at the given coordinates.
pub fn profile_on_grid(pattern: &WavePattern, grid: &[f64]) -> Profile {
    Profile {
        xi_grid: grid.to_vec(),
        states: grid.iter().map(|&xi| sample(pattern, xi)).collect(),
    }
}
