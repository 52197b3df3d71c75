//! Backward and forward elementary wave curves issuing from a given state.
//!
//! Each curve is parameterized by the stress `T` of the state it reaches.
//! Backward curves (left state fixed, right state on the curve):
//!
//! * away from zero stress: rarefaction;
//! * towards (or across) zero stress up to the tangent point `T_2`/`T_3`:
//!   shock, degenerate at the tangent point itself;
//! * beyond the tangent point: degenerate shock to the tangent point
//!   followed by a rarefaction (composite wave).
//!
//! Forward curves (left state fixed, right state on the curve):
//!
//! * towards zero stress without crossing it: rarefaction;
//! * away from zero stress, or from zero stress itself: shock;
//! * across zero stress to `T`: let `c` be the tangent point of `T`. When the
//!   left stress lies beyond `c` the wave is a rarefaction to `c` followed by
//!   a shock from `c` to `T` travelling at `lambda_2(c)`; otherwise it is a
//!   single shock.
//!
//! Along a backward curve `v` increases with `T`; along a forward curve it
//! decreases.

use std::cell::RefCell;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::material::{Family, Material};

/// A point `(T, v)` of the stress/velocity phase plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct State {
    #[serde(rename = "T")]
    pub t: f64,
    pub v: f64,
}

impl State {
    pub fn new(t: f64, v: f64) -> Self {
        State { t, v }
    }

    pub fn is_finite(&self) -> bool {
        self.t.is_finite() && self.v.is_finite()
    }

    /// Image under the point symmetry `(T, v) -> (-T, -v)`.
    pub fn negated(&self) -> State {
        State { t: -self.t, v: -self.v }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WaveKind {
    Rarefaction,
    Shock,
}

impl WaveKind {
    pub fn as_str(self) -> &'static str {
        match self {
            WaveKind::Rarefaction => "rarefaction",
            WaveKind::Shock => "shock",
        }
    }
}

/// One elementary leg of a wave curve.
///
/// `degenerate` marks shocks whose speed equals the characteristic speed on
/// one side (tangent-point shocks) or on both sides (contact discontinuities
/// of the linear material).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurveLeg {
    pub kind: WaveKind,
    pub family: Family,
    pub start: State,
    pub end: State,
    pub degenerate: bool,
}

/// Stress-only description of a leg.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum Piece {
    Fan { from: f64, to: f64 },
    Jump { from: f64, to: f64, degenerate: bool },
}

impl Piece {
    /// Signed velocity increment measured along the backward orientation
    /// (forward curves use the negative).
    fn increment(&self, m: &Material) -> f64 {
        match *self {
            Piece::Fan { from, to } => m.rarefaction_integral(from, to),
            Piece::Jump { from, to, .. } => (to - from).signum() * m.jump_velocity(from, to),
        }
    }

    fn end(&self) -> f64 {
        match *self {
            Piece::Fan { to, .. } | Piece::Jump { to, .. } => to,
        }
    }
}

/// Memoized tangent points; the solver evaluates curves from the same few
/// anchor stresses many times.
pub(crate) struct TangentMemo<'m> {
    material: &'m Material,
    entries: RefCell<Vec<(f64, f64)>>,
}

impl<'m> TangentMemo<'m> {
    pub fn new(material: &'m Material) -> Self {
        TangentMemo { material, entries: RefCell::new(Vec::new()) }
    }

    pub fn get(&self, t: f64) -> Result<f64> {
        if let Some(&(_, tp)) = self.entries.borrow().iter().find(|(k, _)| *k == t) {
            return Ok(tp);
        }
        let tp = self.material.tangent_point(t)?;
        let mut entries = self.entries.borrow_mut();
        if entries.len() >= 16 {
            entries.remove(0);
        }
        entries.push((t, tp));
        Ok(tp)
    }
}

pub(crate) fn backward_pieces(m: &Material, memo: &TangentMemo, a: f64, b: f64) -> Result<Vec<Piece>> {
    if a == b {
        return Ok(Vec::new());
    }
    if m.is_linear() {
        return Ok(vec![Piece::Jump { from: a, to: b, degenerate: true }]);
    }
    if a == 0.0 || (b - a).signum() == a.signum() {
        return Ok(vec![Piece::Fan { from: a, to: b }]);
    }
    let tangent = memo.get(a)?;
    // the shock branch owns its closed endpoint at the tangent point
    if (tangent - b) * -a.signum() >= 0.0 {
        Ok(vec![Piece::Jump { from: a, to: b, degenerate: b == tangent }])
    } else {
        Ok(vec![
            Piece::Jump { from: a, to: tangent, degenerate: true },
            Piece::Fan { from: tangent, to: b },
        ])
    }
}

pub(crate) fn forward_pieces(m: &Material, memo: &TangentMemo, a: f64, b: f64) -> Result<Vec<Piece>> {
    if a == b {
        return Ok(Vec::new());
    }
    if m.is_linear() {
        return Ok(vec![Piece::Jump { from: a, to: b, degenerate: true }]);
    }
    if a == 0.0 {
        return Ok(vec![Piece::Jump { from: a, to: b, degenerate: false }]);
    }
    if b == 0.0 || b.signum() == a.signum() {
        return Ok(if b.abs() < a.abs() {
            vec![Piece::Fan { from: a, to: b }]
        } else {
            vec![Piece::Jump { from: a, to: b, degenerate: false }]
        });
    }
    let tangent = memo.get(b)?;
    if a.abs() > tangent.abs() {
        Ok(vec![
            Piece::Fan { from: a, to: tangent },
            Piece::Jump { from: tangent, to: b, degenerate: true },
        ])
    } else {
        Ok(vec![Piece::Jump { from: a, to: b, degenerate: a == tangent }])
    }
}

pub(crate) fn pieces(m: &Material, memo: &TangentMemo, family: Family, a: f64, b: f64) -> Result<Vec<Piece>> {
    match family {
        Family::Backward => backward_pieces(m, memo, a, b),
        Family::Forward => forward_pieces(m, memo, a, b),
    }
}

/// Velocity reached on the `family` curve from `origin` at stress `t`.
pub(crate) fn curve_v(m: &Material, memo: &TangentMemo, family: Family, origin: State, t: f64) -> Result<f64> {
    if !origin.is_finite() || !t.is_finite() {
        return Err(Error::NonFiniteData);
    }
    let orientation = -family.sign();
    let total: f64 = pieces(m, memo, family, origin.t, t)?.iter().map(|p| p.increment(m)).sum();
    Ok(origin.v + orientation * total)
}

pub(crate) fn curve_legs(m: &Material, memo: &TangentMemo, family: Family, origin: State, t: f64) -> Result<Vec<CurveLeg>> {
    let orientation = -family.sign();
    let mut start = origin;
    let mut legs = Vec::new();
    for piece in pieces(m, memo, family, origin.t, t)? {
        let end = State::new(piece.end(), start.v + orientation * piece.increment(m));
        let (kind, degenerate) = match piece {
            Piece::Fan { .. } => (WaveKind::Rarefaction, false),
            Piece::Jump { degenerate, .. } => (WaveKind::Shock, degenerate),
        };
        legs.push(CurveLeg { kind, family, start, end, degenerate });
        start = end;
    }
    Ok(legs)
}

/// Velocity at stress `t` on the backward wave curve `W_1(left)`.
pub fn backward_v(m: &Material, left: State, t: f64) -> Result<f64> {
    curve_v(m, &TangentMemo::new(m), Family::Backward, left, t)
}

/// Velocity at stress `t` on the forward wave curve `W_2(from)`.
pub fn forward_v(m: &Material, from: State, t: f64) -> Result<f64> {
    curve_v(m, &TangentMemo::new(m), Family::Forward, from, t)
}

/// Legs realizing the backward curve from `left` to stress `t` (0, 1 or 2 legs).
pub fn decompose_backward(m: &Material, left: State, t: f64) -> Result<Vec<CurveLeg>> {
    curve_legs(m, &TangentMemo::new(m), Family::Backward, left, t)
}

/// Legs realizing the forward curve from `from` to stress `t` (0, 1 or 2 legs).
pub fn decompose_forward(m: &Material, from: State, t: f64) -> Result<Vec<CurveLeg>> {
    curve_legs(m, &TangentMemo::new(m), Family::Forward, from, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn cubic() -> Material {
        Material::preset("cubic").unwrap()
    }

    #[test]
    fn curves_pass_through_origin() {
        let m = cubic();
        for origin in [State::new(-1.0, 0.3), State::new(0.0, -2.0), State::new(1.7, 4.0)] {
            assert_eq!(backward_v(&m, origin, origin.t).unwrap(), origin.v);
            assert_eq!(forward_v(&m, origin, origin.t).unwrap(), origin.v);
            assert!(decompose_backward(&m, origin, origin.t).unwrap().is_empty());
            assert!(decompose_forward(&m, origin, origin.t).unwrap().is_empty());
        }
    }

    #[test]
    fn backward_anchor_and_rarefaction_branch() {
        let m = cubic();
        let left = State::new(-1.0, 0.0);
        // v_2 = (T_2 - T_l) sqrt(eps'(T_2)/rho) with T_2 = 1/2, eps'(1/2) = 2.5
        let v2 = 1.5 * 2.5f64.sqrt();
        assert_relative_eq!(backward_v(&m, left, 0.5).unwrap(), v2, epsilon = 1e-14);
        assert_relative_eq!(v2, 2.37171, epsilon = 1e-5);
        let v = backward_v(&m, left, -2.0).unwrap();
        assert_relative_eq!(v, -m.rarefaction_integral(-2.0, -1.0), epsilon = 1e-15);
        assert!(v < 0.0);
    }

    #[test]
    fn forward_shock_examples() {
        let m = cubic();
        assert_relative_eq!(forward_v(&m, State::new(-1.0, 0.0), -2.0).unwrap(), 15f64.sqrt(), epsilon = 1e-14);
        assert_relative_eq!(forward_v(&m, State::new(0.0, 0.0), 1.0).unwrap(), -(3f64.sqrt()), epsilon = 1e-14);
        assert_relative_eq!(forward_v(&m, State::new(0.0, 0.0), -1.0).unwrap(), 3f64.sqrt(), epsilon = 1e-14);
    }

    #[test]
    fn backward_composite_decomposition() {
        let m = cubic();
        let legs = decompose_backward(&m, State::new(-1.0, 0.0), 1.2).unwrap();
        assert_eq!(legs.len(), 2);
        assert_eq!(legs[0].kind, WaveKind::Shock);
        assert!(legs[0].degenerate);
        assert_relative_eq!(legs[0].end.t, 0.5, epsilon = 1e-14);
        assert_relative_eq!(legs[0].end.v, 1.5 * 2.5f64.sqrt(), epsilon = 1e-14);
        assert_eq!(legs[1].kind, WaveKind::Rarefaction);
        assert_eq!(legs[1].start, legs[0].end);
        assert_eq!(legs[1].end.t, 1.2);
        assert_relative_eq!(legs[1].end.v, backward_v(&m, State::new(-1.0, 0.0), 1.2).unwrap(), epsilon = 1e-15);
    }

    #[test]
    fn forward_crossing_composite_uses_tangent_point() {
        let m = cubic();
        let from = State::new(-1.0, 0.0);
        let legs = decompose_forward(&m, from, 0.8).unwrap();
        assert_eq!(legs.len(), 2);
        assert_eq!(legs[0].kind, WaveKind::Rarefaction);
        assert_relative_eq!(legs[0].end.t, -0.4, epsilon = 1e-14);
        assert_relative_eq!(legs[0].end.v, -m.rarefaction_integral(-1.0, -0.4), epsilon = 1e-15);
        assert_eq!(legs[1].kind, WaveKind::Shock);
        assert!(legs[1].degenerate);
        let s = m.shock_speed(legs[1].start.t, legs[1].end.t, Family::Forward);
        assert_relative_eq!(s, m.lambda(-0.4, Family::Forward), epsilon = 1e-13);
        // beyond T = -2 T_from the single shock takes over
        let single = decompose_forward(&m, from, 2.5).unwrap();
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].kind, WaveKind::Shock);
    }

    #[test]
    fn linear_material_gives_single_contacts() {
        let m = Material::preset("linear").unwrap();
        let legs = decompose_backward(&m, State::new(1.0, 0.0), -3.0).unwrap();
        assert_eq!(legs.len(), 1);
        assert!(legs[0].degenerate && legs[0].kind == WaveKind::Shock);
        let c = (0.5f64).sqrt();
        assert_relative_eq!(legs[0].end.v, -4.0 * c, epsilon = 1e-14);
        assert_relative_eq!(forward_v(&m, State::new(1.0, 0.0), -3.0).unwrap(), 4.0 * c, epsilon = 1e-14);
    }

    #[test]
    fn curves_are_strictly_monotone() {
        for m in [cubic(), Material::preset("paper-like").unwrap(), Material::new(1.0, -0.2, 0.5, 0.6, 2.0).unwrap()] {
            for origin in [State::new(-1.3, 0.2), State::new(0.0, 0.0), State::new(0.9, -1.0)] {
                let grid: Vec<f64> = (0..1000).map(|k| -4.0 + 8.0 * k as f64 / 999.0).collect();
                let back: Vec<f64> = grid.iter().map(|&t| backward_v(&m, origin, t).unwrap()).collect();
                let fwd: Vec<f64> = grid.iter().map(|&t| forward_v(&m, origin, t).unwrap()).collect();
                assert!(back.windows(2).all(|w| w[1] > w[0]));
                assert!(fwd.windows(2).all(|w| w[1] < w[0]));
            }
        }
    }

    #[test]
    fn point_symmetry_of_curves() {
        let m = Material::preset("paper-like").unwrap();
        for origin in [State::new(-1.3, 0.2), State::new(0.0, 0.5), State::new(0.9, -1.0)] {
            for t in [-2.5, -0.7, 0.0, 0.3, 1.1, 3.0] {
                let b = backward_v(&m, origin, t).unwrap();
                let bm = backward_v(&m, origin.negated(), -t).unwrap();
                assert_relative_eq!(bm, -b, epsilon = 1e-12);
                let f = forward_v(&m, origin, t).unwrap();
                let fm = forward_v(&m, origin.negated(), -t).unwrap();
                assert_relative_eq!(fm, -f, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn shock_legs_are_dissipative_and_satisfy_rankine_hugoniot() {
        let m = cubic();
        for origin in [State::new(-1.0, 0.0), State::new(1.5, 0.4), State::new(0.0, 0.0)] {
            for k in 0..200 {
                let t = -3.0 + 6.0 * k as f64 / 199.0;
                for family in [Family::Backward, Family::Forward] {
                    let memo = TangentMemo::new(&m);
                    for leg in curve_legs(&m, &memo, family, origin, t).unwrap() {
                        if leg.kind != WaveKind::Shock {
                            continue;
                        }
                        let (l, r) = (leg.start, leg.end);
                        let s = m.shock_speed(l.t, r.t, family);
                        let rh1 = s * m.rho() * (r.v - l.v) + (r.t - l.t);
                        let rh2 = s * (m.strain(r.t) - m.strain(l.t)) + (r.v - l.v);
                        assert!(rh1.abs() < 1e-10 && rh2.abs() < 1e-10);
                        assert!(s * (r.t - l.t) * (r.t + l.t) >= -1e-12);
                    }
                }
            }
        }
    }
}
