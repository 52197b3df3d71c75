//! Riemann problem solver: intermediate state, wave assembly and labels.
//!
//! The unknown is the stress `T̄` of the state joining the backward and the
//! forward waves. The predicted right velocity
//! `forward_v((T̄, backward_v(U_l, T̄)), T_r)` is strictly increasing in `T̄`,
//! so `T̄` is found by bracketing and bisection.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::material::{Family, Material};
use crate::roots;
use crate::wave_curves::{curve_legs, curve_v, CurveLeg, State, TangentMemo, WaveKind};

/// Absolute velocity distance within which a right state counts as lying on
/// a dividing curve.
pub const BOUNDARY_TOL: f64 = 1e-9;

const MAX_DOUBLINGS: u32 = 60;

/// One elementary wave of a solution.
///
/// `speed_head <= speed_tail`; both equal the shock speed for discontinuities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Wave {
    pub kind: WaveKind,
    pub family: Family,
    pub left: State,
    pub right: State,
    pub speed_head: f64,
    pub speed_tail: f64,
    pub degenerate: bool,
}

impl Wave {
    fn from_leg(m: &Material, leg: &CurveLeg) -> Wave {
        let family = leg.family;
        let (head, tail) = match leg.kind {
            WaveKind::Rarefaction => (m.lambda(leg.start.t, family), m.lambda(leg.end.t, family)),
            WaveKind::Shock => {
                let s = if leg.degenerate && !m.is_linear() {
                    // speed of the characteristic on the tangent side
                    match family {
                        Family::Backward => m.lambda(leg.end.t, family),
                        Family::Forward => m.lambda(leg.start.t, family),
                    }
                } else {
                    m.shock_speed(leg.start.t, leg.end.t, family)
                };
                (s, s)
            }
        };
        Wave {
            kind: leg.kind,
            family,
            left: leg.start,
            right: leg.end,
            speed_head: head,
            speed_tail: tail,
            degenerate: leg.degenerate,
        }
    }

    pub fn is_shock(&self) -> bool {
        self.kind == WaveKind::Shock
    }

    /// Shock speed; the head speed for rarefactions.
    pub fn speed(&self) -> f64 {
        self.speed_head
    }
}

/// Which left-state sign class a region belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RegionClass {
    /// `T_l < 0`
    A,
    /// `T_l > 0`
    B,
    /// `T_l = 0`
    C,
}

/// Dividing curves of the phase plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundaryCurve {
    /// Backward wave curve of the left state.
    W1,
    /// Forward wave curve of the left state.
    W2,
    /// Forward curve through the zero-stress point of `W1` (`T_l < 0`).
    W2F,
    /// Forward curve through the zero-stress point of `W1` (`T_l > 0`).
    W2E,
    /// Forward curve through the tangent point of `W1` (`T_l < 0`).
    W2B,
    /// Forward curve through the tangent point of `W1` (`T_l > 0`).
    W2C,
    /// The line `T = 0`.
    T0,
}

impl BoundaryCurve {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundaryCurve::W1 => "on-W1",
            BoundaryCurve::W2 => "on-W2",
            BoundaryCurve::W2F => "on-W2(F)",
            BoundaryCurve::W2E => "on-W2(E)",
            BoundaryCurve::W2B => "on-W2(B)",
            BoundaryCurve::W2C => "on-W2(C)",
            BoundaryCurve::T0 => "on-T0",
        }
    }
}

/// Phase-plane region of the right state relative to the left state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RegionLabel {
    /// Identical states.
    Trivial,
    /// `A1..A12`, `B1..B12` or `C1..C6`.
    Region(RegionClass, u8),
    /// Right state within [`BOUNDARY_TOL`] of a dividing curve.
    Boundary(BoundaryCurve),
    /// Linear material off both wave curves: always two contacts.
    Linear,
}

impl fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegionLabel::Trivial => f.write_str("trivial"),
            RegionLabel::Region(class, index) => write!(f, "{class:?}{index}"),
            RegionLabel::Boundary(curve) => f.write_str(curve.as_str()),
            RegionLabel::Linear => f.write_str("linear"),
        }
    }
}

impl Serialize for RegionLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The twelve wave patterns of Riemann problems with zero velocities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ZeroVelocityCase {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
    IX,
    X,
    XI,
    XII,
}

impl ZeroVelocityCase {
    pub const ALL: [ZeroVelocityCase; 12] = [
        ZeroVelocityCase::I,
        ZeroVelocityCase::II,
        ZeroVelocityCase::III,
        ZeroVelocityCase::IV,
        ZeroVelocityCase::V,
        ZeroVelocityCase::VI,
        ZeroVelocityCase::VII,
        ZeroVelocityCase::VIII,
        ZeroVelocityCase::IX,
        ZeroVelocityCase::X,
        ZeroVelocityCase::XI,
        ZeroVelocityCase::XII,
    ];

    /// Phase-plane region the case falls into.
    pub fn region(self) -> RegionLabel {
        use RegionClass::*;
        use ZeroVelocityCase::*;
        let (class, index) = match self {
            I => (A, 1),
            II => (A, 5),
            III => (A, 6),
            IV => (A, 9),
            V => (A, 12),
            VI => (B, 12),
            VII => (B, 8),
            VIII => (B, 7),
            IX => (B, 4),
            X => (B, 1),
            XI => (C, 1),
            XII => (C, 6),
        };
        RegionLabel::Region(class, index)
    }
}

impl fmt::Display for ZeroVelocityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for ZeroVelocityCase {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Stresses at which the dividing curves through the zero-stress and the
/// tangent point of `W1` cross `v = 0` (for zero left velocity).
///
/// For `T_l < 0`: `0 < t_star < t_star_star`; for `T_l > 0`:
/// `t_star_star < t_star < 0`. In both cases `t_star = -T_l`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Thresholds {
    #[serde(rename = "T_l")]
    pub t_l: f64,
    pub tangent: f64,
    #[serde(rename = "T_star")]
    pub t_star: f64,
    #[serde(rename = "T_star_star")]
    pub t_star_star: f64,
}

/// A solved Riemann problem.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WavePattern {
    pub material: Material,
    pub left_state: State,
    pub right_state: State,
    /// Waves ordered by speed.
    pub waves: Vec<Wave>,
    /// Right state of every wave but the last.
    pub middle_states: Vec<State>,
    pub region_label: RegionLabel,
    pub zero_velocity_case: Option<ZeroVelocityCase>,
}

impl WavePattern {
    fn from_waves(m: &Material, left: State, right: State, waves: Vec<Wave>, label: RegionLabel) -> WavePattern {
        let middle_states = waves.iter().take(waves.len().saturating_sub(1)).map(|w| w.right).collect();
        WavePattern {
            material: *m,
            left_state: left,
            right_state: right,
            waves,
            middle_states,
            region_label: label,
            zero_velocity_case: None,
        }
    }

    pub fn shocks(&self) -> impl Iterator<Item = &Wave> {
        self.waves.iter().filter(|w| w.is_shock())
    }

    /// Compact description such as `R1+S1+S2` (degenerate shocks marked `*`).
    pub fn composition(&self) -> String {
        if self.waves.is_empty() {
            return "constant".into();
        }
        self.waves
            .iter()
            .map(|w| {
                let kind = if w.is_shock() { "S" } else { "R" };
                let family = if w.family == Family::Backward { 1 } else { 2 };
                let mark = if w.degenerate { "*" } else { "" };
                format!("{kind}{family}{mark}")
            })
            .collect::<Vec<_>>()
            .join("+")
    }
}

/// Solves the Riemann problem with left state `left` and right state `right`.
pub fn solve(m: &Material, left: State, right: State) -> Result<WavePattern> {
    if !left.is_finite() || !right.is_finite() {
        return Err(Error::NonFiniteData);
    }
    if left == right {
        return Ok(WavePattern::from_waves(m, left, right, Vec::new(), RegionLabel::Trivial));
    }
    if m.is_linear() {
        return solve_linear(m, left, right);
    }
    let memo = TangentMemo::new(m);
    let t_bar = intermediate_stress(m, &memo, left, right)?;
    let mut legs = curve_legs(m, &memo, Family::Backward, left, t_bar)?;
    let joint = legs.last().map_or(left, |leg| leg.end);
    legs.extend(curve_legs(m, &memo, Family::Forward, joint, right.t)?);
    if let Some(last) = legs.last_mut() {
        last.end = right;
    }
    let waves = legs.iter().map(|leg| Wave::from_leg(m, leg)).collect();
    let label = label_region(m, &memo, left, right, t_bar)?;
    Ok(WavePattern::from_waves(m, left, right, waves, label))
}

/// Region of `right` relative to `left`, as assigned by [`solve`].
pub fn classify_region(m: &Material, left: State, right: State) -> Result<RegionLabel> {
    Ok(solve(m, left, right)?.region_label)
}

fn intermediate_stress(m: &Material, memo: &TangentMemo, left: State, right: State) -> Result<f64> {
    let scale = 1f64.max(left.v.abs()).max(right.v.abs());
    let tol = 1e-11 * scale;
    let noise = 1e-10 * scale;
    let residual = |t_bar: f64| -> Result<f64> {
        let joint = State::new(t_bar, curve_v(m, memo, Family::Backward, left, t_bar)?);
        Ok(curve_v(m, memo, Family::Forward, joint, right.t)? - right.v)
    };
    let mut samples: Vec<(f64, f64)> = Vec::new();

    // data on a single wave curve: no root search, no spurious zero-strength wave
    for snap in [left.t, right.t] {
        let r = residual(snap)?;
        if r.abs() <= tol {
            return Ok(snap);
        }
        samples.push((snap, r));
    }

    let mut delta = 1f64.max((right.t - left.t).abs());
    let (mut lo, mut hi) = (left.t - delta, left.t + delta);
    let (mut r_lo, mut r_hi) = (residual(lo)?, residual(hi)?);
    samples.push((lo, r_lo));
    samples.push((hi, r_hi));
    let mut doublings = 0;
    while !(r_lo <= 0.0 && r_hi >= 0.0) {
        if doublings == MAX_DOUBLINGS || !r_lo.is_finite() || !r_hi.is_finite() {
            return Err(Error::NoBracket { v_r: right.v, lo, hi });
        }
        doublings += 1;
        delta *= 2.0;
        if r_lo > 0.0 {
            lo = left.t - delta;
            r_lo = residual(lo)?;
            samples.push((lo, r_lo));
        }
        if r_hi < 0.0 {
            hi = left.t + delta;
            r_hi = residual(hi)?;
            samples.push((hi, r_hi));
        }
    }

    let mut failure = None;
    let mut eval = |t: f64| match residual(t) {
        Ok(r) => {
            samples.push((t, r));
            r
        }
        Err(e) => {
            failure.get_or_insert(e);
            f64::NAN
        }
    };
    let bracket = roots::bisect(&mut eval, lo, hi, r_lo, r_hi);
    let (x, _) = bracket.best();
    let h = 1e-7 * x.abs().max(1.0);
    let slope = |t: f64| match (residual(t + h), residual(t - h)) {
        (Ok(a), Ok(b)) => (a - b) / (2.0 * h),
        _ => f64::NAN,
    };
    let (t_bar, _) = bracket.newton_polish(&mut eval, slope);
    if let Some(e) = failure {
        return Err(e);
    }

    samples.sort_by(|a, b| a.0.total_cmp(&b.0));
    if let Some(w) = samples.windows(2).find(|w| w[1].1 < w[0].1 - noise) {
        return Err(Error::NonMonotone { at: w[0].0 });
    }
    Ok(t_bar)
}

fn boundary_curve(m: &Material, memo: &TangentMemo, left: State, right: State) -> Result<Option<BoundaryCurve>> {
    let near = |v: f64| (right.v - v).abs() <= BOUNDARY_TOL;
    if near(curve_v(m, memo, Family::Backward, left, right.t)?) {
        return Ok(Some(BoundaryCurve::W1));
    }
    if near(curve_v(m, memo, Family::Forward, left, right.t)?) {
        return Ok(Some(BoundaryCurve::W2));
    }
    if m.is_linear() {
        return Ok(None);
    }
    if left.t != 0.0 {
        let negative = left.t < 0.0;
        let zero = State::new(0.0, curve_v(m, memo, Family::Backward, left, 0.0)?);
        if near(curve_v(m, memo, Family::Forward, zero, right.t)?) {
            return Ok(Some(if negative { BoundaryCurve::W2F } else { BoundaryCurve::W2E }));
        }
        let t = memo.get(left.t)?;
        let tangent = State::new(t, curve_v(m, memo, Family::Backward, left, t)?);
        if near(curve_v(m, memo, Family::Forward, tangent, right.t)?) {
            return Ok(Some(if negative { BoundaryCurve::W2B } else { BoundaryCurve::W2C }));
        }
    }
    if right.t.abs() <= BOUNDARY_TOL {
        return Ok(Some(BoundaryCurve::T0));
    }
    Ok(None)
}

/// Region from the band of the intermediate stress (relative to `T_l`, zero
/// and the tangent point) and the position of `T_r` relative to `T̄` and zero.
fn label_region(m: &Material, memo: &TangentMemo, left: State, right: State, t_bar: f64) -> Result<RegionLabel> {
    if let Some(curve) = boundary_curve(m, memo, left, right)? {
        return Ok(RegionLabel::Boundary(curve));
    }
    let t_l = left.t;
    let (class, band) = if t_l < 0.0 {
        let t2 = memo.get(t_l)?;
        (RegionClass::A, [t_l, 0.0, t2].iter().filter(|&&b| t_bar >= b).count())
    } else if t_l > 0.0 {
        let t3 = memo.get(t_l)?;
        (RegionClass::B, [t3, 0.0, t_l].iter().filter(|&&b| t_bar >= b).count())
    } else {
        (RegionClass::C, usize::from(t_bar >= 0.0))
    };
    let t_r = right.t;
    let side = if t_bar < 0.0 {
        if t_r < t_bar {
            1
        } else if t_r <= 0.0 {
            2
        } else {
            3
        }
    } else if t_r < 0.0 {
        1
    } else if t_r < t_bar {
        2
    } else {
        3
    };
    Ok(RegionLabel::Region(class, (band * 3 + side) as u8))
}

/// Closed-form solution for the linear material: two contacts at speeds
/// `∓1/sqrt(rho (alpha + beta))` around the middle state
/// `((T_r+T_l)/2 + sqrt(rho/(alpha+beta)) (v_r-v_l)/2, (v_r+v_l)/2 + sqrt((alpha+beta)/rho) (T_r-T_l)/2)`.
pub fn solve_linear(m: &Material, left: State, right: State) -> Result<WavePattern> {
    if !m.is_linear() {
        return Err(Error::InvalidArgument("solve_linear needs a linear-mode material".into()));
    }
    if !left.is_finite() || !right.is_finite() {
        return Err(Error::NonFiniteData);
    }
    let modulus = m.alpha() + m.beta();
    let impedance = (modulus / m.rho()).sqrt();
    let middle = State::new(
        0.5 * (right.t + left.t) + 0.5 * (right.v - left.v) / impedance,
        0.5 * (right.v + left.v) + 0.5 * impedance * (right.t - left.t),
    );
    let speed = m.max_char_speed();
    let contact = |family: Family, a: State, b: State| Wave {
        kind: WaveKind::Shock,
        family,
        left: a,
        right: b,
        speed_head: family.sign() * speed,
        speed_tail: family.sign() * speed,
        degenerate: true,
    };
    let mut waves = Vec::new();
    if middle != left {
        waves.push(contact(Family::Backward, left, middle));
    }
    if middle != right {
        waves.push(contact(Family::Forward, middle, right));
    }
    let label = if left == right {
        RegionLabel::Trivial
    } else {
        let memo = TangentMemo::new(m);
        match boundary_curve(m, &memo, left, right)? {
            Some(curve) => RegionLabel::Boundary(curve),
            None => RegionLabel::Linear,
        }
    };
    Ok(WavePattern::from_waves(m, left, right, waves, label))
}

/// Threshold stresses for zero-velocity data with left stress `t_l != 0`.
pub fn thresholds(m: &Material, t_l: f64) -> Result<Thresholds> {
    if t_l == 0.0 || !t_l.is_finite() {
        return Err(Error::InvalidArgument(format!("thresholds need a finite nonzero stress, got {t_l}")));
    }
    let side = -t_l.signum();

    // T eps(T) = T_l eps(T_l) on the opposite side; T eps(T) is even and
    // strictly increasing in |T|.
    let target = t_l * m.strain(t_l);
    let h_star = |t: f64| t * m.strain(t) - target;
    let t_star = outward_root(h_star, side, 0.0, t_l.abs(), "threshold T_star")?;

    let tangent = m.tangent_point(t_l)?;
    let rhs = (tangent - t_l) * (m.strain(tangent) - m.strain(t_l));
    let h = |t: f64| (t - tangent) * (m.strain(t) - m.strain(tangent)) - rhs;
    let t_star_star = outward_root(h, side, tangent, tangent.abs().max(t_l.abs()), "threshold T_star_star")?;
    Ok(Thresholds { t_l, tangent, t_star, t_star_star })
}

/// Root of `h` on the ray from `origin` in direction `side`, where `h` is
/// negative at `origin` and increasing along the ray.
fn outward_root<F: Fn(f64) -> f64>(h: F, side: f64, origin: f64, scale: f64, what: &'static str) -> Result<f64> {
    let h_origin = h(origin);
    let mut far = origin + side * scale.max(1e-300);
    let mut h_far = h(far);
    let mut step = scale.max(1e-300);
    let mut expansions = 0;
    while h_far < 0.0 {
        expansions += 1;
        step *= 2.0;
        far = origin + side * step;
        h_far = h(far);
        if expansions > 200 || !h_far.is_finite() {
            return Err(Error::RootNotBracketed { what, lo: origin, hi: far });
        }
    }
    if h_origin > 0.0 {
        return Err(Error::RootNotBracketed { what, lo: origin, hi: far });
    }
    let changes = roots::count_sign_changes(&h, origin, far, 64);
    if changes > 1 {
        return Err(Error::MultipleRoots { what, count: changes, lo: origin, hi: far });
    }
    let bracket = roots::bisect(&h, origin, far, h_origin, h_far);
    Ok(bracket.best().0)
}

/// Zero-velocity case of the data `(t_l, 0)`, `(t_r, 0)`; `None` when `t_l == t_r`.
pub fn zero_velocity_case(m: &Material, t_l: f64, t_r: f64) -> Result<Option<ZeroVelocityCase>> {
    use ZeroVelocityCase::*;
    if t_l == t_r {
        return Ok(None);
    }
    if t_l == 0.0 {
        return Ok(Some(if t_r < 0.0 { XI } else { XII }));
    }
    if m.is_linear() {
        return Ok(None);
    }
    let th = thresholds(m, t_l)?;
    let case = if t_l < 0.0 {
        if t_r < t_l {
            I
        } else if t_r <= 0.0 {
            II
        } else if t_r < th.t_star {
            III
        } else if t_r <= th.t_star_star {
            IV
        } else {
            V
        }
    } else if t_r > t_l {
        VI
    } else if t_r >= 0.0 {
        VII
    } else if t_r > th.t_star {
        VIII
    } else if t_r >= th.t_star_star {
        IX
    } else {
        X
    };
    Ok(Some(case))
}

/// [`solve`] for zero velocities, with the zero-velocity case attached.
pub fn solve_zero_velocity(m: &Material, t_l: f64, t_r: f64) -> Result<WavePattern> {
    let mut pattern = solve(m, State::new(t_l, 0.0), State::new(t_r, 0.0))?;
    pattern.zero_velocity_case = zero_velocity_case(m, t_l, t_r)?;
    Ok(pattern)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wave_curves::{backward_v, decompose_backward, decompose_forward, forward_v};
    use approx::assert_relative_eq;

    fn cubic() -> Material {
        Material::preset("cubic").unwrap()
    }

    #[test]
    fn identical_states_give_constant_pattern() {
        let p = solve(&cubic(), State::new(0.3, 1.0), State::new(0.3, 1.0)).unwrap();
        assert!(p.waves.is_empty() && p.middle_states.is_empty());
        assert_eq!(p.region_label, RegionLabel::Trivial);
    }

    #[test]
    fn single_forward_shock() {
        let m = cubic();
        let p = solve(&m, State::new(-1.0, 0.0), State::new(-2.0, 15f64.sqrt())).unwrap();
        assert_eq!(p.waves.len(), 1);
        let w = p.waves[0];
        assert_eq!((w.kind, w.family), (WaveKind::Shock, Family::Forward));
        assert_relative_eq!(w.speed_head, 1.0 / 15f64.sqrt(), epsilon = 1e-14);
        assert_eq!(p.region_label, RegionLabel::Boundary(BoundaryCurve::W2));
    }

    #[test]
    fn case_five_pattern() {
        let m = cubic();
        let th = thresholds(&m, -1.0).unwrap();
        let p = solve_zero_velocity(&m, -1.0, th.t_star_star + 0.5).unwrap();
        assert_eq!(p.zero_velocity_case, Some(ZeroVelocityCase::V));
        assert_eq!(p.composition(), "S1*+R1+S2");
        assert_relative_eq!(p.waves[0].speed_head, m.lambda(0.5, Family::Backward), epsilon = 1e-14);
        assert_relative_eq!(p.waves[0].right.t, 0.5, epsilon = 1e-13);
        assert_eq!(p.region_label, RegionLabel::Region(RegionClass::A, 12));
    }

    #[test]
    fn thresholds_of_cubic_preset() {
        let m = cubic();
        let th = thresholds(&m, -1.0).unwrap();
        assert_relative_eq!(th.t_star, 1.0, max_relative = 1e-12);
        assert_relative_eq!(th.t_star_star, 1.406, epsilon = 1e-3);
        let t2 = th.tangent;
        let res = (th.t_star_star - t2) * (m.strain(th.t_star_star) - m.strain(t2)) - (t2 + 1.0).powi(2) * m.strain_prime(t2);
        assert!(res.abs() < 1e-10);
        let mirrored = thresholds(&m, 1.0).unwrap();
        assert_relative_eq!(mirrored.t_star, -1.0, max_relative = 1e-12);
        assert_relative_eq!(mirrored.t_star_star, -th.t_star_star, epsilon = 1e-12);
    }

    #[test]
    fn linear_closed_form() {
        let m = Material::linear(1.5, -0.5, 1.0, 1.0).unwrap();
        let p = solve(&m, State::new(1.0, 0.0), State::new(0.0, 0.0)).unwrap();
        assert_eq!(p.middle_states, vec![State::new(0.5, -0.5)]);
        assert_eq!((p.waves[0].speed_head, p.waves[1].speed_head), (-1.0, 1.0));
        let q = solve(&m, State::new(-2.0, 0.0), State::new(1.0, 0.0)).unwrap();
        assert_eq!(q.middle_states[0], State::new(-0.5, 1.5));
    }

    #[test]
    fn zero_velocity_cases_follow_thresholds() {
        use ZeroVelocityCase::*;
        let m = cubic();
        let expect = [
            (-1.0, -2.0, I, "R1+S2"),
            (-1.0, -0.5, II, "S1+R2"),
            (-1.0, 0.5, III, "S1+R2+S2*"),
            (-1.0, 0.9, III, "S1+S2"),
            (-1.0, 1.2, IV, "S1+S2"),
            (-1.0, 2.0, V, "S1*+R1+S2"),
            (1.0, 2.0, VI, "R1+S2"),
            (1.0, 0.5, VII, "S1+R2"),
            (1.0, -0.5, VIII, "S1+R2+S2*"),
            (1.0, -1.2, IX, "S1+S2"),
            (1.0, -2.0, X, "S1*+R1+S2"),
            (0.0, -1.0, XI, "R1+S2"),
            (0.0, 1.0, XII, "R1+S2"),
        ];
        for (t_l, t_r, case, pattern) in expect {
            let p = solve_zero_velocity(&m, t_l, t_r).unwrap();
            assert_eq!(p.zero_velocity_case, Some(case), "{t_l} {t_r}");
            assert_eq!(p.region_label, case.region(), "{t_l} {t_r}: {}", p.composition());
            assert_eq!(p.composition(), pattern, "{t_l} {t_r}");
        }
    }

    #[test]
    fn data_on_a_wave_curve_gives_one_family() {
        let m = Material::preset("paper-like").unwrap();
        let left = State::new(-0.8, 0.4);
        for t in [-2.0, -0.3, 0.2, 0.9, 2.5] {
            let right = State::new(t, backward_v(&m, left, t).unwrap());
            let p = solve(&m, left, right).unwrap();
            assert!(p.waves.iter().all(|w| w.family == Family::Backward));
            assert_eq!(p.waves.len(), decompose_backward(&m, left, t).unwrap().len());
            assert_eq!(p.region_label, RegionLabel::Boundary(BoundaryCurve::W1));
            let right = State::new(t, forward_v(&m, left, t).unwrap());
            let p = solve(&m, left, right).unwrap();
            assert!(p.waves.iter().all(|w| w.family == Family::Forward));
            assert_eq!(p.waves.len(), decompose_forward(&m, left, t).unwrap().len());
        }
    }

    #[test]
    fn perturbed_composite_point_lands_in_top_band() {
        let m = cubic();
        let left = State::new(-1.0, 0.0);
        let v = backward_v(&m, left, 1.2).unwrap();
        let label = classify_region(&m, left, State::new(1.2, v + 1e-3)).unwrap();
        match label {
            RegionLabel::Region(RegionClass::A, k) => assert!((10..=12).contains(&k), "{label}"),
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn waves_are_ordered_and_chained() {
        let m = Material::preset("paper-like").unwrap();
        for (l, r) in [((-1.0, 0.0), (2.0, 0.5)), ((2.0, -1.0), (-0.3, 3.0)), ((0.0, 0.0), (0.0, 1.0)), ((0.4, 2.0), (0.4, -2.0))] {
            let p = solve(&m, State::new(l.0, l.1), State::new(r.0, r.1)).unwrap();
            for w in p.waves.windows(2) {
                assert!(w[0].speed_tail <= w[1].speed_head + 1e-12);
                assert_eq!(w[0].right, w[1].left);
            }
            assert_eq!(p.waves.last().unwrap().right, p.right_state);
        }
    }

    #[test]
    fn labels_display() {
        assert_eq!(RegionLabel::Region(RegionClass::B, 7).to_string(), "B7");
        assert_eq!(RegionLabel::Boundary(BoundaryCurve::W2F).to_string(), "on-W2(F)");
        assert_eq!(ZeroVelocityCase::XII.to_string(), "XII");
    }
}
