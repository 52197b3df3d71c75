//! Constitutive law `eps(T) = beta*T + alpha*(1 + gamma*T^2/2)^n * T` and
//! everything derived pointwise from it: characteristic speeds, the
//! rarefaction integrand, tangency points and the driving force.

use serde::{Deserialize, Serialize};

use crate::error::{Error, MaterialError, Result};
use crate::quadrature;
use crate::roots;

/// Characteristic family: backward waves travel with `lambda_1 < 0`,
/// forward waves with `lambda_2 > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Backward,
    Forward,
}

impl Family {
    /// Sign of the characteristic speed of this family.
    pub fn sign(self) -> f64 {
        match self {
            Family::Backward => -1.0,
            Family::Forward => 1.0,
        }
    }

    pub fn other(self) -> Family {
        match self {
            Family::Backward => Family::Forward,
            Family::Forward => Family::Backward,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Backward => "backward",
            Family::Forward => "forward",
        }
    }
}

/// The five constitutive constants plus the linear-mode switch.
///
/// Constructed only through [`Material::new`], [`Material::linear`],
/// [`Material::preset`] or deserialization, all of which enforce
/// `alpha > 0`, `beta < 0`, `gamma > 0`, `n > 0`, `rho > 0` and
/// `alpha + beta > 0`. In linear mode `gamma` is zero and the strain
/// reduces to `(alpha + beta) T`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MaterialDoc", into = "MaterialDoc")]
pub struct Material {
    alpha: f64,
    beta: f64,
    gamma: f64,
    n: f64,
    rho: f64,
    linear_mode: bool,
}

/// Wire form of a material document.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MaterialDoc {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub n: f64,
    pub rho: f64,
    #[serde(default)]
    pub linear_mode: bool,
}

impl TryFrom<MaterialDoc> for Material {
    type Error = MaterialError;

    fn try_from(doc: MaterialDoc) -> std::result::Result<Self, MaterialError> {
        if doc.linear_mode {
            if doc.gamma != 0.0 {
                return Err(MaterialError::LinearModeGamma(doc.gamma));
            }
            Material::linear(doc.alpha, doc.beta, doc.n, doc.rho)
        } else {
            Material::new(doc.alpha, doc.beta, doc.gamma, doc.n, doc.rho)
        }
    }
}

impl From<Material> for MaterialDoc {
    fn from(m: Material) -> Self {
        MaterialDoc {
            alpha: m.alpha,
            beta: m.beta,
            gamma: m.gamma,
            n: m.n,
            rho: m.rho,
            linear_mode: m.linear_mode,
        }
    }
}

pub const PRESET_NAMES: [&str; 3] = ["cubic", "paper-like", "linear"];

impl Material {
    pub fn new(alpha: f64, beta: f64, gamma: f64, n: f64, rho: f64) -> std::result::Result<Self, MaterialError> {
        Self::validate(alpha, beta, gamma, n, rho, false)?;
        Ok(Material { alpha, beta, gamma, n, rho, linear_mode: false })
    }

    /// Linear reference material (`gamma = 0`), used to check the solver
    /// against the closed-form two-contact solution.
    pub fn linear(alpha: f64, beta: f64, n: f64, rho: f64) -> std::result::Result<Self, MaterialError> {
        Self::validate(alpha, beta, 0.0, n, rho, true)?;
        Ok(Material { alpha, beta, gamma: 0.0, n, rho, linear_mode: true })
    }

    /// Shipped presets: `cubic` (2, -1, 2, 1, 1), `paper-like` (1, -0.5, 1, 2, 1)
    /// and `linear` (1, -0.5, gamma = 0, rho = 1).
    pub fn preset(name: &str) -> std::result::Result<Self, MaterialError> {
        match name {
            "cubic" => Material::new(2.0, -1.0, 2.0, 1.0, 1.0),
            "paper-like" => Material::new(1.0, -0.5, 1.0, 2.0, 1.0),
            "linear" => Material::linear(1.0, -0.5, 1.0, 1.0),
            other => Err(MaterialError::UnknownPreset(other.to_string())),
        }
    }

    fn validate(alpha: f64, beta: f64, gamma: f64, n: f64, rho: f64, linear: bool) -> std::result::Result<(), MaterialError> {
        if ![alpha, beta, gamma, n, rho].iter().all(|x| x.is_finite()) {
            return Err(MaterialError::NonFinite);
        }
        if alpha <= 0.0 {
            return Err(MaterialError::AlphaNotPositive(alpha));
        }
        if beta >= 0.0 {
            return Err(MaterialError::BetaNotNegative(beta));
        }
        if !linear && gamma <= 0.0 {
            return Err(MaterialError::GammaNotPositive(gamma));
        }
        if n <= 0.0 {
            return Err(MaterialError::ExponentNotPositive(n));
        }
        if rho <= 0.0 {
            return Err(MaterialError::DensityNotPositive(rho));
        }
        if alpha + beta <= 0.0 {
            return Err(MaterialError::NotHyperbolic(alpha + beta));
        }
        Ok(())
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }
    pub fn beta(&self) -> f64 {
        self.beta
    }
    pub fn gamma(&self) -> f64 {
        self.gamma
    }
    pub fn n(&self) -> f64 {
        self.n
    }
    pub fn rho(&self) -> f64 {
        self.rho
    }
    pub fn is_linear(&self) -> bool {
        self.linear_mode
    }

    fn base(&self, t: f64) -> f64 {
        1.0 + 0.5 * self.gamma * t * t
    }

    /// Strain; odd and strictly increasing in `t`.
    pub fn strain(&self, t: f64) -> f64 {
        if self.linear_mode {
            return (self.alpha + self.beta) * t;
        }
        self.beta * t + self.alpha * self.base(t).powf(self.n) * t
    }

    /// `d eps / dT`, bounded below by `alpha + beta`.
    pub fn strain_prime(&self, t: f64) -> f64 {
        if self.linear_mode {
            return self.alpha + self.beta;
        }
        let g = self.gamma * t * t;
        self.beta + self.alpha * self.base(t).powf(self.n - 1.0) * (1.0 + 0.5 * (1.0 + 2.0 * self.n) * g)
    }

    /// `d^2 eps / dT^2`; has the sign of `t` (concave for compression,
    /// convex for tension).
    pub fn strain_second(&self, t: f64) -> f64 {
        if self.linear_mode {
            return 0.0;
        }
        let g = self.gamma * t * t;
        self.alpha * self.n * self.gamma * t * (3.0 + 0.5 * (1.0 + 2.0 * self.n) * g) * self.base(t).powf(self.n - 2.0)
    }

    /// Characteristic speed of `family` at stress `t`.
    pub fn lambda(&self, t: f64, family: Family) -> f64 {
        family.sign() / (self.rho * self.strain_prime(t)).sqrt()
    }

    /// `lambda_2(0)`, the largest characteristic speed over all stresses.
    pub fn max_char_speed(&self) -> f64 {
        1.0 / (self.rho * (self.alpha + self.beta)).sqrt()
    }

    /// `sqrt(eps'(T) / rho)`, the velocity gained per unit stress across a fan.
    pub fn rarefaction_integrand(&self, t: f64) -> f64 {
        (self.strain_prime(t) / self.rho).sqrt()
    }

    /// `∫_{a}^{b} sqrt(eps'(τ)/rho) dτ`, signed by the orientation of the limits.
    pub fn rarefaction_integral(&self, a: f64, b: f64) -> f64 {
        if self.linear_mode {
            return (b - a) * ((self.alpha + self.beta) / self.rho).sqrt();
        }
        quadrature::integrate(|tau| self.rarefaction_integrand(tau), a, b, quadrature::DEFAULT_ABS_TOL)
    }

    /// Secant slope `(eps(b) - eps(a)) / (b - a)`; the tangent slope when `a == b`.
    pub fn chord_slope(&self, a: f64, b: f64) -> f64 {
        if a == b {
            self.strain_prime(a)
        } else {
            (self.strain(b) - self.strain(a)) / (b - a)
        }
    }

    /// Magnitude of the velocity jump across a discontinuity joining stresses
    /// `a` and `b`: `sqrt((b - a)(eps(b) - eps(a)) / rho)`.
    pub fn jump_velocity(&self, a: f64, b: f64) -> f64 {
        ((b - a) * (self.strain(b) - self.strain(a)) / self.rho).max(0.0).sqrt()
    }

    /// Rankine–Hugoniot speed of a `family` discontinuity between stresses `a` and `b`.
    pub fn shock_speed(&self, a: f64, b: f64, family: Family) -> f64 {
        family.sign() / (self.rho * self.chord_slope(a, b)).sqrt()
    }

    /// Stress at which the chord from `(t_l, eps(t_l))` touches the strain
    /// curve tangentially: `T_2 > 0` for `t_l < 0`, `T_3 < 0` for `t_l > 0`.
    ///
    /// The defining residual is strictly monotone on the far side of zero;
    /// uniqueness of the sign change is still checked on 64 subintervals.
    pub fn tangent_point(&self, t_l: f64) -> Result<f64> {
        const WHAT: &str = "tangent point";
        if self.linear_mode {
            return Err(Error::InvalidArgument("tangent point is undefined for a linear material".into()));
        }
        if t_l == 0.0 || !t_l.is_finite() {
            return Err(Error::InvalidArgument(format!("tangent point needs a finite nonzero stress, got {t_l}")));
        }
        let side = -t_l.signum();
        let eps_l = self.strain(t_l);
        let h = |t: f64| self.strain(t) - eps_l - (t - t_l) * self.strain_prime(t);
        let near = side * (1e-8f64).min(1e-3 * t_l.abs());
        let h_near = h(near);
        let mut far = side * (2.0 * t_l.abs()).max(1.0);
        let mut h_far = h(far);
        let mut expansions = 0;
        while h_far.signum() == h_near.signum() && h_far != 0.0 {
            expansions += 1;
            far *= 2.0;
            h_far = h(far);
            if expansions > 200 || !h_far.is_finite() {
                return Err(Error::RootNotBracketed { what: WHAT, lo: near, hi: far });
            }
        }
        let changes = roots::count_sign_changes(h, near, far, 64);
        if changes > 1 {
            return Err(Error::MultipleRoots { what: WHAT, count: changes, lo: near, hi: far });
        }
        let bracket = roots::bisect(h, near, far, h_near, h_far);
        let (t, _) = bracket.newton_polish(h, |t| -(t - t_l) * self.strain_second(t));
        Ok(t)
    }

    /// Driving force on a stress discontinuity, closed form:
    /// `alpha / ((n+1) gamma) * [F(T_l, T_r) - F(T_r, T_l)]` with
    /// `F(x, y) = (1 + gamma x^2/2)^n (1 - n gamma x^2/2 + (n+1) gamma x y / 2)`.
    ///
    /// The linear part of the law and the linear material carry no driving force.
    pub fn driving_force(&self, t_l: f64, t_r: f64) -> f64 {
        if self.linear_mode {
            return 0.0;
        }
        // F(x, y) = B(x) P(x, y) with B = base^n; F(T_l, T_r) - F(T_r, T_l) is
        // split into symmetric and antisymmetric parts so that both differences
        // carry an explicit factor of (T_l - T_r)(T_l + T_r).
        let (g, n) = (self.gamma, self.n);
        let (x, y) = (t_l, t_r);
        let spread = (x - y) * (x + y);
        let p = |a: f64, b: f64| 1.0 - 0.5 * n * g * a * a + 0.5 * (n + 1.0) * g * a * b;
        let b_y = self.base(y).powf(n);
        let d_b = b_y * (n * (0.5 * g * spread / self.base(y)).ln_1p()).exp_m1();
        let d_p = -0.5 * n * g * spread;
        let diff = 0.5 * d_b * (p(x, y) + p(y, x)) + 0.5 * (2.0 * b_y + d_b) * d_p;
        self.alpha / ((n + 1.0) * g) * diff
    }

    /// Driving force from its integral definition,
    /// `∫_{T_r}^{T_l} eps(y) dy + (eps(T_r) + eps(T_l)) (T_r - T_l) / 2`, by quadrature.
    pub fn driving_force_integral(&self, t_l: f64, t_r: f64) -> f64 {
        if t_l == t_r {
            return 0.0;
        }
        // Integrand is eps minus its chord, so the two terms never cancel.
        let (e_l, e_r) = (self.strain(t_l), self.strain(t_r));
        let slope = (e_l - e_r) / (t_l - t_r);
        let gap = |y: f64| {
            let chord = if (y - t_r).abs() < (y - t_l).abs() { e_r + slope * (y - t_r) } else { e_l + slope * (y - t_l) };
            self.strain(y) - chord
        };
        quadrature::integrate(gap, t_r, t_l, 1e-16 * (e_l - e_r).abs().max(1e-300) * (t_l - t_r).abs())
    }

    /// Unique stress with `strain(T) = eps`.
    pub fn invert_strain(&self, eps: f64) -> f64 {
        self.invert_strain_near(eps, None)
    }

    /// [`Material::invert_strain`] warm-started from `guess`.
    pub fn invert_strain_near(&self, eps: f64, guess: Option<f64>) -> f64 {
        let modulus = self.alpha + self.beta;
        if self.linear_mode || eps == 0.0 {
            return eps / modulus;
        }
        // eps is odd, so solve for |eps| on T >= 0 where eps(T) >= (alpha+beta) T.
        let target = eps.abs();
        let sign = eps.signum();
        let (mut lo, mut hi) = (0.0, target / modulus);
        let mut x = guess.map(|g| (g * sign).clamp(lo, hi)).unwrap_or(0.5 * hi);
        for _ in 0..200 {
            let r = self.strain(x) - target;
            if r == 0.0 {
                break;
            }
            if r > 0.0 {
                hi = x;
            } else {
                lo = x;
            }
            let mut next = x - r / self.strain_prime(x);
            if !(next > lo && next < hi) {
                next = 0.5 * (lo + hi);
            }
            if next == x || hi - lo <= f64::EPSILON * hi {
                break;
            }
            x = next;
        }
        sign * x
    }
}
