use thiserror::Error;

/// Violations of the admissibility inequalities on the constitutive constants.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum MaterialError {
    #[error("constitutive constants must be finite")]
    NonFinite,
    #[error("alpha > 0 violated (alpha = {0})")]
    AlphaNotPositive(f64),
    #[error("beta < 0 violated (beta = {0})")]
    BetaNotNegative(f64),
    #[error("gamma > 0 violated (gamma = {0}); gamma = 0 is only allowed in linear mode")]
    GammaNotPositive(f64),
    #[error("n > 0 violated (n = {0})")]
    ExponentNotPositive(f64),
    #[error("rho > 0 violated (rho = {0})")]
    DensityNotPositive(f64),
    #[error("hyperbolicity assumption alpha + beta > 0 violated (alpha + beta = {0})")]
    NotHyperbolic(f64),
    #[error("linear mode requires gamma = 0 (gamma = {0})")]
    LinearModeGamma(f64),
    #[error("unknown material preset `{0}`")]
    UnknownPreset(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Material(#[from] MaterialError),
    #[error("{what}: no sign change found in [{lo}, {hi}]")]
    RootNotBracketed { what: &'static str, lo: f64, hi: f64 },
    #[error("{what}: {count} sign changes in [{lo}, {hi}], expected exactly one")]
    MultipleRoots {
        what: &'static str,
        count: usize,
        lo: f64,
        hi: f64,
    },
    #[error("intermediate-stress search failed to straddle v_r = {v_r} (last bracket [{lo}, {hi}])")]
    NoBracket { v_r: f64, lo: f64, hi: f64 },
    #[error("predicted right velocity is not monotone in the intermediate stress near T = {at}")]
    NonMonotone { at: f64 },
    #[error("Riemann data must be finite")]
    NonFiniteData,
    #[error("wave speed {speed} exceeds the CFL speed bound {bound} at t = {time}")]
    CflViolation { speed: f64, bound: f64, time: f64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
