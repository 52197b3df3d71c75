//! Exact Riemann solver for the one-dimensional equations of motion
//!
//! ```text
//! rho v_t = T_x,    eps(T)_t = v_x,    eps(T) = beta T + alpha (1 + gamma T^2 / 2)^n T
//! ```
//!
//! of an elastic body whose linearized strain is a non-convex function of the
//! stress. The crate builds the backward and forward wave curves (including
//! the composite rarefaction/shock waves forced by the inflection at zero
//! stress), solves arbitrary Riemann problems, labels the resulting wave
//! pattern, samples it in the similarity variable `xi = x / t`, and checks the
//! result against Rankine–Hugoniot, dissipation, Lax and Liu criteria and an
//! independent finite-volume computation.

pub mod atlas;
pub mod cli;
pub mod error;
pub mod material;
mod quadrature;
mod roots;
pub mod riemann;
pub mod sampler;
pub mod verify;
pub mod wave_curves;

pub use error::{Error, MaterialError, Result};
pub use material::{Family, Material};
pub use riemann::{classify_region, solve, solve_linear, solve_zero_velocity, thresholds, RegionLabel, Thresholds, Wave, WavePattern, ZeroVelocityCase};
pub use sampler::{profile, profile_on_grid, sample, Profile};
pub use wave_curves::{backward_v, decompose_backward, decompose_forward, forward_v, CurveLeg, State, WaveKind};
