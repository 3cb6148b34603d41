//! Position-space wavefunctions for the planar and spatial hydrogen atoms,
//! the circular and multidimensional isotropic oscillators, the charge-dyon
//! system, and the four-dimensional oscillator, in every separable
//! coordinate chart the workspace uses.
//!
//! A state is described by [`BasisState`] (system, basis, quantum numbers)
//! and evaluated at [`Coordinates`] through [`eval`] or the per-system
//! entry points.  Two-center bases (elliptic, spheroidal) additionally need
//! a [`separation::SeparationSpectrum`] and go through [`eval_separated`].
//! Every discrete state is normalized to unit L2 norm over its natural
//! volume element; continuous-spectrum states are delta-normalized.

#![forbid(unsafe_code)]

mod continuous;
mod coords;
mod dd;
mod grid;
mod h2;
mod h3;
mod hermite;
mod kummer;
mod landau;
mod legendre;
mod mic;
mod osc2;
mod osc4;
mod oscd;
pub mod quad;
mod separated;
mod state;

use num_complex::Complex64;

pub use continuous::{coulomb_phase, eval_continuous};
pub use coords::{
    cartesian_from_plane_elliptic, elliptic_from_plane_cartesian, parabolic_from_spheroidal,
    plane_elliptic_from_polar, polar_from_plane_elliptic, spherical_from_spheroidal,
    spheroidal_from_parabolic, spheroidal_from_spherical,
};
pub use grid::{eval_grid, eval_grid_separated, GridResult};
pub use h2::eval_h2;
pub use h3::{eval_h3, hydrogen_radial, spherical_harmonic};
pub use hermite::hermite_normalized;
pub use landau::{eval_landau, landau_gauge_factor};
pub use legendre::assoc_legendre;
pub use mic::{eval_mic, monopole_harmonic};
pub use osc2::eval_osc2;
pub use osc4::{eval_osc4, oscillator_radial_euler};
pub use oscd::eval_oscd;
pub use separated::{eval_separated, SeparatedEvaluator};
pub use state::{Basis, BasisState, Chart, Coordinates, Gauge, System, Tree};

/// Errors reported by state construction and evaluation.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DomainError {
    /// The basis is not defined for the system, or a state was handed to an
    /// evaluator for a different system.
    #[error("unsupported combination: {0}")]
    Unsupported(String),
    /// A required quantum-number label is absent.
    #[error("missing quantum number `{0}`")]
    MissingNumber(String),
    /// Quantum numbers violate the constraints of the basis.
    #[error("invalid quantum numbers: {0}")]
    InvalidNumbers(String),
    /// Coordinates lie outside the chart domain or use the wrong chart.
    #[error("coordinates rejected: {0}")]
    Coordinates(String),
    /// A separation spectrum does not belong to the state it was paired with.
    #[error("separation data does not match the state: {0}")]
    SpectrumMismatch(String),
    /// A numerical kernel failed to converge or hit a pole.
    #[error("evaluation failed: {0}")]
    Numerics(String),
}

impl From<specfun::Error> for DomainError {
    fn from(err: specfun::Error) -> Self {
        DomainError::Numerics(err.to_string())
    }
}

impl From<separation::Error> for DomainError {
    fn from(err: separation::Error) -> Self {
        match err {
            separation::Error::Domain(msg) => DomainError::InvalidNumbers(msg),
            separation::Error::Convergence(msg) => DomainError::Numerics(msg),
        }
    }
}

/// Evaluate a one-center state at a point, dispatching on its system.
///
/// Elliptic and spheroidal states carry a two-center separation constant
/// and must be evaluated through [`eval_separated`] instead.
pub fn eval(state: &BasisState, point: &Coordinates) -> Result<Complex64, DomainError> {
    match state.basis() {
        Basis::Elliptic(_) | Basis::Spheroidal(_) => Err(DomainError::Unsupported(
            "two-center bases need a separation spectrum; use eval_separated".into(),
        )),
        Basis::ContinuousPolar(_) | Basis::ContinuousParabolic(_, _) | Basis::ContinuousSpherical(_) => {
            continuous::eval_continuous(state, point)
        }
        Basis::Landau(_) => landau::eval_landau(state, point),
        _ => match state.system() {
            System::H2 => h2::eval_h2(state, point),
            System::H3 => h3::eval_h3(state, point),
            System::Osc2 => osc2::eval_osc2(state, point),
            System::OscD(_) => oscd::eval_oscd(state, point),
            System::Mic(_) => mic::eval_mic(state, point),
            System::Osc4 => osc4::eval_osc4(state, point),
        },
    }
}

pub(crate) fn require_system(state: &BasisState, want: &str, ok: bool) -> Result<(), DomainError> {
    if ok {
        Ok(())
    } else {
        Err(DomainError::Unsupported(format!(
            "evaluator for {want} received a {} state",
            state.system_label()
        )))
    }
}

/// ln Gamma(x) for arguments that are positive by construction.
pub(crate) fn ln_gamma_positive(x: f64) -> f64 {
    specfun::gamma::log_gamma_signed(x)
        .expect("gamma of a positive argument")
        .log_magnitude
}
