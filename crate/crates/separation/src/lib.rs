//! Separation-constant spectra for quantum systems that separate in
//! two-center (elliptic, spheroidal) coordinate charts.
//!
//! Each supported system reduces, after separation, to a finite symmetric
//! tridiagonal eigenproblem for the separation constant.  This crate builds
//! those matrices on both coordinate sides (rotational chain and
//! parabolic/Cartesian chain), solves them deterministically, and provides
//! the small-`R` / large-`R` perturbative expansions, the separated
//! polynomial coefficient chains, and the twisted generalisation of the
//! two-dimensional elliptic basis.

#![forbid(unsafe_code)]

mod builder;
mod limits;
mod perturb;
mod polynomials;
mod solver;
mod twisted;

pub use builder::{
    build_system, build_system_dual, Parity, Side, SystemKind, TridiagonalSystem,
};
pub use limits::{spectrum_limits, LimitDescriptor, Regime};
pub use perturb::{perturbative_basis, perturbative_lambda};
pub use polynomials::{build_separated_polynomials, SeparatedPolynomials};
pub use solver::{solve_spectrum, SeparationSpectrum};
pub use twisted::{twisted_elliptic, TwistedElliptic};

/// Errors reported by the separation routines.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// The requested quantum numbers or parameters are outside the domain
    /// of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// An iterative eigensolve failed to reach the requested residual.
    #[error("convergence error: {0}")]
    Convergence(String),
}
