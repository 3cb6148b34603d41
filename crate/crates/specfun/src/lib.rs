//! Special-function kernel: signed log-domain gamma machinery, classical
//! orthogonal polynomials, terminating hypergeometric sums at unit argument,
//! Wigner d-matrices and Clebsch-Gordan coefficients for integer,
//! half-integer and quarter-integer angular momenta.
//!
//! Everything here is a pure function of its arguments. No global state,
//! no interior mutability; all types are `Copy` or cheaply clonable and
//! safe to share across threads.

pub mod angular;
pub mod cg;
pub mod gamma;
pub mod hyper;
pub mod kahan;
pub mod orthopoly;
pub mod signed_log;
pub mod wigner;

pub use angular::AngularMomentum;
pub use cg::clebsch_gordan;
pub use gamma::{log_gamma_complex, log_gamma_signed, pochhammer, recip_gamma};
pub use hyper::{
    hyp1f1_terminating, hyp2f1_unit, hyp3f2_unit, saalschuetz_closed_form, thomae_transform,
    watson_closed_form,
};
pub use kahan::KahanSum;
pub use signed_log::SignedLogValue;
pub use wigner::wigner_d;

/// Errors shared by the special-function layer.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Gamma function evaluated at a nonpositive integer.
    #[error("gamma pole at nonpositive integer argument {0}")]
    Pole(f64),
    /// A denominator parameter makes a Pochhammer factor vanish before the
    /// series terminates.
    #[error("invalid parameter: {0}")]
    Parameter(String),
    /// No numerator parameter is a nonpositive integer, so the series at
    /// unit argument has infinitely many terms.
    #[error("series does not terminate: {0}")]
    NonTerminating(String),
    /// The series at unit argument diverges.
    #[error("series diverges: {0}")]
    Divergent(String),
    /// Quantum numbers outside the defined domain.
    #[error("domain error: {0}")]
    Domain(String),
}
