//! Discrete states of the planar hydrogen atom.
//!
//! Energies are `E_n = -1/(2 (n + 1/2)^2)` in Coulomb units; the momentum
//! scale is `omega = 2/(2n + 1)`.  The polar basis diagonalizes angular
//! momentum, the two parabolic bases diagonalize the two components of the
//! Runge-Lenz vector.  Parabolic states live on the double cover
//! `(mu, nu) in R^2` of the plane `x = (mu^2 - nu^2)/2`, `y = mu nu`, and
//! are even under `(mu, nu) -> (-mu, -nu)`, so integrals over the cover
//! carry a factor one half.

use num_complex::Complex64;
use specfun::gamma::ln_factorial;
use specfun::orthopoly::{hermite, laguerre};

use crate::state::{Basis, BasisState, Chart, Coordinates, System};
use crate::DomainError;

pub(crate) fn momentum_scale(n: f64) -> f64 {
    2.0 / (2.0 * n + 1.0)
}

/// Radial factor of the polar state, normalized with the planar weight
/// `r dr` against the azimuthal factor `exp(i m phi) / sqrt(2 pi)`.
pub(crate) fn radial_polar(n: u32, m_abs: u32, r: f64) -> f64 {
    let omega = momentum_scale(f64::from(n));
    let ln_norm = 0.5 * (ln_factorial(n - m_abs) - ln_factorial(n + m_abs));
    let amp = (2.0 * omega.powi(3)).sqrt() * ln_norm.exp();
    amp * (2.0 * omega * r).powi(m_abs as i32)
        * (-omega * r).exp()
        * laguerre(f64::from(2 * m_abs), n - m_abs, 2.0 * omega * r)
}

fn polar(n: u32, m: i64, r: f64, phi: f64) -> Complex64 {
    let radial = radial_polar(n, m.unsigned_abs() as u32, r) / (2.0 * std::f64::consts::PI).sqrt();
    radial * Complex64::new(0.0, m as f64 * phi).exp()
}

/// Parabolic state on the double cover; real by construction.
pub(crate) fn parabolic(n1: u32, n2: u32, mu: f64, nu: f64) -> f64 {
    let n = f64::from(n1 + n2) / 2.0;
    let omega = momentum_scale(n);
    let ln_norm = -0.5
        * (f64::from(n1 + n2) * std::f64::consts::LN_2 + ln_factorial(n1) + ln_factorial(n2));
    let scale = omega.sqrt();
    (omega.powi(3) / std::f64::consts::PI).sqrt()
        * ln_norm.exp()
        * (-0.5 * omega * (mu * mu + nu * nu)).exp()
        * hermite(n1, scale * mu)
        * hermite(n2, scale * nu)
}

/// Evaluate a discrete planar hydrogen state.
pub fn eval_h2(state: &BasisState, point: &Coordinates) -> Result<Complex64, DomainError> {
    crate::require_system(state, "the planar hydrogen atom", matches!(state.system(), System::H2))?;
    match state.basis() {
        Basis::Polar => {
            let v = point.expect(Chart::Polar, 2)?;
            Ok(polar(state.int("n") as u32, state.int("m"), v[0], v[1]))
        }
        Basis::Parabolic1 => {
            let v = point.expect(Chart::Parabolic1, 2)?;
            Ok(Complex64::from(parabolic(
                state.int("n1") as u32,
                state.int("n2") as u32,
                v[0],
                v[1],
            )))
        }
        Basis::Parabolic2 => {
            let v = point.expect(Chart::Parabolic2, 2)?;
            Ok(Complex64::from(parabolic(
                state.int("n1") as u32,
                state.int("n2") as u32,
                v[0],
                v[1],
            )))
        }
        _ => Err(DomainError::Unsupported(format!(
            "eval_h2 covers the polar and parabolic bases, not {}",
            state.basis_label()
        ))),
    }
}
