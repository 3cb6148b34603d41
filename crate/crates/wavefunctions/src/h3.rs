//! Discrete states of the spatial hydrogen atom.
//!
//! Energies are `E_n = -1/(2 n^2)` in Coulomb units.  The spherical basis
//! diagonalizes `L^2` and `L_z`; the parabolic basis, reached through
//! `mu = r (1 + cos theta)`, `nu = r (1 - cos theta)` with volume element
//! `(mu + nu)/4 dmu dnu dphi`, diagonalizes `L_z` and the axial
//! Runge-Lenz component.

use num_complex::Complex64;
use specfun::gamma::ln_factorial;
use specfun::hyper::hyp1f1_terminating;

use crate::legendre::assoc_legendre;
use crate::state::{Basis, BasisState, Chart, Coordinates, System};
use crate::DomainError;

/// Radial factor `R_nl` with `int R^2 r^2 dr = 1`.
pub fn hydrogen_radial(n: u32, l: u32, r: f64) -> f64 {
    let nf = f64::from(n);
    let ln_amp = std::f64::consts::LN_2 - 2.0 * nf.ln() - ln_factorial(2 * l + 1)
        + 0.5 * (ln_factorial(n + l) - ln_factorial(n - l - 1));
    let x = 2.0 * r / nf;
    ln_amp.exp()
        * x.powi(l as i32)
        * (-r / nf).exp()
        * hyp1f1_terminating(n - l - 1, f64::from(2 * l + 2), x).unwrap_or(f64::NAN)
}

/// Surface harmonic with the Condon-Shortley sign on positive `m`.
pub fn spherical_harmonic(l: u32, m: i64, theta: f64, phi: f64) -> Complex64 {
    let m_abs = m.unsigned_abs() as u32;
    assert!(m_abs <= l, "|m| = {m_abs} exceeds l = {l}");
    let sign = if m > 0 && m % 2 != 0 { -1.0 } else { 1.0 };
    let ln_norm = 0.5
        * ((f64::from(2 * l + 1) / (4.0 * std::f64::consts::PI)).ln() + ln_factorial(l - m_abs)
            - ln_factorial(l + m_abs));
    let amplitude = sign * ln_norm.exp() * assoc_legendre(l, m_abs, theta.cos());
    amplitude * Complex64::new(0.0, m as f64 * phi).exp()
}

/// Parabolic factor `f_{p,q}(x)` with `int f^2 dx = n` and
/// `int f^2 x dx = n^2 (2p + q + 1)`.
pub(crate) fn parabolic_phi(p: u32, q_abs: u32, n: f64, x: f64) -> f64 {
    let ln_amp = -ln_factorial(q_abs) + 0.5 * (ln_factorial(p + q_abs) - ln_factorial(p));
    ln_amp.exp()
        * (-0.5 * x / n).exp()
        * (x / n).powf(f64::from(q_abs) / 2.0)
        * hyp1f1_terminating(p, f64::from(q_abs + 1), x / n).unwrap_or(f64::NAN)
}

fn spherical(n: u32, l: u32, m: i64, r: f64, theta: f64, phi: f64) -> Complex64 {
    hydrogen_radial(n, l, r) * spherical_harmonic(l, m, theta, phi)
}

fn parabolic(n1: u32, n2: u32, m: i64, mu: f64, nu: f64, phi: f64) -> Complex64 {
    let m_abs = m.unsigned_abs() as u32;
    let n = f64::from(n1 + n2 + m_abs + 1);
    let real = parabolic_phi(n1, m_abs, n, mu) * parabolic_phi(n2, m_abs, n, nu)
        / (n * n * std::f64::consts::PI.sqrt());
    real * Complex64::new(0.0, m as f64 * phi).exp()
}

/// Evaluate a discrete spatial hydrogen state.
pub fn eval_h3(state: &BasisState, point: &Coordinates) -> Result<Complex64, DomainError> {
    crate::require_system(state, "the spatial hydrogen atom", matches!(state.system(), System::H3))?;
    match state.basis() {
        Basis::Spherical => {
            let v = point.expect(Chart::Spherical, 3)?;
            Ok(spherical(
                state.int("n") as u32,
                state.int("l") as u32,
                state.int("m"),
                v[0],
                v[1],
                v[2],
            ))
        }
        Basis::Parabolic1 => {
            let v = point.expect(Chart::Parabolic1, 3)?;
            Ok(parabolic(
                state.int("n1") as u32,
                state.int("n2") as u32,
                state.int("m"),
                v[0],
                v[1],
                v[2],
            ))
        }
        _ => Err(DomainError::Unsupported(format!(
            "eval_h3 covers the spherical and parabolic bases, not {}",
            state.basis_label()
        ))),
    }
}
