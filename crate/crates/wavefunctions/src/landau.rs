//! Eigenstates of a planar charge in a uniform magnetic field.
//!
//! Magnetic length `a = 1`.  In the Landau gauge the states carry a
//! continuous center label `y0` and are delta-normalized,
//! `<n y0 | n' y0'> = delta_{n n'} delta(y0 - y0')`.  The symmetric gauge
//! hosts the discrete level basis `(N, m)` with `E = N + (m + |m|)/2 + 1/2`
//! and, after the gauge rotation, the transformed center states.

use num_complex::Complex64;
use specfun::gamma::ln_factorial;
use specfun::hyper::hyp1f1_terminating;

use crate::hermite::hermite_normalized;
use crate::osc2::unit_phase;
use crate::state::{Basis, BasisState, Chart, Coordinates, Gauge, System};
use crate::DomainError;

/// Unit-modulus factor carrying a Landau-gauge state into the symmetric
/// gauge: the transformed state is the plain one times this factor.
pub fn landau_gauge_factor(x: f64, y: f64) -> Complex64 {
    Complex64::new(0.0, -0.5 * x * y).exp()
}

fn center_state(n: u32, y0: f64, x: f64, y: f64) -> Complex64 {
    Complex64::new(0.0, x * y0).exp() * hermite_normalized(n, y - y0)
        / (2.0 * std::f64::consts::PI).sqrt()
}

fn level_state(n: u32, m: i64, r: f64, phi: f64) -> Complex64 {
    let m_abs = m.unsigned_abs() as u32;
    let phase = unit_phase(-m) * if n % 2 == 0 { 1.0 } else { -1.0 };
    let ln_amp = 0.5
        * (ln_factorial(n + m_abs) - f64::from(m_abs) * std::f64::consts::LN_2 - ln_factorial(n))
        - ln_factorial(m_abs);
    let radial = ln_amp.exp()
        * r.powi(m_abs as i32)
        * (-0.25 * r * r).exp()
        * hyp1f1_terminating(n, f64::from(m_abs + 1), 0.5 * r * r).unwrap_or(f64::NAN);
    phase * radial * Complex64::new(0.0, m as f64 * phi).exp()
        / (2.0 * std::f64::consts::PI).sqrt()
}

/// Evaluate a magnetic-field eigenstate in either gauge.
pub fn eval_landau(state: &BasisState, point: &Coordinates) -> Result<Complex64, DomainError> {
    crate::require_system(state, "the Landau problem", matches!(state.system(), System::Osc2))?;
    match state.basis() {
        Basis::Landau(Gauge::Cartesian) => {
            let v = point.expect(Chart::Cartesian, 2)?;
            Ok(center_state(state.int("n") as u32, state.real("y0"), v[0], v[1]))
        }
        Basis::Landau(Gauge::Polar) => {
            if state.number("y0").is_some() {
                let v = point.expect(Chart::Cartesian, 2)?;
                let plain = center_state(state.int("n") as u32, state.real("y0"), v[0], v[1]);
                Ok(landau_gauge_factor(v[0], v[1]) * plain)
            } else {
                let v = point.expect(Chart::Polar, 2)?;
                Ok(level_state(state.int("N") as u32, state.int("m"), v[0], v[1]))
            }
        }
        _ => Err(DomainError::Unsupported(format!(
            "eval_landau needs a landau basis, got {}",
            state.basis_label()
        ))),
    }
}
