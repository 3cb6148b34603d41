//! Discrete states of the planar isotropic oscillator.
//!
//! Units `hbar = M = omega = 1`, so `E = 2J + 1 = N + 1` with
//! `J = (n_x + n_y)/2`.  Half-integer `J` labels the odd levels.  The
//! Cartesian basis carries the phase `(-i)^(J-M)` that makes the
//! interbasis expansion into the polar basis a real rotation matrix.

use num_complex::Complex64;
use specfun::gamma::ln_factorial;
use specfun::hyper::hyp1f1_terminating;

use crate::hermite::hermite_normalized;
use crate::state::{Basis, BasisState, Chart, Coordinates, System};
use crate::DomainError;

pub(crate) fn unit_phase(quarter_turns: i64) -> Complex64 {
    match quarter_turns.rem_euclid(4) {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

fn cartesian(jp: u32, jm: u32, x: f64, y: f64) -> Complex64 {
    unit_phase(-i64::from(jm)) * hermite_normalized(jp, x) * hermite_normalized(jm, y)
}

/// Radial factor of the polar state: `n_r = J - |M'|` quanta over the
/// circular ground state, normalized with weight `r dr`.
pub(crate) fn radial_polar(nr: u32, two_m_abs: u32, r: f64) -> f64 {
    let jp = nr + two_m_abs;
    let sign = if nr % 2 == 0 { 1.0 } else { -1.0 };
    let ln_amp = 0.5 * (std::f64::consts::LN_2 + ln_factorial(jp) - ln_factorial(nr))
        - ln_factorial(two_m_abs);
    sign * ln_amp.exp()
        * r.powi(two_m_abs as i32)
        * (-0.5 * r * r).exp()
        * hyp1f1_terminating(nr, f64::from(two_m_abs + 1), r * r).unwrap_or(f64::NAN)
}

/// Evaluate a planar oscillator state in the Cartesian or polar basis.
pub fn eval_osc2(state: &BasisState, point: &Coordinates) -> Result<Complex64, DomainError> {
    crate::require_system(state, "the planar oscillator", matches!(state.system(), System::Osc2))?;
    match state.basis() {
        Basis::Cartesian => {
            let v = point.expect(Chart::Cartesian, 2)?;
            let j = state.rat("J");
            let m = state.rat("M");
            let jp = (j + m).to_integer() as u32;
            let jm = (j - m).to_integer() as u32;
            Ok(cartesian(jp, jm, v[0], v[1]))
        }
        Basis::Polar => {
            let v = point.expect(Chart::Polar, 2)?;
            let j = state.rat("J");
            let mp = state.rat("Mp");
            let nr = (j - mp.abs()).to_integer() as u32;
            let two_m = (mp * num_rational::Rational64::from_integer(2)).to_integer();
            let radial = radial_polar(nr, two_m.unsigned_abs() as u32, v[0]);
            let angular = Complex64::new(0.0, two_m as f64 * v[1]).exp()
                / (2.0 * std::f64::consts::PI).sqrt();
            Ok(radial * angular)
        }
        _ => Err(DomainError::Unsupported(format!(
            "eval_osc2 covers the Cartesian and polar bases, not {}",
            state.basis_label()
        ))),
    }
}
