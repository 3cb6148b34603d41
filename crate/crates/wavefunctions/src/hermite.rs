//! Normalized Hermite functions.

use specfun::gamma::ln_factorial;
use specfun::orthopoly::hermite;

/// `h_n(z) = (2^n n! sqrt(pi))^(-1/2) exp(-z^2/2) H_n(z)`, orthonormal on
/// the real line with unit weight.
pub fn hermite_normalized(n: u32, z: f64) -> f64 {
    let ln_norm = 0.5
        * (f64::from(n) * std::f64::consts::LN_2
            + ln_factorial(n)
            + 0.5 * std::f64::consts::PI.ln());
    hermite(n, z) * (-0.5 * z * z - ln_norm).exp()
}
