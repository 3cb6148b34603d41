//! Confluent hypergeometric function of complex argument.
//!
//! Scattering states need `1F1(a; c; z)` along the imaginary axis.  The
//! Taylor series is summed term by term in double-double precision and
//! stops once twenty consecutive terms fall below 1e-15 of the running
//! maximum of the partial sums.  Beyond `|z| = 60` (phase `kr = 30` for the
//! radial functions) the irregular expansion at infinity takes over, with
//! both of its series truncated adaptively at their smallest term.

use num_complex::Complex64;
use specfun::gamma::log_gamma_complex;

use crate::dd::{CDd, Dd};
use crate::DomainError;

const TAIL_RUN: usize = 20;
const TAIL_EPS: f64 = 1e-15;
const MAX_TERMS: usize = 10_000;
const SWITCH_NORM: f64 = 60.0;

/// `1F1(a; c; z)`, choosing the series or the expansion at infinity by the
/// magnitude of `z`.
pub(crate) fn hyp1f1(a: Complex64, c: Complex64, z: Complex64) -> Result<Complex64, DomainError> {
    if z.norm() > SWITCH_NORM {
        hyp1f1_asymptotic(a, c, z)
    } else {
        hyp1f1_series(a, c, z)
    }
}

/// Taylor series in double-double arithmetic.
pub(crate) fn hyp1f1_series(
    a: Complex64,
    c: Complex64,
    z: Complex64,
) -> Result<Complex64, DomainError> {
    let zdd = CDd::from_complex(z);
    let mut term = CDd::one();
    let mut sum = CDd::one();
    let mut peak = 1.0f64;
    let mut quiet = 0usize;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        let denom_c = CDd { re: Dd::from_sum(c.re, kf), im: Dd::from_f64(c.im) };
        if denom_c.norm() == 0.0 {
            return Err(DomainError::Numerics(format!(
                "confluent series parameter c = {c} hits a nonpositive integer"
            )));
        }
        let numer = CDd { re: Dd::from_sum(a.re, kf), im: Dd::from_f64(a.im) };
        term = term.mul(numer).mul(zdd).div(denom_c);
        term = CDd {
            re: term.re.div(Dd::from_f64(kf + 1.0)),
            im: term.im.div(Dd::from_f64(kf + 1.0)),
        };
        sum = sum.add(term);
        peak = peak.max(sum.norm());
        if term.norm() < TAIL_EPS * peak {
            quiet += 1;
            if quiet >= TAIL_RUN {
                return Ok(sum.to_complex());
            }
        } else {
            quiet = 0;
        }
    }
    Err(DomainError::Numerics(
        "confluent series did not settle within 10000 terms".into(),
    ))
}

/// Irregular expansion at infinity, both series truncated at the smallest
/// term.  The reciprocal gamma factors send a vanishing contribution to
/// zero when their argument sits on a pole.
pub(crate) fn hyp1f1_asymptotic(
    a: Complex64,
    c: Complex64,
    z: Complex64,
) -> Result<Complex64, DomainError> {
    let lg_c = log_gamma_complex(c).map_err(DomainError::from)?;
    let decreasing = asymptotic_sum(a, a - c + 1.0, -z);
    let outgoing = asymptotic_sum(c - a, Complex64::new(1.0, 0.0) - a, z);
    let mut value = Complex64::new(0.0, 0.0);
    if let Ok(lg) = log_gamma_complex(c - a) {
        value += (lg_c - lg - a * (-z).ln()).exp() * decreasing;
    }
    if let Ok(lg) = log_gamma_complex(a) {
        value += (lg_c - lg + z + (a - c) * z.ln()).exp() * outgoing;
    }
    Ok(value)
}

/// `2F0(p, q; 1/w)` summed to its smallest term.
fn asymptotic_sum(p: Complex64, q: Complex64, w: Complex64) -> Complex64 {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut last = term.norm();
    for k in 0..200 {
        let kf = k as f64;
        let next = term * (p + kf) * (q + kf) / ((kf + 1.0) * w);
        if next.norm() >= last {
            break;
        }
        sum += next;
        term = next;
        last = next.norm();
        if last < 1e-18 * sum.norm().max(1e-290) {
            break;
        }
    }
    sum
}
