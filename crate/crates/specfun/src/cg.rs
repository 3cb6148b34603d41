//! Clebsch-Gordan coefficients.
//!
//! Half-integer momenta go through an exact rational Racah sum with a single
//! square root at the end. Quarter-integer momenta, which appear in
//! hyperspherical recoupling, are defined by the gamma-function/₃F₂ form;
//! the two routes agree on their common (half-integer) domain.

use crate::angular::AngularMomentum;
use crate::gamma::{log_gamma_signed, recip_gamma};
use crate::hyper::hyp3f2_unit;
use crate::signed_log::SignedLogValue;
use crate::Error;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// ⟨a α; b β | c γ⟩ in the Condon-Shortley convention.
///
/// Returns exactly 0 when γ ≠ α + β, when the triangle rule fails, or when
/// a projection exceeds its momentum. Quarter-integer inputs use the
/// hypergeometric representation; argument arrangements where that form is
/// an indeterminate pole are domain errors.
pub fn clebsch_gordan(
    a: AngularMomentum,
    alpha: AngularMomentum,
    b: AngularMomentum,
    beta: AngularMomentum,
    c: AngularMomentum,
    gamma: AngularMomentum,
) -> Result<f64, Error> {
    if a.quarters() < 0 || b.quarters() < 0 || c.quarters() < 0 {
        return Err(Error::Domain("negative angular momentum".into()));
    }
    if gamma != alpha + beta {
        return Ok(0.0);
    }
    let all_half_integer = [a, alpha, b, beta, c, gamma].iter().all(|x| x.is_half_integer());
    if all_half_integer {
        if !a.same_ladder(alpha) || !b.same_ladder(beta) || !c.same_ladder(gamma) {
            return Err(Error::Domain(format!(
                "projections ({alpha}, {beta}, {gamma}) off the integer ladders of ({a}, {b}, {c})"
            )));
        }
        if alpha.abs() > a || beta.abs() > b || gamma.abs() > c {
            return Ok(0.0);
        }
        // triangle rule, and a+b+c must be an integer
        if (a + b + c).as_int().is_none() || c > a + b || c < (a - b).abs() {
            return Ok(0.0);
        }
        Ok(racah_exact(a, alpha, b, beta, c, gamma))
    } else {
        cg_hypergeometric(
            a.value(),
            alpha.value(),
            b.value(),
            beta.value(),
            c.value(),
            gamma.value(),
        )
    }
}

/// Exact Racah sum. Preconditions (selection rules) checked by the caller.
fn racah_exact(
    a: AngularMomentum,
    alpha: AngularMomentum,
    b: AngularMomentum,
    beta: AngularMomentum,
    c: AngularMomentum,
    gamma: AngularMomentum,
) -> f64 {
    let int = |x: AngularMomentum| -> i64 { i64::from(x.quarters()) / 4 };
    let apc = int(a + alpha);
    let amc = int(a - alpha);
    let bpc = int(b + beta);
    let bmc = int(b - beta);
    let cpc = int(c + gamma);
    let cmc = int(c - gamma);
    let abc = int(a + b - c);
    let acb = int(a - b + c);
    let bca = int(b - a + c);
    let j1 = int(a + b + c) + 1;
    let two_c_plus_1 = i64::from(c.quarters()) / 2 + 1;

    let k_lo = 0.max(-(int(c - b + alpha))).max(-(int(c - a - beta)));
    let k_hi = abc.min(amc).min(bpc);
    if k_hi < k_lo {
        return 0.0;
    }
    let mut sum = BigRational::zero();
    for k in k_lo..=k_hi {
        let den = factorial_big(k)
            * factorial_big(abc - k)
            * factorial_big(amc - k)
            * factorial_big(bpc - k)
            * factorial_big(int(c - b + alpha) + k)
            * factorial_big(int(c - a - beta) + k);
        let term = BigRational::new(BigInt::one(), den);
        if k.rem_euclid(2) == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    if sum.is_zero() {
        return 0.0;
    }
    let pref2 = BigRational::new(
        BigInt::from(two_c_plus_1)
            * factorial_big(abc)
            * factorial_big(acb)
            * factorial_big(bca)
            * factorial_big(apc)
            * factorial_big(amc)
            * factorial_big(bpc)
            * factorial_big(bmc)
            * factorial_big(cpc)
            * factorial_big(cmc),
        factorial_big(j1),
    );
    let r = pref2 * sum.clone() * sum.clone();
    let sign = if sum.is_negative() { -1.0 } else { 1.0 };
    sign * sqrt_big_rational(&r)
}

/// Gamma-function/₃F₂ representation:
///
///   C = δ_{γ,α+β} Δ(abc) / [Γ(a+b−c+1) Γ(c−b+α+1) Γ(c−a−β+1)]
///       · [(2c+1) Γ(a+α+1) Γ(b−β+1) Γ(c+γ+1) Γ(c−γ+1)
///          / (Γ(a−α+1) Γ(b+β+1))]^{1/2}
///       · ₃F₂(c−a−b, −a+α, −b−β; c−a−β+1, c−b+α+1; 1)
///
///   Δ(abc) = [Γ(a+b−c+1) Γ(a−b+c+1) Γ(b−a+c+1) / Γ(a+b+c+2)]^{1/2}
///
/// This extends the coefficient to quarter-integer momenta.
pub fn cg_hypergeometric(
    a: f64,
    alpha: f64,
    b: f64,
    beta: f64,
    c: f64,
    gamma: f64,
) -> Result<f64, Error> {
    if gamma != alpha + beta {
        return Ok(0.0);
    }
    let sqrt_gamma = |x: f64| -> Result<SignedLogValue, Error> {
        let g = log_gamma_signed(x).map_err(|e| {
            Error::Domain(format!("prefactor pole at Γ({x}): {e}"))
        })?;
        if g.sign < 0 {
            return Err(Error::Domain(format!("negative Γ({x}) under a square root")));
        }
        Ok(g.sqrt())
    };
    // Δ(abc) and the radical, all as half-powers of gamma factors
    let delta = sqrt_gamma(a + b - c + 1.0)?
        * sqrt_gamma(a - b + c + 1.0)?
        * sqrt_gamma(b - a + c + 1.0)?
        * sqrt_gamma(a + b + c + 2.0)?.recip();
    let radical = SignedLogValue::from_value(2.0 * c + 1.0).sqrt()
        * sqrt_gamma(a + alpha + 1.0)?
        * sqrt_gamma(b - beta + 1.0)?
        * sqrt_gamma(c + gamma + 1.0)?
        * sqrt_gamma(c - gamma + 1.0)?
        * sqrt_gamma(a - alpha + 1.0)?.recip()
        * sqrt_gamma(b + beta + 1.0)?.recip();
    let denom = recip_gamma(a + b - c + 1.0)
        * recip_gamma(c - b + alpha + 1.0)
        * recip_gamma(c - a - beta + 1.0);
    let f = hyp3f2_unit(
        [c - a - b, -a + alpha, -b - beta],
        [c - a - beta + 1.0, c - b + alpha + 1.0],
    )
    .map_err(|e| {
        if denom.is_zero() {
            Error::Domain(format!("indeterminate form, zero prefactor against {e}"))
        } else {
            Error::Domain(format!("series pole with nonzero prefactor: {e}"))
        }
    })?;
    Ok((delta * radical * denom).value() * f)
}

fn factorial_big(n: i64) -> BigInt {
    debug_assert!(n >= 0, "negative factorial argument {n}");
    let mut f = BigInt::one();
    for k in 2..=n {
        f *= k;
    }
    f
}

fn sqrt_big_rational(r: &BigRational) -> f64 {
    match r.to_f64() {
        Some(v) if v.is_finite() && v != 0.0 => v.sqrt(),
        _ => {
            let ln = ln_big(r.numer()) - ln_big(r.denom());
            (0.5 * ln).exp()
        }
    }
}

fn ln_big(x: &BigInt) -> f64 {
    let (_, digits) = x.abs().to_radix_be(256);
    let mut acc = 0.0f64;
    for &d in digits.iter().take(7) {
        acc = acc * 256.0 + f64::from(d);
    }
    acc.ln() + 256f64.ln() * (digits.len().saturating_sub(7)) as f64
}
