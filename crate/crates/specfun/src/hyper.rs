//! Terminating hypergeometric series at unit argument and their classical
//! closed forms.
//!
//! All sums are compensated; when an alternating sum cancels by more than
//! six orders of magnitude and every parameter is an exact small rational,
//! the sum is redone in exact rational arithmetic.

use crate::gamma::{log_gamma_signed, pochhammer, recip_gamma};
use crate::kahan::KahanSum;
use crate::signed_log::SignedLogValue;
use crate::Error;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Cancellation ratio beyond which the exact-rational path takes over.
const RATIONAL_FALLBACK_RATIO: f64 = 1e6;
/// Parameters are snapped to p/q when within this distance.
const SNAP_TOL: f64 = 1e-9;
const MAX_SNAP_DEN: i64 = 24;

fn snap_rational(x: f64) -> Option<(i64, i64)> {
    if !x.is_finite() || x.abs() > 1e12 {
        return None;
    }
    for q in 1..=MAX_SNAP_DEN {
        let scaled = x * q as f64;
        let p = scaled.round();
        if (scaled - p).abs() < SNAP_TOL * q as f64 {
            return Some((p as i64, q));
        }
    }
    None
}

fn nonpositive_integer(x: f64) -> Option<u32> {
    let r = x.round();
    if (x - r).abs() < SNAP_TOL && r <= 0.0 && -r <= f64::from(u32::MAX) {
        Some(-r as u32)
    } else {
        None
    }
}

/// Confluent series F(−n; c; x) = Σ_{s=0}^{n} (−n)_s x^s / ((c)_s s!).
///
/// Errors when c is one of 0, −1, …, −(n−1): a denominator Pochhammer
/// factor then vanishes before the numerator terminates the sum.
pub fn hyp1f1_terminating(n: u32, c: f64, x: f64) -> Result<f64, Error> {
    if let Some(t) = nonpositive_integer(c) {
        if t < n {
            return Err(Error::Parameter(format!(
                "denominator parameter {c} vanishes inside a series of {n} terms"
            )));
        }
    }
    let mut sum = KahanSum::new();
    let mut term = 1.0;
    let mut max_abs = 1.0f64;
    sum.add(term);
    for s in 0..n {
        let sf = f64::from(s);
        term *= (sf - f64::from(n)) * x / ((c + sf) * (sf + 1.0));
        sum.add(term);
        max_abs = max_abs.max(term.abs());
    }
    let value = sum.value();
    if max_abs > RATIONAL_FALLBACK_RATIO * value.abs() {
        if let (Some(cr), Some(xr)) = (snap_rational(c), snap_rational(x)) {
            return Ok(rational_1f1(n, cr, xr));
        }
    }
    Ok(value)
}

fn big_ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

fn rational_1f1(n: u32, c: (i64, i64), x: (i64, i64)) -> f64 {
    let c = big_ratio(c.0, c.1);
    let x = big_ratio(x.0, x.1);
    let mut term = BigRational::from(BigInt::from(1));
    let mut sum = term.clone();
    for s in 0..n {
        let sf = BigRational::from(BigInt::from(s));
        term *= (sf.clone() - BigRational::from(BigInt::from(n))) * x.clone()
            / ((c.clone() + sf.clone()) * (sf + BigRational::from(BigInt::from(1))));
        sum += term.clone();
    }
    sum.to_f64().unwrap_or(f64::NAN)
}

/// Gauss summation Γ(c)Γ(c−a−b) / (Γ(c−a)Γ(c−b)) for ₂F₁(a,b;c;1).
///
/// Denominator poles follow the reciprocal convention, giving an exact zero.
pub fn gauss_closed_form(a: f64, b: f64, c: f64) -> Result<f64, Error> {
    let num = log_gamma_signed(c)? * log_gamma_signed(c - a - b)?;
    let den = recip_gamma(c - a) * recip_gamma(c - b);
    Ok((num * den).value())
}

/// ₂F₁(a, b; c; 1). Terminating series are summed directly; otherwise the
/// Gauss closed form applies when c − a − b > 0, and the series diverges
/// when it is not.
pub fn hyp2f1_unit(a: f64, b: f64, c: f64) -> Result<f64, Error> {
    let n_term = match (nonpositive_integer(a), nonpositive_integer(b)) {
        (Some(na), Some(nb)) => Some(na.min(nb)),
        (Some(na), None) => Some(na),
        (None, Some(nb)) => Some(nb),
        (None, None) => None,
    };
    if let Some(n) = n_term {
        if let Some(t) = nonpositive_integer(c) {
            if t < n {
                return Err(Error::Parameter(format!(
                    "denominator parameter {c} vanishes inside a series of {n} terms"
                )));
            }
        }
        let mut sum = KahanSum::new();
        let mut term = 1.0;
        let mut max_abs = 1.0f64;
        sum.add(term);
        for s in 0..n {
            let sf = f64::from(s);
            term *= (a + sf) * (b + sf) / ((c + sf) * (sf + 1.0));
            sum.add(term);
            max_abs = max_abs.max(term.abs());
        }
        let value = sum.value();
        if max_abs > RATIONAL_FALLBACK_RATIO * value.abs() {
            if let (Some(ar), Some(br), Some(cr)) =
                (snap_rational(a), snap_rational(b), snap_rational(c))
            {
                return Ok(rational_pfq(&[ar, br], &[cr], n));
            }
        }
        return Ok(value);
    }
    if nonpositive_integer(c).is_some() {
        return Err(Error::Parameter(format!("nonterminating series with c = {c}")));
    }
    if c - a - b <= 0.0 {
        return Err(Error::Divergent(format!("c - a - b = {} is not positive", c - a - b)));
    }
    gauss_closed_form(a, b, c)
}

/// ₃F₂(a₁, a₂, a₃; b₁, b₂; 1) for terminating series. At least one numerator
/// parameter must be a nonpositive integer.
pub fn hyp3f2_unit(num: [f64; 3], den: [f64; 2]) -> Result<f64, Error> {
    let n = num
        .iter()
        .filter_map(|&a| nonpositive_integer(a))
        .min()
        .ok_or_else(|| Error::NonTerminating(format!("no nonpositive integer in {num:?}")))?;
    for &b in &den {
        if let Some(t) = nonpositive_integer(b) {
            if t < n {
                return Err(Error::Parameter(format!(
                    "denominator parameter {b} vanishes inside a series of {n} terms"
                )));
            }
        }
    }
    let mut sum = KahanSum::new();
    let mut term = 1.0;
    let mut max_abs = 1.0f64;
    sum.add(term);
    for s in 0..n {
        let sf = f64::from(s);
        term *= (num[0] + sf) * (num[1] + sf) * (num[2] + sf)
            / ((den[0] + sf) * (den[1] + sf) * (sf + 1.0));
        sum.add(term);
        max_abs = max_abs.max(term.abs());
    }
    let value = sum.value();
    if max_abs > RATIONAL_FALLBACK_RATIO * value.abs() {
        let snapped: Option<Vec<(i64, i64)>> =
            num.iter().chain(den.iter()).map(|&x| snap_rational(x)).collect();
        if let Some(parts) = snapped {
            return Ok(rational_pfq(&parts[..3], &parts[3..], n));
        }
    }
    Ok(value)
}

/// Exact-rational ₚF_q partial sum over `n + 1` terms.
fn rational_pfq(num: &[(i64, i64)], den: &[(i64, i64)], n: u32) -> f64 {
    let num: Vec<BigRational> = num.iter().map(|&(p, q)| big_ratio(p, q)).collect();
    let den: Vec<BigRational> = den.iter().map(|&(p, q)| big_ratio(p, q)).collect();
    let one = BigRational::from(BigInt::from(1));
    let mut term = one.clone();
    let mut sum = term.clone();
    for s in 0..n {
        let sf = BigRational::from(BigInt::from(s));
        let mut ratio = one.clone();
        for a in &num {
            ratio *= a.clone() + sf.clone();
        }
        for b in &den {
            let factor = b.clone() + sf.clone();
            if factor.is_zero() {
                return f64::NAN;
            }
            ratio /= factor;
        }
        ratio /= sf + one.clone();
        term *= ratio;
        sum += term.clone();
        if term.is_zero() {
            break;
        }
    }
    if sum.is_zero() {
        return 0.0;
    }
    let sign = if sum.is_negative() { -1.0 } else { 1.0 };
    // to_f64 on huge numerator/denominator pairs can overflow; go via logs
    match sum.to_f64() {
        Some(v) if v.is_finite() => v,
        _ => {
            let ln = ln_big(sum.numer()) - ln_big(sum.denom());
            sign * ln.exp()
        }
    }
}

fn ln_big(x: &BigInt) -> f64 {
    let (_, digits) = x.to_radix_be(256);
    let mut acc = 0.0f64;
    for &d in digits.iter().take(7) {
        acc = acc * 256.0 + f64::from(d);
    }
    acc.ln() + 256f64.ln() * (digits.len().saturating_sub(7)) as f64
}

/// Saalschütz summation for the balanced terminating series
/// ₃F₂(−n, a, b; c, 1+a+b−c−n; 1) = (c−a)_n (c−b)_n / ((c)_n (c−a−b)_n).
pub fn saalschuetz_closed_form(n: u32, a: f64, b: f64, c: f64) -> Result<f64, Error> {
    let num = pochhammer(c - a, n) * pochhammer(c - b, n);
    let den = pochhammer(c, n) * pochhammer(c - a - b, n);
    if den.is_zero() {
        if num.is_zero() {
            return Err(Error::Parameter(
                "indeterminate 0/0 in Saalschütz closed form".into(),
            ));
        }
        return Err(Error::Parameter("denominator Pochhammer vanishes".into()));
    }
    Ok((num / den).value())
}

/// Watson summation
/// ₃F₂(a, b, c; (a+b+1)/2, 2c; 1)
///   = Γ(1/2)Γ(c+1/2)Γ((a+b+1)/2)Γ((1−a−b)/2+c)
///   / [Γ((a+1)/2)Γ((b+1)/2)Γ((1−a)/2+c)Γ((1−b)/2+c)].
pub fn watson_closed_form(a: f64, b: f64, c: f64) -> Result<f64, Error> {
    let num = log_gamma_signed(0.5)?
        * log_gamma_signed(c + 0.5)?
        * log_gamma_signed((a + b + 1.0) / 2.0)?
        * log_gamma_signed((1.0 - a - b) / 2.0 + c)?;
    let den = recip_gamma((a + 1.0) / 2.0)
        * recip_gamma((b + 1.0) / 2.0)
        * recip_gamma((1.0 - a) / 2.0 + c)
        * recip_gamma((1.0 - b) / 2.0 + c);
    Ok((num * den).value())
}

/// Thomae relation for the terminating series ₃F₂(a, b, −n; d, e; 1):
///
///   ₃F₂(a, b, −n; d, e; 1) = [(e−a)_n / (e)_n] · ₃F₂(a, d−b, −n; d, a+1−n−e; 1)
///
/// Returns the prefactor and the transformed parameter arrays.
pub fn thomae_transform(
    a: f64,
    b: f64,
    n: u32,
    d: f64,
    e: f64,
) -> Result<(f64, [f64; 3], [f64; 2]), Error> {
    let den = pochhammer(e, n);
    if den.is_zero() {
        return Err(Error::Parameter(format!("(e)_n vanishes for e = {e}, n = {n}")));
    }
    let pref = (pochhammer(e - a, n) / den).value();
    let nf = f64::from(n);
    Ok((pref, [a, d - b, -nf], [d, a + 1.0 - nf - e]))
}

/// Signed-log variant of the Thomae prefactor, for callers assembling
/// products of large gamma factors.
pub fn thomae_prefactor(a: f64, n: u32, e: f64) -> Result<SignedLogValue, Error> {
    let den = pochhammer(e, n);
    if den.is_zero() {
        return Err(Error::Parameter(format!("(e)_n vanishes for e = {e}, n = {n}")));
    }
    Ok(pochhammer(e - a, n) / den)
}
