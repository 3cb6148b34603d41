//! Wigner d-matrix elements for half-integer angular momenta.
//!
//! Convention: d^j_{m,m'}(β) = ⟨j m| exp(−iβ J_y) |j m'⟩ with
//! d^{1/2}_{1/2,−1/2}(β) = −sin(β/2). Rows are the first projection index.
//! At β = π/2 the sum is evaluated in exact rational arithmetic with a
//! single square root at the end.

use crate::angular::AngularMomentum;
use crate::gamma::ln_factorial;
use crate::kahan::KahanSum;
use crate::Error;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::f64::consts::FRAC_PI_2;

/// d^j_{m,mp}(β). The three labels must lie on the same integer ladder and
/// satisfy |m| ≤ j, |mp| ≤ j; j must be a half-integer (quarter-integer
/// momenta have no rotation matrix).
pub fn wigner_d(
    j: AngularMomentum,
    m: AngularMomentum,
    mp: AngularMomentum,
    beta: f64,
) -> Result<f64, Error> {
    if !j.is_half_integer() {
        return Err(Error::Domain(format!("j = {j} is not a half-integer")));
    }
    if j.quarters() < 0 {
        return Err(Error::Domain(format!("j = {j} is negative")));
    }
    if !j.same_ladder(m) || !j.same_ladder(mp) {
        return Err(Error::Domain(format!("projections {m}, {mp} not on the ladder of j = {j}")));
    }
    if m.abs() > j || mp.abs() > j {
        return Err(Error::Domain(format!("projection out of range for j = {j}: {m}, {mp}")));
    }
    let jm = (j + m).as_int().expect("ladder-checked") as i64;
    let jmm = (j - m).as_int().expect("ladder-checked") as i64;
    let jmp = (j + mp).as_int().expect("ladder-checked") as i64;
    let jmmp = (j - mp).as_int().expect("ladder-checked") as i64;

    if beta == 0.0 {
        return Ok(if m == mp { 1.0 } else { 0.0 });
    }
    if beta == std::f64::consts::PI {
        // d(π)_{m,mp} = (−1)^{j−mp} δ_{m,−mp}
        return Ok(if m == -mp { neg_one_pow(jmmp) } else { 0.0 });
    }
    if beta == FRAC_PI_2 {
        return Ok(d_half_pi_exact(jm, jmm, jmp, jmmp));
    }
    Ok(d_general(jm, jmm, jmp, jmmp, beta))
}

fn neg_one_pow(k: i64) -> f64 {
    if k.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Generic-angle evaluation in log magnitude with compensated summation.
fn d_general(jm: i64, jmm: i64, jmp: i64, jmmp: i64, beta: f64) -> f64 {
    let half = 0.5 * beta;
    let (c, s) = (half.cos(), half.sin());
    let ln_pref = 0.5
        * (ln_factorial(jm as u32)
            + ln_factorial(jmm as u32)
            + ln_factorial(jmp as u32)
            + ln_factorial(jmmp as u32));
    // m − mp and the cosine exponent in terms of the four integers:
    // m − mp = (jm − jmp), 2j + mp − m = jmp + jmm
    let mmp = jm - jmp;
    let k_lo = (-mmp).max(0);
    let k_hi = jmp.min(jmm);
    let mut sum = KahanSum::new();
    for k in k_lo..=k_hi {
        let e_c = (jmp + jmm - 2 * k) as i32;
        let e_s = (mmp + 2 * k) as i32;
        let ln_den = ln_factorial((jmp - k) as u32)
            + ln_factorial(k as u32)
            + ln_factorial((jmm - k) as u32)
            + ln_factorial((mmp + k) as u32);
        let magnitude = (ln_pref - ln_den).exp();
        let sign = neg_one_pow(k);
        sum.add(sign * magnitude * c.powi(e_c) * (-s).powi(e_s));
    }
    sum.value()
}

/// β = π/2: exact rational sum, one square root at the end.
fn d_half_pi_exact(jm: i64, jmm: i64, jmp: i64, jmmp: i64) -> f64 {
    let mmp = jm - jmp;
    let k_lo = (-mmp).max(0);
    let k_hi = jmp.min(jmm);
    let mut sum = BigRational::zero();
    for k in k_lo..=k_hi {
        let den = factorial_big(jmp - k) * factorial_big(k) * factorial_big(jmm - k)
            * factorial_big(mmp + k);
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
    let two_j = jm + jmm;
    let f = factorial_big(jm) * factorial_big(jmm) * factorial_big(jmp) * factorial_big(jmmp);
    // magnitude is √F |Σ| (1/√2)^{2j}, so the radicand carries 2^{2j}
    let r = BigRational::from(f) * sum.clone() * sum.clone()
        / BigRational::from(BigInt::from(2).pow(two_j as u32));
    let overall = if sum.is_negative() { -1.0 } else { 1.0 } * neg_one_pow(mmp);
    overall * sqrt_big_rational(&r)
}

fn factorial_big(n: i64) -> BigInt {
    debug_assert!(n >= 0);
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

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use std::f64::consts::PI;

    const TOL: f64 = 1e-12;

    fn am(q: i32) -> AngularMomentum {
        AngularMomentum::from_quarters(q)
    }

    fn half(h: i32) -> AngularMomentum {
        AngularMomentum::from_halves(h)
    }

    fn int(n: i32) -> AngularMomentum {
        AngularMomentum::from_int(n)
    }

    #[test]
    fn spin_half_matrix() {
        let b = 0.83;
        let j = half(1);
        assert!((wigner_d(j, half(1), half(1), b).unwrap() - (b / 2.0).cos()).abs() < TOL);
        assert!((wigner_d(j, half(1), half(-1), b).unwrap() + (b / 2.0).sin()).abs() < TOL);
        assert!((wigner_d(j, half(-1), half(1), b).unwrap() - (b / 2.0).sin()).abs() < TOL);
        assert!((wigner_d(j, half(-1), half(-1), b).unwrap() - (b / 2.0).cos()).abs() < TOL);
    }

    #[test]
    fn spin_one_matrix() {
        let b = 1.21f64;
        let j = int(1);
        let (cb, sb) = (b.cos(), b.sin());
        assert!((wigner_d(j, int(1), int(1), b).unwrap() - (1.0 + cb) / 2.0).abs() < TOL);
        assert!((wigner_d(j, int(1), int(0), b).unwrap() + sb / 2f64.sqrt()).abs() < TOL);
        assert!((wigner_d(j, int(1), int(-1), b).unwrap() - (1.0 - cb) / 2.0).abs() < TOL);
        assert!((wigner_d(j, int(0), int(0), b).unwrap() - cb).abs() < TOL);
        assert!((wigner_d(j, int(0), int(1), b).unwrap() - sb / 2f64.sqrt()).abs() < TOL);
    }

    #[test]
    fn exact_and_generic_paths_agree_at_half_pi() {
        for jq in (0..=16).step_by(2) {
            let j = am(jq);
            let mut mq = -jq;
            while mq <= jq {
                let mut mpq = -jq;
                while mpq <= jq {
                    let exact = wigner_d(j, am(mq), am(mpq), FRAC_PI_2).unwrap();
                    let generic = d_general(
                        i64::from((jq + mq) / 4),
                        i64::from((jq - mq) / 4),
                        i64::from((jq + mpq) / 4),
                        i64::from((jq - mpq) / 4),
                        FRAC_PI_2,
                    );
                    assert!(
                        (exact - generic).abs() < 1e-13,
                        "j={jq} m={mq} mp={mpq}: {exact} vs {generic}"
                    );
                    mpq += 4;
                }
                mq += 4;
            }
        }
    }

    #[test]
    fn unitarity_small_j() {
        // Σ_mp d_{m,mp} d_{m',mp} = δ_{m,m'} for j ≤ 4
        for jq in (0..=16).step_by(2) {
            let j = am(jq);
            for &beta in &[0.0, FRAC_PI_2, 1.0, PI] {
                let mut mq = -jq;
                while mq <= jq {
                    let mut m2q = -jq;
                    while m2q <= jq {
                        let mut acc = KahanSum::new();
                        let mut mpq = -jq;
                        while mpq <= jq {
                            acc.add(
                                wigner_d(j, am(mq), am(mpq), beta).unwrap()
                                    * wigner_d(j, am(m2q), am(mpq), beta).unwrap(),
                            );
                            mpq += 4;
                        }
                        let expect = if mq == m2q { 1.0 } else { 0.0 };
                        assert!(
                            (acc.value() - expect).abs() < TOL,
                            "j={jq} β={beta} m={mq} m'={m2q}"
                        );
                        m2q += 4;
                    }
                    mq += 4;
                }
            }
        }
    }

    #[test]
    fn transposition_symmetry() {
        // d_{m,mp}(β) = (−1)^{m−mp} d_{mp,m}(β)
        let j = half(5);
        let b = 0.67;
        let mut mq = -10;
        while mq <= 10 {
            let mut mpq = -10;
            while mpq <= 10 {
                let lhs = wigner_d(j, am(mq), am(mpq), b).unwrap();
                let rhs = neg_one_pow(((mq - mpq) / 4) as i64) * wigner_d(j, am(mpq), am(mq), b).unwrap();
                assert!((lhs - rhs).abs() < TOL);
                mpq += 4;
            }
            mq += 4;
        }
    }

    #[test]
    fn row_reflection_at_half_pi() {
        // d_{m,mp}(π/2) = (−1)^{j−mp} d_{−m,mp}(π/2)
        for jq in [4, 6, 8, 12] {
            let j = am(jq);
            let mut mq = -jq;
            while mq <= jq {
                let mut mpq = -jq;
                while mpq <= jq {
                    let lhs = wigner_d(j, am(mq), am(mpq), FRAC_PI_2).unwrap();
                    let rhs = neg_one_pow(((jq - mpq) / 4) as i64)
                        * wigner_d(j, am(-mq), am(mpq), FRAC_PI_2).unwrap();
                    assert!((lhs - rhs).abs() < TOL, "j={jq} m={mq} mp={mpq}");
                    mpq += 4;
                }
                mq += 4;
            }
        }
    }

    #[test]
    fn quarter_turn_addition_theorem() {
        // Σ_{M''} d^J_{M,M''}(π/2) d^J_{M'',M'}(π/2) e^{−iπM''/2}
        //   = (−i)^{M+M'} d^J_{M,M'}(π/2)   for J ≤ 3
        for jq in (0..=12).step_by(2) {
            let j = am(jq);
            let mut mq = -jq;
            while mq <= jq {
                let mut m2q = -jq;
                while m2q <= jq {
                    let mut acc = Complex64::new(0.0, 0.0);
                    let mut kq = -jq;
                    while kq <= jq {
                        let phase = Complex64::from_polar(1.0, -PI * f64::from(kq) / 8.0);
                        acc += wigner_d(j, am(mq), am(kq), FRAC_PI_2).unwrap()
                            * wigner_d(j, am(kq), am(m2q), FRAC_PI_2).unwrap()
                            * phase;
                        kq += 4;
                    }
                    let expect = Complex64::from_polar(1.0, -PI * f64::from(mq + m2q) / 8.0)
                        * wigner_d(j, am(mq), am(m2q), FRAC_PI_2).unwrap();
                    assert!(
                        (acc - expect).norm() < TOL,
                        "J={jq} M={mq} M'={m2q}: {acc} vs {expect}"
                    );
                    m2q += 4;
                }
                mq += 4;
            }
        }
    }

    #[test]
    fn domain_errors() {
        assert!(wigner_d(am(1), am(1), am(1), 0.5).is_err());
        assert!(wigner_d(int(1), half(1), int(0), 0.5).is_err());
        assert!(wigner_d(int(1), int(2), int(0), 0.5).is_err());
        assert!(wigner_d(half(-1), half(1), half(1), 0.5).is_err());
    }
}
