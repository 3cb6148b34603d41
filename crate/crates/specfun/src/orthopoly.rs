//! Classical orthogonal polynomials by forward three-term recurrence.
//!
//! Values only; every radial and angular factor in the wavefunction layer is
//! built from these. Recurrences run forward from n = 0, which is stable on
//! the classical orthogonality intervals.

/// Physicists' Hermite polynomial H_n(x).
pub fn hermite(n: u32, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 2.0 * x;
    for k in 1..n {
        let next = 2.0 * x * cur - 2.0 * f64::from(k) * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Generalized Laguerre polynomial L_n^{(α)}(x).
pub fn laguerre(alpha: f64, n: u32, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 1.0 + alpha - x;
    for k in 1..n {
        let kf = f64::from(k);
        let next = ((2.0 * kf + 1.0 + alpha - x) * cur - (kf + alpha) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Jacobi polynomial P_n^{(a,b)}(x).
///
/// The n = 1 step is explicit because the generic recurrence degenerates
/// when a + b is 0 or -1, both of which occur for hyperspherical cells.
pub fn jacobi(a: f64, b: f64, n: u32, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 0.5 * (a - b) + (1.0 + 0.5 * (a + b)) * x;
    for k in 2..=n {
        let kf = f64::from(k);
        let c1 = 2.0 * kf * (kf + a + b) * (2.0 * kf + a + b - 2.0);
        let c2 = (2.0 * kf + a + b - 1.0)
            * ((2.0 * kf + a + b) * (2.0 * kf + a + b - 2.0) * x + a * a - b * b);
        let c3 = 2.0 * (kf + a - 1.0) * (kf + b - 1.0) * (2.0 * kf + a + b);
        let next = (c2 * cur - c3 * prev) / c1;
        prev = cur;
        cur = next;
    }
    cur
}

/// Gegenbauer (ultraspherical) polynomial C_n^{(λ)}(x).
pub fn gegenbauer(lambda: f64, n: u32, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 2.0 * lambda * x;
    for k in 2..=n {
        let kf = f64::from(k);
        let next = (2.0 * x * (kf + lambda - 1.0) * cur - (kf + 2.0 * lambda - 2.0) * prev) / kf;
        prev = cur;
        cur = next;
    }
    cur
}

/// Chebyshev polynomial of the first kind T_n(x).
pub fn chebyshev_t(n: u32, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = x;
    for _ in 1..n {
        let next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Chebyshev polynomial of the second kind U_n(x).
pub fn chebyshev_u(n: u32, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 2.0 * x;
    for _ in 1..n {
        let next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Legendre polynomial P_n(x) = P_n^{(0,0)}(x), kept separate because the
/// quadrature layer leans on it heavily.
pub fn legendre(n: u32, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = x;
    for k in 1..n {
        let kf = f64::from(k);
        let next = ((2.0 * kf + 1.0) * x * cur - kf * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::{ln_factorial, pochhammer};

    const TOL: f64 = 1e-12;

    #[test]
    fn hermite_known_values() {
        // H_3(x) = 8x³ − 12x
        let x = 0.7;
        assert!((hermite(3, x) - (8.0 * x.powi(3) - 12.0 * x)).abs() < TOL);
        // H_4(x) = 16x⁴ − 48x² + 12
        assert!((hermite(4, x) - (16.0 * x.powi(4) - 48.0 * x * x + 12.0)).abs() < TOL);
    }

    #[test]
    fn laguerre_known_values() {
        let x = 1.3;
        // L_2^{(α)}(x) = x²/2 − (α+2)x + (α+1)(α+2)/2
        let alpha = 0.5;
        let expect = x * x / 2.0 - (alpha + 2.0) * x + (alpha + 1.0) * (alpha + 2.0) / 2.0;
        assert!((laguerre(alpha, 2, x) - expect).abs() < TOL);
    }

    #[test]
    fn jacobi_at_unit_argument() {
        // P_n^{(a,b)}(1) = (a+1)_n / n!
        for &(a, b, n) in &[(0.5, -0.5, 4u32), (1.0, 2.0, 3), (-0.5, -0.5, 5), (2.5, 0.0, 6)] {
            let expect = (pochhammer(a + 1.0, n).log_magnitude - ln_factorial(n)).exp();
            assert!(
                (jacobi(a, b, n, 1.0) - expect).abs() < TOL * expect.abs().max(1.0),
                "jacobi({a},{b},{n},1)"
            );
        }
    }

    #[test]
    fn jacobi_degenerate_parameter_sums() {
        // a+b = −1 must still produce the correct linear polynomial at n=1
        let (a, b, x) = (-0.5, -0.5, 0.3);
        assert!((jacobi(a, b, 1, x) - 0.5 * x).abs() < TOL);
        // and a valid n=2 value: P_2^{(-1/2,-1/2)}(x) = (3/8)(2x²-1) · C where
        // P_2^{(-1/2,-1/2)}(1) = (1/2)_2/2! = 3/8
        let expect = 3.0 / 8.0 * (2.0 * x * x - 1.0);
        assert!((jacobi(a, b, 2, x) - expect).abs() < TOL);
    }

    #[test]
    fn gegenbauer_reduces_to_legendre_and_chebyshev() {
        let x = -0.42;
        for n in 0..8u32 {
            assert!((gegenbauer(0.5, n, x) - legendre(n, x)).abs() < TOL);
            assert!((gegenbauer(1.0, n, x) - chebyshev_u(n, x)).abs() < TOL);
        }
    }

    #[test]
    fn chebyshev_trig_identity() {
        let theta: f64 = 1.1;
        for n in 0..10u32 {
            let x = theta.cos();
            assert!((chebyshev_t(n, x) - (f64::from(n) * theta).cos()).abs() < 1e-11);
            let u_expect = ((f64::from(n) + 1.0) * theta).sin() / theta.sin();
            assert!((chebyshev_u(n, x) - u_expect).abs() < 1e-11);
        }
    }

    #[test]
    fn legendre_parity_and_endpoints() {
        for n in 0..12u32 {
            assert!((legendre(n, 1.0) - 1.0).abs() < TOL);
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            assert!((legendre(n, -1.0) - sign).abs() < TOL);
            assert!((legendre(n, -0.6) - sign * legendre(n, 0.6)).abs() < TOL);
        }
    }
}
