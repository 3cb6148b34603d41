//! Ferrers associated Legendre functions.

/// `P_l^m(x) = (1 - x^2)^(m/2) d^m/dx^m P_l(x)` for `0 <= m <= l`, built
/// from the diagonal seed and the upward three-term recurrence.  No
/// Condon-Shortley sign is attached here; callers add phase conventions.
pub fn assoc_legendre(l: u32, m: u32, x: f64) -> f64 {
    assert!(m <= l, "order m = {m} exceeds degree l = {l}");
    let s = (1.0 - x * x).max(0.0).sqrt();
    let mut pmm = 1.0;
    for k in 1..=m {
        pmm *= f64::from(2 * k - 1) * s;
    }
    if l == m {
        return pmm;
    }
    let mut prev = pmm;
    let mut cur = x * f64::from(2 * m + 1) * pmm;
    for degree in (m + 2)..=l {
        let df = f64::from(degree);
        let mf = f64::from(m);
        let next = ((2.0 * df - 1.0) * x * cur - (df + mf - 1.0) * prev) / (df - mf);
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::panel_integrate;
    use specfun::gamma::ln_factorial;
    use specfun::orthopoly::{jacobi, legendre};

    #[test]
    fn low_orders_match_closed_forms() {
        let x = 0.37;
        let s = (1.0 - x * x).sqrt();
        assert!((assoc_legendre(1, 1, x) - s).abs() < 1e-15);
        assert!((assoc_legendre(2, 1, x) - 3.0 * x * s).abs() < 1e-15);
        assert!((assoc_legendre(2, 2, x) - 3.0 * (1.0 - x * x)).abs() < 1e-15);
        assert!((assoc_legendre(3, 2, x) - 15.0 * x * (1.0 - x * x)).abs() < 1e-13);
    }

    #[test]
    fn zero_order_reduces_to_legendre() {
        for l in 0..8u32 {
            for &x in &[-0.9, -0.2, 0.5, 0.95] {
                assert!((assoc_legendre(l, 0, x) - legendre(l, x)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn matches_ultraspherical_jacobi_route() {
        for l in 1..7u32 {
            for m in 1..=l {
                for &x in &[-0.8, 0.1, 0.6] {
                    let s = (1.0 - x * x).sqrt();
                    let scale = (ln_factorial(l + m) - ln_factorial(l) - f64::from(m) * std::f64::consts::LN_2)
                        .exp();
                    let via_jacobi = s.powi(m as i32) * scale * jacobi(f64::from(m), f64::from(m), l - m, x);
                    let direct = assoc_legendre(l, m, x);
                    assert!(
                        (direct - via_jacobi).abs() < 1e-10 * direct.abs().max(1.0),
                        "l = {l}, m = {m}, x = {x}"
                    );
                }
            }
        }
    }

    #[test]
    fn fixed_order_orthogonality() {
        for m in 0..3u32 {
            for l in m..(m + 4) {
                for lp in l..(m + 4) {
                    let overlap = panel_integrate(
                        &|x| assoc_legendre(l, m, x) * assoc_legendre(lp, m, x),
                        -1.0,
                        1.0,
                        8,
                        24,
                    );
                    let expected = if l == lp {
                        2.0 / (2.0 * f64::from(l) + 1.0)
                            * (ln_factorial(l + m) - ln_factorial(l - m)).exp()
                    } else {
                        0.0
                    };
                    assert!(
                        (overlap - expected).abs() < 1e-11 * expected.abs().max(1.0),
                        "l = {l}, lp = {lp}, m = {m}: {overlap} vs {expected}"
                    );
                }
            }
        }
    }
}
