use crate::builder::{build_system, Parity, SystemKind};
use crate::solver::solve_spectrum;
use crate::Error;

/// Coefficient chains of the separated polynomial factors for one branch.
///
/// `a` belongs to the quasiradial factor (unbounded coordinate), `b` to the
/// quasiangular one (bounded coordinate); both are normalised to a leading
/// coefficient of one.  The residuals are the largest relative defect of the
/// three-term recurrences over all rows, including the closure row that
/// truncates each chain.
///
/// `eigenvalue` is the separation constant in the convention of
/// [`solve_spectrum`].  For the spatial system the constant of the classical
/// normal form of the spheroidal equations is `eigenvalue + r^2/(4 n^2)`; the
/// shift cancels inside the recurrences, which only ever see the solver value.
#[derive(Debug, Clone, PartialEq)]
pub struct SeparatedPolynomials {
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    pub eigenvalue: f64,
    pub a_residual: f64,
    pub b_residual: f64,
}

/// Run a generic three-term chain `p(s) x_{s+1} + q(s) x_s + t(s) x_{s-1} = 0`
/// of `len` coefficients starting from `x_0 = 1`, returning the chain and the
/// worst relative row residual (the rows used for construction close to
/// machine precision; the final row measures termination).
fn run_chain(
    len: usize,
    p: impl Fn(usize) -> f64,
    q: impl Fn(usize) -> f64,
    t: impl Fn(usize) -> f64,
) -> (Vec<f64>, f64) {
    let mut x = vec![0.0; len + 1];
    x[0] = 1.0;
    for s in 0..len {
        let prev = if s == 0 { 0.0 } else { x[s - 1] };
        x[s + 1] = -(q(s) * x[s] + t(s) * prev) / p(s);
    }
    let mut worst: f64 = 0.0;
    for s in 0..len {
        let prev = if s == 0 { 0.0 } else { x[s - 1] };
        let next = if s + 1 < len { x[s + 1] } else { 0.0 };
        let lhs = p(s) * next + q(s) * x[s] + t(s) * prev;
        let scale = (p(s) * next).abs() + (q(s) * x[s]).abs() + (t(s) * prev).abs();
        worst = worst.max(lhs.abs() / scale.max(1.0));
    }
    x.truncate(len);
    (x, worst)
}

fn h3_chains(n: u32, m: i32, lambda: f64, r: f64) -> SeparatedPolynomials {
    let am = m.unsigned_abs() as f64;
    let nf = f64::from(n);
    let len = (n - m.unsigned_abs()) as usize;
    let alpha = |s: usize| 2.0 * (s as f64 + 1.0) * (s as f64 + am + 1.0);
    let gamma = |s: usize| (len as f64 - s as f64) / nf;
    let beta = |s: usize, sign: f64| {
        (s as f64 + am) * (s as f64 + am + 1.0)
            + sign * r / nf * (len as f64 - 2.0 * s as f64 - 1.0)
            + lambda
    };
    let (a, a_res) = run_chain(len, alpha, |s| beta(s, 1.0), |s| r * gamma(s));
    let (b, b_res) = run_chain(
        len,
        |s| -alpha(s),
        |s| beta(s, -1.0),
        |s| r * gamma(s),
    );
    SeparatedPolynomials {
        a,
        b,
        eigenvalue: lambda,
        a_residual: a_res,
        b_residual: b_res,
    }
}

fn h2_chain(n: u32, odd: bool, lambda: f64, r: f64) -> (Vec<f64>, f64) {
    let nf = f64::from(n);
    let omega = 2.0 / (2.0 * nf + 1.0);
    let alpha = 2.0 * omega * r;
    let g = -lambda + nf * omega * r;
    if odd {
        run_chain(
            n as usize,
            |s| (s as f64 + 1.5) * (s as f64 + 1.0),
            |s| g - (s as f64) * (s as f64 + alpha) - (2.0 * s as f64 + 1.0 + 0.5 * alpha),
            |s| alpha * (s as f64 - nf),
        )
    } else {
        run_chain(
            n as usize + 1,
            |s| (s as f64 + 0.5) * (s as f64 + 1.0),
            |s| g - (s as f64) * (s as f64 + alpha),
            |s| alpha * (s as f64 - 1.0 - nf),
        )
    }
}

/// One planar-oscillator coefficient family: `a`-type chains attach the
/// recurrence to even/odd powers directly, `b`-type chains to the series
/// multiplying an extra sine factor.  `r2` may be negative (the quasiradial
/// continuation).
fn osc2_chain(
    big_n: u32,
    family_b: bool,
    odd_powers: bool,
    lambda: f64,
    r2: f64,
) -> (Vec<f64>, f64) {
    let nf = f64::from(big_n);
    let eps = nf + 1.0;
    let len = match (family_b, odd_powers) {
        (false, false) => big_n as usize / 2 + 1,
        (false, true) | (true, false) => (big_n as usize + 1) / 2,
        (true, true) => big_n as usize / 2,
    };
    let k_of = move |s: usize| if odd_powers { 2 * s + 1 } else { 2 * s } as f64;
    if family_b {
        run_chain(
            len,
            move |s| (k_of(s) + 1.0) * (k_of(s) + 2.0),
            move |s| {
                let k = k_of(s);
                -(k + 1.0) * (k + 1.0) + 0.25 * r2 * (nf - 2.0 * k) - lambda
            },
            move |s| 0.5 * r2 * (k_of(s) - eps),
        )
    } else {
        run_chain(
            len,
            move |s| (k_of(s) + 1.0) * (k_of(s) + 2.0),
            move |s| {
                let k = k_of(s);
                -k * k + 0.25 * r2 * (nf - 2.0 * k) - lambda
            },
            move |s| 0.5 * r2 * (k_of(s) - eps - 1.0),
        )
    }
}

/// Coefficient chains for the separated polynomial factors of branch `q`.
///
/// Provided for the planar hydrogen and oscillator chains and the spatial
/// hydrogen chain.  For the planar systems `m` selects the reflection class
/// (`0` for the even/cosine class, `1` for the odd/sine class); for the
/// spatial system `m` is the azimuthal quantum number.  `q` indexes the
/// descending eigenvalues as in [`solve_spectrum`].
pub fn build_separated_polynomials(
    kind: SystemKind,
    n: u32,
    m: i32,
    q: usize,
    r: f64,
) -> Result<SeparatedPolynomials, Error> {
    match kind {
        SystemKind::H3Spheroidal => {
            let spec = solve_spectrum(&build_system(kind, n, m, 0, Parity::None, r)?)?;
            let lambda = *spec.eigenvalues.get(q).ok_or_else(|| {
                Error::Domain(format!("branch index {q} out of range"))
            })?;
            Ok(h3_chains(n, m, lambda, r))
        }
        SystemKind::H2Elliptic => {
            let parity = class_from_selector(m)?;
            let spec = solve_spectrum(&build_system(kind, n, 0, 0, parity, r)?)?;
            let lambda = *spec.eigenvalues.get(q).ok_or_else(|| {
                Error::Domain(format!("branch index {q} out of range"))
            })?;
            let odd = parity == Parity::Minus;
            let (b, b_res) = h2_chain(n, odd, lambda, r);
            let (a, a_res) = h2_chain(n, odd, lambda, -r);
            Ok(SeparatedPolynomials {
                a,
                b,
                eigenvalue: lambda,
                a_residual: a_res,
                b_residual: b_res,
            })
        }
        SystemKind::Osc2Elliptic => {
            let parity = class_from_selector(m)?;
            let spec = solve_spectrum(&build_system(kind, n, 0, 0, parity, r)?)?;
            let lambda = *spec.eigenvalues.get(q).ok_or_else(|| {
                Error::Domain(format!("branch index {q} out of range"))
            })?;
            let r2 = r * r;
            let (family_b, odd_powers) = match (n % 2, parity) {
                (0, Parity::Plus) => (false, false),
                (1, Parity::Plus) => (false, true),
                (1, Parity::Minus) => (true, false),
                _ => (true, true),
            };
            let (b, b_res) = osc2_chain(n, family_b, odd_powers, lambda, r2);
            let (radial_family_b, radial_odd) = match (family_b, odd_powers) {
                (false, false) => (false, false),
                (false, true) => (true, false),
                (true, false) => (false, true),
                (true, true) => (true, true),
            };
            let (a, a_res) = osc2_chain(n, radial_family_b, radial_odd, lambda, -r2);
            Ok(SeparatedPolynomials {
                a,
                b,
                eigenvalue: lambda,
                a_residual: a_res,
                b_residual: b_res,
            })
        }
        _ => Err(Error::Domain(
            "separated polynomial chains are provided for the hydrogen and planar \
             oscillator systems"
                .into(),
        )),
    }
}

fn class_from_selector(m: i32) -> Result<Parity, Error> {
    match m {
        0 => Ok(Parity::Plus),
        1 => Ok(Parity::Minus),
        _ => Err(Error::Domain(
            "for the planar systems m selects the reflection class and must be 0 or 1".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Polynomial part of the associated Legendre function: `P_l^m(x)` with
    /// the factor `(1-x^2)^{m/2}` removed.
    fn legendre_poly_part(l: u32, m: u32, x: f64) -> f64 {
        let mut pmm = 1.0;
        for k in 1..=m {
            pmm *= 2.0 * f64::from(k) - 1.0;
        }
        if l == m {
            return pmm;
        }
        let mut prev = pmm;
        let mut cur = (2.0 * f64::from(m) + 1.0) * x * pmm;
        for ll in m + 1..l {
            let lf = f64::from(ll);
            let mf = f64::from(m);
            let next = ((2.0 * lf + 1.0) * x * cur - (lf + mf) * prev) / (lf - mf + 1.0);
            prev = cur;
            cur = next;
        }
        cur
    }

    #[test]
    fn spatial_hydrogen_example_coefficient() {
        let chains =
            build_separated_polynomials(SystemKind::H3Spheroidal, 2, 0, 0, 2.0).unwrap();
        let lambda = -1.0 + 2.0_f64.sqrt();
        assert!((chains.eigenvalue - lambda).abs() < 1e-12);
        let expected = -(1.0 + lambda) / 2.0;
        assert!((chains.a[1] - expected).abs() < 1e-10, "{}", chains.a[1]);
        assert!(chains.a_residual < 1e-10);
        assert!(chains.b_residual < 1e-10);
    }

    #[test]
    fn lowest_spatial_level_is_constant() {
        let chains =
            build_separated_polynomials(SystemKind::H3Spheroidal, 1, 0, 0, 3.0).unwrap();
        assert_eq!(chains.a, vec![1.0]);
        assert_eq!(chains.b, vec![1.0]);
        assert!(chains.a_residual < 1e-12);
        assert!(chains.b_residual < 1e-12);
    }

    #[test]
    fn residuals_stay_small_across_systems_and_branches() {
        for r in [0.5, 2.0] {
            for n in 2..=4u32 {
                for m in 0..n as i32 {
                    let dim = (n as i32 - m) as usize;
                    for q in 0..dim {
                        let c = build_separated_polynomials(SystemKind::H3Spheroidal, n, m, q, r)
                            .unwrap();
                        assert!(c.a_residual < 1e-10, "H3 a n={n} m={m} q={q} r={r}");
                        assert!(c.b_residual < 1e-10, "H3 b n={n} m={m} q={q} r={r}");
                    }
                }
            }
            for n in 1..=3u32 {
                for class in 0..=1 {
                    let dim = if class == 0 { n as usize + 1 } else { n as usize };
                    for q in 0..dim {
                        let c = build_separated_polynomials(SystemKind::H2Elliptic, n, class, q, r)
                            .unwrap();
                        assert!(c.a_residual < 1e-10, "H2 a n={n} class={class} q={q} r={r}");
                        assert!(c.b_residual < 1e-10, "H2 b n={n} class={class} q={q} r={r}");
                    }
                }
            }
            for big_n in 2..=5u32 {
                for class in 0..=1 {
                    let parity = if class == 0 { Parity::Plus } else { Parity::Minus };
                    let Ok(sys) = build_system(SystemKind::Osc2Elliptic, big_n, 0, 0, parity, r)
                    else {
                        continue;
                    };
                    for q in 0..sys.dim {
                        let c =
                            build_separated_polynomials(SystemKind::Osc2Elliptic, big_n, class, q, r)
                                .unwrap();
                        assert!(c.a_residual < 1e-10, "osc a N={big_n} class={class} q={q}");
                        assert!(c.b_residual < 1e-10, "osc b N={big_n} class={class} q={q}");
                    }
                }
            }
        }
    }

    #[test]
    fn angular_chain_collapses_to_legendre_at_small_r() {
        let r = 1e-6;
        for (n, m, q) in [(3u32, 0i32, 1usize), (3, 1, 1), (4, 2, 0)] {
            let chains = build_separated_polynomials(SystemKind::H3Spheroidal, n, m, q, r).unwrap();
            let l = m.unsigned_abs() + q as u32;
            let mut ratio: Option<f64> = None;
            for eta in [-0.7_f64, -0.2, 0.4, 0.8] {
                let mut poly = 0.0;
                for (s, c) in chains.b.iter().enumerate() {
                    poly += c * (1.0 + eta).powi(s as i32);
                }
                let reference = legendre_poly_part(l, m.unsigned_abs(), -eta);
                let rho: f64 = poly / reference;
                if let Some(r0) = ratio {
                    assert!(
                        (rho / r0 - 1.0_f64).abs() < 1e-4,
                        "n={n} m={m} q={q}: ratio drift {rho} vs {r0}"
                    );
                } else {
                    ratio = Some(rho);
                }
            }
        }
    }

    #[test]
    fn quasiradial_degree_drops_to_the_second_parabolic_label_at_large_r() {
        let r = 1e7;
        let chains = build_separated_polynomials(SystemKind::H3Spheroidal, 4, 1, 1, r).unwrap();
        let scaled: Vec<f64> = chains
            .a
            .iter()
            .enumerate()
            .map(|(s, c)| c / r.powi(s as i32))
            .collect();
        let max = scaled.iter().fold(0.0_f64, |acc, x| acc.max(x.abs()));
        assert!(scaled[2].abs() < 1e-6 * max, "{scaled:?}");
    }

    #[test]
    fn quasiradial_degree_drops_to_the_branch_index_at_small_r() {
        let chains =
            build_separated_polynomials(SystemKind::H3Spheroidal, 4, 1, 1, 1e-6).unwrap();
        let max = chains.a.iter().fold(0.0_f64, |acc, x| acc.max(x.abs()));
        assert!(chains.a[2].abs() < 1e-4 * max, "{:?}", chains.a);
    }

    #[test]
    fn unsupported_systems_are_rejected() {
        assert!(build_separated_polynomials(SystemKind::MicSpheroidal, 2, 0, 0, 1.0).is_err());
        assert!(build_separated_polynomials(SystemKind::Osc4Spheroidal, 2, 0, 0, 1.0).is_err());
    }
}
