use num_complex::Complex64;

use crate::builder::{build_system, Parity, SystemKind};
use crate::solver::solve_spectrum;
use crate::Error;

/// One twisted angular eigenfunction of the planar hydrogen atom, expanded
/// over azimuthal waves `exp(i m phi)` with `m = -n..=n`.
///
/// The untwisted coefficients come from unfolding a reflection-class
/// eigenvector; the twist multiplies component `m` by `exp(-i m alpha)`.
/// `q_eigenvalue` is the shifted separation constant that stays finite in the
/// matching flat-space problem, and `recurrence_residual` is the worst
/// relative defect of the twisted three-term relation (evaluated in a form
/// multiplied through by `r`, so it is meaningful at `r = 0` too).
#[derive(Debug, Clone, PartialEq)]
pub struct TwistedElliptic {
    pub n: u32,
    pub q: usize,
    pub alpha: f64,
    pub r: f64,
    pub lambda: f64,
    pub q_eigenvalue: f64,
    pub parity: Parity,
    pub coefficients: Vec<Complex64>,
    pub untwisted: Vec<f64>,
    pub recurrence_residual: f64,
}

/// Build the twisted angular eigenfunction for branch `q` of level `n`.
///
/// Branches merge both reflection classes, ordered by descending separation
/// constant with the even class first on ties, so `q` ranges over
/// `0..=2 * n`.
pub fn twisted_elliptic(n: u32, q: usize, alpha: f64, r: f64) -> Result<TwistedElliptic, Error> {
    if !alpha.is_finite() {
        return Err(Error::Domain(format!("twist angle must be finite, got {alpha}")));
    }
    let mut branches: Vec<(f64, Parity, usize)> = Vec::with_capacity(2 * n as usize + 1);
    let plus = solve_spectrum(&build_system(
        SystemKind::H2Elliptic,
        n,
        0,
        0,
        Parity::Plus,
        r,
    )?)?;
    for (i, &ev) in plus.eigenvalues.iter().enumerate() {
        branches.push((ev, Parity::Plus, i));
    }
    let minus = if n >= 1 {
        let spec = solve_spectrum(&build_system(
            SystemKind::H2Elliptic,
            n,
            0,
            0,
            Parity::Minus,
            r,
        )?)?;
        for (i, &ev) in spec.eigenvalues.iter().enumerate() {
            branches.push((ev, Parity::Minus, i));
        }
        Some(spec)
    } else {
        None
    };
    branches.sort_by(|a, b| {
        b.0.partial_cmp(&a.0)
            .expect("separation constants are finite")
            .then_with(|| {
                let rank = |p: Parity| if p == Parity::Plus { 0 } else { 1 };
                rank(a.1).cmp(&rank(b.1))
            })
    });
    let &(lambda, parity, idx) = branches.get(q).ok_or_else(|| {
        Error::Domain(format!(
            "branch index {q} out of range: level {n} has {} branches",
            branches.len()
        ))
    })?;

    let size = 2 * n as usize + 1;
    let mut untwisted = vec![0.0; size];
    let half = std::f64::consts::FRAC_1_SQRT_2;
    match parity {
        Parity::Plus => {
            let v = &plus.eigenvectors[idx];
            untwisted[n as usize] = v[0];
            for m in 1..=n as usize {
                untwisted[n as usize + m] = v[m] * half;
                untwisted[n as usize - m] = v[m] * half;
            }
        }
        _ => {
            let v = &minus.as_ref().expect("odd class solved for n >= 1").eigenvectors[idx];
            for m in 1..=n as usize {
                untwisted[n as usize + m] = v[m - 1] * half;
                untwisted[n as usize - m] = -v[m - 1] * half;
            }
        }
    }

    let coefficients: Vec<Complex64> = untwisted
        .iter()
        .enumerate()
        .map(|(i, &w)| {
            let m = i as f64 - f64::from(n);
            Complex64::from_polar(w, -m * alpha)
        })
        .collect();

    let nf = f64::from(n);
    let phase_up = Complex64::from_polar(1.0, alpha);
    let phase_down = phase_up.conj();
    let mut worst: f64 = 0.0;
    for i in 0..size {
        let m = i as f64 - nf;
        let up = if i + 1 < size {
            r * ((nf - m) * (nf + m + 1.0)).sqrt() * phase_up * coefficients[i + 1]
        } else {
            Complex64::new(0.0, 0.0)
        };
        let down = if i > 0 {
            r * ((nf + m) * (nf - m + 1.0)).sqrt() * phase_down * coefficients[i - 1]
        } else {
            Complex64::new(0.0, 0.0)
        };
        let mid = (2.0 * nf + 1.0) * (lambda + m * m) * coefficients[i];
        let row = up + down - mid;
        let scale = up.norm() + down.norm() + mid.norm();
        worst = worst.max(row.norm() / scale.max(1.0));
    }

    Ok(TwistedElliptic {
        n,
        q,
        alpha,
        r,
        lambda,
        q_eigenvalue: lambda + r * r / ((2.0 * nf + 1.0) * (2.0 * nf + 1.0)),
        parity,
        coefficients,
        untwisted,
        recurrence_residual: worst,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_twist_reduces_to_the_untwisted_coefficients() {
        let t = twisted_elliptic(2, 1, 0.0, 1.5).unwrap();
        for (c, &w) in t.coefficients.iter().zip(&t.untwisted) {
            assert_eq!(c.im, 0.0);
            assert!((c.re - w).abs() < 1e-15);
        }
    }

    #[test]
    fn twisting_preserves_component_magnitudes_and_norm() {
        let t = twisted_elliptic(3, 2, 1.1, 0.8).unwrap();
        let mut norm = 0.0;
        for (c, &w) in t.coefficients.iter().zip(&t.untwisted) {
            assert!((c.norm() - w.abs()).abs() < 1e-14);
            norm += c.norm_sqr();
        }
        assert!((norm - 1.0).abs() < 1e-11);
    }

    #[test]
    fn recurrence_residual_is_tiny_for_every_branch() {
        for q in 0..5 {
            let t = twisted_elliptic(2, q, 0.7, 1.0).unwrap();
            assert!(t.recurrence_residual < 1e-12, "q={q}: {}", t.recurrence_residual);
        }
    }

    #[test]
    fn merged_branches_interleave_the_classes_at_zero_distance() {
        let expected = [
            (0.0, Parity::Plus),
            (-1.0, Parity::Plus),
            (-1.0, Parity::Minus),
            (-4.0, Parity::Plus),
            (-4.0, Parity::Minus),
        ];
        for (q, &(ev, parity)) in expected.iter().enumerate() {
            let t = twisted_elliptic(2, q, 0.3, 0.0).unwrap();
            assert!((t.lambda - ev).abs() < 1e-12);
            assert_eq!(t.parity, parity);
            assert!(t.recurrence_residual < 1e-12);
        }
    }

    #[test]
    fn shifted_constant_does_not_depend_on_the_twist() {
        let a = twisted_elliptic(2, 3, 0.0, 2.0).unwrap();
        let b = twisted_elliptic(2, 3, 1.3, 2.0).unwrap();
        assert_eq!(a.q_eigenvalue, b.q_eigenvalue);
        assert!((a.q_eigenvalue - (a.lambda + 4.0 / 25.0)).abs() < 1e-15);
    }

    #[test]
    fn out_of_range_branches_are_rejected() {
        assert!(twisted_elliptic(2, 5, 0.0, 1.0).is_err());
    }
}
