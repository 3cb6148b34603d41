use crate::builder::{build_side, Parity, Side, SystemKind, TridiagonalSystem};
use crate::limits::Regime;
use crate::Error;

fn split_perturbation(sys0: &TridiagonalSystem, sys: &TridiagonalSystem) -> (Vec<f64>, Vec<f64>) {
    let vd: Vec<f64> = sys
        .diag
        .iter()
        .zip(&sys0.diag)
        .map(|(a, b)| a - b)
        .collect();
    let vo: Vec<f64> = sys
        .offdiag
        .iter()
        .zip(&sys0.offdiag)
        .map(|(a, b)| a - b)
        .collect();
    (vd, vo)
}

fn check_index(dim: usize, q: usize) -> Result<(), Error> {
    if q >= dim {
        Err(Error::Domain(format!(
            "branch index {q} out of range for a chain of dimension {dim}"
        )))
    } else {
        Ok(())
    }
}

/// Perturbative separation constant for branch `q` (descending-order index).
///
/// In the small-`R` regime this is Rayleigh-Schroedinger theory around the
/// `R = 0` chain through third order, extended to fourth order whenever the
/// perturbation has no diagonal part (all the purely Coulombic chains), so
/// the error is `O(R^4)` at worst and `O(R^6)` for those chains.  In the
/// large-`R` regime it is the first-order value read off the dual chain:
/// the full diagonal entry, whose error is `O(1/R^{power})` relative to the
/// leading growth.
pub fn perturbative_lambda(
    kind: SystemKind,
    n: u32,
    m: i32,
    s: i32,
    parity: Parity,
    q: usize,
    r: f64,
    regime: Regime,
) -> Result<f64, Error> {
    match regime {
        Regime::RToZero => {
            let sys0 = build_side(kind, Side::Rotational, n, m, s, parity, 0.0)?;
            let sys = build_side(kind, Side::Rotational, n, m, s, parity, r)?;
            check_index(sys.dim, q)?;
            let (vd, vo) = split_perturbation(&sys0, &sys);
            let e0 = &sys0.diag;
            let dim = sys.dim;
            let cup = |i: usize| if i + 1 < dim { vo[i] } else { 0.0 };
            let delta = |j: usize| e0[q] - e0[j];
            let mut e = e0[q] + vd[q];
            let mut e2 = 0.0;
            if q + 1 < dim {
                e2 += cup(q) * cup(q) / delta(q + 1);
            }
            if q >= 1 {
                e2 += cup(q - 1) * cup(q - 1) / delta(q - 1);
            }
            e += e2;
            let mut e3 = 0.0;
            if q + 1 < dim {
                e3 += cup(q) * cup(q) * (vd[q + 1] - vd[q]) / (delta(q + 1) * delta(q + 1));
            }
            if q >= 1 {
                e3 += cup(q - 1) * cup(q - 1) * (vd[q - 1] - vd[q]) / (delta(q - 1) * delta(q - 1));
            }
            e += e3;
            if vd.iter().all(|&x| x == 0.0) {
                let mut e4 = 0.0;
                if q + 2 < dim {
                    e4 += cup(q) * cup(q) * cup(q + 1) * cup(q + 1)
                        / (delta(q + 1) * delta(q + 1) * delta(q + 2));
                }
                if q >= 2 {
                    e4 += cup(q - 1) * cup(q - 1) * cup(q - 2) * cup(q - 2)
                        / (delta(q - 1) * delta(q - 1) * delta(q - 2));
                }
                if q + 1 < dim {
                    e4 -= e2 * cup(q) * cup(q) / (delta(q + 1) * delta(q + 1));
                }
                if q >= 1 {
                    e4 -= e2 * cup(q - 1) * cup(q - 1) / (delta(q - 1) * delta(q - 1));
                }
                e += e4;
            }
            Ok(e)
        }
        Regime::RToInfinity => {
            let sys = build_side(kind, Side::Parabolic, n, m, s, parity, r)?;
            check_index(sys.dim, q)?;
            Ok(sys.diag[q])
        }
    }
}

/// Perturbative eigenvector for branch `q` as labelled coefficients.
///
/// Small `R`: the first-order expansion over the rotational basis, with the
/// reference component normalised to one.  Large `R`: the first-order
/// expansion over the parabolic/Cartesian basis, with admixture denominators
/// taken from the leading power of `R` alone so the coefficients are the
/// strict `O(1/R^power)` asymptotics.
pub fn perturbative_basis(
    kind: SystemKind,
    n: u32,
    m: i32,
    s: i32,
    parity: Parity,
    q: usize,
    r: f64,
    regime: Regime,
) -> Result<Vec<(String, f64)>, Error> {
    match regime {
        Regime::RToZero => {
            let sys0 = build_side(kind, Side::Rotational, n, m, s, parity, 0.0)?;
            let sys = build_side(kind, Side::Rotational, n, m, s, parity, r)?;
            check_index(sys.dim, q)?;
            let (_, vo) = split_perturbation(&sys0, &sys);
            let e0 = &sys0.diag;
            let mut out = Vec::with_capacity(3);
            if q >= 1 {
                out.push((
                    sys.label_map[q - 1].clone(),
                    vo[q - 1] / (e0[q] - e0[q - 1]),
                ));
            }
            out.push((sys.label_map[q].clone(), 1.0));
            if q + 1 < sys.dim {
                out.push((sys.label_map[q + 1].clone(), vo[q] / (e0[q] - e0[q + 1])));
            }
            Ok(out)
        }
        Regime::RToInfinity => {
            if r <= 0.0 {
                return Err(Error::Domain(
                    "large-distance expansion needs R > 0".into(),
                ));
            }
            let power = if kind == SystemKind::Osc2Elliptic { 2 } else { 1 };
            let sys1 = build_side(kind, Side::Parabolic, n, m, s, parity, 1.0)?;
            let sys2 = build_side(kind, Side::Parabolic, n, m, s, parity, 2.0)?;
            check_index(sys1.dim, q)?;
            let g1 = 1.0;
            let g2 = 2f64.powi(power);
            let slopes: Vec<f64> = sys1
                .diag
                .iter()
                .zip(&sys2.diag)
                .map(|(&a, &b)| (b - a) / (g2 - g1))
                .collect();
            let sys = build_side(kind, Side::Parabolic, n, m, s, parity, r)?;
            let lead = r.powi(power);
            let mut out = Vec::with_capacity(3);
            if q >= 1 {
                out.push((
                    sys.label_map[q - 1].clone(),
                    sys.offdiag[q - 1] / ((slopes[q] - slopes[q - 1]) * lead),
                ));
            }
            out.push((sys.label_map[q].clone(), 1.0));
            if q + 1 < sys.dim {
                out.push((
                    sys.label_map[q + 1].clone(),
                    sys.offdiag[q] / ((slopes[q] - slopes[q + 1]) * lead),
                ));
            }
            Ok(out)
        }
    }
}
