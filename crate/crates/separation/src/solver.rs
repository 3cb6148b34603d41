use crate::builder::{Parity, Side, SystemKind, TridiagonalSystem};
use crate::Error;

/// Solved spectrum of a separation-constant chain.
///
/// Eigenvalues are sorted in descending order, so index `i` follows the
/// branch that starts at the `i`-th largest `R = 0` value; for the chains
/// built here that index never changes along `R` because the eigenvalues of
/// an unreduced symmetric tridiagonal matrix stay simple.  `eigenvectors[i]`
/// is the unit eigenvector for `eigenvalues[i]`, with components ordered by
/// `label_map` and global sign fixed by making the component of largest
/// magnitude positive (first such component on ties).
#[derive(Debug, Clone, PartialEq)]
pub struct SeparationSpectrum {
    pub kind: SystemKind,
    pub side: Side,
    pub n: u32,
    pub m: i32,
    pub s: i32,
    pub parity: Parity,
    pub r: f64,
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Vec<Vec<f64>>,
    pub label_map: Vec<String>,
    pub convention_note: String,
}

const MAX_ITER: usize = 100;
const REL_TOL: f64 = 1e-13;

/// Count eigenvalues of the chain strictly below `x` by Sturm sequence.
fn sturm_count(diag: &[f64], off: &[f64], x: f64, pivot_floor: f64) -> usize {
    let mut count = 0usize;
    let mut q = diag[0] - x;
    if q < 0.0 {
        count += 1;
    }
    for i in 1..diag.len() {
        if q.abs() < pivot_floor {
            q = if q < 0.0 { -pivot_floor } else { pivot_floor };
        }
        q = diag[i] - x - off[i - 1] * off[i - 1] / q;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Bisect for the eigenvalue of ascending rank `k`.
fn bisect_eigenvalue(
    diag: &[f64],
    off: &[f64],
    k: usize,
    mut lo: f64,
    mut hi: f64,
    scale: f64,
) -> Result<f64, Error> {
    let pivot_floor = f64::EPSILON * scale.max(1.0);
    let tol = REL_TOL * scale.max(1.0);
    for _ in 0..MAX_ITER {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= tol || mid == lo || mid == hi {
            return Ok(mid);
        }
        if sturm_count(diag, off, mid, pivot_floor) <= k {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if hi - lo <= tol {
        Ok(0.5 * (lo + hi))
    } else {
        Err(Error::Convergence(format!(
            "bisection for eigenvalue rank {k} stalled at interval width {}",
            hi - lo
        )))
    }
}

/// One inverse-iteration sweep: solve `(T - shift I) x = b` in place of `b`.
///
/// Gaussian elimination with partial pivoting over the three bands; the
/// pivoted tridiagonal picks up a second superdiagonal.
fn inverse_solve(diag: &[f64], off: &[f64], shift: f64, b: &mut [f64], scale: f64) {
    let n = diag.len();
    let mut d: Vec<f64> = diag.iter().map(|&v| v - shift).collect();
    let mut e: Vec<f64> = off.to_vec();
    let mut f = vec![0.0; n];
    let mut lower = vec![0.0; n];
    let mut swap = vec![false; n];
    let tiny = f64::EPSILON * scale.max(1.0) * 1e-3;
    for i in 0..n - 1 {
        let sub = off[i];
        if sub.abs() > d[i].abs() {
            swap[i] = true;
            let (d0, e0, f0) = (d[i], e[i], f[i]);
            d[i] = sub;
            e[i] = d[i + 1];
            f[i] = if i + 1 < n - 1 { off[i + 1] } else { 0.0 };
            let l = d0 / d[i];
            lower[i] = l;
            d[i + 1] = e0 - l * e[i];
            if i + 1 < n - 1 {
                e[i + 1] = f0 - l * f[i];
            }
        } else {
            let mut piv = d[i];
            if piv.abs() < tiny {
                piv = if piv < 0.0 { -tiny } else { tiny };
                d[i] = piv;
            }
            let l = sub / piv;
            lower[i] = l;
            d[i + 1] -= l * e[i];
        }
    }
    for i in 0..n - 1 {
        if swap[i] {
            b.swap(i, i + 1);
        }
        b[i + 1] -= lower[i] * b[i];
    }
    for i in (0..n).rev() {
        let mut acc = b[i];
        if i + 1 < n {
            acc -= e[i] * b[i + 1];
        }
        if i + 2 < n {
            acc -= f[i] * b[i + 2];
        }
        let mut piv = d[i];
        if piv.abs() < tiny {
            piv = if piv < 0.0 { -tiny } else { tiny };
        }
        b[i] = acc / piv;
    }
}

fn normalize(v: &mut [f64]) {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm > 0.0 {
        for x in v.iter_mut() {
            *x /= norm;
        }
    }
}

fn rayleigh_quotient(diag: &[f64], off: &[f64], v: &[f64]) -> f64 {
    let n = diag.len();
    let mut acc = 0.0;
    for i in 0..n {
        let mut row = diag[i] * v[i];
        if i > 0 {
            row += off[i - 1] * v[i - 1];
        }
        if i + 1 < n {
            row += off[i] * v[i + 1];
        }
        acc += v[i] * row;
    }
    acc
}

fn residual_inf(diag: &[f64], off: &[f64], lambda: f64, v: &[f64]) -> f64 {
    let n = diag.len();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        let mut acc = (diag[i] - lambda) * v[i];
        if i > 0 {
            acc += off[i - 1] * v[i - 1];
        }
        if i + 1 < n {
            acc += off[i] * v[i + 1];
        }
        worst = worst.max(acc.abs());
    }
    worst
}

fn fix_phase(v: &mut [f64]) {
    let mut best = 0usize;
    for (i, x) in v.iter().enumerate() {
        if x.abs() > v[best].abs() {
            best = i;
        }
    }
    if v[best] < 0.0 {
        for x in v.iter_mut() {
            *x = -*x;
        }
    }
}

fn convention_note(sys: &TridiagonalSystem) -> String {
    let value = match sys.kind {
        SystemKind::H2Elliptic => {
            "eigenvalue lambda reduces to -m^2 at R=0 and to the parabolic Stark ladder \
             -omega*R*p - (n^2+n-p^2)/2 at large R"
        }
        SystemKind::H3Spheroidal => {
            "eigenvalue lambda reduces to -l(l+1) at R=0; the separation constant of the \
             xi equation is +lambda"
        }
        SystemKind::MicSpheroidal => {
            "eigenvalue lambda is minus the spheroidal separation constant; it reduces to \
             -j(j+1) at R=0"
        }
        SystemKind::Osc2Elliptic => {
            "eigenvalue is the shifted elliptic constant A' = A - R^4/64, reducing to -m^2 \
             at R=0"
        }
        SystemKind::Osc4Spheroidal => {
            "eigenvalue lambda is minus the Eulerian spheroidal constant Q; it reduces to \
             -L(L+1) at R=0"
        }
    };
    format!(
        "{value}; eigenvalues sorted descending so the index follows one analytic branch; \
         eigenvectors unit-norm with the largest-magnitude component positive; {fold}",
        fold = sys.fold_note
    )
}

/// Solve a separation chain for all eigenpairs.
///
/// Deterministic: Sturm-sequence bisection to relative tolerance `1e-13`
/// followed by inverse iteration, with the per-eigenpair iteration count
/// capped at 100.  Every returned pair satisfies
/// `|T v - lambda v|_inf <= 1e-12 * |T|_inf` (with an absolute floor for
/// matrices of tiny norm); otherwise a convergence error is raised.
pub fn solve_spectrum(sys: &TridiagonalSystem) -> Result<SeparationSpectrum, Error> {
    if sys.dim == 0 {
        return Err(Error::Domain("empty chain".into()));
    }
    let scale = sys.norm_inf();
    let mut pairs: Vec<(f64, Vec<f64>)> = Vec::with_capacity(sys.dim);
    if sys.dim == 1 {
        pairs.push((sys.diag[0], vec![1.0]));
    } else if sys.offdiag.iter().all(|&c| c == 0.0) {
        let mut order: Vec<usize> = (0..sys.dim).collect();
        order.sort_by(|&a, &b| {
            sys.diag[a]
                .partial_cmp(&sys.diag[b])
                .expect("diagonal entries are finite")
        });
        for &i in &order {
            let mut v = vec![0.0; sys.dim];
            v[i] = 1.0;
            pairs.push((sys.diag[i], v));
        }
    } else {
        let radius: Vec<f64> = (0..sys.dim)
            .map(|i| {
                let mut rad = 0.0;
                if i > 0 {
                    rad += sys.offdiag[i - 1].abs();
                }
                if i + 1 < sys.dim {
                    rad += sys.offdiag[i].abs();
                }
                rad
            })
            .collect();
        let lo = (0..sys.dim)
            .map(|i| sys.diag[i] - radius[i])
            .fold(f64::INFINITY, f64::min);
        let hi = (0..sys.dim)
            .map(|i| sys.diag[i] + radius[i])
            .fold(f64::NEG_INFINITY, f64::max);
        let spread = (hi - lo).max(1.0) * 1e-8;
        for k in 0..sys.dim {
            let lambda = bisect_eigenvalue(
                &sys.diag,
                &sys.offdiag,
                k,
                lo - spread,
                hi + spread,
                scale,
            )?;
            let mut v = vec![1.0 / (sys.dim as f64).sqrt(); sys.dim];
            let tol = 1e-12 * scale.max(1.0);
            let mut converged = false;
            let mut refined = lambda;
            for _ in 0..MAX_ITER {
                inverse_solve(&sys.diag, &sys.offdiag, lambda, &mut v, scale);
                normalize(&mut v);
                let rayleigh = rayleigh_quotient(&sys.diag, &sys.offdiag, &v);
                if residual_inf(&sys.diag, &sys.offdiag, rayleigh, &v) <= tol {
                    converged = true;
                    refined = rayleigh;
                    break;
                }
            }
            if !converged {
                return Err(Error::Convergence(format!(
                    "inverse iteration for eigenvalue rank {k} did not reach the residual \
                     target"
                )));
            }
            pairs.push((refined, v));
        }
    }
    pairs.reverse();
    let mut eigenvalues = Vec::with_capacity(sys.dim);
    let mut eigenvectors = Vec::with_capacity(sys.dim);
    for (lambda, mut v) in pairs {
        fix_phase(&mut v);
        eigenvalues.push(lambda);
        eigenvectors.push(v);
    }
    Ok(SeparationSpectrum {
        kind: sys.kind,
        side: sys.side,
        n: sys.n,
        m: sys.m,
        s: sys.s,
        parity: sys.parity,
        r: sys.r,
        eigenvalues,
        eigenvectors,
        label_map: sys.label_map.clone(),
        convention_note: convention_note(sys),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builder::{build_system, build_system_dual};

    fn spectrum(kind: SystemKind, n: u32, m: i32, s: i32, parity: Parity, r: f64) -> SeparationSpectrum {
        solve_spectrum(&build_system(kind, n, m, s, parity, r).unwrap()).unwrap()
    }

    #[test]
    fn golden_ratio_eigenvalue_for_planar_hydrogen() {
        let spec = spectrum(SystemKind::H2Elliptic, 1, 0, 0, Parity::Plus, 1.5);
        let expected = (-1.0 + 5.0_f64.sqrt()) / 2.0;
        assert!((spec.eigenvalues[0] - expected).abs() < 1e-12);
        assert!((spec.eigenvalues[1] - (-1.0 - 5.0_f64.sqrt()) / 2.0).abs() < 1e-12);
    }

    #[test]
    fn spatial_hydrogen_n2_eigenvalue() {
        let spec = spectrum(SystemKind::H3Spheroidal, 2, 0, 0, Parity::None, 2.0);
        assert!((spec.eigenvalues[0] - (-1.0 + 2.0_f64.sqrt())).abs() < 1e-12);
        assert!((spec.eigenvalues[1] - (-1.0 - 2.0_f64.sqrt())).abs() < 1e-12);
    }

    #[test]
    fn planar_oscillator_sine_sine_ground_value() {
        for r in [0.3, 1.0, 2.0, 5.0] {
            let spec = spectrum(SystemKind::Osc2Elliptic, 2, 0, 0, Parity::Minus, r);
            assert_eq!(spec.eigenvalues.len(), 1);
            assert!((spec.eigenvalues[0] + 4.0).abs() < 1e-12);
        }
    }

    #[test]
    fn residuals_meet_the_target_on_larger_chains() {
        for (kind, n, m, s, parity) in [
            (SystemKind::H2Elliptic, 6, 0, 0, Parity::Plus),
            (SystemKind::H3Spheroidal, 7, 2, 0, Parity::None),
            (SystemKind::MicSpheroidal, 6, 2, 1, Parity::None),
            (SystemKind::Osc2Elliptic, 12, 0, 0, Parity::Minus),
            (SystemKind::Osc4Spheroidal, 10, 1, 1, Parity::None),
        ] {
            for side in [Side::Rotational, Side::Parabolic] {
                let sys = crate::builder::build_side(kind, side, n, m, s, parity, 2.7).unwrap();
                let spec = solve_spectrum(&sys).unwrap();
                let tol = 1e-12 * sys.norm_inf().max(1.0);
                for (lam, v) in spec.eigenvalues.iter().zip(&spec.eigenvectors) {
                    let res = super::residual_inf(&sys.diag, &sys.offdiag, *lam, v);
                    assert!(res <= tol, "{kind:?} {side:?}: residual {res} > {tol}");
                }
                for w in spec.eigenvalues.windows(2) {
                    assert!(w[0] > w[1], "descending order violated");
                }
            }
        }
    }

    #[test]
    fn eigenvectors_are_orthonormal() {
        let sys = build_system(SystemKind::H3Spheroidal, 6, 1, 0, Parity::None, 3.3).unwrap();
        let spec = solve_spectrum(&sys).unwrap();
        for i in 0..spec.eigenvectors.len() {
            for j in 0..spec.eigenvectors.len() {
                let dot: f64 = spec.eigenvectors[i]
                    .iter()
                    .zip(&spec.eigenvectors[j])
                    .map(|(a, b)| a * b)
                    .sum();
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((dot - want).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn zero_distance_spectra_are_exact() {
        let spec = spectrum(SystemKind::H2Elliptic, 3, 0, 0, Parity::Plus, 0.0);
        for (lam, want) in spec.eigenvalues.iter().zip([0.0, -1.0, -4.0, -9.0]) {
            assert!((lam - want).abs() < 1e-12);
        }
        for (q, v) in spec.eigenvectors.iter().enumerate() {
            for (i, &c) in v.iter().enumerate() {
                let want = if i == q { 1.0 } else { 0.0 };
                assert!((c - want).abs() < 1e-12);
            }
        }
        let spec = spectrum(SystemKind::H3Spheroidal, 3, 1, 0, Parity::None, 0.0);
        for (lam, want) in spec.eigenvalues.iter().zip([-2.0, -6.0]) {
            assert!((lam - want).abs() < 1e-12);
        }
    }

    #[test]
    fn dual_side_eigenvalues_match() {
        let a = spectrum(SystemKind::H2Elliptic, 4, 0, 0, Parity::Plus, 1.7);
        let sys_b = build_system_dual(SystemKind::H2Elliptic, 4, 0, 0, Parity::Plus, 1.7).unwrap();
        let b = solve_spectrum(&sys_b).unwrap();
        for (x, y) in a.eigenvalues.iter().zip(&b.eigenvalues) {
            assert!((x - y).abs() < 1e-11 * sys_b.norm_inf().max(1.0));
        }
    }
}
