use separation::{
    build_system, build_system_dual, perturbative_basis, solve_spectrum, Parity, Regime,
    SystemKind,
};
use specfun::{wigner_d, AngularMomentum};
use std::f64::consts::FRAC_PI_2;

fn unfold_planar(v: &[f64], n: u32, parity: Parity) -> Vec<f64> {
    let size = 2 * n as usize + 1;
    let mut w = vec![0.0; size];
    let half = std::f64::consts::FRAC_1_SQRT_2;
    match parity {
        Parity::Plus => {
            w[n as usize] = v[0];
            for m in 1..=n as usize {
                w[n as usize + m] = v[m] * half;
                w[n as usize - m] = v[m] * half;
            }
        }
        _ => {
            for m in 1..=n as usize {
                w[n as usize + m] = v[m - 1] * half;
                w[n as usize - m] = -v[m - 1] * half;
            }
        }
    }
    w
}

/// The two coordinate-side eigenvectors of the planar system describe one
/// state, so they are tied by the right-angle rotation matrix between the
/// angular-momentum ladder and the shift-generator ladder, with an
/// alternating sign down the parabolic chain and one overall sign left free
/// by the phase convention.
#[test]
fn right_angle_rotation_ties_the_two_coordinate_sides() {
    for r in [0.6, 2.0] {
        for n in 1u32..=3 {
            for parity in [Parity::Plus, Parity::Minus] {
                let rot =
                    solve_spectrum(&build_system(SystemKind::H2Elliptic, n, 0, 0, parity, r).unwrap())
                        .unwrap();
                let dual = solve_spectrum(
                    &build_system_dual(SystemKind::H2Elliptic, n, 0, 0, parity, r).unwrap(),
                )
                .unwrap();
                let p_lo: i32 = match parity {
                    Parity::Plus => -(n as i32),
                    _ => -(n as i32) + 1,
                };
                let jn = AngularMomentum::from_int(n as i32);
                for q in 0..rot.eigenvalues.len() {
                    let w = unfold_planar(&rot.eigenvectors[q], n, parity);
                    let rotated: Vec<f64> = (0..dual.eigenvectors[q].len())
                        .map(|k| {
                            let p = p_lo + 2 * k as i32;
                            let acc: f64 = w
                                .iter()
                                .enumerate()
                                .map(|(i, &wm)| {
                                    let m = i as i32 - n as i32;
                                    wigner_d(
                                        jn,
                                        AngularMomentum::from_int(p),
                                        AngularMomentum::from_int(m),
                                        FRAC_PI_2,
                                    )
                                    .unwrap()
                                        * wm
                                })
                                .sum();
                            if k % 2 == 0 {
                                acc
                            } else {
                                -acc
                            }
                        })
                        .collect();
                    let target = &dual.eigenvectors[q];
                    let pivot = (0..target.len())
                        .max_by(|&a, &b| target[a].abs().partial_cmp(&target[b].abs()).unwrap())
                        .unwrap();
                    let sign = if rotated[pivot] * target[pivot] < 0.0 { -1.0 } else { 1.0 };
                    for (k, (&got, &want)) in rotated.iter().zip(target).enumerate() {
                        assert!(
                            (sign * got - want).abs() < 1e-9,
                            "n={n} {parity:?} q={q} r={r} k={k}: {} vs {want}",
                            sign * got
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn large_distance_admixtures_match_the_exact_eigenvectors() {
    let exact_admixture = |r: f64| -> f64 {
        let spec = solve_spectrum(
            &build_system_dual(SystemKind::Osc2Elliptic, 4, 0, 0, Parity::Plus, r).unwrap(),
        )
        .unwrap();
        let v = &spec.eigenvectors[0];
        v[1] / v[0]
    };
    let a30 = exact_admixture(30.0);
    let a60 = exact_admixture(60.0);
    assert!(
        (a30 / a60 - 4.0).abs() < 4.0 * 0.02,
        "inverse-square scaling violated: ratio {}",
        a30 / a60
    );

    let pert = perturbative_basis(
        SystemKind::Osc2Elliptic,
        4,
        0,
        0,
        Parity::Plus,
        0,
        60.0,
        Regime::RToInfinity,
    )
    .unwrap();
    let neighbor = pert
        .iter()
        .find(|(_, c)| (c - 1.0).abs() > 1e-12)
        .expect("branch 0 has one neighbour");
    assert!(
        (neighbor.1 - a60).abs() < 1e-2 * a60.abs(),
        "perturbative {} vs exact {a60}",
        neighbor.1
    );
}

#[test]
fn small_distance_admixtures_match_the_exact_eigenvectors() {
    let r = 0.01;
    let spec = solve_spectrum(
        &build_system(SystemKind::H3Spheroidal, 3, 1, 0, Parity::None, r).unwrap(),
    )
    .unwrap();
    let q = 0;
    let v = &spec.eigenvectors[q];
    let exact = v[1] / v[0];
    let pert = perturbative_basis(
        SystemKind::H3Spheroidal,
        3,
        1,
        0,
        Parity::None,
        q,
        r,
        Regime::RToZero,
    )
    .unwrap();
    let neighbor = pert
        .iter()
        .find(|(_, c)| (c - 1.0).abs() > 1e-12)
        .expect("branch 0 has one neighbour");
    assert!(
        (neighbor.1 - exact).abs() < 1e-4 * exact.abs().max(1e-3),
        "perturbative {} vs exact {exact}",
        neighbor.1
    );
}
