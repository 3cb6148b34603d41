use separation::{build_system, build_system_dual, solve_spectrum, Parity, SystemKind};

fn assert_same_spectrum(kind: SystemKind, n: u32, m: i32, s: i32, parity: Parity, r: f64) {
    let rot = solve_spectrum(&build_system(kind, n, m, s, parity, r).unwrap()).unwrap();
    let dual = solve_spectrum(&build_system_dual(kind, n, m, s, parity, r).unwrap()).unwrap();
    assert_eq!(rot.eigenvalues.len(), dual.eigenvalues.len());
    for (q, (a, b)) in rot.eigenvalues.iter().zip(&dual.eigenvalues).enumerate() {
        assert!(
            (a - b).abs() <= 1e-11 * a.abs().max(1.0),
            "{kind:?} n={n} m={m} s={s} {parity:?} r={r} q={q}: {a} vs {b}"
        );
    }
}

#[test]
fn planar_hydrogen_sides_agree() {
    for r in [0.5, 2.0, 5.0] {
        for n in 1..=4u32 {
            assert_same_spectrum(SystemKind::H2Elliptic, n, 0, 0, Parity::Plus, r);
            assert_same_spectrum(SystemKind::H2Elliptic, n, 0, 0, Parity::Minus, r);
        }
    }
}

#[test]
fn spatial_hydrogen_sides_agree() {
    for r in [0.5, 2.0, 5.0] {
        for n in 1..=5u32 {
            for m in 0..n as i32 {
                assert_same_spectrum(SystemKind::H3Spheroidal, n, m, 0, Parity::None, r);
            }
        }
    }
}

#[test]
fn dyonic_sides_agree_for_charged_and_asymmetric_cases() {
    for r in [0.5, 2.0, 5.0] {
        assert_same_spectrum(SystemKind::MicSpheroidal, 3, 1, 1, Parity::None, r);
        assert_same_spectrum(SystemKind::MicSpheroidal, 4, 1, 2, Parity::None, r);
        assert_same_spectrum(SystemKind::MicSpheroidal, 4, -2, 1, Parity::None, r);
        assert_same_spectrum(SystemKind::MicSpheroidal, 5, 0, 2, Parity::None, r);
        assert_same_spectrum(SystemKind::MicSpheroidal, 5, 3, 1, Parity::None, r);
    }
}

#[test]
fn planar_oscillator_sides_agree() {
    for r in [0.5, 2.0, 5.0] {
        for big_n in 2..=6u32 {
            assert_same_spectrum(SystemKind::Osc2Elliptic, big_n, 0, 0, Parity::Plus, r);
            assert_same_spectrum(SystemKind::Osc2Elliptic, big_n, 0, 0, Parity::Minus, r);
        }
    }
}

#[test]
fn four_dimensional_oscillator_sides_agree() {
    for r in [0.5, 2.0, 5.0] {
        assert_same_spectrum(SystemKind::Osc4Spheroidal, 4, 1, -1, Parity::None, r);
        assert_same_spectrum(SystemKind::Osc4Spheroidal, 4, 0, 0, Parity::None, r);
        assert_same_spectrum(SystemKind::Osc4Spheroidal, 6, 2, 0, Parity::None, r);
        assert_same_spectrum(SystemKind::Osc4Spheroidal, 6, 1, 3, Parity::None, r);
        assert_same_spectrum(SystemKind::Osc4Spheroidal, 8, 2, -2, Parity::None, r);
    }
}

#[test]
fn zero_charge_dyon_chain_is_the_spatial_hydrogen_chain_on_both_sides() {
    for r in [0.0, 0.7, 3.0] {
        for n in 1..=5u32 {
            for m in 0..n as i32 {
                let h3 = build_system(SystemKind::H3Spheroidal, n, m, 0, Parity::None, r).unwrap();
                let mic = build_system(SystemKind::MicSpheroidal, n, m, 0, Parity::None, r).unwrap();
                assert_eq!(h3.diag, mic.diag);
                assert_eq!(h3.offdiag, mic.offdiag);
                let h3d =
                    build_system_dual(SystemKind::H3Spheroidal, n, m, 0, Parity::None, r).unwrap();
                let micd =
                    build_system_dual(SystemKind::MicSpheroidal, n, m, 0, Parity::None, r).unwrap();
                assert_eq!(h3d.diag, micd.diag);
                assert_eq!(h3d.offdiag, micd.offdiag);
            }
        }
    }
}
