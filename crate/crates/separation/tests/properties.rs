use proptest::prelude::*;
use separation::{
    build_separated_polynomials, build_system, solve_spectrum, twisted_elliptic, Parity,
    SystemKind,
};

const CASES: &[(SystemKind, u32, i32, i32, Parity)] = &[
    (SystemKind::H2Elliptic, 3, 0, 0, Parity::Plus),
    (SystemKind::H2Elliptic, 3, 0, 0, Parity::Minus),
    (SystemKind::H3Spheroidal, 4, 1, 0, Parity::None),
    (SystemKind::H3Spheroidal, 5, 0, 0, Parity::None),
    (SystemKind::MicSpheroidal, 4, 1, 2, Parity::None),
    (SystemKind::MicSpheroidal, 5, -2, 1, Parity::None),
    (SystemKind::Osc2Elliptic, 6, 0, 0, Parity::Plus),
    (SystemKind::Osc2Elliptic, 5, 0, 0, Parity::Minus),
    (SystemKind::Osc4Spheroidal, 6, 1, 1, Parity::None),
];

fn diff_norm_inf(a: &separation::TridiagonalSystem, b: &separation::TridiagonalSystem) -> f64 {
    let mut best: f64 = 0.0;
    for i in 0..a.dim {
        let mut row = (a.diag[i] - b.diag[i]).abs();
        if i > 0 {
            row += (a.offdiag[i - 1] - b.offdiag[i - 1]).abs();
        }
        if i + 1 < a.dim {
            row += (a.offdiag[i] - b.offdiag[i]).abs();
        }
        best = best.max(row);
    }
    best
}

fn count_sign_changes(values: impl Iterator<Item = f64>) -> usize {
    let mut count = 0;
    let mut last = 0.0_f64;
    for v in values {
        if last != 0.0 && v != 0.0 && (v > 0.0) != (last > 0.0) {
            count += 1;
        }
        if v != 0.0 {
            last = v;
        }
    }
    count
}

fn eval_poly(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

proptest! {
    #[test]
    fn eigenvalues_move_no_faster_than_the_matrix(
        case in 0usize..CASES.len(),
        r in 0.1f64..10.0,
        step in 0.001f64..0.3,
    ) {
        let (kind, n, m, s, parity) = CASES[case];
        let sys1 = build_system(kind, n, m, s, parity, r).unwrap();
        let sys2 = build_system(kind, n, m, s, parity, r * (1.0 + step)).unwrap();
        let bound = diff_norm_inf(&sys1, &sys2);
        let ev1 = solve_spectrum(&sys1).unwrap().eigenvalues;
        let ev2 = solve_spectrum(&sys2).unwrap().eigenvalues;
        for (a, b) in ev1.iter().zip(&ev2) {
            prop_assert!(
                (a - b).abs() <= bound + 1e-9 * (1.0 + a.abs()),
                "{kind:?} r={r} step={step}: |{a} - {b}| > {bound}"
            );
        }
    }

    #[test]
    fn eigenvectors_turn_slowly_under_small_changes_of_the_distance(
        case in 0usize..CASES.len(),
        r in 0.1f64..10.0,
        step in 1e-4f64..2e-3,
    ) {
        let (kind, n, m, s, parity) = CASES[case];
        let s1 = solve_spectrum(&build_system(kind, n, m, s, parity, r).unwrap()).unwrap();
        let s2 = solve_spectrum(
            &build_system(kind, n, m, s, parity, r * (1.0 + step)).unwrap(),
        )
        .unwrap();
        for (v1, v2) in s1.eigenvectors.iter().zip(&s2.eigenvectors) {
            let overlap: f64 = v1.iter().zip(v2).map(|(a, b)| a * b).sum();
            prop_assert!(
                overlap.abs() >= 0.9,
                "{kind:?} r={r} step={step}: overlap {overlap}"
            );
        }
    }

    #[test]
    fn eigenvectors_are_orthonormal(
        case in 0usize..CASES.len(),
        r in 0.0f64..10.0,
    ) {
        let (kind, n, m, s, parity) = CASES[case];
        let spec = solve_spectrum(&build_system(kind, n, m, s, parity, r).unwrap()).unwrap();
        for (i, vi) in spec.eigenvectors.iter().enumerate() {
            for (j, vj) in spec.eigenvectors.iter().enumerate() {
                let dot: f64 = vi.iter().zip(vj).map(|(a, b)| a * b).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                prop_assert!(
                    (dot - want).abs() < 1e-8,
                    "{kind:?} r={r}: <v{i}, v{j}> = {dot}"
                );
            }
        }
    }

    #[test]
    fn spatial_hydrogen_node_counts_label_the_branches(
        n in 2u32..=4,
        m_sel in 0u32..16,
        q_sel in 0u32..16,
        r in 0.05f64..12.0,
    ) {
        let m = (m_sel % n) as i32;
        let chain_len = n - m as u32;
        let q = (q_sel % chain_len) as usize;
        let chains = build_separated_polynomials(SystemKind::H3Spheroidal, n, m, q, r).unwrap();

        let grid = 4096;
        let angular = count_sign_changes((0..grid).map(|j| {
            let y = 2.0 * (j as f64 + 0.37) / grid as f64;
            eval_poly(&chains.b, y)
        }));
        prop_assert_eq!(
            angular, q,
            "angular nodes n={} m={} q={} r={}: {:?}", n, m, q, r, chains.b
        );

        let radial = count_sign_changes((0..grid).map(|j| {
            let x = 1e-8_f64 * (1e16_f64).powf((j as f64 + 0.37) / grid as f64);
            eval_poly(&chains.a, x)
        }));
        let expected = chain_len as usize - 1 - q;
        prop_assert_eq!(
            radial, expected,
            "radial nodes n={} m={} q={} r={}: {:?}", n, m, q, r, chains.a
        );
    }

    #[test]
    fn planar_oscillator_even_class_node_counts_label_the_branches(
        half in 1u32..=3,
        q_sel in 0u32..16,
        r in 0.05f64..6.0,
    ) {
        let big_n = 2 * half;
        let q = (q_sel % (half + 1)) as usize;
        let chains = build_separated_polynomials(SystemKind::Osc2Elliptic, big_n, 0, q, r).unwrap();
        let grid = 4096;
        let angular = count_sign_changes((0..grid).map(|j| {
            let u = (j as f64 + 0.37) / grid as f64;
            eval_poly(&chains.b, u)
        }));
        prop_assert_eq!(
            angular, q,
            "angular nodes N={} q={} r={}: {:?}", big_n, q, r, chains.b
        );
    }

    #[test]
    fn planar_hydrogen_node_counts_label_the_branches(
        n in 1u32..=3,
        class in 0i32..=1,
        q_sel in 0u32..16,
        r in 0.05f64..8.0,
    ) {
        let dim = if class == 0 { n + 1 } else { n };
        let q = (q_sel % dim) as usize;
        let chains = build_separated_polynomials(SystemKind::H2Elliptic, n, class, q, r).unwrap();
        let grid = 4096;
        let angular = count_sign_changes((0..grid).map(|j| {
            let x = (j as f64 + 0.37) / grid as f64;
            eval_poly(&chains.b, x)
        }));
        prop_assert_eq!(
            angular, q,
            "angular nodes n={} class={} q={} r={}: {:?}", n, class, q, r, chains.b
        );
    }

    #[test]
    fn twisting_never_disturbs_the_shifted_constant_or_the_magnitudes(
        n in 1u32..=3,
        q_sel in 0u32..16,
        r in 0.05f64..8.0,
        alpha in 0.0f64..6.2,
    ) {
        let q = (q_sel % (2 * n + 1)) as usize;
        let twisted = twisted_elliptic(n, q, alpha, r).unwrap();
        let plain = twisted_elliptic(n, q, 0.0, r).unwrap();
        prop_assert!((twisted.lambda - plain.lambda).abs() < 1e-12);
        prop_assert!(twisted.recurrence_residual < 1e-10, "{}", twisted.recurrence_residual);
        for (a, b) in twisted.coefficients.iter().zip(&plain.coefficients) {
            prop_assert!((a.norm() - b.norm()).abs() < 1e-12);
        }
    }
}
