use crate::builder::{build_side, Parity, Side, SystemKind};
use crate::Error;

/// Limiting regime of the inter-center distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    RToZero,
    RToInfinity,
}

/// Limiting behaviour of one eigenvalue branch.
///
/// `Value` is the exact limit at `R = 0`.  `Asymptote` describes the large
/// `R` behaviour `lambda ~ slope * R^power + intercept`; `power` is 1 for
/// the Coulomb systems and 2 for the planar oscillator.
#[derive(Debug, Clone, PartialEq)]
pub enum LimitDescriptor {
    Value(f64),
    Asymptote { power: i32, slope: f64, intercept: f64 },
}

/// Limiting eigenvalue data for every branch of a chain, ordered like the
/// descending eigenvalues of [`crate::solve_spectrum`].
///
/// The branch index is stable in `R` (the chains stay unreduced, so
/// eigenvalue curves never cross), which makes the `R = 0` order and the
/// large-`R` order the same.
pub fn spectrum_limits(
    kind: SystemKind,
    n: u32,
    m: i32,
    s: i32,
    parity: Parity,
    regime: Regime,
) -> Result<Vec<LimitDescriptor>, Error> {
    match regime {
        Regime::RToZero => {
            let sys = build_side(kind, Side::Rotational, n, m, s, parity, 0.0)?;
            let mut values = sys.diag;
            values.sort_by(|a, b| b.partial_cmp(a).unwrap());
            Ok(values.into_iter().map(LimitDescriptor::Value).collect())
        }
        Regime::RToInfinity => {
            let power = if kind == SystemKind::Osc2Elliptic { 2 } else { 1 };
            let g = |r: f64| r.powi(power);
            let (r1, r2) = (1.0, 2.0);
            let d1 = build_side(kind, Side::Parabolic, n, m, s, parity, r1)?.diag;
            let d2 = build_side(kind, Side::Parabolic, n, m, s, parity, r2)?.diag;
            let mut rows: Vec<(f64, f64)> = d1
                .iter()
                .zip(&d2)
                .map(|(&a, &b)| {
                    let slope = (b - a) / (g(r2) - g(r1));
                    (slope, a - slope * g(r1))
                })
                .collect();
            rows.sort_by(|a, b| b.partial_cmp(a).unwrap());
            Ok(rows
                .into_iter()
                .map(|(slope, intercept)| LimitDescriptor::Asymptote {
                    power,
                    slope,
                    intercept,
                })
                .collect())
        }
    }
}
