//! Quadrature rules used for numeric normalization and the crate's tests.

use specfun::KahanSum;

/// Gauss-Legendre rule on `[-1, 1]`.
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Build an `n`-point rule by Newton iteration on the Legendre
    /// recurrence, seeded with the Chebyshev angle estimates.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_pair(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-15 {
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        GaussLegendre { nodes, weights }
    }

    /// Integrate `f` over `[a, b]`.
    pub fn integrate<F: Fn(f64) -> f64>(&self, a: f64, b: f64, f: &F) -> f64 {
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let mut sum = KahanSum::new();
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            sum.add(w * f(mid + half * x));
        }
        half * sum.value()
    }
}

/// Legendre polynomial and derivative at `x` for the Newton solve.
fn legendre_pair(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Integrate `f` over `[a, b]` with `panels` equal Gauss-Legendre panels.
pub fn panel_integrate<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, panels: usize, nodes: usize) -> f64 {
    let rule = GaussLegendre::new(nodes);
    let width = (b - a) / panels as f64;
    let mut sum = KahanSum::new();
    for i in 0..panels {
        let lo = a + width * i as f64;
        sum.add(rule.integrate(lo, lo + width, f));
    }
    sum.value()
}

/// Integrate `f` over `[0, inf)` with panels of width `scale`, stopping
/// once four consecutive panels contribute below 1e-17 of the running
/// total.  `scale` should match the decay length of the integrand.
pub fn half_line<F: Fn(f64) -> f64>(f: &F, scale: f64) -> f64 {
    assert!(scale > 0.0 && scale.is_finite());
    let rule = GaussLegendre::new(24);
    let mut sum = KahanSum::new();
    let mut quiet = 0;
    for i in 0..600 {
        let lo = scale * i as f64;
        let part = rule.integrate(lo, lo + scale, f);
        sum.add(part);
        if part.abs() <= 1e-17 * sum.value().abs().max(1e-290) {
            quiet += 1;
            if quiet >= 4 {
                break;
            }
        } else {
            quiet = 0;
        }
    }
    sum.value()
}

/// Integrate `f` over the whole real line with panels of width `scale`
/// centered on the origin.
pub fn real_line<F: Fn(f64) -> f64>(f: &F, scale: f64) -> f64 {
    half_line(&|x| f(x) + f(-x), scale)
}

/// Rectangle rule over one period of a periodic function, which converges
/// geometrically and is exact for trigonometric polynomials of degree
/// below `n / 2`.
pub fn periodic<F: Fn(f64) -> f64>(f: &F, period: f64, n: usize) -> f64 {
    let h = period / n as f64;
    let mut sum = KahanSum::new();
    for i in 0..n {
        sum.add(f(h * i as f64));
    }
    h * sum.value()
}
