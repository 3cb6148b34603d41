//! Conversions between the two-center charts and their limiting charts.
//!
//! All planar elliptic coordinates here have foci at the origin and at
//! `(R, 0)` so that the atomic center sits at a focus; the oscillator's
//! elliptic chart instead centers the foci at `(-R/2, 0)` and `(R/2, 0)`.

/// Spherical `(r, theta)` of the prolate spheroidal point `(xi, eta)`
/// measured from the focus at the origin.
pub fn spherical_from_spheroidal(xi: f64, eta: f64, big_r: f64) -> (f64, f64) {
    let r = 0.5 * big_r * (xi + eta);
    let cos_theta = if r == 0.0 { 1.0 } else { (xi * eta + 1.0) / (xi + eta) };
    (r, cos_theta.clamp(-1.0, 1.0).acos())
}

/// Parabolic `(mu, nu)` of the prolate spheroidal point `(xi, eta)`.
pub fn parabolic_from_spheroidal(xi: f64, eta: f64, big_r: f64) -> (f64, f64) {
    let mu = 0.5 * big_r * (1.0 + xi) * (1.0 + eta);
    let nu = 0.5 * big_r * (xi - 1.0) * (1.0 - eta);
    (mu.max(0.0), nu.max(0.0))
}

/// Prolate spheroidal `(xi, eta)` of a spherical point, from the exact
/// focal-distance pair `r1 = r`, `r2 = |r - R e_z|`.
pub fn spheroidal_from_spherical(r: f64, theta: f64, big_r: f64) -> (f64, f64) {
    let z = r * theta.cos();
    let rho2 = (r * theta.sin()).powi(2);
    let r2 = (rho2 + (z - big_r) * (z - big_r)).sqrt();
    let xi = ((r + r2) / big_r - 1.0).max(0.0) + 1.0;
    let eta = ((r - r2) / big_r + 1.0).clamp(-1.0, 1.0);
    (xi, eta)
}

/// Polar `(r, phi)` of the planar elliptic point `(xi, eta)`.
pub fn polar_from_plane_elliptic(xi: f64, eta: f64, big_r: f64) -> (f64, f64) {
    let x = 0.5 * big_r * (xi.cosh() * eta.cos() + 1.0);
    let y = 0.5 * big_r * xi.sinh() * eta.sin();
    let r = 0.5 * big_r * (xi.cosh() + eta.cos());
    (r.max(0.0), y.atan2(x))
}

/// Planar elliptic `(xi, eta)` of a polar point with a focus at the
/// origin, from the focal-distance pair.
pub fn plane_elliptic_from_polar(r: f64, phi: f64, big_r: f64) -> (f64, f64) {
    let x = r * phi.cos();
    let y = r * phi.sin();
    let r2 = ((x - big_r) * (x - big_r) + y * y).sqrt();
    let xi = (((r + r2) / big_r).max(1.0)).acosh();
    let ce = ((r - r2) / big_r).clamp(-1.0, 1.0);
    let eta = if y >= 0.0 { ce.acos() } else { 2.0 * std::f64::consts::PI - ce.acos() };
    (xi, eta.rem_euclid(2.0 * std::f64::consts::PI))
}

/// Cartesian `(x, y)` of the oscillator's centered elliptic point.
pub fn cartesian_from_plane_elliptic(xi: f64, eta: f64, big_r: f64) -> (f64, f64) {
    (0.5 * big_r * xi.cosh() * eta.cos(), 0.5 * big_r * xi.sinh() * eta.sin())
}

/// Centered elliptic `(xi, eta)` of a Cartesian point, from the
/// focal-distance pair for foci at `(-R/2, 0)` and `(R/2, 0)`.
pub fn elliptic_from_plane_cartesian(x: f64, y: f64, big_r: f64) -> (f64, f64) {
    let half = 0.5 * big_r;
    let r1 = ((x + half) * (x + half) + y * y).sqrt();
    let r2 = ((x - half) * (x - half) + y * y).sqrt();
    let xi = (((r1 + r2) / big_r).max(1.0)).acosh();
    let ce = ((r1 - r2) / big_r).clamp(-1.0, 1.0);
    let eta = if y >= 0.0 { ce.acos() } else { 2.0 * std::f64::consts::PI - ce.acos() };
    (xi, eta.rem_euclid(2.0 * std::f64::consts::PI))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spheroidal_round_trip() {
        let big_r = 1.7;
        for &(xi, eta) in &[(1.0, 1.0), (1.3, -0.4), (2.8, 0.9), (1.05, -0.99)] {
            let (r, theta) = spherical_from_spheroidal(xi, eta, big_r);
            let (xi2, eta2) = spheroidal_from_spherical(r, theta, big_r);
            assert!((xi - xi2).abs() < 1e-10, "xi: {xi} vs {xi2}");
            assert!((eta - eta2).abs() < 1e-10, "eta: {eta} vs {eta2}");
        }
    }

    #[test]
    fn parabolic_product_matches_focal_radius() {
        let big_r = 2.3;
        for &(xi, eta) in &[(1.2, 0.3), (1.9, -0.8), (1.0, 0.0)] {
            let (mu, nu) = parabolic_from_spheroidal(xi, eta, big_r);
            let (r, theta) = spherical_from_spheroidal(xi, eta, big_r);
            assert!((mu + nu - 2.0 * r).abs() < 1e-12);
            assert!((mu - r * (1.0 + theta.cos())).abs() < 1e-10);
        }
    }

    #[test]
    fn plane_elliptic_round_trip() {
        let big_r = 0.9;
        for &(xi, eta) in &[(0.4, 0.7), (1.1, 3.0), (0.2, 4.5), (0.8, 6.1)] {
            let (r, phi) = polar_from_plane_elliptic(xi, eta, big_r);
            let (xi2, eta2) = plane_elliptic_from_polar(r, phi, big_r);
            assert!((xi - xi2).abs() < 1e-9, "xi: {xi} vs {xi2}");
            assert!((eta - eta2).abs() < 1e-9, "eta: {eta} vs {eta2}");
        }
    }

    #[test]
    fn centered_elliptic_round_trip() {
        let big_r = 1.4;
        for &(xi, eta) in &[(0.5, 1.1), (1.3, 2.9), (0.9, 5.7)] {
            let (x, y) = cartesian_from_plane_elliptic(xi, eta, big_r);
            let (xi2, eta2) = elliptic_from_plane_cartesian(x, y, big_r);
            assert!((xi - xi2).abs() < 1e-10);
            assert!((eta - eta2).abs() < 1e-10);
        }
    }

    #[test]
    fn focal_radius_identity_in_the_plane() {
        let big_r = 2.0;
        let (r, phi) = polar_from_plane_elliptic(0.7, 1.9, big_r);
        let x = r * phi.cos();
        let y = r * phi.sin();
        let expected_x = 0.5 * big_r * (0.7f64.cosh() * 1.9f64.cos() + 1.0);
        let expected_y = 0.5 * big_r * 0.7f64.sinh() * 1.9f64.sin();
        assert!((x - expected_x).abs() < 1e-12);
        assert!((y - expected_y).abs() < 1e-12);
    }
}
