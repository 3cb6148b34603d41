//! Isotropic oscillator eigenfunctions in `p` Cartesian axes.
//!
//! Two bases are supported: the plain product of one-dimensional oscillator
//! states, and hyperspherical states labelled by a binary coordinate tree.
//! Each internal tree node pairs two coordinate blocks through one angle
//! `theta`, scaling the left block by `sin(theta)` and the right block by
//! `cos(theta)`; a node whose children are both single axes is a polar pair
//! `(x, y) = rho (cos(theta), sin(theta))` with a signed integer label.  The
//! angle values in a hyperspherical point follow the internal nodes of the
//! tree in pre-order, and so do the labels `l1, l2, ...`.

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;
use specfun::gamma::ln_factorial;
use specfun::hyper::hyp1f1_terminating;
use specfun::orthopoly::jacobi;

use crate::hermite::hermite_normalized;
use crate::ln_gamma_positive as lg;
use crate::state::{Basis, BasisState, Chart, Coordinates, System, Tree};
use crate::DomainError;

/// Squared norm of `(1-x)^{a/2} (1+x)^{b/2} P_n^{(a,b)}(x)` on `[-1, 1]`.
fn jacobi_norm(a: f64, b: f64, n: u32) -> f64 {
    let nf = f64::from(n);
    ((a + b + 1.0) * LN_2 - (2.0 * nf + a + b + 1.0).ln() + lg(nf + a + 1.0) + lg(nf + b + 1.0)
        - ln_factorial(n)
        - lg(nf + a + b + 1.0))
        .exp()
}

/// Radial factor of the `p`-axis oscillator state with principal label `n`
/// and hyperangular momentum `lambda`, normalized so that the integral of
/// `R^2 r^{p-1}` over the half line is one.
pub(crate) fn radial(p: u32, n: i64, lambda: i64, r: f64) -> Result<f64, DomainError> {
    let nr = n - lambda;
    if lambda < 0 || nr < 0 || nr % 2 != 0 {
        return Err(DomainError::InvalidNumbers(format!(
            "radial labels need n - lambda even and nonnegative, got n = {n}, lambda = {lambda}"
        )));
    }
    let nr = (nr / 2) as u32;
    let c = lambda as f64 + f64::from(p) / 2.0;
    let ln_amp = 0.5 * (LN_2 + lg(f64::from(nr) + c) - ln_factorial(nr)) - lg(c);
    let series = hyp1f1_terminating(nr, c, r * r)?;
    Ok(ln_amp.exp() * r.powi(lambda as i32) * (-r * r / 2.0).exp() * series)
}

/// Value of the tree-labelled harmonic on the unit sphere, together with the
/// angular momentum the subtree presents to its parent node.  `labels` and
/// `angles` list the internal nodes of `tree` in pre-order.
fn harmonic(tree: &Tree, labels: &[i64], angles: &[f64]) -> Result<(Complex64, i64), DomainError> {
    let (left, right) = match tree {
        Tree::Leaf => return Ok((Complex64::new(1.0, 0.0), 0)),
        Tree::Node(left, right) => (left.as_ref(), right.as_ref()),
    };
    let j = labels[0];
    let theta = angles[0];
    let split = left.internal_nodes() as usize;
    let (left_labels, right_labels) = labels[1..].split_at(split);
    let (left_angles, right_angles) = angles[1..].split_at(split);
    let bad = |need: &str| {
        Err(DomainError::InvalidNumbers(format!(
            "node label {j} is incompatible with its subtree labels: needs {need}"
        )))
    };
    match (left, right) {
        (Tree::Leaf, Tree::Leaf) => {
            let value = Complex64::from_polar(1.0 / (2.0 * PI).sqrt(), j as f64 * theta);
            Ok((value, j.abs()))
        }
        (Tree::Node(..), Tree::Leaf) => {
            let (inner, ls) = harmonic(left, left_labels, left_angles)?;
            if j < ls {
                return bad(&format!("at least {ls}"));
            }
            let a = ls as f64 + (f64::from(left.internal_nodes()) - 1.0) / 2.0;
            let degree = (j - ls) as u32;
            let cell = theta.sin().powi(ls as i32) * jacobi(a, a, degree, theta.cos())
                / jacobi_norm(a, a, degree).sqrt();
            Ok((inner * cell, j))
        }
        (Tree::Leaf, Tree::Node(..)) => {
            let (inner, lc) = harmonic(right, right_labels, right_angles)?;
            if j < lc {
                return bad(&format!("at least {lc}"));
            }
            let a = lc as f64 + (f64::from(right.internal_nodes()) - 1.0) / 2.0;
            let degree = (j - lc) as u32;
            let cell = theta.cos().powi(lc as i32) * jacobi(a, a, degree, theta.sin())
                / jacobi_norm(a, a, degree).sqrt();
            Ok((inner * cell, j))
        }
        (Tree::Node(..), Tree::Node(..)) => {
            let (sin_inner, ls) = harmonic(left, left_labels, left_angles)?;
            let (cos_inner, lc) = harmonic(right, right_labels, right_angles)?;
            let gap = j - ls - lc;
            if gap < 0 || gap % 2 != 0 {
                return bad(&format!("{ls} + {lc} plus an even gap"));
            }
            let a = ls as f64 + (f64::from(left.internal_nodes()) - 1.0) / 2.0;
            let b = lc as f64 + (f64::from(right.internal_nodes()) - 1.0) / 2.0;
            let degree = (gap / 2) as u32;
            let scale = 2f64.powf((a + b) / 2.0 + 1.0);
            let cell = scale
                * theta.sin().powi(ls as i32)
                * theta.cos().powi(lc as i32)
                * jacobi(a, b, degree, (2.0 * theta).cos())
                / jacobi_norm(a, b, degree).sqrt();
            Ok((sin_inner * cos_inner * cell, j))
        }
    }
}

fn subtree_label(tree: &Tree, labels: &[i64]) -> Result<i64, DomainError> {
    let (left, right) = match tree {
        Tree::Leaf => return Ok(0),
        Tree::Node(left, right) => (left.as_ref(), right.as_ref()),
    };
    let j = labels[0];
    let split = left.internal_nodes() as usize;
    let (left_labels, right_labels) = labels[1..].split_at(split);
    let reject = |need: String| {
        Err(DomainError::InvalidNumbers(format!(
            "tree node label {j} must be {need}"
        )))
    };
    match (left, right) {
        (Tree::Leaf, Tree::Leaf) => Ok(j.abs()),
        (Tree::Node(..), Tree::Leaf) => {
            let ls = subtree_label(left, left_labels)?;
            if j < ls {
                return reject(format!("at least the left subtree label {ls}"));
            }
            Ok(j)
        }
        (Tree::Leaf, Tree::Node(..)) => {
            let lc = subtree_label(right, right_labels)?;
            if j < lc {
                return reject(format!("at least the right subtree label {lc}"));
            }
            Ok(j)
        }
        (Tree::Node(..), Tree::Node(..)) => {
            let ls = subtree_label(left, left_labels)?;
            let lc = subtree_label(right, right_labels)?;
            let gap = j - ls - lc;
            if gap < 0 || gap % 2 != 0 {
                return reject(format!("the subtree labels {ls} + {lc} plus an even gap"));
            }
            Ok(j)
        }
    }
}

/// Check one quantum number per internal tree node, in pre-order, against
/// the branching rules of the tree cells and the principal label `n`.
pub(crate) fn validate_tree_labels(tree: &Tree, labels: &[i64], n: i64) -> Result<(), DomainError> {
    let root = subtree_label(tree, labels)?;
    let gap = n - root;
    if gap < 0 || gap % 2 != 0 {
        return Err(DomainError::InvalidNumbers(format!(
            "N = {n} must exceed the root tree label {root} by an even amount"
        )));
    }
    Ok(())
}

/// Evaluate an isotropic-oscillator eigenfunction in `p` axes at a point.
pub fn eval_oscd(state: &BasisState, point: &Coordinates) -> Result<Complex64, DomainError> {
    let p = match state.system() {
        System::OscD(p) => *p,
        other => {
            return Err(DomainError::Unsupported(format!(
                "axis-count oscillator evaluator called on a {other:?} state"
            )))
        }
    };
    match state.basis() {
        Basis::Cartesian => {
            let values = point.expect(Chart::Cartesian, p as usize)?;
            let mut product = 1.0;
            for (axis, &x) in values.iter().enumerate() {
                let n = state.int(&format!("n{}", axis + 1)) as u32;
                product *= hermite_normalized(n, x);
            }
            Ok(Complex64::new(product, 0.0))
        }
        Basis::Hyperspherical(tree) => {
            let values = point.expect(Chart::Hyperspherical, p as usize)?;
            let count = tree.internal_nodes() as usize;
            let labels: Vec<i64> = (1..=count).map(|i| state.int(&format!("l{i}"))).collect();
            let (angular, root) = harmonic(tree, &labels, &values[1..])?;
            Ok(angular * radial(p, state.int("N"), root, values[0])?)
        }
        other => Err(DomainError::Unsupported(format!(
            "axis-count oscillator states have no {other:?} basis"
        ))),
    }
}
