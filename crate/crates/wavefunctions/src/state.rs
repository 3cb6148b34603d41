//! Basis-state descriptors, coordinate charts, and their validation.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;
use num_traits::{Signed, ToPrimitive};

use crate::DomainError;

/// Binary bracketing of Cartesian axes fixing a hyperspherical chart.
///
/// Each leaf is one Cartesian axis.  Each internal node carries one angle
/// and one angular quantum number: the left subtree is scaled by `sin` of
/// the angle, the right subtree by `cos`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Tree {
    Leaf,
    Node(Box<Tree>, Box<Tree>),
}

impl Tree {
    /// Pair two subtrees under a new internal node.
    pub fn node(left: Tree, right: Tree) -> Tree {
        Tree::Node(Box::new(left), Box::new(right))
    }

    /// Left-leaning chain over `p` axes: each additional axis hangs as the
    /// right leaf of a new root.  For `p = 3` this is the ordinary
    /// spherical chart with angles ordered `[theta, phi]`.
    pub fn canonical(p: u32) -> Tree {
        assert!(p >= 2, "a coordinate tree needs at least two axes");
        let mut tree = Tree::node(Tree::Leaf, Tree::Leaf);
        for _ in 2..p {
            tree = Tree::node(tree, Tree::Leaf);
        }
        tree
    }

    /// Number of Cartesian axes under this subtree.
    pub fn leaves(&self) -> u32 {
        match self {
            Tree::Leaf => 1,
            Tree::Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    /// Number of internal nodes, which equals the number of angles.
    pub fn internal_nodes(&self) -> u32 {
        match self {
            Tree::Leaf => 0,
            Tree::Node(l, r) => 1 + l.internal_nodes() + r.internal_nodes(),
        }
    }
}

/// Vector-potential gauge for a charge in a uniform magnetic field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gauge {
    /// Landau gauge `A = (-B y, 0)`.
    Cartesian,
    /// Symmetric gauge `A = B/2 (-y, x)`.
    Polar,
}

/// Quantum system a state belongs to.
#[derive(Debug, Clone, PartialEq)]
pub enum System {
    /// Planar hydrogen atom.
    H2,
    /// Spatial hydrogen atom.
    H3,
    /// Planar isotropic oscillator (also hosts the Landau problem).
    Osc2,
    /// Isotropic oscillator in `p` dimensions.
    OscD(u32),
    /// Charge-dyon system with monopole number `s`.
    Mic(Rational64),
    /// Four-dimensional isotropic oscillator.
    Osc4,
}

impl System {
    /// Number of Cartesian coordinates.
    pub fn dimension(&self) -> u32 {
        match self {
            System::H2 | System::Osc2 => 2,
            System::H3 | System::Mic(_) => 3,
            System::OscD(p) => *p,
            System::Osc4 => 4,
        }
    }
}

/// Coordinate basis (separable chart plus any continuous parameters).
#[derive(Debug, Clone, PartialEq)]
pub enum Basis {
    Polar,
    /// First parabolic chart; planar systems use two values, spatial three.
    Parabolic1,
    /// Second planar parabolic chart, rotated a quarter turn.
    Parabolic2,
    Cartesian,
    Spherical,
    DoublePolar,
    Euler,
    Canonical,
    /// Hyperspherical chart selected by a coordinate tree.
    Hyperspherical(Tree),
    /// Planar two-center chart with interfocal distance `R`.
    Elliptic(f64),
    /// Prolate spheroidal chart with interfocal distance `R`.
    Spheroidal(f64),
    /// Scattering state of momentum `k` with definite angular momentum.
    ContinuousPolar(f64),
    /// Scattering state of momentum `k` and parabolic separation constant.
    ContinuousParabolic(f64, f64),
    /// Scattering state of momentum `k` with definite orbital momentum.
    ContinuousSpherical(f64),
    /// Uniform-magnetic-field eigenstate in the given gauge.
    Landau(Gauge),
}

/// Chart tag carried by a coordinate tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chart {
    /// `[r, phi]`
    Polar,
    /// Planar `[mu, nu]` or spatial `[mu, nu, phi]`
    Parabolic1,
    /// `[mubar, nubar]`
    Parabolic2,
    /// `[x_1, ..., x_p]`
    Cartesian,
    /// `[r, theta, phi]`
    Spherical,
    /// `[rho_1, phi_1, rho_2, phi_2]`
    DoublePolar,
    /// `[u, alpha, beta, gamma]`
    Euler,
    /// `[u, psi, theta, phi]`
    Canonical,
    /// `[r, angles...]` with angles in pre-order over internal tree nodes
    Hyperspherical,
    /// `[xi, eta]`
    Elliptic,
    /// `[xi, eta, phi]`
    Spheroidal,
}

impl Chart {
    fn name(self) -> &'static str {
        match self {
            Chart::Polar => "polar",
            Chart::Parabolic1 => "parabolic1",
            Chart::Parabolic2 => "parabolic2",
            Chart::Cartesian => "cartesian",
            Chart::Spherical => "spherical",
            Chart::DoublePolar => "double polar",
            Chart::Euler => "Euler",
            Chart::Canonical => "canonical",
            Chart::Hyperspherical => "hyperspherical",
            Chart::Elliptic => "elliptic",
            Chart::Spheroidal => "spheroidal",
        }
    }
}

/// A point expressed in one chart.
#[derive(Debug, Clone, PartialEq)]
pub struct Coordinates {
    chart: Chart,
    values: Vec<f64>,
}

impl Coordinates {
    /// Validate chart-specific domain constraints and build the point.
    pub fn new(chart: Chart, values: Vec<f64>) -> Result<Self, DomainError> {
        if values.iter().any(|v| !v.is_finite()) {
            return Err(DomainError::Coordinates("coordinate values must be finite".into()));
        }
        let err = |msg: &str| Err(DomainError::Coordinates(msg.into()));
        match chart {
            Chart::Polar => {
                if values.len() != 2 {
                    return err("polar chart takes [r, phi]");
                }
                if values[0] < 0.0 {
                    return err("polar radius must be nonnegative");
                }
            }
            Chart::Parabolic1 => match values.len() {
                2 => {}
                3 => {
                    if values[0] < 0.0 || values[1] < 0.0 {
                        return err("spatial parabolic coordinates mu, nu must be nonnegative");
                    }
                }
                _ => return err("parabolic chart takes [mu, nu] or [mu, nu, phi]"),
            },
            Chart::Parabolic2 => {
                if values.len() != 2 {
                    return err("second parabolic chart takes [mubar, nubar]");
                }
            }
            Chart::Cartesian => {
                if values.is_empty() {
                    return err("cartesian chart needs at least one value");
                }
            }
            Chart::Spherical => {
                if values.len() != 3 {
                    return err("spherical chart takes [r, theta, phi]");
                }
                if values[0] < 0.0 {
                    return err("spherical radius must be nonnegative");
                }
                if !(0.0..=std::f64::consts::PI).contains(&values[1]) {
                    return err("spherical theta must lie in [0, pi]");
                }
            }
            Chart::DoublePolar => {
                if values.len() != 4 {
                    return err("double polar chart takes [rho1, phi1, rho2, phi2]");
                }
                if values[0] < 0.0 || values[2] < 0.0 {
                    return err("double polar radii must be nonnegative");
                }
            }
            Chart::Euler => {
                if values.len() != 4 {
                    return err("Euler chart takes [u, alpha, beta, gamma]");
                }
                if values[0] < 0.0 {
                    return err("Euler radius must be nonnegative");
                }
                if !(0.0..=std::f64::consts::PI).contains(&values[2]) {
                    return err("Euler beta must lie in [0, pi]");
                }
            }
            Chart::Canonical => {
                if values.len() != 4 {
                    return err("canonical chart takes [u, psi, theta, phi]");
                }
                if values[0] < 0.0 {
                    return err("canonical radius must be nonnegative");
                }
                if !(0.0..=std::f64::consts::PI).contains(&values[1])
                    || !(0.0..=std::f64::consts::PI).contains(&values[2])
                {
                    return err("canonical psi and theta must lie in [0, pi]");
                }
            }
            Chart::Hyperspherical => {
                if values.len() < 2 {
                    return err("hyperspherical chart takes [r, angles...]");
                }
                if values[0] < 0.0 {
                    return err("hyperspherical radius must be nonnegative");
                }
            }
            Chart::Elliptic => {
                if values.len() != 2 {
                    return err("elliptic chart takes [xi, eta]");
                }
                if values[0] < 0.0 {
                    return err("elliptic xi must be nonnegative");
                }
                if !(0.0..2.0 * std::f64::consts::PI).contains(&values[1]) {
                    return err("elliptic eta must lie in [0, 2*pi)");
                }
            }
            Chart::Spheroidal => {
                if values.len() != 3 {
                    return err("spheroidal chart takes [xi, eta, phi]");
                }
                if values[0] < 1.0 {
                    return err("spheroidal xi must be at least 1");
                }
                if !(-1.0..=1.0).contains(&values[1]) {
                    return err("spheroidal eta must lie in [-1, 1]");
                }
            }
        }
        Ok(Coordinates { chart, values })
    }

    pub fn polar(r: f64, phi: f64) -> Result<Self, DomainError> {
        Coordinates::new(Chart::Polar, vec![r, phi])
    }

    pub fn parabolic_plane(mu: f64, nu: f64) -> Result<Self, DomainError> {
        Coordinates::new(Chart::Parabolic1, vec![mu, nu])
    }

    pub fn parabolic_plane_rotated(mubar: f64, nubar: f64) -> Result<Self, DomainError> {
        Coordinates::new(Chart::Parabolic2, vec![mubar, nubar])
    }

    pub fn parabolic_spatial(mu: f64, nu: f64, phi: f64) -> Result<Self, DomainError> {
        Coordinates::new(Chart::Parabolic1, vec![mu, nu, phi])
    }

    pub fn cartesian(values: &[f64]) -> Result<Self, DomainError> {
        Coordinates::new(Chart::Cartesian, values.to_vec())
    }

    pub fn spherical(r: f64, theta: f64, phi: f64) -> Result<Self, DomainError> {
        Coordinates::new(Chart::Spherical, vec![r, theta, phi])
    }

    pub fn double_polar(rho1: f64, phi1: f64, rho2: f64, phi2: f64) -> Result<Self, DomainError> {
        Coordinates::new(Chart::DoublePolar, vec![rho1, phi1, rho2, phi2])
    }

    pub fn euler(u: f64, alpha: f64, beta: f64, gamma: f64) -> Result<Self, DomainError> {
        Coordinates::new(Chart::Euler, vec![u, alpha, beta, gamma])
    }

    pub fn canonical(u: f64, psi: f64, theta: f64, phi: f64) -> Result<Self, DomainError> {
        Coordinates::new(Chart::Canonical, vec![u, psi, theta, phi])
    }

    pub fn hyperspherical(r: f64, angles: &[f64]) -> Result<Self, DomainError> {
        let mut values = vec![r];
        values.extend_from_slice(angles);
        Coordinates::new(Chart::Hyperspherical, values)
    }

    pub fn elliptic(xi: f64, eta: f64) -> Result<Self, DomainError> {
        Coordinates::new(Chart::Elliptic, vec![xi, eta])
    }

    pub fn spheroidal(xi: f64, eta: f64, phi: f64) -> Result<Self, DomainError> {
        Coordinates::new(Chart::Spheroidal, vec![xi, eta, phi])
    }

    pub fn chart(&self) -> Chart {
        self.chart
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Values of a point that must use `chart` and carry `len` entries.
    pub(crate) fn expect(&self, chart: Chart, len: usize) -> Result<&[f64], DomainError> {
        if self.chart != chart {
            return Err(DomainError::Coordinates(format!(
                "expected {} coordinates, got {}",
                chart.name(),
                self.chart.name()
            )));
        }
        if self.values.len() != len {
            return Err(DomainError::Coordinates(format!(
                "expected {len} {} values, got {}",
                chart.name(),
                self.values.len()
            )));
        }
        Ok(&self.values)
    }
}

/// A quantum state: system, coordinate basis, and quantum numbers.
///
/// Quantum numbers are exact rationals keyed by short labels; the
/// constructor rejects combinations outside the spectrum of the basis.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisState {
    system: System,
    basis: Basis,
    numbers: BTreeMap<String, Rational64>,
}

fn ratio(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}

struct Numbers<'a>(&'a BTreeMap<String, Rational64>);

impl Numbers<'_> {
    fn get(&self, label: &str) -> Result<Rational64, DomainError> {
        self.0
            .get(label)
            .copied()
            .ok_or_else(|| DomainError::MissingNumber(label.to_string()))
    }

    fn int(&self, label: &str) -> Result<i64, DomainError> {
        let v = self.get(label)?;
        if v.is_integer() {
            Ok(v.to_integer())
        } else {
            Err(DomainError::InvalidNumbers(format!("{label} = {v} must be an integer")))
        }
    }

    fn int_min(&self, label: &str, min: i64) -> Result<i64, DomainError> {
        let v = self.int(label)?;
        if v < min {
            return Err(DomainError::InvalidNumbers(format!("{label} = {v} must be at least {min}")));
        }
        Ok(v)
    }

    fn expect_labels(&self, labels: &[&str]) -> Result<(), DomainError> {
        for key in self.0.keys() {
            if !labels.contains(&key.as_str()) {
                return Err(DomainError::InvalidNumbers(format!("unexpected quantum number `{key}`")));
            }
        }
        for label in labels {
            if !self.0.contains_key(*label) {
                return Err(DomainError::MissingNumber((*label).to_string()));
            }
        }
        Ok(())
    }

    fn parity(&self, label: &str) -> Result<i64, DomainError> {
        let v = self.int(label)?;
        if v != 1 && v != -1 {
            return Err(DomainError::InvalidNumbers(format!("{label} = {v} must be +1 or -1")));
        }
        Ok(v)
    }
}

fn check_scale(name: &str, value: f64) -> Result<(), DomainError> {
    if !(value.is_finite() && value > 0.0) {
        return Err(DomainError::InvalidNumbers(format!("{name} must be positive and finite")));
    }
    Ok(())
}

impl BasisState {
    /// Build a state, validating the quantum numbers against the basis.
    pub fn new(
        system: System,
        basis: Basis,
        numbers: &[(&str, Rational64)],
    ) -> Result<Self, DomainError> {
        let mut map = BTreeMap::new();
        for (label, value) in numbers {
            if map.insert((*label).to_string(), *value).is_some() {
                return Err(DomainError::InvalidNumbers(format!("duplicate quantum number `{label}`")));
            }
        }
        let state = BasisState { system, basis, numbers: map };
        state.validate()?;
        Ok(state)
    }

    pub fn system(&self) -> &System {
        &self.system
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn numbers(&self) -> &BTreeMap<String, Rational64> {
        &self.numbers
    }

    /// One quantum number by label.
    pub fn number(&self, label: &str) -> Option<Rational64> {
        self.numbers.get(label).copied()
    }

    pub(crate) fn int(&self, label: &str) -> i64 {
        self.numbers[label].to_integer()
    }

    pub(crate) fn rat(&self, label: &str) -> Rational64 {
        self.numbers[label]
    }

    pub(crate) fn real(&self, label: &str) -> f64 {
        let v = self.numbers[label];
        v.to_f64().unwrap_or(*v.numer() as f64 / *v.denom() as f64)
    }

    fn validate(&self) -> Result<(), DomainError> {
        let nums = Numbers(&self.numbers);
        let unsupported = || {
            Err(DomainError::Unsupported(format!(
                "{} has no {} basis",
                self.system_label(),
                self.basis_label()
            )))
        };
        match (&self.system, &self.basis) {
            (System::H2, Basis::Polar) => {
                nums.expect_labels(&["n", "m"])?;
                let n = nums.int_min("n", 0)?;
                let m = nums.int("m")?;
                if m.abs() > n {
                    return Err(DomainError::InvalidNumbers(format!("|m| = {} exceeds n = {n}", m.abs())));
                }
            }
            (System::H2, Basis::Parabolic1 | Basis::Parabolic2) => {
                nums.expect_labels(&["n1", "n2"])?;
                let n1 = nums.int_min("n1", 0)?;
                let n2 = nums.int_min("n2", 0)?;
                if (n1 + n2) % 2 != 0 {
                    return Err(DomainError::InvalidNumbers(format!(
                        "n1 + n2 = {} must be even for a single-valued planar state",
                        n1 + n2
                    )));
                }
            }
            (System::H2, Basis::Elliptic(r)) => {
                check_scale("interfocal distance", *r)?;
                nums.expect_labels(&["n", "q", "parity"])?;
                let n = nums.int_min("n", 0)?;
                let q = nums.int_min("q", 0)?;
                let parity = nums.parity("parity")?;
                let dim = if parity == 1 { n + 1 } else { n };
                if q >= dim {
                    return Err(DomainError::InvalidNumbers(format!(
                        "branch q = {q} out of range for n = {n}, parity = {parity}"
                    )));
                }
            }
            (System::H2, Basis::ContinuousPolar(k)) => {
                check_scale("momentum k", *k)?;
                nums.expect_labels(&["m"])?;
                nums.int("m")?;
            }
            (System::H2, Basis::ContinuousParabolic(k, beta)) => {
                check_scale("momentum k", *k)?;
                if !beta.is_finite() {
                    return Err(DomainError::InvalidNumbers("separation constant beta must be finite".into()));
                }
                nums.expect_labels(&["parity"])?;
                nums.parity("parity")?;
            }
            (System::H3, Basis::Spherical) => {
                nums.expect_labels(&["n", "l", "m"])?;
                let n = nums.int_min("n", 1)?;
                let l = nums.int_min("l", 0)?;
                let m = nums.int("m")?;
                if l > n - 1 {
                    return Err(DomainError::InvalidNumbers(format!("l = {l} exceeds n - 1 = {}", n - 1)));
                }
                if m.abs() > l {
                    return Err(DomainError::InvalidNumbers(format!("|m| = {} exceeds l = {l}", m.abs())));
                }
            }
            (System::H3, Basis::Parabolic1) => {
                nums.expect_labels(&["n1", "n2", "m"])?;
                nums.int_min("n1", 0)?;
                nums.int_min("n2", 0)?;
                nums.int("m")?;
            }
            (System::H3, Basis::Spheroidal(r)) => {
                check_scale("interfocal distance", *r)?;
                nums.expect_labels(&["n", "m", "q"])?;
                let n = nums.int_min("n", 1)?;
                let m = nums.int("m")?;
                let q = nums.int_min("q", 0)?;
                if m.abs() > n - 1 {
                    return Err(DomainError::InvalidNumbers(format!("|m| = {} exceeds n - 1 = {}", m.abs(), n - 1)));
                }
                if q > n - 1 - m.abs() {
                    return Err(DomainError::InvalidNumbers(format!(
                        "branch q = {q} out of range for n = {n}, |m| = {}",
                        m.abs()
                    )));
                }
            }
            (System::H3, Basis::ContinuousSpherical(k)) => {
                check_scale("momentum k", *k)?;
                nums.expect_labels(&["l", "m"])?;
                let l = nums.int_min("l", 0)?;
                let m = nums.int("m")?;
                if m.abs() > l {
                    return Err(DomainError::InvalidNumbers(format!("|m| = {} exceeds l = {l}", m.abs())));
                }
            }
            (System::H3, Basis::ContinuousParabolic(k, beta)) => {
                check_scale("momentum k", *k)?;
                if !beta.is_finite() {
                    return Err(DomainError::InvalidNumbers("separation constant beta must be finite".into()));
                }
                nums.expect_labels(&["m"])?;
                nums.int("m")?;
            }
            (System::Osc2, Basis::Cartesian) => {
                nums.expect_labels(&["J", "M"])?;
                let j = nums.get("J")?;
                let m = nums.get("M")?;
                for (label, v) in [("J + M", j + m), ("J - M", j - m)] {
                    if !v.is_integer() || v.numer().is_negative() {
                        return Err(DomainError::InvalidNumbers(format!(
                            "{label} = {v} must be a nonnegative integer"
                        )));
                    }
                }
            }
            (System::Osc2, Basis::Polar) => {
                nums.expect_labels(&["J", "Mp"])?;
                let j = nums.get("J")?;
                let mp = nums.get("Mp")?;
                let nr = j - mp.abs();
                if !nr.is_integer() || nr.numer().is_negative() {
                    return Err(DomainError::InvalidNumbers(format!(
                        "J - |Mp| = {nr} must be a nonnegative integer"
                    )));
                }
                if !(mp * ratio(2)).is_integer() {
                    return Err(DomainError::InvalidNumbers(format!("2 Mp = {} must be an integer", mp * ratio(2))));
                }
            }
            (System::Osc2, Basis::Elliptic(r)) => {
                check_scale("interfocal distance", *r)?;
                nums.expect_labels(&["N", "q", "parity"])?;
                let n = nums.int_min("N", 0)?;
                let q = nums.int_min("q", 0)?;
                let parity = nums.parity("parity")?;
                let dim = match (n % 2 == 0, parity == 1) {
                    (true, true) => n / 2 + 1,
                    (false, _) => (n + 1) / 2,
                    (true, false) => n / 2,
                };
                if q >= dim {
                    return Err(DomainError::InvalidNumbers(format!(
                        "branch q = {q} out of range for N = {n}, parity = {parity}"
                    )));
                }
            }
            (System::Osc2, Basis::Landau(gauge)) => match gauge {
                Gauge::Cartesian => {
                    nums.expect_labels(&["n", "y0"])?;
                    nums.int_min("n", 0)?;
                    nums.get("y0")?;
                }
                Gauge::Polar => {
                    if self.numbers.contains_key("y0") {
                        nums.expect_labels(&["n", "y0"])?;
                        nums.int_min("n", 0)?;
                    } else {
                        nums.expect_labels(&["N", "m"])?;
                        nums.int_min("N", 0)?;
                        nums.int("m")?;
                    }
                }
            },
            (System::OscD(p), Basis::Cartesian) => {
                if *p < 2 {
                    return Err(DomainError::Unsupported("oscillator dimension must be at least 2".into()));
                }
                let labels: Vec<String> = (1..=*p).map(|i| format!("n{i}")).collect();
                let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
                nums.expect_labels(&refs)?;
                for label in &refs {
                    nums.int_min(label, 0)?;
                }
            }
            (System::OscD(p), Basis::Hyperspherical(tree)) => {
                if *p < 2 {
                    return Err(DomainError::Unsupported("oscillator dimension must be at least 2".into()));
                }
                if tree.leaves() != *p {
                    return Err(DomainError::InvalidNumbers(format!(
                        "coordinate tree has {} axes but the system has {p}",
                        tree.leaves()
                    )));
                }
                let count = tree.internal_nodes();
                let labels: Vec<String> = std::iter::once("N".to_string())
                    .chain((1..=count).map(|i| format!("l{i}")))
                    .collect();
                let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
                nums.expect_labels(&refs)?;
                let n = nums.int_min("N", 0)?;
                let ls: Vec<i64> = (1..=count)
                    .map(|i| nums.int(&format!("l{i}")))
                    .collect::<Result<_, _>>()?;
                crate::oscd::validate_tree_labels(tree, &ls, n)?;
            }
            (System::Mic(s), Basis::Spherical) => {
                mic_charge_ok(*s)?;
                nums.expect_labels(&["n", "j", "m"])?;
                let n = nums.get("n")?;
                let j = nums.get("j")?;
                let m = nums.get("m")?;
                let sa = s.abs();
                let steps = n - sa;
                if !steps.is_integer() || steps < ratio(1) {
                    return Err(DomainError::InvalidNumbers(format!(
                        "n = {n} must sit a positive integer above |s| = {sa}"
                    )));
                }
                let js = j - sa;
                if !js.is_integer() || js.numer().is_negative() {
                    return Err(DomainError::InvalidNumbers(format!(
                        "j = {j} must sit a nonnegative integer above |s| = {sa}"
                    )));
                }
                if j > n - ratio(1) {
                    return Err(DomainError::InvalidNumbers(format!("j = {j} exceeds n - 1 = {}", n - ratio(1))));
                }
                if m.abs() > j || !(j - m).is_integer() {
                    return Err(DomainError::InvalidNumbers(format!("m = {m} is not a projection of j = {j}")));
                }
            }
            (System::Mic(s), Basis::Parabolic1) => {
                mic_charge_ok(*s)?;
                nums.expect_labels(&["n1", "n2", "m"])?;
                nums.int_min("n1", 0)?;
                nums.int_min("n2", 0)?;
                let m = nums.get("m")?;
                if !(m - s).is_integer() {
                    return Err(DomainError::InvalidNumbers(format!(
                        "m = {m} must differ from s = {s} by an integer"
                    )));
                }
            }
            (System::Osc4, Basis::Cartesian) => {
                nums.expect_labels(&["n0", "n1", "n2", "n3"])?;
                for label in ["n0", "n1", "n2", "n3"] {
                    nums.int_min(label, 0)?;
                }
            }
            (System::Osc4, Basis::Euler) => {
                nums.expect_labels(&["N", "L", "M", "Mp"])?;
                let n = nums.int_min("N", 0)?;
                let l = nums.get("L")?;
                let halfn = Rational64::new(n, 2);
                let radial = halfn - l;
                if !radial.is_integer() || radial.numer().is_negative() {
                    return Err(DomainError::InvalidNumbers(format!(
                        "N/2 - L = {radial} must be a nonnegative integer"
                    )));
                }
                for label in ["M", "Mp"] {
                    let m = nums.get(label)?;
                    if m.abs() > l || !(l - m).is_integer() {
                        return Err(DomainError::InvalidNumbers(format!(
                            "{label} = {m} is not a projection of L = {l}"
                        )));
                    }
                }
            }
            (System::Osc4, Basis::DoublePolar) => {
                nums.expect_labels(&["Nrho1", "Nrho2", "m1", "m2"])?;
                nums.int_min("Nrho1", 0)?;
                nums.int_min("Nrho2", 0)?;
                nums.int("m1")?;
                nums.int("m2")?;
            }
            (System::Osc4, Basis::Canonical) => {
                nums.expect_labels(&["N", "J", "l", "mbar"])?;
                let n = nums.int_min("N", 0)?;
                let j = nums.int_min("J", 0)?;
                let l = nums.int_min("l", 0)?;
                let mbar = nums.int("mbar")?;
                if j > n || (n - j) % 2 != 0 {
                    return Err(DomainError::InvalidNumbers(format!(
                        "J = {j} must step down from N = {n} in twos"
                    )));
                }
                if l > j {
                    return Err(DomainError::InvalidNumbers(format!("l = {l} exceeds J = {j}")));
                }
                if mbar.abs() > l {
                    return Err(DomainError::InvalidNumbers(format!("|mbar| = {} exceeds l = {l}", mbar.abs())));
                }
            }
            _ => return unsupported(),
        }
        Ok(())
    }

    /// Energy of the state in the natural units of its system.
    pub fn energy(&self) -> f64 {
        match (&self.system, &self.basis) {
            (System::H2, Basis::Polar) | (System::H2, Basis::Elliptic(_)) => {
                let n = self.real("n");
                -2.0 / ((2.0 * n + 1.0) * (2.0 * n + 1.0))
            }
            (System::H2, Basis::Parabolic1 | Basis::Parabolic2) => {
                let n = (self.real("n1") + self.real("n2")) / 2.0;
                -2.0 / ((2.0 * n + 1.0) * (2.0 * n + 1.0))
            }
            (System::H3, Basis::Spherical) | (System::H3, Basis::Spheroidal(_)) => {
                let n = self.real("n");
                -0.5 / (n * n)
            }
            (System::H3, Basis::Parabolic1) => {
                let n = self.real("n1") + self.real("n2") + self.real("m").abs() + 1.0;
                -0.5 / (n * n)
            }
            (System::Mic(s), Basis::Spherical) => {
                let _ = s;
                let n = self.real("n");
                -0.5 / (n * n)
            }
            (System::Mic(s), Basis::Parabolic1) => {
                let s = s.to_f64().unwrap();
                let m = self.real("m");
                let n = self.real("n1")
                    + self.real("n2")
                    + ((m - s).abs() + (m + s).abs()) / 2.0
                    + 1.0;
                -0.5 / (n * n)
            }
            (System::Osc2, Basis::Cartesian | Basis::Polar) => 2.0 * self.real("J") + 1.0,
            (System::Osc2, Basis::Elliptic(_)) => self.real("N") + 1.0,
            (System::Osc2, Basis::Landau(gauge)) => match gauge {
                Gauge::Cartesian => self.real("n") + 0.5,
                Gauge::Polar => {
                    if self.numbers.contains_key("y0") {
                        self.real("n") + 0.5
                    } else {
                        let m = self.real("m");
                        self.real("N") + (m + m.abs()) / 2.0 + 0.5
                    }
                }
            },
            (System::OscD(p), Basis::Cartesian) => {
                let total: f64 = (1..=*p).map(|i| self.real(&format!("n{i}"))).sum();
                total + f64::from(*p) / 2.0
            }
            (System::OscD(p), Basis::Hyperspherical(_)) => self.real("N") + f64::from(*p) / 2.0,
            (System::Osc4, Basis::Cartesian) => {
                self.real("n0") + self.real("n1") + self.real("n2") + self.real("n3") + 2.0
            }
            (System::Osc4, Basis::Euler | Basis::Canonical) => self.real("N") + 2.0,
            (System::Osc4, Basis::DoublePolar) => {
                2.0 * (self.real("Nrho1") + self.real("Nrho2"))
                    + self.real("m1").abs()
                    + self.real("m2").abs()
                    + 2.0
            }
            (_, Basis::ContinuousPolar(k) | Basis::ContinuousSpherical(k)) => 0.5 * k * k,
            (_, Basis::ContinuousParabolic(k, _)) => 0.5 * k * k,
            _ => f64::NAN,
        }
    }

    pub(crate) fn system_label(&self) -> String {
        match &self.system {
            System::H2 => "H2".into(),
            System::H3 => "H3".into(),
            System::Osc2 => "OSC2".into(),
            System::OscD(p) => format!("OSC{p}"),
            System::Mic(s) => format!("MIC(s={s})"),
            System::Osc4 => "OSC4".into(),
        }
    }

    pub(crate) fn basis_label(&self) -> String {
        match &self.basis {
            Basis::Polar => "polar".into(),
            Basis::Parabolic1 => "parabolic1".into(),
            Basis::Parabolic2 => "parabolic2".into(),
            Basis::Cartesian => "cartesian".into(),
            Basis::Spherical => "spherical".into(),
            Basis::DoublePolar => "double_polar".into(),
            Basis::Euler => "euler".into(),
            Basis::Canonical => "canonical".into(),
            Basis::Hyperspherical(tree) => format!("hyperspherical(p={})", tree.leaves()),
            Basis::Elliptic(r) => format!("elliptic(R={r})"),
            Basis::Spheroidal(r) => format!("spheroidal(R={r})"),
            Basis::ContinuousPolar(k) => format!("continuous_polar(k={k})"),
            Basis::ContinuousParabolic(k, beta) => format!("continuous_parabolic(k={k}, beta={beta})"),
            Basis::ContinuousSpherical(k) => format!("continuous_spherical(k={k})"),
            Basis::Landau(Gauge::Cartesian) => "landau(cartesian)".into(),
            Basis::Landau(Gauge::Polar) => "landau(polar)".into(),
        }
    }

    /// Human-readable state label, also used in grid-export headers.
    pub fn label(&self) -> String {
        let mut out = format!("{} {}", self.system_label(), self.basis_label());
        for (key, value) in &self.numbers {
            out.push_str(&format!(" {key}={value}"));
        }
        out
    }
}

impl fmt::Display for BasisState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

fn mic_charge_ok(s: Rational64) -> Result<(), DomainError> {
    if *s.denom() == 1 || *s.denom() == 2 {
        Ok(())
    } else {
        Err(DomainError::InvalidNumbers(format!(
            "monopole number s = {s} must be integer or half-integer"
        )))
    }
}

impl BasisState {
    pub fn h2_polar(n: i64, m: i64) -> Result<Self, DomainError> {
        BasisState::new(System::H2, Basis::Polar, &[("n", ratio(n)), ("m", ratio(m))])
    }

    pub fn h2_parabolic1(n1: i64, n2: i64) -> Result<Self, DomainError> {
        BasisState::new(System::H2, Basis::Parabolic1, &[("n1", ratio(n1)), ("n2", ratio(n2))])
    }

    pub fn h2_parabolic2(n1: i64, n2: i64) -> Result<Self, DomainError> {
        BasisState::new(System::H2, Basis::Parabolic2, &[("n1", ratio(n1)), ("n2", ratio(n2))])
    }

    pub fn h2_elliptic(n: i64, q: i64, parity: i64, r: f64) -> Result<Self, DomainError> {
        BasisState::new(
            System::H2,
            Basis::Elliptic(r),
            &[("n", ratio(n)), ("q", ratio(q)), ("parity", ratio(parity))],
        )
    }

    pub fn h2_continuous_polar(k: f64, m: i64) -> Result<Self, DomainError> {
        BasisState::new(System::H2, Basis::ContinuousPolar(k), &[("m", ratio(m))])
    }

    pub fn h2_continuous_parabolic(k: f64, beta: f64, parity: i64) -> Result<Self, DomainError> {
        BasisState::new(
            System::H2,
            Basis::ContinuousParabolic(k, beta),
            &[("parity", ratio(parity))],
        )
    }

    pub fn h3_spherical(n: i64, l: i64, m: i64) -> Result<Self, DomainError> {
        BasisState::new(
            System::H3,
            Basis::Spherical,
            &[("n", ratio(n)), ("l", ratio(l)), ("m", ratio(m))],
        )
    }

    pub fn h3_parabolic(n1: i64, n2: i64, m: i64) -> Result<Self, DomainError> {
        BasisState::new(
            System::H3,
            Basis::Parabolic1,
            &[("n1", ratio(n1)), ("n2", ratio(n2)), ("m", ratio(m))],
        )
    }

    pub fn h3_spheroidal(n: i64, m: i64, q: i64, r: f64) -> Result<Self, DomainError> {
        BasisState::new(
            System::H3,
            Basis::Spheroidal(r),
            &[("n", ratio(n)), ("m", ratio(m)), ("q", ratio(q))],
        )
    }

    pub fn h3_continuous_spherical(k: f64, l: i64, m: i64) -> Result<Self, DomainError> {
        BasisState::new(
            System::H3,
            Basis::ContinuousSpherical(k),
            &[("l", ratio(l)), ("m", ratio(m))],
        )
    }

    pub fn h3_continuous_parabolic(k: f64, beta: f64, m: i64) -> Result<Self, DomainError> {
        BasisState::new(System::H3, Basis::ContinuousParabolic(k, beta), &[("m", ratio(m))])
    }

    pub fn osc2_cartesian(j: Rational64, m: Rational64) -> Result<Self, DomainError> {
        BasisState::new(System::Osc2, Basis::Cartesian, &[("J", j), ("M", m)])
    }

    pub fn osc2_polar(j: Rational64, mp: Rational64) -> Result<Self, DomainError> {
        BasisState::new(System::Osc2, Basis::Polar, &[("J", j), ("Mp", mp)])
    }

    pub fn osc2_elliptic(n: i64, q: i64, parity: i64, r: f64) -> Result<Self, DomainError> {
        BasisState::new(
            System::Osc2,
            Basis::Elliptic(r),
            &[("N", ratio(n)), ("q", ratio(q)), ("parity", ratio(parity))],
        )
    }

    pub fn landau_cartesian(n: i64, y0: Rational64) -> Result<Self, DomainError> {
        BasisState::new(System::Osc2, Basis::Landau(Gauge::Cartesian), &[("n", ratio(n)), ("y0", y0)])
    }

    pub fn landau_polar(n: i64, m: i64) -> Result<Self, DomainError> {
        BasisState::new(System::Osc2, Basis::Landau(Gauge::Polar), &[("N", ratio(n)), ("m", ratio(m))])
    }

    pub fn landau_cartesian_in_polar_gauge(n: i64, y0: Rational64) -> Result<Self, DomainError> {
        BasisState::new(System::Osc2, Basis::Landau(Gauge::Polar), &[("n", ratio(n)), ("y0", y0)])
    }

    pub fn oscd_cartesian(ns: &[i64]) -> Result<Self, DomainError> {
        let labels: Vec<String> = (1..=ns.len()).map(|i| format!("n{i}")).collect();
        let pairs: Vec<(&str, Rational64)> = labels
            .iter()
            .zip(ns)
            .map(|(label, &n)| (label.as_str(), ratio(n)))
            .collect();
        BasisState::new(System::OscD(ns.len() as u32), Basis::Cartesian, &pairs)
    }

    pub fn oscd_hyperspherical(tree: Tree, n: i64, ls: &[i64]) -> Result<Self, DomainError> {
        let p = tree.leaves();
        let labels: Vec<String> = (1..=ls.len()).map(|i| format!("l{i}")).collect();
        let mut pairs: Vec<(&str, Rational64)> = vec![("N", ratio(n))];
        pairs.extend(labels.iter().zip(ls).map(|(label, &l)| (label.as_str(), ratio(l))));
        BasisState::new(System::OscD(p), Basis::Hyperspherical(tree), &pairs)
    }

    pub fn mic_spherical(
        s: Rational64,
        n: Rational64,
        j: Rational64,
        m: Rational64,
    ) -> Result<Self, DomainError> {
        BasisState::new(System::Mic(s), Basis::Spherical, &[("n", n), ("j", j), ("m", m)])
    }

    pub fn mic_parabolic(
        s: Rational64,
        n1: i64,
        n2: i64,
        m: Rational64,
    ) -> Result<Self, DomainError> {
        BasisState::new(
            System::Mic(s),
            Basis::Parabolic1,
            &[("n1", ratio(n1)), ("n2", ratio(n2)), ("m", m)],
        )
    }

    pub fn osc4_cartesian(n0: i64, n1: i64, n2: i64, n3: i64) -> Result<Self, DomainError> {
        BasisState::new(
            System::Osc4,
            Basis::Cartesian,
            &[("n0", ratio(n0)), ("n1", ratio(n1)), ("n2", ratio(n2)), ("n3", ratio(n3))],
        )
    }

    pub fn osc4_euler(
        n: i64,
        l: Rational64,
        m: Rational64,
        mp: Rational64,
    ) -> Result<Self, DomainError> {
        BasisState::new(
            System::Osc4,
            Basis::Euler,
            &[("N", ratio(n)), ("L", l), ("M", m), ("Mp", mp)],
        )
    }

    pub fn osc4_double_polar(nr1: i64, nr2: i64, m1: i64, m2: i64) -> Result<Self, DomainError> {
        BasisState::new(
            System::Osc4,
            Basis::DoublePolar,
            &[("Nrho1", ratio(nr1)), ("Nrho2", ratio(nr2)), ("m1", ratio(m1)), ("m2", ratio(m2))],
        )
    }

    pub fn osc4_canonical(n: i64, j: i64, l: i64, mbar: i64) -> Result<Self, DomainError> {
        BasisState::new(
            System::Osc4,
            Basis::Canonical,
            &[("N", ratio(n)), ("J", ratio(j)), ("l", ratio(l)), ("mbar", ratio(mbar))],
        )
    }
}
