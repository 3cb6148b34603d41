//! Exact angular-momentum labels in quarter-integer units.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

/// An angular-momentum quantum number stored as an exact multiple of 1/4.
///
/// Recoupling formulae for oscillator bases involve genuine quarter-integer
/// momenta, so the usual doubled-integer representation is not enough.
/// `quarters = 4 * value` keeps every label exact and hashable.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct AngularMomentum {
    quarters: i32,
}

impl AngularMomentum {
    pub const ZERO: AngularMomentum = AngularMomentum { quarters: 0 };

    pub fn from_quarters(quarters: i32) -> Self {
        AngularMomentum { quarters }
    }

    pub fn from_halves(halves: i32) -> Self {
        AngularMomentum { quarters: 2 * halves }
    }

    pub fn from_int(n: i32) -> Self {
        AngularMomentum { quarters: 4 * n }
    }

    pub fn quarters(self) -> i32 {
        self.quarters
    }

    pub fn value(self) -> f64 {
        f64::from(self.quarters) / 4.0
    }

    /// True when the label is an integer (…,-1, 0, 1,…).
    pub fn is_integer(self) -> bool {
        self.quarters.rem_euclid(4) == 0
    }

    /// True when the label is an integer multiple of 1/2 (integers included).
    pub fn is_half_integer(self) -> bool {
        self.quarters.rem_euclid(2) == 0
    }

    /// Integer value, if the label is an integer.
    pub fn as_int(self) -> Option<i32> {
        self.is_integer().then_some(self.quarters / 4)
    }

    pub fn abs(self) -> Self {
        AngularMomentum { quarters: self.quarters.abs() }
    }

    /// True when `other` differs from `self` by an integer, which is what
    /// projection quantum numbers of a given momentum must satisfy.
    pub fn same_ladder(self, other: AngularMomentum) -> bool {
        (self.quarters - other.quarters).rem_euclid(4) == 0
    }
}

impl Add for AngularMomentum {
    type Output = AngularMomentum;
    fn add(self, rhs: Self) -> Self {
        AngularMomentum { quarters: self.quarters + rhs.quarters }
    }
}

impl Sub for AngularMomentum {
    type Output = AngularMomentum;
    fn sub(self, rhs: Self) -> Self {
        AngularMomentum { quarters: self.quarters - rhs.quarters }
    }
}

impl Neg for AngularMomentum {
    type Output = AngularMomentum;
    fn neg(self) -> Self {
        AngularMomentum { quarters: -self.quarters }
    }
}

impl fmt::Display for AngularMomentum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = self.quarters;
        if q % 4 == 0 {
            write!(f, "{}", q / 4)
        } else if q % 2 == 0 {
            write!(f, "{}/2", q / 2)
        } else {
            write!(f, "{}/4", q)
        }
    }
}

/// Parses `"3"`, `"-1/2"`, `"5/4"`. Only denominators 1, 2, 4 are exact in
/// this representation; anything else is rejected.
impl FromStr for AngularMomentum {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: i32 = num.parse().map_err(|_| format!("bad numerator in {s:?}"))?;
        let d: i32 = den.parse().map_err(|_| format!("bad denominator in {s:?}"))?;
        match d {
            1 => Ok(AngularMomentum::from_int(n)),
            2 => Ok(AngularMomentum::from_halves(n)),
            4 => Ok(AngularMomentum::from_quarters(n)),
            _ => Err(format!("denominator {d} not representable in quarter units")),
        }
    }
}
