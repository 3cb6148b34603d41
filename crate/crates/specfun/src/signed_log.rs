//! Sign-and-log representation for products of gamma factors that overflow
//! f64 long before the final ratio does.

use std::ops::{Div, Mul};

/// A real number stored as `sign * exp(log_magnitude)`.
///
/// `sign == 0` if and only if the value is exactly zero, in which case
/// `log_magnitude` is negative infinity. This keeps "a pole cancelled by a
/// zero" bookkeeping explicit instead of relying on IEEE infinities.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SignedLogValue {
    pub log_magnitude: f64,
    pub sign: i8,
}

impl SignedLogValue {
    pub const ZERO: SignedLogValue = SignedLogValue { log_magnitude: f64::NEG_INFINITY, sign: 0 };
    pub const ONE: SignedLogValue = SignedLogValue { log_magnitude: 0.0, sign: 1 };

    pub fn new(log_magnitude: f64, sign: i8) -> Self {
        debug_assert!(sign == -1 || sign == 0 || sign == 1);
        if sign == 0 {
            SignedLogValue::ZERO
        } else {
            SignedLogValue { log_magnitude, sign }
        }
    }

    pub fn from_value(x: f64) -> Self {
        if x == 0.0 {
            SignedLogValue::ZERO
        } else {
            SignedLogValue { log_magnitude: x.abs().ln(), sign: if x < 0.0 { -1 } else { 1 } }
        }
    }

    pub fn value(self) -> f64 {
        f64::from(self.sign) * self.log_magnitude.exp()
    }

    pub fn is_zero(self) -> bool {
        self.sign == 0
    }

    pub fn recip(self) -> Self {
        debug_assert!(self.sign != 0, "reciprocal of exact zero");
        SignedLogValue { log_magnitude: -self.log_magnitude, sign: self.sign }
    }

    /// Square root; the value must be nonnegative.
    pub fn sqrt(self) -> Self {
        debug_assert!(self.sign >= 0, "sqrt of negative signed-log value");
        SignedLogValue { log_magnitude: 0.5 * self.log_magnitude, sign: self.sign }
    }

    pub fn abs(self) -> Self {
        SignedLogValue { log_magnitude: self.log_magnitude, sign: self.sign.abs() }
    }
}

impl Mul for SignedLogValue {
    type Output = SignedLogValue;
    fn mul(self, rhs: Self) -> Self {
        if self.sign == 0 || rhs.sign == 0 {
            SignedLogValue::ZERO
        } else {
            SignedLogValue {
                log_magnitude: self.log_magnitude + rhs.log_magnitude,
                sign: self.sign * rhs.sign,
            }
        }
    }
}

impl Div for SignedLogValue {
    type Output = SignedLogValue;
    fn div(self, rhs: Self) -> Self {
        self * rhs.recip()
    }
}
