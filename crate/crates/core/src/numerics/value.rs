use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A complex value paired with an absolute error estimate.
///
/// Invariants: `value` is finite and `abs_error` is finite and non-negative.
/// Constructors that can observe a non-finite result go through
/// [`ValueWithError::checked`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValueWithError {
    pub value: Complex64,
    pub abs_error: f64,
}

impl ValueWithError {
    pub const ZERO: ValueWithError = ValueWithError {
        value: Complex64 { re: 0.0, im: 0.0 },
        abs_error: 0.0,
    };

    pub fn new(value: Complex64, abs_error: f64) -> Self {
        ValueWithError {
            value,
            abs_error: abs_error.abs(),
        }
    }

    pub fn exact(value: Complex64) -> Self {
        ValueWithError::new(value, 0.0)
    }

    pub fn real(value: f64, abs_error: f64) -> Self {
        ValueWithError::new(Complex64::new(value, 0.0), abs_error)
    }

    /// Builds a value, rejecting NaN or infinite parts.
    pub fn checked(value: Complex64, abs_error: f64, context: &str) -> Result<Self> {
        if !value.re.is_finite() || !value.im.is_finite() || !abs_error.is_finite() {
            return Err(Error::NonFinite(context.to_string()));
        }
        Ok(ValueWithError::new(value, abs_error))
    }

    pub fn re(&self) -> f64 {
        self.value.re
    }

    pub fn im(&self) -> f64 {
        self.value.im
    }

    pub fn scale(self, c: Complex64) -> Self {
        ValueWithError::new(self.value * c, self.abs_error * c.norm())
    }

    pub fn scale_re(self, c: f64) -> Self {
        ValueWithError::new(self.value * c, self.abs_error * c.abs())
    }

    /// First-order error propagation for a product.
    pub fn mul_value(self, other: ValueWithError) -> Self {
        let err = self.value.norm() * other.abs_error
            + other.value.norm() * self.abs_error
            + self.abs_error * other.abs_error;
        ValueWithError::new(self.value * other.value, err)
    }

    /// Adds a rounding allowance of a few ulps relative to `magnitude`.
    pub fn with_rounding(self, magnitude: f64) -> Self {
        ValueWithError::new(
            self.value,
            self.abs_error + 8.0 * f64::EPSILON * magnitude.max(self.value.norm()),
        )
    }

    pub fn inflate(self, extra: f64) -> Self {
        ValueWithError::new(self.value, self.abs_error + extra.abs())
    }
}

impl Default for ValueWithError {
    fn default() -> Self {
        ValueWithError::ZERO
    }
}

impl From<f64> for ValueWithError {
    fn from(x: f64) -> Self {
        ValueWithError::real(x, 0.0)
    }
}

impl From<Complex64> for ValueWithError {
    fn from(z: Complex64) -> Self {
        ValueWithError::exact(z)
    }
}

impl Add for ValueWithError {
    type Output = ValueWithError;
    fn add(self, rhs: ValueWithError) -> ValueWithError {
        ValueWithError::new(self.value + rhs.value, self.abs_error + rhs.abs_error)
    }
}

impl Sub for ValueWithError {
    type Output = ValueWithError;
    fn sub(self, rhs: ValueWithError) -> ValueWithError {
        ValueWithError::new(self.value - rhs.value, self.abs_error + rhs.abs_error)
    }
}

impl Neg for ValueWithError {
    type Output = ValueWithError;
    fn neg(self) -> ValueWithError {
        ValueWithError::new(-self.value, self.abs_error)
    }
}

impl Mul<f64> for ValueWithError {
    type Output = ValueWithError;
    fn mul(self, rhs: f64) -> ValueWithError {
        self.scale_re(rhs)
    }
}

impl Mul<Complex64> for ValueWithError {
    type Output = ValueWithError;
    fn mul(self, rhs: Complex64) -> ValueWithError {
        self.scale(rhs)
    }
}

impl std::iter::Sum for ValueWithError {
    fn sum<I: Iterator<Item = ValueWithError>>(iter: I) -> Self {
        iter.fold(ValueWithError::ZERO, |acc, v| acc + v)
    }
}

impl fmt::Display for ValueWithError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.value.im == 0.0 {
            write!(f, "{:.16e} ± {:.2e}", self.value.re, self.abs_error)
        } else {
            write!(
                f,
                "({:.16e} {:+.16e}i) ± {:.2e}",
                self.value.re, self.value.im, self.abs_error
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_error_propagates() {
        let a = ValueWithError::real(2.0, 0.1);
        let b = ValueWithError::real(3.0, 0.2);
        let p = a.mul_value(b);
        assert_eq!(p.re(), 6.0);
        assert!((p.abs_error - (2.0 * 0.2 + 3.0 * 0.1 + 0.02)).abs() < 1e-15);
    }

    #[test]
    fn checked_rejects_nan() {
        assert!(ValueWithError::checked(Complex64::new(f64::NAN, 0.0), 0.0, "x").is_err());
        assert!(ValueWithError::checked(Complex64::new(1.0, 0.0), f64::INFINITY, "x").is_err());
        assert!(ValueWithError::checked(Complex64::new(1.0, 2.0), 0.5, "x").is_ok());
    }
}
