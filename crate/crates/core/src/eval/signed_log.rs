use std::ops::{Div, Mul};

use serde::Serialize;

/// A real number stored as `sign · exp(log_mag)`.
///
/// Zero is `sign == 0` with `log_mag == −∞`. Products and quotients stay in
/// range for magnitudes far outside the `f64` exponent range.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SignedLogValue {
    sign: i8,
    log_mag: f64,
}

impl SignedLogValue {
    pub const ZERO: Self = Self {
        sign: 0,
        log_mag: f64::NEG_INFINITY,
    };

    /// Builds a value from its parts. A zero sign forces `log_mag = −∞` and a
    /// `−∞` magnitude forces a zero sign.
    pub fn new(sign: i8, log_mag: f64) -> Self {
        if sign == 0 || log_mag == f64::NEG_INFINITY {
            Self::ZERO
        } else {
            Self {
                sign: sign.signum(),
                log_mag,
            }
        }
    }

    pub fn from_f64(x: f64) -> Self {
        if x == 0.0 {
            Self::ZERO
        } else {
            Self::new(if x > 0.0 { 1 } else { -1 }, x.abs().ln())
        }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn log_mag(&self) -> f64 {
        self.log_mag
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// Materializes the value, saturating to `±∞` or `±0` outside the range.
    pub fn to_f64(&self) -> f64 {
        match self.sign {
            0 => 0.0,
            s => f64::from(s) * self.log_mag.exp(),
        }
    }
}

impl Mul for SignedLogValue {
    type Output = Self;

    fn mul(self, other: Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::ZERO;
        }
        Self::new(self.sign * other.sign, self.log_mag + other.log_mag)
    }
}

/// Dividing by zero yields a signed infinity in log form.
impl Div for SignedLogValue {
    type Output = Self;

    fn div(self, other: Self) -> Self {
        if self.is_zero() {
            return Self::ZERO;
        }
        let sign = self.sign * if other.is_zero() { 1 } else { other.sign };
        Self::new(sign, self.log_mag - other.log_mag)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn zero_encoding() {
        assert_eq!(SignedLogValue::from_f64(0.0), SignedLogValue::ZERO);
        assert_eq!(SignedLogValue::from_f64(-0.0), SignedLogValue::ZERO);
        assert_eq!(SignedLogValue::new(1, f64::NEG_INFINITY).sign(), 0);
        assert_eq!(SignedLogValue::new(0, 3.0).log_mag(), f64::NEG_INFINITY);
        assert_eq!(SignedLogValue::ZERO.to_f64(), 0.0);
    }

    #[test]
    fn saturation() {
        assert_eq!(SignedLogValue::new(1, 1000.0).to_f64(), f64::INFINITY);
        assert_eq!(SignedLogValue::new(-1, 1000.0).to_f64(), f64::NEG_INFINITY);
        assert_eq!(SignedLogValue::new(-1, -1000.0).to_f64(), 0.0);
        let big = SignedLogValue::new(1, 1000.0);
        let back = (big / SignedLogValue::new(1, 999.0)).to_f64();
        assert!((back - std::f64::consts::E).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn round_trip(x in prop::num::f64::NORMAL) {
            let y = SignedLogValue::from_f64(x).to_f64();
            // ln then exp amplifies the rounding of ln by |ln|x||
            let bound = 4.0 * f64::EPSILON * x.abs().ln().abs().max(1.0);
            prop_assert!(((y - x) / x).abs() <= bound, "x={x} y={y}");
        }

        #[test]
        fn product_sign(a in -1e3..1e3f64, b in -1e3..1e3f64) {
            let p = SignedLogValue::from_f64(a) * SignedLogValue::from_f64(b);
            prop_assert_eq!(p.sign(), (a * b).partial_cmp(&0.0).unwrap() as i8);
        }
    }
}
