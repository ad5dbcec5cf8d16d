//! Overflow-safe exponential differences.
//!
//! Every function in the family is a product of factors `e^{xt} − e^{yt}`,
//! each written as `sign · e^{lead·t} · (1 − e^{−gap})` with
//! `gap = |(x − y) t|` and `lead` the larger of the two exponents. The
//! `1 − e^{−gap}` factor lies in `(0, 1]` and is computed through `expm1`,
//! so there is no cancellation near `t = 0`; the single remaining
//! exponential takes the difference of leads and is only formed when it is
//! representable.

use std::f64::consts::LN_2;

use super::SignedLogValue;

/// Largest `|exponent|` materialized directly; beyond it the mantissa is
/// folded in through its logarithm.
const EXP_SAFE: f64 = 700.0;

/// `1 − e^{−x}` for `x ≥ 0`.
pub(crate) fn one_minus_exp_neg(x: f64) -> f64 {
    -(-x).exp_m1()
}

/// `ln(1 − e^{−x})` for `x > 0`.
pub(crate) fn ln_one_minus_exp_neg(x: f64) -> f64 {
    if x > LN_2 {
        (-(-x).exp()).ln_1p()
    } else {
        (-(-x).exp_m1()).ln()
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct ExpDiff {
    pub sign: i8,
    pub lead: f64,
    pub gap: f64,
}

impl ExpDiff {
    /// `e^{xt} − e^{yt}`.
    pub fn new(x: f64, y: f64, t: f64) -> Self {
        let z = (x - y) * t;
        if z > 0.0 {
            Self {
                sign: 1,
                lead: x,
                gap: z,
            }
        } else if z < 0.0 {
            Self {
                sign: -1,
                lead: y,
                gap: -z,
            }
        } else {
            Self {
                sign: 0,
                lead: x,
                gap: 0.0,
            }
        }
    }

    /// False when the gap underflows and the factorization carries no
    /// information; callers fall back to the `t = 0` limit.
    pub fn resolved(&self) -> bool {
        self.gap >= f64::MIN_POSITIVE
    }
}

fn materialize(
    sign: i8,
    exponent: f64,
    mantissa: impl FnOnce() -> f64,
    ln_mantissa: impl FnOnce() -> f64,
) -> f64 {
    let s = f64::from(sign);
    if exponent.abs() < EXP_SAFE {
        s * exponent.exp() * mantissa()
    } else {
        s * (exponent + ln_mantissa()).exp()
    }
}

/// `(e^{at} − e^{bt}) / (e^{lt} − e^{mt})` for `t ≠ 0`.
pub(crate) fn ratio(a: f64, b: f64, l: f64, m: f64, t: f64) -> Option<f64> {
    let num = ExpDiff::new(a, b, t);
    let den = ExpDiff::new(l, m, t);
    if !num.resolved() || !den.resolved() {
        return None;
    }
    Some(materialize(
        num.sign * den.sign,
        (num.lead - den.lead) * t,
        || one_minus_exp_neg(num.gap) / one_minus_exp_neg(den.gap),
        || ln_one_minus_exp_neg(num.gap) - ln_one_minus_exp_neg(den.gap),
    ))
}

/// Same ratio in signed-log form.
pub(crate) fn ratio_log(a: f64, b: f64, l: f64, m: f64, t: f64) -> Option<SignedLogValue> {
    let num = ExpDiff::new(a, b, t);
    let den = ExpDiff::new(l, m, t);
    if !num.resolved() || !den.resolved() {
        return None;
    }
    Some(SignedLogValue::new(
        num.sign * den.sign,
        (num.lead - den.lead) * t + ln_one_minus_exp_neg(num.gap) - ln_one_minus_exp_neg(den.gap),
    ))
}

/// `(e^{xt} − e^{yt}) / t` for `t ≠ 0`.
pub(crate) fn divided(x: f64, y: f64, t: f64) -> Option<f64> {
    let d = ExpDiff::new(x, y, t);
    if !d.resolved() {
        return None;
    }
    let sign = d.sign * if t > 0.0 { 1 } else { -1 };
    Some(materialize(
        sign,
        d.lead * t,
        || one_minus_exp_neg(d.gap) / t.abs(),
        || ln_one_minus_exp_neg(d.gap) - t.abs().ln(),
    ))
}

/// `t / (e^{xt} − e^{yt})` for `t ≠ 0`.
pub(crate) fn divided_recip(x: f64, y: f64, t: f64) -> Option<f64> {
    let d = ExpDiff::new(x, y, t);
    if !d.resolved() {
        return None;
    }
    let sign = d.sign * if t > 0.0 { 1 } else { -1 };
    Some(materialize(
        sign,
        -d.lead * t,
        || t.abs() / one_minus_exp_neg(d.gap),
        || t.abs().ln() - ln_one_minus_exp_neg(d.gap),
    ))
}
