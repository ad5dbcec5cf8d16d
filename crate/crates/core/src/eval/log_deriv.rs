//! Closed-form logarithmic derivatives of `H`.
//!
//! For `d = x − y` and `s = dt/2`,
//!
//! ```text
//! d/dt ln|e^{xt} − e^{yt}| = (x + y)/2 + (d/2)·coth(s)
//! ```
//!
//! The `1/t` pole of `coth` is identical for every factor, so it cancels in
//! `ln|H| = ln|num| − ln|den|` and only the regular part
//! `φ(s) = coth(s) − 1/s` and its first two derivatives are needed:
//!
//! ```text
//! (ln|H|)'   = (α + β − λ − μ)/2 + (dN/2)·φ(sN)   − (dD/2)·φ(sD)
//! (ln|H|)''  =                     (dN²/4)·φ'(sN) − (dD²/4)·φ'(sD)
//! (ln|H|)''' =                     (dN³/8)·φ''(sN) − (dD³/8)·φ''(sD)
//! ```
//!
//! `φ` is odd and analytic on `|s| < π`; its Maclaurin series is used on
//! `|s| < 1`, which also settles the removable singularity at `t = 0`.

use super::HParams;
use crate::{Error, Result};

/// `2^{2n} B_{2n} / (2n)!` for `n = 1..=20`: `φ(s) = Σ c_n s^{2n−1}`.
const COTH_SERIES: [f64; 20] = [
    3.333_333_333_333_333e-1,
    -2.2222222222222222e-2,
    2.1164021164021164e-3,
    -2.1164021164021164e-4,
    2.1377799155576933e-5,
    -2.1644042808063972e-6,
    2.1925947851873778e-7,
    -2.2214608789979679e-8,
    2.2507846516808993e-9,
    -2.2805151204592183e-10,
    2.3106432599002624e-11,
    -2.3411706819824884e-12,
    2.3721017400233654e-13,
    -2.4034415333307706e-14,
    2.4351954029183369e-15,
    -2.4673688045172075e-16,
    2.499_967_277_122_081e-17,
    -2.532_996_435_740_635e-18,
    2.566_461_970_282_629e-19,
    -2.6003696460137274e-20,
];

const SERIES_RADIUS: f64 = 1.0;

/// `k`-th derivative (`k ≤ 2`) of `φ(s) = coth(s) − 1/s`.
fn coth_regular(s: f64, k: u32) -> f64 {
    if s.abs() < SERIES_RADIUS {
        let s2 = s * s;
        // Horner in s²; after k differentiations term n carries the weight
        // (2n−1)(2n−2)…, and for k = 2 the n = 1 term vanishes.
        let first = if k == 2 { 2 } else { 1 };
        let mut acc = 0.0;
        for n in (first..=COTH_SERIES.len()).rev() {
            let p = (2 * n - 1) as f64;
            let weight = match k {
                0 => 1.0,
                1 => p,
                _ => p * (p - 1.0),
            };
            acc = acc * s2 + COTH_SERIES[n - 1] * weight;
        }
        match k {
            1 => acc,
            _ => acc * s,
        }
    } else {
        let q = (-2.0 * s.abs()).exp();
        let om = -(-2.0 * s.abs()).exp_m1();
        let coth = s.signum() * (1.0 + q) / om;
        let csch2 = 4.0 * q / (om * om);
        match k {
            0 => coth - 1.0 / s,
            1 => 1.0 / (s * s) - csch2,
            _ => 2.0 * coth * csch2 - 2.0 / (s * s * s),
        }
    }
}

/// Regular part of the `order`-th derivative of `ln|e^{xt} − e^{yt}|`,
/// i.e. with the pole `(−1)^{k−1}(k−1)!/t^k` and, at order 1, the constant
/// `(x + y)/2` removed.
fn factor_regular(d: f64, t: f64, order: u32) -> f64 {
    let s = 0.5 * d * t;
    let half = 0.5 * d;
    match order {
        1 => half * coth_regular(s, 0),
        2 => half * half * coth_regular(s, 1),
        _ => half * half * half * coth_regular(s, 2),
    }
}

/// `order`-th derivative of `ln|H|` at `t`, for `order ∈ {1, 2, 3}`.
///
/// Continuous through `t = 0`, where it takes the limits
/// `(α + β − λ − μ)/2`, `((α − β)² − (λ − μ)²)/12` and `0`.
pub fn log_deriv_h(params: &HParams, t: f64, order: u32) -> Result<f64> {
    if !(1..=3).contains(&order) {
        return Err(Error::UnsupportedOrder {
            order,
            expected: "1, 2 or 3",
        });
    }
    if !t.is_finite() {
        return Err(Error::NonFiniteArgument(t));
    }
    let [a, b, l, m] = params.to_array();
    let regular = factor_regular(a - b, t, order) - factor_regular(l - m, t, order);
    Ok(match order {
        1 => 0.5 * ((a + b) - (l + m)) + regular,
        _ => regular,
    })
}
