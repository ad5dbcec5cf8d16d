use serde::Serialize;

use super::dd::Dd;
use crate::{Error, HParams, Result};

/// `e^{xt} − e^{yt} = ±e^{lead·t}(1 − e^{−gap})`: returns `lead·t` and `gap`.
fn split(x: f64, y: f64, t: Dd) -> (Dd, Dd) {
    let z = Dd::diff(x, y) * t;
    if z.hi > 0.0 {
        (t * x, z)
    } else {
        (t * y, -z)
    }
}

/// `ln((1 − e^{−g})/(1 − e^{−h}))`, with a single logarithm.
fn ln_factor_ratio(g: Dd, h: Dd) -> Dd {
    let tail = |gap: Dd| {
        let q = (-gap).exp();
        -(q + q * q * 0.5)
    };
    match (g.hi > 25.0, h.hi > 25.0) {
        (true, true) => tail(g) - tail(h),
        (true, false) => tail(g) - (-(-h).exp_m1()).ln(),
        (false, true) => (-(-g).exp_m1()).ln() - tail(h),
        (false, false) => ((-g).exp_m1() / (-h).exp_m1()).ln(),
    }
}

/// `ln|H(t)|` in double-double, computed without the evaluator in `eval`.
pub(crate) fn ln_abs_h(params: &HParams, t: Dd) -> Dd {
    let [a, b, l, m] = params.to_array();
    if t.hi == 0.0 {
        return (Dd::diff(a, b) / Dd::diff(l, m)).abs().ln();
    }
    let (lead_num, gap_num) = split(a, b, t);
    let (lead_den, gap_den) = split(l, m, t);
    lead_num - lead_den + ln_factor_ratio(gap_num, gap_den)
}

/// A finite-difference estimate with its Richardson error indicator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FdEstimate {
    pub value: f64,
    /// `|R − D(h/2)|`, where `R` is the extrapolated value; a conservative
    /// bound on the error of `D(h/2)` and far above that of `R`.
    pub error: f64,
}

/// Distance from `t` to the outermost stencil point, in units of `step`.
fn reach(order: u32) -> f64 {
    if order <= 2 {
        1.0
    } else {
        2.0
    }
}

/// Step used by the oracle when none is given: `1e−4·max(1,|t|)` up to
/// order 3, `1e−3·max(1,|t|)` for order 4.
pub fn default_step(order: u32, t: f64) -> f64 {
    let base = if order >= 4 { 1e-3 } else { 1e-4 };
    base * t.abs().max(1.0)
}

/// Half-width of the band around `t = 0` that the order-`order` checks skip:
/// ten default steps.
pub fn zero_band(order: u32) -> f64 {
    10.0 * default_step(order, 0.0)
}

/// Central difference of order `order` with step `2^{level}·h/2`, reading
/// `f(m·h/2)` from `values[m + 4]`.
fn central(values: &[Dd; 9], h: f64, order: u32, level: usize) -> Dd {
    let f = |j: i32| values[(j * (1 << level) + 4) as usize];
    let d = match order {
        1 => f(1) - f(-1),
        2 => f(1) - f(0) * 2.0 + f(-1),
        3 => f(2) - f(1) * 2.0 + f(-1) * 2.0 - f(-2),
        _ => f(2) - f(1) * 4.0 + f(0) * 6.0 - f(-1) * 4.0 + f(-2),
    };
    let mut d = if order % 2 == 1 { d / 2.0 } else { d };
    for _ in 0..order {
        d = d / h;
    }
    d
}

/// Half-step offsets touched by the two stencils of `order`.
fn offsets(order: u32) -> &'static [i32] {
    match order {
        1 => &[-2, -1, 1, 2],
        2 => &[-2, -1, 0, 1, 2],
        3 => &[-4, -2, -1, 1, 2, 4],
        _ => &[-4, -2, -1, 0, 1, 2, 4],
    }
}

/// Central finite-difference estimate of `(ln|H|)^{(order)}(t)` with one
/// Richardson pass on `(step, step/2)`, accurate to `O(step⁴)`.
///
/// The stencil must stay on one side of the origin.
pub fn numeric_log_derivative(
    params: &HParams,
    t: f64,
    order: u32,
    step: f64,
) -> Result<FdEstimate> {
    if !(1..=4).contains(&order) {
        return Err(Error::UnsupportedOrder {
            order,
            expected: "1, 2, 3 or 4",
        });
    }
    if !t.is_finite() {
        return Err(Error::NonFiniteArgument(t));
    }
    if !(step > 0.0 && step.is_finite()) {
        return Err(Error::InvalidOption("step must be positive and finite"));
    }
    if t.abs() <= reach(order) * step {
        return Err(Error::StencilCrossesZero { t, step });
    }
    let half = step / 2.0;
    let mut values = [Dd::ZERO; 9];
    for &m in offsets(order) {
        values[(m + 4) as usize] = ln_abs_h(params, Dd::sum(t, f64::from(m) * half));
    }
    let coarse = central(&values, step, order, 1);
    let fine = central(&values, half, order, 0);
    let extrapolated = (fine * 4.0 - coarse) / 3.0;
    Ok(FdEstimate {
        value: extrapolated.to_f64(),
        error: (extrapolated - fine).to_f64().abs(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::E;

    fn h(p: [f64; 4]) -> HParams {
        HParams::from_array(p).unwrap()
    }

    #[test]
    fn ln_abs_h_matches_closed_form() {
        // H(1,0,2,0) = 1/(e^t + 1)
        let p = h([1.0, 0.0, 2.0, 0.0]);
        for &t in &[-30.0, -1.0, -1e-6, 0.0, 1e-9, 0.5, 40.0] {
            let got = ln_abs_h(&p, Dd::new(t)).to_f64();
            let expected = -(t.exp()).ln_1p();
            assert!((got - expected).abs() < 1e-15, "t={t}");
        }
    }

    #[test]
    fn worked_values() {
        let p = h([3.0, 1.0, 2.0, 0.0]);
        let d = numeric_log_derivative(&p, 1.0, 2, 1e-3).unwrap();
        assert!(d.value.abs() < 1e-8);

        let p = h([1.0, 0.0, 2.0, 0.0]);
        let d = numeric_log_derivative(&p, 1.0, 3, 1e-3).unwrap();
        let exact = E * (E - 1.0) / (1.0 + E).powi(3);
        assert!((d.value - exact).abs() < 1e-10, "{}", d.value);

        let d = numeric_log_derivative(&p, 0.5, 2, 1e-3).unwrap();
        assert!((d.value - -0.235_003_712_201_594_5).abs() < 1e-10);

        let d = numeric_log_derivative(&p, -0.7, 1, 1e-4).unwrap();
        let exact = -(-0.7_f64).exp() / (1.0 + (-0.7_f64).exp());
        assert!((d.value - exact).abs() < 1e-14);
    }

    #[test]
    fn stencil_must_not_cross_zero() {
        let p = h([1.0, 0.0, 2.0, 0.0]);
        assert!(matches!(
            numeric_log_derivative(&p, 1e-3, 3, 1e-3),
            Err(Error::StencilCrossesZero { .. })
        ));
        assert!(numeric_log_derivative(&p, 1.5e-3, 2, 1e-3).is_ok());
        assert!(numeric_log_derivative(&p, 2.5e-3, 3, 1e-3).is_ok());
        assert!(numeric_log_derivative(&p, 1.0, 5, 1e-3).is_err());
        assert!(numeric_log_derivative(&p, 1.0, 2, 0.0).is_err());
    }

    #[test]
    fn error_indicator_is_small_and_shrinks() {
        let p = h([2.5, -1.0, 0.5, 3.0]);
        let a = numeric_log_derivative(&p, 0.8, 4, 2e-2).unwrap();
        let b = numeric_log_derivative(&p, 0.8, 4, 1e-2).unwrap();
        // the indicator tracks the O(h²) term of D(h/2)
        assert!(b.error < a.error / 3.5);
        assert!((a.value - b.value).abs() < 1e-6);
    }
}
