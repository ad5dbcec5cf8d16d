//! Evaluation of `G`, `F`, `Q`, `H`, `P` and the logarithmic derivatives of `H`.
//!
//! All evaluators share one factorization (see the `kernel` module): they
//! are exact at `t = 0`, accurate to a few ulp near it, and saturate instead
//! of overflowing for large `|t|`.

mod kernel;
mod log_deriv;
mod params;
mod reduction;
mod series;
mod signed_log;

pub use log_deriv::log_deriv_h;
pub use params::{FParams, GParams, HParams, PParams, QParams};
pub use reduction::{reduce_h_to_q, QReduction};
pub use signed_log::SignedLogValue;

use crate::{Error, Result};

/// Largest Taylor degree used by the series branch.
const MAX_SERIES_DEGREE: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOptions {
    taylor_threshold: f64,
    rel_tol: f64,
}

impl EvalOptions {
    /// `taylor_threshold` is the radius `|t| < threshold` inside which the
    /// Maclaurin series replaces the closed form (`0` disables it);
    /// `rel_tol` truncates that series.
    pub fn new(taylor_threshold: f64, rel_tol: f64) -> Result<Self> {
        if !(taylor_threshold >= 0.0 && taylor_threshold.is_finite()) {
            return Err(Error::InvalidOption(
                "taylor_threshold must be finite and ≥ 0",
            ));
        }
        if !(rel_tol > 0.0 && rel_tol < 1.0) {
            return Err(Error::InvalidOption("rel_tol must lie in (0, 1)"));
        }
        Ok(Self {
            taylor_threshold,
            rel_tol,
        })
    }

    pub fn taylor_threshold(&self) -> f64 {
        self.taylor_threshold
    }

    pub fn rel_tol(&self) -> f64 {
        self.rel_tol
    }
}

impl Default for EvalOptions {
    fn default() -> Self {
        Self {
            taylor_threshold: 0.0,
            rel_tol: 1e-12,
        }
    }
}

/// A member of the family with a removable singularity at `t = 0`.
pub trait ExpRatio {
    /// The closed form at `t ≠ 0`, or `None` when `t` is too small for the
    /// factorization to resolve (the `t = 0` value is then exact to
    /// working precision).
    fn closed_form(&self, t: f64) -> Option<f64>;

    /// The continuous extension at `t = 0`.
    fn at_zero(&self) -> f64;

    /// Maclaurin coefficients up to `degree`.
    fn taylor_coefficients(&self, degree: usize) -> Vec<f64>;

    fn eval_with(&self, t: f64, opts: &EvalOptions) -> Result<f64> {
        if !t.is_finite() {
            return Err(Error::NonFiniteArgument(t));
        }
        if t == 0.0 {
            return Ok(self.at_zero());
        }
        if t.abs() < opts.taylor_threshold {
            let coeffs = self.taylor_coefficients(MAX_SERIES_DEGREE);
            return Ok(series::sum(&coeffs, t, opts.rel_tol));
        }
        Ok(self.closed_form(t).unwrap_or_else(|| self.at_zero()))
    }

    fn eval(&self, t: f64) -> Result<f64> {
        self.eval_with(t, &EvalOptions::default())
    }

    /// Evaluates the Maclaurin polynomial of `degree` at `t`.
    fn taylor_polynomial(&self, degree: usize, t: f64) -> f64 {
        series::horner(&self.taylor_coefficients(degree), t)
    }
}

impl ExpRatio for HParams {
    fn closed_form(&self, t: f64) -> Option<f64> {
        let [a, b, l, m] = self.to_array();
        kernel::ratio(a, b, l, m, t)
    }

    fn at_zero(&self) -> f64 {
        self.ratio()
    }

    fn taylor_coefficients(&self, degree: usize) -> Vec<f64> {
        let [a, b, l, m] = self.to_array();
        let mut c = series::divide(
            &series::normalized_diff(a, b, degree),
            &series::normalized_diff(l, m, degree),
        );
        series::scale(&mut c, self.ratio());
        c
    }
}

impl ExpRatio for PParams {
    fn closed_form(&self, t: f64) -> Option<f64> {
        self.to_h().closed_form(t)
    }

    fn at_zero(&self) -> f64 {
        self.to_h().at_zero()
    }

    fn taylor_coefficients(&self, degree: usize) -> Vec<f64> {
        self.to_h().taylor_coefficients(degree)
    }
}

impl ExpRatio for QParams {
    fn closed_form(&self, t: f64) -> Option<f64> {
        self.to_h().closed_form(t)
    }

    fn at_zero(&self) -> f64 {
        self.beta() - self.alpha()
    }

    fn taylor_coefficients(&self, degree: usize) -> Vec<f64> {
        self.to_h().taylor_coefficients(degree)
    }
}

impl ExpRatio for GParams {
    fn closed_form(&self, t: f64) -> Option<f64> {
        kernel::divided(self.b().ln(), self.a().ln(), t)
    }

    fn at_zero(&self) -> f64 {
        self.b().ln() - self.a().ln()
    }

    fn taylor_coefficients(&self, degree: usize) -> Vec<f64> {
        let mut c = series::normalized_diff(self.b().ln(), self.a().ln(), degree);
        series::scale(&mut c, self.at_zero());
        c
    }
}

impl ExpRatio for FParams {
    fn closed_form(&self, t: f64) -> Option<f64> {
        kernel::divided_recip(self.b(), self.a(), t)
    }

    fn at_zero(&self) -> f64 {
        1.0 / (self.b() - self.a())
    }

    fn taylor_coefficients(&self, degree: usize) -> Vec<f64> {
        let mut unit = vec![0.0; degree + 1];
        unit[0] = 1.0;
        let mut c = series::divide(&unit, &series::normalized_diff(self.b(), self.a(), degree));
        series::scale(&mut c, self.at_zero());
        c
    }
}

/// `G_{a,b}(t) = (b^t − a^t)/t`, `ln b − ln a` at `t = 0`.
pub fn eval_g(params: &GParams, t: f64) -> Result<f64> {
    params.eval(t)
}

/// `F_{a,b}(t) = t/(e^{bt} − e^{at})`, `1/(b − a)` at `t = 0`.
pub fn eval_f(params: &FParams, t: f64) -> Result<f64> {
    params.eval(t)
}

/// `Q_{α,β}(t) = (e^{−αt} − e^{−βt})/(1 − e^{−t})`, `β − α` at `t = 0`.
pub fn eval_q(params: &QParams, t: f64) -> Result<f64> {
    params.eval(t)
}

/// `H_{α,β;λ,μ}(t) = (e^{αt} − e^{βt})/(e^{λt} − e^{μt})`.
///
/// At `t = 0` this returns the continuous extension `(α − β)/(λ − μ)`.
/// The sign of the result is `sign((α − β)(λ − μ))` for every `t`.
pub fn eval_h(params: &HParams, t: f64) -> Result<f64> {
    params.eval(t)
}

/// `P_{r,s;u,v}(t) = (r^t − s^t)/(u^t − v^t)`, evaluated as `H` on the
/// logarithms of the parameters.
pub fn eval_p(params: &PParams, t: f64) -> Result<f64> {
    params.eval(t)
}

/// `H` in signed-log form; never overflows.
pub fn eval_h_signed_log(params: &HParams, t: f64) -> Result<SignedLogValue> {
    if !t.is_finite() {
        return Err(Error::NonFiniteArgument(t));
    }
    let [a, b, l, m] = params.to_array();
    let fallback = || SignedLogValue::from_f64(params.ratio());
    if t == 0.0 {
        return Ok(fallback());
    }
    Ok(kernel::ratio_log(a, b, l, m, t).unwrap_or_else(fallback))
}

/// `[ln Q_{α,β}]^{(order)}(t)`, via `Q_{α,β} = H_{−α,−β;0,−1}`.
pub fn log_deriv_q(params: &QParams, t: f64, order: u32) -> Result<f64> {
    log_deriv_h(&params.to_h(), t, order)
}
