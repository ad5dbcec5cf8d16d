//! Numerical oracle for the classifier.
//!
//! Everything here works on its own double-double evaluation of `ln|H|`
//! (see [`dd`]), not on the evaluators in [`crate::eval`], so agreement
//! between the two is evidence rather than tautology.

mod cross;
mod dd;
mod finite_diff;
mod grid;

pub use cross::{
    check_draw, cross_validate, sample_params, Claim, Contradiction, CrossValidationReport,
    DrawOutcome, SAMPLE_BOUND, SAMPLE_MIN_GAP,
};
pub use finite_diff::{default_step, numeric_log_derivative, zero_band, FdEstimate};
pub use grid::{GridSpec, OracleDirection, OracleVerdict};

use crate::{Error, HParams, Interval, Result};
use dd::Dd;

/// A step of `ln|H|` between neighbouring grid points counts as a rise or
/// fall once it exceeds this (a relative change of `H`).
pub const MONOTONICITY_TOL: f64 = 1e-11;

/// A finite-difference log-derivative counts as positive or negative once
/// its magnitude exceeds this.
pub const SIGN_TOL: f64 = 1e-8;

/// Width to which a sign change of the fourth log-derivative is refined.
pub const BISECTION_WIDTH: f64 = 1e-6;

/// Steps of `H` along the grid on `interval`, with `t = 0` included as the
/// closure point of the half-lines.
pub fn grid_monotonicity_check(
    params: &HParams,
    interval: Interval,
    grid: &GridSpec,
) -> OracleVerdict {
    let [pos, neg, whole] = grid_monotonicity_all(params, grid);
    match interval {
        Interval::PositiveHalfLine => pos,
        Interval::NegativeHalfLine => neg,
        Interval::WholeLine => whole,
    }
}

/// [`grid_monotonicity_check`] on all three intervals from one pass over
/// the grid, ordered as [`Interval::ALL`].
pub fn grid_monotonicity_all(params: &HParams, grid: &GridSpec) -> [OracleVerdict; 3] {
    let pts = grid.points(Interval::WholeLine, true);
    let origin = pts
        .iter()
        .position(|&t| t == 0.0)
        .expect("origin is included");
    let sign = params.ratio().signum();
    let logs: Vec<Dd> = pts
        .iter()
        .map(|&t| finite_diff::ln_abs_h(params, Dd::new(t)))
        .collect();
    let verdict = |range: std::ops::Range<usize>| {
        let steps = pts[range.clone()]
            .windows(2)
            .zip(logs[range].windows(2))
            .map(|(t, l)| (0.5 * (t[0] + t[1]), sign * (l[1] - l[0]).to_f64()));
        grid::aggregate(steps, MONOTONICITY_TOL)
    };
    [
        verdict(origin..pts.len()),
        verdict(0..origin + 1),
        verdict(0..pts.len()),
    ]
}

fn sampled_log_derivative(
    params: &HParams,
    interval: Interval,
    order: u32,
    grid: &GridSpec,
) -> Result<Vec<(f64, FdEstimate)>> {
    let band = zero_band(order);
    grid.points(interval, false)
        .into_iter()
        .filter(|t| t.abs() >= band)
        .map(|t| {
            Ok((
                t,
                numeric_log_derivative(params, t, order, default_step(order, t))?,
            ))
        })
        .collect()
}

/// Signs of the order-`k` log-derivative of `H` on the grid, outside the
/// band of ten steps around 0. `Rises` reads "positive throughout", i.e.
/// `k`-log-convex on the sampled set.
pub fn grid_klog_sign_check(
    params: &HParams,
    interval: Interval,
    k: u32,
    grid: &GridSpec,
) -> Result<OracleVerdict> {
    if !(2..=3).contains(&k) {
        return Err(Error::UnsupportedOrder {
            order: k,
            expected: "2 or 3",
        });
    }
    let samples = sampled_log_derivative(params, interval, k, grid)?;
    Ok(grid::aggregate(
        samples.into_iter().map(|(t, d)| (t, d.value)),
        SIGN_TOL,
    ))
}

fn fourth(params: &HParams, t: f64) -> Result<FdEstimate> {
    numeric_log_derivative(params, t, 4, default_step(4, t))
}

fn sign_change_on(params: &HParams, interval: Interval, grid: &GridSpec) -> Result<Option<f64>> {
    let trusted = sampled_log_derivative(params, interval, 4, grid)?
        .into_iter()
        .filter(|(_, d)| d.value.abs() > d.error);
    let mut prev: Option<(f64, f64)> = None;
    for (t, d) in trusted {
        if let Some((tp, vp)) = prev {
            if vp.signum() != d.value.signum() {
                return bisect(params, tp, vp.signum(), t).map(Some);
            }
        }
        prev = Some((t, d.value));
    }
    Ok(None)
}

fn bisect(params: &HParams, mut a: f64, sign_a: f64, mut b: f64) -> Result<f64> {
    while (b - a).abs() > BISECTION_WIDTH {
        let mid = 0.5 * (a + b);
        if fourth(params, mid)?.value.signum() == sign_a {
            a = mid;
        } else {
            b = mid;
        }
    }
    Ok(0.5 * (a + b))
}

/// Looks for a point where `(ln|H|)''''` changes sign on `interval`
/// (both half-lines for `WholeLine`), refined by bisection.
///
/// Rejects log-affine parameters, whose higher log-derivatives vanish.
pub fn four_log_sign_change_search(
    params: &HParams,
    interval: Interval,
    grid: &GridSpec,
) -> Result<Option<f64>> {
    let ratio = params.ratio();
    if ratio == 0.0 || ratio == 1.0 {
        return Err(Error::LogAffine { ratio });
    }
    match interval {
        Interval::WholeLine => Ok(sign_change_on(params, Interval::PositiveHalfLine, grid)?
            .or(sign_change_on(params, Interval::NegativeHalfLine, grid)?)),
        half => sign_change_on(params, half, grid),
    }
}
