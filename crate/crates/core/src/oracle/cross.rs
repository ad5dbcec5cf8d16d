use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{
    grid_klog_sign_check, grid_monotonicity_all, grid_monotonicity_check, GridSpec,
    OracleDirection, OracleVerdict,
};
use crate::{
    classify_h, ConvexityKind, Error, HParams, Interval, Monotonicity, Result, ThirdOrderKind,
};

/// Parameters are drawn uniformly from `[−SAMPLE_BOUND, SAMPLE_BOUND]⁴`.
pub const SAMPLE_BOUND: f64 = 5.0;

/// Draws with two parameters closer than this are rejected.
pub const SAMPLE_MIN_GAP: f64 = 0.05;

/// Draws a quadruple whose four entries are pairwise at least
/// [`SAMPLE_MIN_GAP`] apart.
pub fn sample_params<R: Rng>(rng: &mut R) -> HParams {
    loop {
        let p: [f64; 4] = std::array::from_fn(|_| rng.random_range(-SAMPLE_BOUND..SAMPLE_BOUND));
        let separated = (0..4).all(|i| (i + 1..4).all(|j| (p[i] - p[j]).abs() >= SAMPLE_MIN_GAP));
        if separated {
            if let Ok(h) = HParams::from_array(p) {
                return h;
            }
        }
    }
}

/// What the classifier asserted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    Monotonicity(Monotonicity),
    LogConvexity(ConvexityKind),
    ThirdOrder(ThirdOrderKind),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Contradiction {
    pub draw: usize,
    pub params: [f64; 4],
    pub interval: Interval,
    pub claim: Claim,
    pub oracle: OracleVerdict,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CrossValidationReport {
    pub draws: usize,
    pub seed: u64,
    pub agreements: usize,
    /// At most one entry per draw, in draw order.
    pub contradictions: Vec<Contradiction>,
    pub boundary_skips: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum DrawOutcome {
    Agreement,
    BoundarySkip,
    Contradiction(Interval, Claim, OracleVerdict),
}

/// Grid used to confirm a non-monotonic verdict whose turning point lies
/// outside the default range.
fn refined_grid() -> GridSpec {
    GridSpec::new(1e-9, 2e3, 4000, true).expect("valid grid")
}

enum Check {
    Agrees,
    Skip,
    Fails(OracleVerdict),
}

fn expect_no(verdict: OracleVerdict, forbidden_rise: bool) -> Check {
    let bad = if forbidden_rise {
        verdict.has_rise()
    } else {
        verdict.has_fall()
    };
    if bad {
        Check::Fails(verdict)
    } else {
        Check::Agrees
    }
}

fn check_monotonicity(
    params: &HParams,
    interval: Interval,
    kind: Monotonicity,
    oracle: OracleVerdict,
) -> Check {
    match kind {
        Monotonicity::Increasing => expect_no(oracle, false),
        Monotonicity::Decreasing => expect_no(oracle, true),
        Monotonicity::NonMonotonic => {
            let oracle = match oracle.direction {
                OracleDirection::Rises | OracleDirection::Falls => {
                    grid_monotonicity_check(params, interval, &refined_grid())
                }
                _ => oracle,
            };
            match oracle.direction {
                OracleDirection::Both => Check::Agrees,
                OracleDirection::Flat => Check::Skip,
                _ => Check::Fails(oracle),
            }
        }
    }
}

fn check_sign(params: &HParams, interval: Interval, k: u32, positive: bool) -> Result<Check> {
    let oracle = grid_klog_sign_check(params, interval, k, &GridSpec::default())?;
    Ok(expect_no(oracle, !positive))
}

/// Runs every oracle check that the classification of `params` calls for.
pub fn check_draw(params: &HParams) -> Result<DrawOutcome> {
    let report = classify_h(params);
    if !report.zero_band_hits.is_empty() {
        return Ok(DrawOutcome::BoundarySkip);
    }
    let mut skipped = false;
    let mut outcome = |check: Check, interval, claim| match check {
        Check::Agrees => None,
        Check::Skip => {
            skipped = true;
            None
        }
        Check::Fails(o) => Some(DrawOutcome::Contradiction(interval, claim, o)),
    };

    let oracles = grid_monotonicity_all(params, &GridSpec::default());
    for (interval, oracle) in Interval::ALL.into_iter().zip(oracles) {
        let kind = report.monotonicity.get(interval).kind;
        let check = check_monotonicity(params, interval, kind, oracle);
        if let Some(c) = outcome(check, interval, Claim::Monotonicity(kind)) {
            return Ok(c);
        }
    }

    let convexity = report.convexity.kind;
    let positive = match convexity {
        ConvexityKind::LogConvex => Some(true),
        ConvexityKind::LogConcave => Some(false),
        _ => None,
    };
    if let Some(positive) = positive {
        let check = check_sign(params, Interval::WholeLine, 2, positive)?;
        if let Some(c) = outcome(check, Interval::WholeLine, Claim::LogConvexity(convexity)) {
            return Ok(c);
        }
    }

    let third = report.third_order.kind;
    let positive_on_right = match third {
        ThirdOrderKind::ConvexPosConcaveNeg => Some(true),
        ThirdOrderKind::ConcavePosConvexNeg => Some(false),
        ThirdOrderKind::NotCovered => None,
    };
    if let Some(right) = positive_on_right {
        for (interval, positive) in [
            (Interval::PositiveHalfLine, right),
            (Interval::NegativeHalfLine, !right),
        ] {
            let check = check_sign(params, interval, 3, positive)?;
            if let Some(c) = outcome(check, interval, Claim::ThirdOrder(third)) {
                return Ok(c);
            }
        }
    }

    Ok(if skipped {
        DrawOutcome::BoundarySkip
    } else {
        DrawOutcome::Agreement
    })
}

/// Classifies `draws` random quadruples and confirms every verdict with the
/// grid oracle. Deterministic in `(draws, seed)`.
pub fn cross_validate(draws: usize, seed: u64) -> Result<CrossValidationReport> {
    if draws == 0 {
        return Err(Error::NoDraws);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = CrossValidationReport {
        draws,
        seed,
        agreements: 0,
        contradictions: Vec::new(),
        boundary_skips: 0,
    };
    for draw in 0..draws {
        let params = sample_params(&mut rng);
        match check_draw(&params)? {
            DrawOutcome::Agreement => report.agreements += 1,
            DrawOutcome::BoundarySkip => report.boundary_skips += 1,
            DrawOutcome::Contradiction(interval, claim, oracle) => {
                report.contradictions.push(Contradiction {
                    draw,
                    params: params.to_array(),
                    interval,
                    claim,
                    oracle,
                })
            }
        }
    }
    Ok(report)
}
