//! Closed-form classification of `H`, `P` and `Q`.
//!
//! Monotonicity on each interval is read off the signs of five invariants
//! (see [`InvariantSet`]) through the rule table in [`rules`]. Log-convexity
//! and the third-order behaviour depend only on the ratio
//! `(α − β)/(λ − μ)`.

mod invariants;
pub mod rules;

use serde::Serialize;

use crate::{HParams, PParams, QParams};

pub use invariants::{
    compute_frak_invariants, compute_invariants, InvariantName, InvariantSet, ZeroBand,
    ZERO_BAND_EPS,
};
pub use rules::{decision_table, find_rule, Condition, LambdaOrder, Rule, Sign, TableRow, RULES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Interval {
    PositiveHalfLine,
    NegativeHalfLine,
    WholeLine,
}

impl Interval {
    pub const ALL: [Interval; 3] = [
        Self::PositiveHalfLine,
        Self::NegativeHalfLine,
        Self::WholeLine,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            Self::PositiveHalfLine => "(0,∞)",
            Self::NegativeHalfLine => "(−∞,0)",
            Self::WholeLine => "(−∞,∞)",
        }
    }

    pub fn ascii(self) -> &'static str {
        match self {
            Self::PositiveHalfLine => "(0,inf)",
            Self::NegativeHalfLine => "(-inf,0)",
            Self::WholeLine => "(-inf,inf)",
        }
    }

    /// The interval seen through `t ↦ −t`.
    pub fn mirrored(self) -> Self {
        match self {
            Self::PositiveHalfLine => Self::NegativeHalfLine,
            Self::NegativeHalfLine => Self::PositiveHalfLine,
            Self::WholeLine => Self::WholeLine,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Increasing,
    Decreasing,
}

impl Direction {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Increasing => "increasing",
            Self::Decreasing => "decreasing",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Monotonicity {
    Increasing,
    Decreasing,
    NonMonotonic,
}

impl Monotonicity {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Increasing => "increasing",
            Self::Decreasing => "decreasing",
            Self::NonMonotonic => "non-monotonic",
        }
    }
}

impl From<Direction> for Monotonicity {
    fn from(d: Direction) -> Self {
        match d {
            Direction::Increasing => Self::Increasing,
            Direction::Decreasing => Self::Decreasing,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonotonicityVerdict {
    pub interval: Interval,
    pub kind: Monotonicity,
    pub order: LambdaOrder,
    /// The conditions of the rule that fired; empty for `NonMonotonic`.
    pub fired_conditions: Vec<Condition>,
    /// For `NonMonotonic`, the first failing condition of each direction.
    pub blocked_by: Vec<Condition>,
    /// Which monotonicity statement (1–6) fired.
    pub item: Option<u8>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConvexityKind {
    LogConvex,
    LogConcave,
    LogAffine,
    NotCovered,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConvexityVerdict {
    pub kind: ConvexityKind,
    /// `(α − β)/(λ − μ)`.
    pub ratio: f64,
    /// For `LogAffine`, the `c` in `H(t) = e^{ct}`.
    pub exponent: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ThirdOrderKind {
    /// 3-log-convex on `(0,∞)`, 3-log-concave on `(−∞,0)`.
    ConvexPosConcaveNeg,
    /// 3-log-concave on `(0,∞)`, 3-log-convex on `(−∞,0)`.
    ConcavePosConvexNeg,
    NotCovered,
}

/// `(ln H)'''` has the sign of `|λ − μ| − |α − β|` on `(0,∞)` and the
/// opposite sign on `(−∞,0)` whenever `H > 0`. The verdict is a sufficient
/// condition; `NotCovered` claims nothing.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThirdOrderVerdict {
    pub kind: ThirdOrderKind,
    pub ratio: f64,
    pub sufficient_only: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IntervalVerdicts {
    pub positive_half_line: MonotonicityVerdict,
    pub negative_half_line: MonotonicityVerdict,
    pub whole_line: MonotonicityVerdict,
}

impl IntervalVerdicts {
    pub fn get(&self, interval: Interval) -> &MonotonicityVerdict {
        match interval {
            Interval::PositiveHalfLine => &self.positive_half_line,
            Interval::NegativeHalfLine => &self.negative_half_line,
            Interval::WholeLine => &self.whole_line,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassificationReport {
    pub invariants: InvariantSet,
    pub monotonicity: IntervalVerdicts,
    pub convexity: ConvexityVerdict,
    pub third_order: ThirdOrderVerdict,
    /// Invariants whose magnitude is inside the zero band: the verdicts
    /// that test them sit on a boundary.
    pub zero_band_hits: Vec<InvariantName>,
}

fn holds(c: &Condition, set: &InvariantSet, band: &ZeroBand) -> bool {
    let x = set.get(c.invariant);
    match c.sign {
        Sign::NonNegative => band.non_negative(x),
        Sign::NonPositive => band.non_positive(x),
    }
}

fn monotonicity_from(
    set: &InvariantSet,
    band: &ZeroBand,
    order: LambdaOrder,
    interval: Interval,
) -> MonotonicityVerdict {
    let mut blocked_by = Vec::new();
    for direction in [Direction::Increasing, Direction::Decreasing] {
        let rule = rules::find_rule(interval, direction, order);
        match rule.conditions.iter().find(|c| !holds(c, set, band)) {
            None => {
                return MonotonicityVerdict {
                    interval,
                    kind: direction.into(),
                    order,
                    fired_conditions: rule.conditions.to_vec(),
                    blocked_by: Vec::new(),
                    item: Some(rule.item),
                }
            }
            Some(c) => blocked_by.push(*c),
        }
    }
    MonotonicityVerdict {
        interval,
        kind: Monotonicity::NonMonotonic,
        order,
        fired_conditions: Vec::new(),
        blocked_by,
        item: None,
    }
}

fn order_of(params: &HParams) -> LambdaOrder {
    LambdaOrder::of(params.lambda(), params.mu())
}

pub fn classify_monotonicity_h(params: &HParams, interval: Interval) -> MonotonicityVerdict {
    monotonicity_from(
        &compute_invariants(params),
        &ZeroBand::for_params(params),
        order_of(params),
        interval,
    )
}

pub fn classify_log_convexity_h(params: &HParams) -> ConvexityVerdict {
    let ratio = params.ratio();
    let (kind, exponent) = if ratio == 1.0 {
        (ConvexityKind::LogAffine, Some(params.beta() - params.mu()))
    } else if ratio > 1.0 {
        (ConvexityKind::LogConvex, None)
    } else if ratio > 0.0 {
        (ConvexityKind::LogConcave, None)
    } else {
        (ConvexityKind::NotCovered, None)
    };
    ConvexityVerdict {
        kind,
        ratio,
        exponent,
    }
}

pub fn classify_3log_h(params: &HParams) -> ThirdOrderVerdict {
    let ratio = params.ratio();
    let kind = if ratio > 0.0 && ratio < 1.0 {
        ThirdOrderKind::ConvexPosConcaveNeg
    } else if ratio > 1.0 {
        ThirdOrderKind::ConcavePosConvexNeg
    } else {
        ThirdOrderKind::NotCovered
    };
    ThirdOrderVerdict {
        kind,
        ratio,
        sufficient_only: true,
    }
}

fn report_from(params: &HParams, invariants: InvariantSet) -> ClassificationReport {
    let band = ZeroBand::for_params(params);
    let order = order_of(params);
    let verdict = |interval| monotonicity_from(&invariants, &band, order, interval);
    ClassificationReport {
        invariants,
        monotonicity: IntervalVerdicts {
            positive_half_line: verdict(Interval::PositiveHalfLine),
            negative_half_line: verdict(Interval::NegativeHalfLine),
            whole_line: verdict(Interval::WholeLine),
        },
        convexity: classify_log_convexity_h(params),
        third_order: classify_3log_h(params),
        zero_band_hits: band.hits(&invariants),
    }
}

pub fn classify_h(params: &HParams) -> ClassificationReport {
    report_from(params, compute_invariants(params))
}

/// Classifies `P` as `H` on the logarithms; the reported invariants are the
/// ones written on `(r, s, u, v)` directly, and `LambdaOrder` compares `u`
/// with `v`.
pub fn classify_p(params: &PParams) -> ClassificationReport {
    report_from(&params.to_h(), compute_frak_invariants(params))
}

/// Monotonicity of `Q_{α,β}` on `interval`.
///
/// `Q_{α,β} = H_{−α,−β;0,−1}` with `λ > μ`, so only `A`, `C` and `E` of the
/// image appear:
/// `A = (β−α)(1−α−β)`, `C = (β−α)(|α−β|−α−β)`, `E = (β−α)(2−|α−β|−α−β)`.
pub fn classify_q(params: &QParams, interval: Interval) -> MonotonicityVerdict {
    classify_monotonicity_h(&params.to_h(), interval)
}

/// Full report for `Q`; the convexity ratio is `β − α`.
pub fn classify_q_report(params: &QParams) -> ClassificationReport {
    classify_h(&params.to_h())
}
