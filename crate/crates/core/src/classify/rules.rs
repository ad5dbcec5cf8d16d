//! Monotonicity rules of `H` as data.
//!
//! Each rule reads "for this ordering of λ and μ, `H` has this direction on
//! this interval iff both conditions hold". The classifier and the decision
//! table are both driven by [`RULES`].
//!
//! For `λ < μ` the half-line rules use `D` on `(0,∞)` and `B` on `(−∞,0)`.
//! The substitution `w = (λ − μ)t` reverses orientation in that case, so the
//! invariant that governs `(0,∞)` for `λ > μ` governs `(−∞,0)` here.

use serde::Serialize;

use super::InvariantName::{self, A, B, C, D, E};
use super::{Direction, Interval};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Sign {
    NonNegative,
    NonPositive,
}

impl Sign {
    pub fn symbol(self) -> &'static str {
        match self {
            Self::NonNegative => "≥0",
            Self::NonPositive => "≤0",
        }
    }

    pub fn ascii(self) -> &'static str {
        match self {
            Self::NonNegative => ">=0",
            Self::NonPositive => "<=0",
        }
    }
}

/// Which of `λ`, `μ` is larger (for `P`: which of `u`, `v`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LambdaOrder {
    LambdaGreater,
    LambdaLess,
}

impl LambdaOrder {
    pub fn of(lambda: f64, mu: f64) -> Self {
        if lambda > mu {
            Self::LambdaGreater
        } else {
            Self::LambdaLess
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Self::LambdaGreater => "λ>μ",
            Self::LambdaLess => "λ<μ",
        }
    }

    pub fn ascii(self) -> &'static str {
        match self {
            Self::LambdaGreater => "lambda>mu",
            Self::LambdaLess => "lambda<mu",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Condition {
    pub invariant: InvariantName,
    pub sign: Sign,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rule {
    pub interval: Interval,
    pub direction: Direction,
    pub order: LambdaOrder,
    pub conditions: [Condition; 2],
    /// Position of the statement in the list of monotonicity properties (1–6).
    pub item: u8,
}

const fn ge(invariant: InvariantName) -> Condition {
    Condition {
        invariant,
        sign: Sign::NonNegative,
    }
}

const fn le(invariant: InvariantName) -> Condition {
    Condition {
        invariant,
        sign: Sign::NonPositive,
    }
}

const fn rule(
    interval: Interval,
    direction: Direction,
    order: LambdaOrder,
    conditions: [Condition; 2],
    item: u8,
) -> Rule {
    Rule {
        interval,
        direction,
        order,
        conditions,
        item,
    }
}

use Direction::{Decreasing as Dec, Increasing as Inc};
use Interval::{NegativeHalfLine as Neg, PositiveHalfLine as Pos, WholeLine as Whole};
use LambdaOrder::{LambdaGreater as Gt, LambdaLess as Lt};

/// In decision-table order.
pub const RULES: [Rule; 12] = [
    rule(Pos, Inc, Gt, [ge(A), ge(C)], 1),
    rule(Pos, Inc, Lt, [le(A), le(D)], 1),
    rule(Pos, Dec, Lt, [ge(A), ge(D)], 2),
    rule(Pos, Dec, Gt, [le(A), le(C)], 2),
    rule(Neg, Inc, Gt, [ge(A), ge(E)], 3),
    rule(Neg, Inc, Lt, [le(A), le(B)], 3),
    rule(Neg, Dec, Gt, [le(A), le(E)], 4),
    rule(Neg, Dec, Lt, [ge(A), ge(B)], 4),
    rule(Whole, Inc, Gt, [ge(C), ge(E)], 5),
    rule(Whole, Inc, Lt, [le(B), le(D)], 5),
    rule(Whole, Dec, Gt, [le(C), le(E)], 6),
    rule(Whole, Dec, Lt, [ge(B), ge(D)], 6),
];

pub fn find_rule(interval: Interval, direction: Direction, order: LambdaOrder) -> &'static Rule {
    RULES
        .iter()
        .find(|r| r.interval == interval && r.direction == direction && r.order == order)
        .expect("every combination has a rule")
}

/// One row of the decision table: the sign constraint on each of `A`–`E`
/// (blank when unconstrained).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub interval: Interval,
    pub direction: Direction,
    pub constraints: [Option<Sign>; 5],
    pub order: LambdaOrder,
}

impl From<&Rule> for TableRow {
    fn from(rule: &Rule) -> Self {
        let mut constraints = [None; 5];
        for c in rule.conditions {
            constraints[c.invariant as usize] = Some(c.sign);
        }
        Self {
            interval: rule.interval,
            direction: rule.direction,
            constraints,
            order: rule.order,
        }
    }
}

pub fn decision_table() -> Vec<TableRow> {
    RULES.iter().map(TableRow::from).collect()
}
