//! Exponential-difference ratio functions and their sign-condition calculus.
//!
//! The crate evaluates the family
//!
//! ```text
//! G_{a,b}(t)        = (b^t − a^t) / t
//! F_{a,b}(t)        = t / (e^{bt} − e^{at})
//! Q_{α,β}(t)        = (e^{−αt} − e^{−βt}) / (1 − e^{−t})
//! H_{α,β;λ,μ}(t)    = (e^{αt} − e^{βt}) / (e^{λt} − e^{μt})
//! P_{r,s;u,v}(t)    = (r^t − s^t) / (u^t − v^t)
//! ```
//!
//! together with the first three logarithmic derivatives of `H`, classifies
//! monotonicity, log-convexity and 3-log-convexity of `H`, `P` and `Q` from
//! closed-form sign conditions, and checks those classifications against an
//! independent finite-difference oracle.
//!
//! ```
//! use expratio::{eval_h, classify_h, HParams, Monotonicity};
//!
//! let p = HParams::new(1.0, 0.0, 2.0, 0.0).unwrap();   // H(t) = 1/(e^t + 1)
//! assert!((eval_h(&p, 0.0).unwrap() - 0.5).abs() < 1e-15);
//! let report = classify_h(&p);
//! assert_eq!(report.monotonicity.whole_line.kind, Monotonicity::Decreasing);
//! ```

pub mod classify;
mod error;
pub mod eval;
pub mod oracle;

pub use classify::{
    classify_3log_h, classify_h, classify_log_convexity_h, classify_monotonicity_h, classify_p,
    classify_q, classify_q_report, compute_frak_invariants, compute_invariants, decision_table,
    ClassificationReport, ConvexityKind, ConvexityVerdict, Direction, Interval, IntervalVerdicts,
    InvariantName, InvariantSet, LambdaOrder, Monotonicity, MonotonicityVerdict, ThirdOrderKind,
    ThirdOrderVerdict,
};
pub use error::{Error, ParamError};
pub use eval::{
    eval_f, eval_g, eval_h, eval_h_signed_log, eval_p, eval_q, log_deriv_h, log_deriv_q,
    reduce_h_to_q, EvalOptions, ExpRatio, FParams, GParams, HParams, PParams, QParams, QReduction,
    SignedLogValue,
};

pub type Result<T, E = Error> = std::result::Result<T, E>;
