use serde::Serialize;

use super::{kernel, HParams, QParams};
use crate::ParamError;

/// Rewrites `H_{α,β;λ,μ}(t)` as `Q_{A,B}(w)` with
/// `A = (α−λ)/(μ−λ)`, `B = (β−λ)/(μ−λ)` and `w = (λ−μ)t`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QReduction {
    pub a: f64,
    pub b: f64,
    pub w_scale: f64,
    /// `(A, B)` landed on an excluded point of `Q` after rounding. Exact
    /// arithmetic never gets there for valid `H` parameters, but division
    /// can round `B` to exactly `1` when `β` and `μ` are adjacent floats.
    pub degenerate: bool,
}

impl QReduction {
    pub fn q_params(&self) -> Result<QParams, ParamError> {
        QParams::new(self.a, self.b)
    }

    /// `w = (λ − μ) t`.
    pub fn w(&self, t: f64) -> f64 {
        self.w_scale * t
    }

    /// `Q_{A,B}(w)` without revalidating `(A, B)`; well defined even for a
    /// degenerate reduction, where the quotient is identically 1.
    pub fn eval_q(&self, w: f64) -> f64 {
        if w == 0.0 {
            return self.b - self.a;
        }
        kernel::ratio(-self.a, -self.b, 0.0, -1.0, w).unwrap_or(self.b - self.a)
    }
}

pub fn reduce_h_to_q(params: &HParams) -> QReduction {
    let [alpha, beta, lambda, mu] = params.to_array();
    let span = mu - lambda;
    let a = (alpha - lambda) / span;
    let b = (beta - lambda) / span;
    QReduction {
        a,
        b,
        w_scale: lambda - mu,
        degenerate: (a == 0.0 && b == 1.0) || (a == 1.0 && b == 0.0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn substitution_values() {
        let r = reduce_h_to_q(&HParams::new(3.0, 1.0, 2.0, 0.0).unwrap());
        assert_eq!((r.a, r.b, r.w_scale), (-0.5, 0.5, 2.0));
        assert!(!r.degenerate);
        let r = reduce_h_to_q(&HParams::new(1.0, 0.0, 2.0, 0.0).unwrap());
        assert_eq!((r.a, r.b, r.w_scale), (0.5, 1.0, 2.0));
        assert!(r.q_params().is_ok());
    }

    #[test]
    fn rounding_can_hit_the_excluded_point() {
        // α = λ exactly, β one ulp from μ: B rounds to 1
        let mu = 1.0_f64;
        let beta = f64::from_bits(mu.to_bits() + 1);
        let p = HParams::new(-3.0, beta, -3.0, mu).unwrap();
        let r = reduce_h_to_q(&p);
        assert_eq!(r.a, 0.0);
        assert_eq!(r.b, 1.0);
        assert!(r.degenerate);
        assert!(r.q_params().is_err());
        assert_eq!(r.eval_q(0.3), 1.0);
    }
}
