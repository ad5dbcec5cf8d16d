use serde::Serialize;

use crate::ParamError;

fn finite(name: &'static str, value: f64) -> Result<f64, ParamError> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(ParamError::NonFinite { name, value })
    }
}

fn positive(name: &'static str, value: f64) -> Result<f64, ParamError> {
    finite(name, value)?;
    if value > 0.0 {
        Ok(value)
    } else {
        Err(ParamError::NonPositive { name, value })
    }
}

/// The quadruple `(α, β, λ, μ)` of `H_{α,β;λ,μ}`.
///
/// Construction enforces `α ≠ β`, `λ ≠ μ`, `(α,β) ≠ (λ,μ)`, `(α,β) ≠ (μ,λ)`
/// using exact floating comparisons.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HParams {
    alpha: f64,
    beta: f64,
    lambda: f64,
    mu: f64,
}

impl HParams {
    pub fn new(alpha: f64, beta: f64, lambda: f64, mu: f64) -> Result<Self, ParamError> {
        finite("α", alpha)?;
        finite("β", beta)?;
        finite("λ", lambda)?;
        finite("μ", mu)?;
        if alpha == beta {
            return Err(ParamError::EqualExponents {
                first: "α",
                second: "β",
            });
        }
        if lambda == mu {
            return Err(ParamError::EqualExponents {
                first: "λ",
                second: "μ",
            });
        }
        if alpha == lambda && beta == mu {
            return Err(ParamError::CoincidentPairs {
                pair: "(α,β)",
                other: "(λ,μ)",
            });
        }
        if alpha == mu && beta == lambda {
            return Err(ParamError::CoincidentPairs {
                pair: "(α,β)",
                other: "(μ,λ)",
            });
        }
        Ok(Self {
            alpha,
            beta,
            lambda,
            mu,
        })
    }

    pub fn from_array(p: [f64; 4]) -> Result<Self, ParamError> {
        Self::new(p[0], p[1], p[2], p[3])
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn to_array(&self) -> [f64; 4] {
        [self.alpha, self.beta, self.lambda, self.mu]
    }

    /// `(α − β) / (λ − μ)`, the value of `H` at the origin.
    pub fn ratio(&self) -> f64 {
        (self.alpha - self.beta) / (self.lambda - self.mu)
    }

    /// `max(1, |α|, |β|, |λ|, |μ|)²`, the magnitude scale of the sign invariants.
    pub fn invariant_scale(&self) -> f64 {
        let m = self
            .to_array()
            .iter()
            .fold(1.0_f64, |acc, x| acc.max(x.abs()));
        m * m
    }
}

/// The positive quadruple `(r, s, u, v)` of `P_{r,s;u,v}`.
///
/// Besides the pairwise exclusions, the logarithms must stay distinct after
/// rounding since `P` is evaluated as `H` on `(ln r, ln s, ln u, ln v)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PParams {
    r: f64,
    s: f64,
    u: f64,
    v: f64,
    #[serde(skip)]
    logs: HParams,
}

impl PParams {
    pub fn new(r: f64, s: f64, u: f64, v: f64) -> Result<Self, ParamError> {
        positive("r", r)?;
        positive("s", s)?;
        positive("u", u)?;
        positive("v", v)?;
        if r == s {
            return Err(ParamError::EqualExponents {
                first: "r",
                second: "s",
            });
        }
        if u == v {
            return Err(ParamError::EqualExponents {
                first: "u",
                second: "v",
            });
        }
        if r == u && s == v {
            return Err(ParamError::CoincidentPairs {
                pair: "(r,s)",
                other: "(u,v)",
            });
        }
        if r == v && s == u {
            return Err(ParamError::CoincidentPairs {
                pair: "(r,s)",
                other: "(v,u)",
            });
        }
        let logs = HParams::new(r.ln(), s.ln(), u.ln(), v.ln()).map_err(|e| match e {
            ParamError::EqualExponents { .. } if r.ln() == s.ln() => {
                ParamError::IndistinctLogarithms {
                    first: "r",
                    second: "s",
                }
            }
            ParamError::EqualExponents { .. } => ParamError::IndistinctLogarithms {
                first: "u",
                second: "v",
            },
            _ => ParamError::IndistinctLogarithms {
                first: "(r,s)",
                second: "(u,v)",
            },
        })?;
        Ok(Self { r, s, u, v, logs })
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn u(&self) -> f64 {
        self.u
    }

    pub fn v(&self) -> f64 {
        self.v
    }

    pub fn to_array(&self) -> [f64; 4] {
        [self.r, self.s, self.u, self.v]
    }

    /// `(ln r, ln s, ln u, ln v)` as `H` parameters.
    pub fn to_h(&self) -> HParams {
        self.logs
    }
}

/// The pair `(α, β)` of `Q_{α,β}`; `(0,1)` and `(1,0)` are excluded.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QParams {
    alpha: f64,
    beta: f64,
}

impl QParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self, ParamError> {
        finite("α", alpha)?;
        finite("β", beta)?;
        if alpha == beta {
            return Err(ParamError::EqualExponents {
                first: "α",
                second: "β",
            });
        }
        if (alpha == 0.0 && beta == 1.0) || (alpha == 1.0 && beta == 0.0) {
            return Err(ParamError::QExcludedPoint { alpha, beta });
        }
        Ok(Self { alpha, beta })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// `Q_{α,β} = H_{−α,−β;0,−1}`.
    pub fn to_h(&self) -> HParams {
        // The Q exclusions are exactly the H exclusions of the image quadruple.
        HParams {
            alpha: -self.alpha,
            beta: -self.beta,
            lambda: 0.0,
            mu: -1.0,
        }
    }
}

/// The pair `(a, b)` of `G_{a,b}`, with `b > a > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GParams {
    a: f64,
    b: f64,
}

impl GParams {
    pub fn new(a: f64, b: f64) -> Result<Self, ParamError> {
        positive("a", a)?;
        positive("b", b)?;
        if b <= a {
            return Err(ParamError::Unordered { a, b });
        }
        if a.ln() == b.ln() {
            return Err(ParamError::IndistinctLogarithms {
                first: "a",
                second: "b",
            });
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }
}

/// The pair `(a, b)` of `F_{a,b}`, with `a ≠ b`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FParams {
    a: f64,
    b: f64,
}

impl FParams {
    pub fn new(a: f64, b: f64) -> Result<Self, ParamError> {
        finite("a", a)?;
        finite("b", b)?;
        if a == b {
            return Err(ParamError::EqualExponents {
                first: "a",
                second: "b",
            });
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h_exclusions() {
        assert!(HParams::new(3.0, 1.0, 2.0, 0.0).is_ok());
        assert_eq!(
            HParams::new(1.0, 1.0, 2.0, 0.0),
            Err(ParamError::EqualExponents {
                first: "α",
                second: "β"
            })
        );
        assert_eq!(
            HParams::new(1.0, 0.0, 3.0, 3.0),
            Err(ParamError::EqualExponents {
                first: "λ",
                second: "μ"
            })
        );
        assert_eq!(
            HParams::new(1.0, 0.0, 1.0, 0.0),
            Err(ParamError::CoincidentPairs {
                pair: "(α,β)",
                other: "(λ,μ)"
            })
        );
        assert_eq!(
            HParams::new(1.0, 0.0, 0.0, 1.0),
            Err(ParamError::CoincidentPairs {
                pair: "(α,β)",
                other: "(μ,λ)"
            })
        );
        assert!(matches!(
            HParams::new(f64::NAN, 0.0, 1.0, 2.0),
            Err(ParamError::NonFinite { .. })
        ));
        assert!(matches!(
            HParams::new(0.0, f64::INFINITY, 1.0, 2.0),
            Err(ParamError::NonFinite { .. })
        ));
    }

    #[test]
    fn p_exclusions() {
        assert!(PParams::new(2.0, 3.0, 5.0, 7.0).is_ok());
        assert!(matches!(
            PParams::new(0.0, 3.0, 5.0, 7.0),
            Err(ParamError::NonPositive { .. })
        ));
        assert!(matches!(
            PParams::new(-1.0, 3.0, 5.0, 7.0),
            Err(ParamError::NonPositive { .. })
        ));
        assert!(PParams::new(2.0, 2.0, 5.0, 7.0).is_err());
        assert!(PParams::new(2.0, 3.0, 5.0, 5.0).is_err());
        assert!(PParams::new(2.0, 3.0, 2.0, 3.0).is_err());
        assert!(PParams::new(2.0, 3.0, 3.0, 2.0).is_err());
        // adjacent floats whose logarithms round together
        let r = 1e300_f64;
        let s = f64::from_bits(r.to_bits() + 1);
        assert!(r.ln() == s.ln());
        assert!(matches!(
            PParams::new(r, s, 5.0, 7.0),
            Err(ParamError::IndistinctLogarithms { .. })
        ));
    }

    #[test]
    fn q_exclusions() {
        assert!(QParams::new(0.0, 0.5).is_ok());
        assert!(QParams::new(0.5, 0.5).is_err());
        assert_eq!(
            QParams::new(0.0, 1.0),
            Err(ParamError::QExcludedPoint {
                alpha: 0.0,
                beta: 1.0
            })
        );
        assert!(QParams::new(1.0, 0.0).is_err());
        // exact comparison only
        assert!(QParams::new(1e-300, 1.0).is_ok());
        let h = QParams::new(0.25, 2.0).unwrap().to_h();
        assert_eq!(h.to_array(), [-0.25, -2.0, 0.0, -1.0]);
        assert!(HParams::from_array(h.to_array()).is_ok());
    }

    #[test]
    fn g_and_f_domains() {
        assert!(GParams::new(1.0, std::f64::consts::E).is_ok());
        assert_eq!(
            GParams::new(2.0, 1.0),
            Err(ParamError::Unordered { a: 2.0, b: 1.0 })
        );
        assert!(GParams::new(0.0, 1.0).is_err());
        assert!(FParams::new(0.0, 1.0).is_ok());
        assert!(FParams::new(-3.0, -7.5).is_ok());
        assert!(FParams::new(2.0, 2.0).is_err());
    }

    #[test]
    fn invariant_scale_floor_is_one() {
        let p = HParams::new(0.5, 0.0, -0.25, 0.1).unwrap();
        assert_eq!(p.invariant_scale(), 1.0);
        let p = HParams::new(3.0, -4.0, 0.0, 1.0).unwrap();
        assert_eq!(p.invariant_scale(), 16.0);
    }
}
