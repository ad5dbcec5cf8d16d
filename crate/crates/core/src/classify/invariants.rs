use serde::Serialize;

use crate::{HParams, PParams};

/// Relative width of the zero band used for every sign test.
pub const ZERO_BAND_EPS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum InvariantName {
    A,
    B,
    C,
    D,
    E,
}

impl InvariantName {
    pub const ALL: [InvariantName; 5] = [Self::A, Self::B, Self::C, Self::D, Self::E];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::A => "A",
            Self::B => "B",
            Self::C => "C",
            Self::D => "D",
            Self::E => "E",
        }
    }
}

/// The five signed quantities whose signs decide monotonicity of `H`.
///
/// With `d = α − β`:
///
/// ```text
/// A = d (α + β − λ − μ)
/// B = d (α + β − |d| − 2λ)      C = d (α + β + |d| − 2λ)
/// D = d (α + β + |d| − 2μ)      E = d (α + β − |d| − 2μ)
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InvariantSet {
    #[serde(rename = "A")]
    pub a: f64,
    #[serde(rename = "B")]
    pub b: f64,
    #[serde(rename = "C")]
    pub c: f64,
    #[serde(rename = "D")]
    pub d: f64,
    #[serde(rename = "E")]
    pub e: f64,
}

impl InvariantSet {
    pub fn get(&self, name: InvariantName) -> f64 {
        match name {
            InvariantName::A => self.a,
            InvariantName::B => self.b,
            InvariantName::C => self.c,
            InvariantName::D => self.d,
            InvariantName::E => self.e,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (InvariantName, f64)> + '_ {
        InvariantName::ALL.into_iter().map(|n| (n, self.get(n)))
    }
}

pub fn compute_invariants(params: &HParams) -> InvariantSet {
    let [alpha, beta, lambda, mu] = params.to_array();
    let d = alpha - beta;
    let sum = alpha + beta;
    InvariantSet {
        a: d * (sum - lambda - mu),
        b: d * (sum - d.abs() - 2.0 * lambda),
        c: d * (sum + d.abs() - 2.0 * lambda),
        d: d * (sum + d.abs() - 2.0 * mu),
        e: d * (sum - d.abs() - 2.0 * mu),
    }
}

/// `ln(x/y)`, through the quotient when it is a normal number.
fn ln_quot(x: f64, y: f64) -> f64 {
    let q = x / y;
    if q.is_normal() {
        q.ln()
    } else {
        x.ln() - y.ln()
    }
}

/// `ln((x/y)(z/w))`.
fn ln_quot2(x: f64, y: f64, z: f64, w: f64) -> f64 {
    let q = (x / y) * (z / w);
    if q.is_normal() {
        q.ln()
    } else {
        ln_quot(x, y) + ln_quot(z, w)
    }
}

/// The invariants of `P_{r,s;u,v}` written on the positive parameters:
///
/// ```text
/// A = ln(rs/uv) ln(r/s)
/// B = (ln(rs/u²) − |ln(r/s)|) ln(r/s)    C = (ln(rs/u²) + |ln(r/s)|) ln(r/s)
/// D = (ln(rs/v²) + |ln(r/s)|) ln(r/s)    E = (ln(rs/v²) − |ln(r/s)|) ln(r/s)
/// ```
///
/// They agree with [`compute_invariants`] on the logarithms up to rounding.
pub fn compute_frak_invariants(params: &PParams) -> InvariantSet {
    let [r, s, u, v] = params.to_array();
    let l = ln_quot(r, s);
    let rs_uv = ln_quot2(r, u, s, v);
    let rs_uu = ln_quot2(r, u, s, u);
    let rs_vv = ln_quot2(r, v, s, v);
    InvariantSet {
        a: rs_uv * l,
        b: (rs_uu - l.abs()) * l,
        c: (rs_uu + l.abs()) * l,
        d: (rs_vv + l.abs()) * l,
        e: (rs_vv - l.abs()) * l,
    }
}

/// Tolerance policy for the sign tests: `x ≥ 0` holds when
/// `x ≥ −ε·scale`, `x ≤ 0` when `x ≤ ε·scale`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroBand {
    width: f64,
}

impl ZeroBand {
    pub fn for_params(params: &HParams) -> Self {
        Self {
            width: ZERO_BAND_EPS * params.invariant_scale(),
        }
    }

    pub fn width(&self) -> f64 {
        self.width
    }

    pub fn non_negative(&self, x: f64) -> bool {
        x >= -self.width
    }

    pub fn non_positive(&self, x: f64) -> bool {
        x <= self.width
    }

    pub fn contains(&self, x: f64) -> bool {
        x.abs() < self.width
    }

    pub fn hits(&self, set: &InvariantSet) -> Vec<InvariantName> {
        set.iter()
            .filter(|(_, x)| self.contains(*x))
            .map(|(n, _)| n)
            .collect()
    }
}
