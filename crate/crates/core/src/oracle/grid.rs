use serde::Serialize;

use crate::{Error, HParams, Interval, Result};

/// Log-spaced sample magnitudes `t_min..=t_max`, mirrored to negative `t`
/// when `include_negative` is set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    t_min: f64,
    t_max: f64,
    points_per_side: usize,
    include_negative: bool,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            t_min: 1e-3,
            t_max: 10.0,
            points_per_side: 200,
            include_negative: true,
        }
    }
}

impl GridSpec {
    pub fn new(
        t_min: f64,
        t_max: f64,
        points_per_side: usize,
        include_negative: bool,
    ) -> Result<Self> {
        if !(t_min > 0.0 && t_min < t_max && t_max.is_finite()) {
            return Err(Error::InvalidGrid("need 0 < t_min < t_max < ∞"));
        }
        if points_per_side < 8 {
            return Err(Error::InvalidGrid("need at least 8 points per side"));
        }
        Ok(Self {
            t_min,
            t_max,
            points_per_side,
            include_negative,
        })
    }

    /// A grid wide enough to show the slowest exponential scale of `params`:
    /// `t_max = max(10, 50/min(|α−β|, |λ−μ|))`.
    pub fn for_params(params: &HParams, points_per_side: usize) -> Result<Self> {
        let slowest = (params.alpha() - params.beta())
            .abs()
            .min((params.lambda() - params.mu()).abs());
        Self::new(1e-3, (50.0 / slowest).max(10.0), points_per_side, true)
    }

    pub fn t_min(&self) -> f64 {
        self.t_min
    }

    pub fn t_max(&self) -> f64 {
        self.t_max
    }

    pub fn points_per_side(&self) -> usize {
        self.points_per_side
    }

    pub fn include_negative(&self) -> bool {
        self.include_negative
    }

    /// The same range with twice the points per side.
    pub fn doubled(&self) -> Self {
        Self {
            points_per_side: 2 * self.points_per_side,
            ..*self
        }
    }

    /// Ascending positive magnitudes.
    pub fn magnitudes(&self) -> Vec<f64> {
        let n = self.points_per_side;
        let (lo, hi) = (self.t_min.ln(), self.t_max.ln());
        (0..n)
            .map(|i| match i {
                0 => self.t_min,
                _ if i == n - 1 => self.t_max,
                _ => (lo + (hi - lo) * i as f64 / (n - 1) as f64).exp(),
            })
            .collect()
    }

    /// Ascending sample points on `interval`, with `t = 0` appended as the
    /// closure point when `with_origin` is set. Negative points are omitted
    /// when the grid does not include them.
    pub fn points(&self, interval: Interval, with_origin: bool) -> Vec<f64> {
        let mags = self.magnitudes();
        let neg = || mags.iter().rev().map(|m| -m);
        let mut pts: Vec<f64> = Vec::with_capacity(2 * mags.len() + 1);
        match interval {
            Interval::PositiveHalfLine => {
                if with_origin {
                    pts.push(0.0);
                }
                pts.extend(&mags);
            }
            Interval::NegativeHalfLine => {
                if self.include_negative {
                    pts.extend(neg());
                    if with_origin {
                        pts.push(0.0);
                    }
                }
            }
            Interval::WholeLine => {
                if self.include_negative {
                    pts.extend(neg());
                }
                if with_origin {
                    pts.push(0.0);
                }
                pts.extend(&mags);
            }
        }
        pts
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleDirection {
    Rises,
    Falls,
    Both,
    Flat,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleVerdict {
    pub direction: OracleDirection,
    /// Size of the largest movement against the reported direction (for
    /// `Both`, the smaller of the two extremes); for `Flat`, the largest
    /// movement seen.
    pub max_violation: f64,
    /// Up to four locations: the largest rise, then the largest fall.
    pub witness_points: Vec<f64>,
}

impl OracleVerdict {
    pub fn has_rise(&self) -> bool {
        matches!(
            self.direction,
            OracleDirection::Rises | OracleDirection::Both
        )
    }

    pub fn has_fall(&self) -> bool {
        matches!(
            self.direction,
            OracleDirection::Falls | OracleDirection::Both
        )
    }
}

/// Aggregates signed observations `(location, amount)`: an amount above
/// `tol` counts as a rise, below `−tol` as a fall.
pub(crate) fn aggregate(
    observations: impl IntoIterator<Item = (f64, f64)>,
    tol: f64,
) -> OracleVerdict {
    let mut max_up: Option<(f64, f64)> = None;
    let mut max_down: Option<(f64, f64)> = None;
    let mut largest = 0.0_f64;
    let (mut up, mut down) = (0.0_f64, 0.0_f64);
    for (at, amount) in observations {
        largest = largest.max(amount.abs());
        if amount > 0.0 {
            up = up.max(amount);
        } else {
            down = down.max(-amount);
        }
        if amount > tol && max_up.is_none_or(|(_, a)| amount > a) {
            max_up = Some((at, amount));
        }
        if amount < -tol && max_down.is_none_or(|(_, a)| -amount > a) {
            max_down = Some((at, -amount));
        }
    }
    let witness_points: Vec<f64> = max_up
        .iter()
        .chain(max_down.iter())
        .map(|(at, _)| *at)
        .collect();
    let (direction, max_violation) = match (max_up, max_down) {
        (Some(_), Some(_)) => (OracleDirection::Both, up.min(down)),
        (Some(_), None) => (OracleDirection::Rises, down),
        (None, Some(_)) => (OracleDirection::Falls, up),
        (None, None) => (OracleDirection::Flat, largest),
    };
    OracleVerdict {
        direction,
        max_violation,
        witness_points,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(GridSpec::new(1e-3, 10.0, 200, true).is_ok());
        assert!(GridSpec::new(0.0, 10.0, 200, true).is_err());
        assert!(GridSpec::new(10.0, 1.0, 200, true).is_err());
        assert!(GridSpec::new(1e-3, 10.0, 7, true).is_err());
        assert!(GridSpec::new(1e-3, f64::INFINITY, 8, true).is_err());
    }

    #[test]
    fn points_are_ascending_and_mirrored() {
        let g = GridSpec::default();
        let m = g.magnitudes();
        assert_eq!(m.len(), 200);
        assert_eq!((m[0], m[199]), (1e-3, 10.0));
        assert!(m.windows(2).all(|w| w[0] < w[1]));
        let whole = g.points(Interval::WholeLine, true);
        assert_eq!(whole.len(), 401);
        assert_eq!(whole[200], 0.0);
        assert!(whole.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(g.points(Interval::NegativeHalfLine, false)[0], -10.0);
        let half = GridSpec::new(1.0, 2.0, 8, false).unwrap();
        assert!(half.points(Interval::NegativeHalfLine, true).is_empty());
        assert_eq!(half.points(Interval::WholeLine, false).len(), 8);
    }

    #[test]
    fn scaled_grid_reaches_slow_scales() {
        let p = HParams::new(0.1, 0.0, 3.0, 0.0).unwrap();
        assert_eq!(GridSpec::for_params(&p, 100).unwrap().t_max(), 500.0);
        let p = HParams::new(10.0, 0.0, 30.0, 0.0).unwrap();
        assert_eq!(GridSpec::for_params(&p, 100).unwrap().t_max(), 10.0);
    }

    #[test]
    fn aggregation() {
        let v = aggregate([(1.0, 0.5), (2.0, 1e-13), (3.0, 0.25)], 1e-11);
        assert_eq!(v.direction, OracleDirection::Rises);
        assert_eq!(v.witness_points, vec![1.0]);
        let v = aggregate([(1.0, 0.5), (2.0, -0.1)], 1e-11);
        assert_eq!(v.direction, OracleDirection::Both);
        assert_eq!(v.max_violation, 0.1);
        assert_eq!(v.witness_points, vec![1.0, 2.0]);
        assert!(v.has_rise() && v.has_fall());
        let v = aggregate([(1.0, 1e-13), (2.0, -1e-12)], 1e-11);
        assert_eq!(v.direction, OracleDirection::Flat);
        assert_eq!(v.max_violation, 1e-12);
    }
}
