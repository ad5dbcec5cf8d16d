#![allow(dead_code)]

use expratio::HParams;
use proptest::prelude::*;

/// Quadruples in `[−5, 5]⁴` whose entries are pairwise at least 0.05 apart.
pub fn h_params() -> impl Strategy<Value = HParams> {
    prop::array::uniform4(-5.0..5.0f64).prop_filter_map("too close to a degenerate tuple", |p| {
        let separated = (0..4).all(|i| (i + 1..4).all(|j| (p[i] - p[j]).abs() >= 0.05));
        if separated {
            HParams::from_array(p).ok()
        } else {
            None
        }
    })
}

/// `±[lo, hi]`, `n` log-spaced magnitudes per side.
pub fn mirrored_log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let mags: Vec<f64> = (0..n)
        .map(|i| (lo.ln() + (hi.ln() - lo.ln()) * i as f64 / (n - 1) as f64).exp())
        .collect();
    mags.iter()
        .map(|m| -m)
        .chain(mags.iter().copied())
        .collect()
}

pub fn rel_err(got: f64, expected: f64) -> f64 {
    if got == expected {
        0.0
    } else {
        ((got - expected) / expected).abs()
    }
}
