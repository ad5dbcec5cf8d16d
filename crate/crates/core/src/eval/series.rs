//! Power series about `t = 0`.

/// Coefficients of `(e^{xt} − e^{yt}) / ((x − y) t) = Σ_k h_k(x, y) t^k / (k+1)!`,
/// where `h_k` is the complete homogeneous polynomial of degree `k`. Factoring
/// out `x − y` keeps the coefficients free of cancellation when `x ≈ y`.
pub(crate) fn normalized_diff(x: f64, y: f64, degree: usize) -> Vec<f64> {
    let mut coeffs = Vec::with_capacity(degree + 1);
    let mut h = 1.0;
    let mut y_pow = 1.0;
    let mut fact = 1.0;
    coeffs.push(1.0);
    for k in 1..=degree {
        y_pow *= y;
        h = x * h + y_pow;
        fact *= (k + 1) as f64;
        coeffs.push(h / fact);
    }
    coeffs
}

/// Quotient of two power series; `den[0]` must be non-zero.
pub(crate) fn divide(num: &[f64], den: &[f64]) -> Vec<f64> {
    let n = num.len().min(den.len());
    let mut out: Vec<f64> = Vec::with_capacity(n);
    for k in 0..n {
        let acc = (1..=k).fold(num[k], |acc, j| acc - den[j] * out[k - j]);
        out.push(acc / den[0]);
    }
    out
}

pub(crate) fn scale(coeffs: &mut [f64], factor: f64) {
    coeffs.iter_mut().for_each(|c| *c *= factor);
}

/// Sums the series at `t`, stopping once a term drops below `rel_tol`
/// relative to the partial sum.
pub(crate) fn sum(coeffs: &[f64], t: f64, rel_tol: f64) -> f64 {
    let mut total = 0.0;
    let mut power = 1.0;
    for (k, c) in coeffs.iter().enumerate() {
        let term = c * power;
        total += term;
        if k >= 1 && term.abs() <= rel_tol * total.abs() {
            break;
        }
        power *= t;
    }
    total
}

/// Horner evaluation of the full polynomial.
pub(crate) fn horner(coeffs: &[f64], t: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * t + c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalized_diff_matches_exponential_series() {
        // (e^{2t} − 1)/(2t) = 1 + t + 2t²/3 + t³/3 + ...
        let c = normalized_diff(2.0, 0.0, 3);
        let expected = [1.0, 1.0, 2.0 / 3.0, 1.0 / 3.0];
        for (a, b) in c.iter().zip(expected) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn division_inverts_multiplication() {
        // 1/(1 − t) = Σ t^k
        let q = divide(&[1.0, 0.0, 0.0, 0.0, 0.0], &[1.0, -1.0]);
        assert_eq!(q.len(), 2);
        let q = divide(&[1.0, 0.0, 0.0, 0.0], &[1.0, -1.0, 0.0, 0.0]);
        assert_eq!(q, vec![1.0, 1.0, 1.0, 1.0]);
    }

    #[test]
    fn adaptive_sum_stops_early() {
        let c = [1.0, 1.0, 0.5, 1.0 / 6.0, 1.0 / 24.0, 1.0 / 120.0];
        let t = 1e-9;
        assert!((sum(&c, t, 1e-12) - t.exp()).abs() < 1e-18);
        assert!((horner(&c, 0.1) - 0.1_f64.exp()).abs() < 2e-9);
    }
}
