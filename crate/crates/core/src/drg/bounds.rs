use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use super::array::IntersectionArray;
use super::numbers::is_primitive;
use crate::error::{Error, Result};
use crate::outcome::{Applicable, NotApplicable};

type Q = Ratio<i128>;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Tradeoff {
    pub j: usize,
    pub s: usize,
    /// `C = b_j / c_{j+1}` as an exact fraction and as a float.
    pub c_exact: String,
    pub c: f64,
    pub lhs_exact: String,
    pub lhs: f64,
    pub rhs_exact: String,
    pub rhs: f64,
    pub holds: bool,
}

fn qf(q: Q) -> f64 {
    q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN)
}

/// Evaluates
/// `b_{j+1} (sum_{t<=s} 1/b_{t-1} + sum_{t<=j+2-s} 1/b_{t-1}) + c_{j+2} sum_{t<=j+1} 1/b_{t-1}`
/// against `1 - 4/(C-1)` with `C = b_j / c_{j+1}`, in exact arithmetic.
pub fn tradeoff_inequality(array: &IntersectionArray, j: usize, s: usize) -> Result<Applicable<Tradeoff>> {
    array.require_valid()?;
    let d = array.diameter();
    if d < 3 || j < 1 || j > d - 2 {
        return Err(Error::OutOfRange(format!("j = {j} needs 1 <= j <= d - 2 with d = {d}")));
    }
    if s < 1 || s > j + 1 {
        return Err(Error::OutOfRange(format!("s = {s} needs 1 <= s <= j + 1 = {}", j + 1)));
    }
    if !is_primitive(array)? {
        return Ok(Err(NotApplicable::because("array is imprimitive")));
    }
    let q = |x: u64| Q::from_integer(x as i128);
    let c = q(array.b(j)) / q(array.c(j + 1));
    if c <= Q::one() {
        return Ok(Err(NotApplicable::compare("C = b_j / c_(j+1) > 1", qf(c), 1.0)));
    }
    let inv_sum = |upto: usize| -> Q { (1..=upto).map(|t| Q::one() / q(array.b(t - 1))).fold(Q::zero(), |a, b| a + b) };
    let lhs = q(array.b(j + 1)) * (inv_sum(s) + inv_sum(j + 2 - s)) + q(array.c(j + 2)) * inv_sum(j + 1);
    let rhs = Q::one() - Q::from_integer(4) / (c - Q::one());
    Ok(Ok(Tradeoff {
        j,
        s,
        c_exact: c.to_string(),
        c: qf(c),
        lhs_exact: lhs.to_string(),
        lhs: qf(lhs),
        rhs_exact: rhs.to_string(),
        rhs: qf(rhs),
        holds: lhs >= rhs,
    }))
}

/// Every applicable `(j, s)` for the array.
pub fn all_tradeoffs(array: &IntersectionArray) -> Result<Vec<Tradeoff>> {
    let d = array.diameter();
    let mut out = Vec::new();
    if d < 3 {
        return Ok(out);
    }
    for j in 1..=d - 2 {
        for s in 1..=j + 1 {
            if let Ok(t) = tradeoff_inequality(array, j, s)? {
                out.push(t);
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GapEstimate {
    pub i: usize,
    pub epsilon: f64,
    pub alpha: f64,
    /// `None` when `i = d`, where no `c_{i+1}` exists.
    pub beta: Option<f64>,
    pub raw: f64,
    pub bound: f64,
}

/// `k (1 - min(alpha, beta) + 2 (d+2)^2 eps^(1/(d+1)))`; an absent `beta`
/// imposes no constraint.
pub fn spectral_gap_formula(k: f64, d: usize, epsilon: f64, alpha: f64, beta: Option<f64>) -> f64 {
    let m = beta.map_or(alpha, |b| alpha.min(b));
    let dd = d as f64;
    k * (1.0 - m + 2.0 * (dd + 2.0).powi(2) * epsilon.powf(1.0 / (dd + 1.0)))
}

/// Upper bound on the zero-weight spectral radius at index `i`, after
/// checking `b_i, c_i <= eps k`, `b_{i-1} >= alpha k` and (for `i < d`)
/// `c_{i+1} >= beta k`. The bound is clamped to `[0, k]`; `raw` keeps the
/// unclamped value.
pub fn spectral_gap_estimate(
    array: &IntersectionArray,
    i: usize,
    epsilon: f64,
    alpha: f64,
    beta: f64,
) -> Result<Applicable<GapEstimate>> {
    array.require_valid()?;
    let d = array.diameter();
    if i < 1 || i > d {
        return Err(Error::OutOfRange(format!("i = {i} needs 1 <= i <= d = {d}")));
    }
    let k = array.k() as f64;
    let checks = [
        ("b_i <= eps k", array.b(i) as f64, epsilon * k, true),
        ("c_i <= eps k", array.c(i) as f64, epsilon * k, true),
        ("b_(i-1) >= alpha k", alpha * k, array.b(i - 1) as f64, true),
        ("c_(i+1) >= beta k", beta * k, array.c(i + 1) as f64, i < d),
    ];
    for (name, lhs, rhs, active) in checks {
        if active && lhs > rhs {
            return Ok(Err(NotApplicable::compare(name, lhs, rhs)));
        }
    }
    let beta = (i < d).then_some(beta);
    let raw = spectral_gap_formula(k, d, epsilon, alpha, beta);
    Ok(Ok(GapEstimate { i, epsilon, alpha, beta, raw, bound: raw.clamp(0.0, k) }))
}

/// The smallest estimate over all admissible `i`, taking the largest
/// `alpha = b_{i-1}/k` and `beta = c_{i+1}/k` each index allows.
pub fn best_spectral_gap_estimate(array: &IntersectionArray, epsilon: f64) -> Result<Applicable<GapEstimate>> {
    array.require_valid()?;
    let d = array.diameter();
    let k = array.k() as f64;
    let mut best: Option<GapEstimate> = None;
    for i in 1..=d {
        let alpha = array.b(i - 1) as f64 / k;
        let beta = array.c(i + 1) as f64 / k;
        if let Ok(g) = spectral_gap_estimate(array, i, epsilon, alpha, beta)? {
            if best.as_ref().is_none_or(|b| g.raw < b.raw) {
                best = Some(g);
            }
        }
    }
    Ok(best.ok_or_else(|| {
        let smallest = (1..=d).map(|i| array.b(i).max(array.c(i))).min().unwrap_or(0) as f64;
        NotApplicable::compare("some i with b_i, c_i <= eps k", smallest, epsilon * k)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drg::parse_array;

    #[test]
    fn johnson_and_hamming_tradeoff() {
        let j = tradeoff_inequality(&parse_array("{12,6,2;1,4,9}").unwrap(), 1, 1).unwrap().unwrap();
        assert_eq!(j.c_exact, "3/2");
        assert_eq!(j.lhs_exact, "35/12");
        assert_eq!(j.rhs_exact, "-7");
        assert!(j.holds);
        let h = tradeoff_inequality(&parse_array("{6,4,2;1,2,3}").unwrap(), 1, 1).unwrap().unwrap();
        assert_eq!((h.lhs_exact.as_str(), h.rhs_exact.as_str()), ("29/12", "-3"));
    }

    #[test]
    fn tradeoff_not_applicable_and_ranges() {
        // b_1 = c_2 gives C = 1
        let a = parse_array("{4,2,1;1,2,4}").unwrap();
        assert!(tradeoff_inequality(&a, 1, 1).is_ok());
        let p = parse_array("{3,2;1,1}").unwrap();
        assert!(matches!(tradeoff_inequality(&p, 1, 1), Err(Error::OutOfRange(_))));
        let j = parse_array("{12,6,2;1,4,9}").unwrap();
        assert!(matches!(tradeoff_inequality(&j, 1, 3), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn gap_formula_and_petersen() {
        let v = spectral_gap_formula(100.0, 3, 1e-12, 0.5, Some(0.5));
        assert!((v - 55.0).abs() < 1e-9);
        let p = parse_array("{3,2;1,1}").unwrap();
        assert!(best_spectral_gap_estimate(&p, 0.01).unwrap().is_err());
        assert!(spectral_gap_estimate(&p, 1, 0.01, 0.5, 0.5).unwrap().is_err());
    }
}
