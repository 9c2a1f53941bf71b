use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{general_eigenvalues, polynomial_roots};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PolynomialBound {
    pub m: f64,
    pub epsilon: f64,
}

/// Root-perturbation radius for two monic polynomials of the same degree,
/// given by coefficients from the leading `1` down:
/// `eps = 2n (sum_{i>=1} |b_i - a_i| (2M)^(n-i))^(1/n)` with
/// `M = max_{i>=1} |a_i|^(1/i), |b_i|^(1/i)`.
pub fn polynomial_perturbation(f: &[f64], g: &[f64]) -> Result<PolynomialBound> {
    if f.len() != g.len() || f.len() < 2 {
        return Err(Error::InvalidParameters(format!(
            "need two polynomials of equal degree >= 1, got {} and {} coefficients",
            f.len(),
            g.len()
        )));
    }
    if f[0] != 1.0 || g[0] != 1.0 {
        return Err(Error::InvalidParameters("polynomials must be monic".into()));
    }
    let n = f.len() - 1;
    let m = (1..=n)
        .flat_map(|i| [f[i], g[i]].map(|x| x.abs().powf(1.0 / i as f64)))
        .fold(0.0f64, f64::max);
    let s: f64 = (1..=n).map(|i| (g[i] - f[i]).abs() * (2.0 * m).powi((n - i) as i32)).sum();
    Ok(PolynomialBound { m, epsilon: 2.0 * n as f64 * s.powf(1.0 / n as f64) })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MatrixBound {
    pub m: f64,
    pub delta: f64,
    pub bound: f64,
}

/// Eigenvalue-perturbation radius `2 (n+1)^2 M delta^(1/n)` for two square
/// matrices of size `n` (row-major), `M` the largest entry magnitude and
/// `delta = sum |A - B| / (n M)`.
pub fn matrix_perturbation(n: usize, a: &[f64], b: &[f64]) -> Result<MatrixBound> {
    if n == 0 || a.len() != n * n || b.len() != n * n {
        return Err(Error::InvalidParameters(format!("need two {n}x{n} matrices")));
    }
    let m = a.iter().chain(b).fold(0.0f64, |acc, x| acc.max(x.abs()));
    if m == 0.0 {
        return Ok(MatrixBound { m, delta: 0.0, bound: 0.0 });
    }
    let diff: f64 = a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum();
    let delta = diff / (n as f64 * m);
    let nf = n as f64;
    Ok(MatrixBound { m, delta, bound: 2.0 * (nf + 1.0).powi(2) * m * delta.powf(1.0 / nf) })
}

/// Smallest `max_i |x_i - y_sigma(i)|` over all permutations, by exhaustive
/// search with pruning. Limited to ten points.
pub fn bottleneck_matching(x: &[(f64, f64)], y: &[(f64, f64)]) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::InvalidParameters("point sets differ in size".into()));
    }
    if x.len() > 10 {
        return Err(Error::TooLarge { n: x.len(), limit: 10 });
    }
    let dist = |p: (f64, f64), q: (f64, f64)| (p.0 - q.0).hypot(p.1 - q.1);
    fn go(
        i: usize,
        used: &mut [bool],
        cur: f64,
        best: &mut f64,
        x: &[(f64, f64)],
        y: &[(f64, f64)],
        dist: &dyn Fn((f64, f64), (f64, f64)) -> f64,
    ) {
        if cur >= *best {
            return;
        }
        if i == x.len() {
            *best = cur;
            return;
        }
        for j in 0..y.len() {
            if !used[j] {
                used[j] = true;
                go(i + 1, used, cur.max(dist(x[i], y[j])), best, x, y, dist);
                used[j] = false;
            }
        }
    }
    let mut best = f64::INFINITY;
    go(0, &mut vec![false; y.len()], 0.0, &mut best, x, y, &dist);
    Ok(if x.is_empty() { 0.0 } else { best })
}

/// Roots of both polynomials and the best matching distance between them.
pub fn polynomial_root_matching(f: &[f64], g: &[f64]) -> Result<f64> {
    bottleneck_matching(&polynomial_roots(f)?, &polynomial_roots(g)?)
}

/// Eigenvalues of both matrices and the best matching distance.
pub fn matrix_eigen_matching(n: usize, a: &[f64], b: &[f64]) -> Result<f64> {
    bottleneck_matching(&general_eigenvalues(n, a), &general_eigenvalues(n, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_versus_shifted_square() {
        let b = polynomial_perturbation(&[1.0, 0.0, -1.0], &[1.0, 0.0, 0.0]).unwrap();
        assert_eq!(b.m, 1.0);
        assert!((b.epsilon - 4.0).abs() < 1e-12);
        let dist = polynomial_root_matching(&[1.0, 0.0, -1.0], &[1.0, 0.0, 0.0]).unwrap();
        assert!(dist <= b.epsilon);
    }

    #[test]
    fn identical_inputs() {
        let f = [1.0, -3.0, 2.0];
        assert_eq!(polynomial_perturbation(&f, &f).unwrap().epsilon, 0.0);
        let a = [1.0, 2.0, 3.0, 4.0];
        assert_eq!(matrix_perturbation(2, &a, &a).unwrap().bound, 0.0);
        assert!(polynomial_perturbation(&[2.0, 1.0], &[1.0, 1.0]).is_err());
    }
}
