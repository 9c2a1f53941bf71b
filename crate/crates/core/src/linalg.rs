//! Small numeric helpers: a symmetric tridiagonal eigensolver and thin
//! wrappers over nalgebra for dense symmetric and general matrices.

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};

/// Eigenvalues of the symmetric tridiagonal matrix with diagonal `diag` and
/// off-diagonal `off` (`off[i]` couples `i` and `i+1`), by implicit QL with
/// Wilkinson shifts. Sorted descending.
pub fn tridiagonal_eigenvalues(diag: &[f64], off: &[f64]) -> Result<Vec<f64>> {
    let n = diag.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    if off.len() + 1 != n {
        return Err(Error::InvalidParameters(format!(
            "tridiagonal matrix of size {n} needs {} off-diagonal entries, got {}",
            n - 1,
            off.len()
        )));
    }
    let mut d = diag.to_vec();
    let mut e = off.to_vec();
    e.push(0.0);
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 100 {
                return Err(Error::Inconsistent("tridiagonal QL iteration did not converge".into()));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut i = m;
            let mut deflated = false;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    d.sort_by(|a, b| b.total_cmp(a));
    Ok(d)
}

/// Eigenvalues of a dense symmetric `n x n` matrix (row-major), descending.
pub fn symmetric_eigenvalues(n: usize, data: &[f64]) -> Vec<f64> {
    if n == 0 {
        return Vec::new();
    }
    let m = DMatrix::from_row_slice(n, n, data);
    let mut v: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

/// Complex eigenvalues of a general real matrix as `(re, im)` pairs.
pub fn general_eigenvalues(n: usize, data: &[f64]) -> Vec<(f64, f64)> {
    if n == 0 {
        return Vec::new();
    }
    let m = DMatrix::from_row_slice(n, n, data);
    m.complex_eigenvalues().iter().map(|z| (z.re, z.im)).collect()
}

/// Collapses a descending list of eigenvalues into `(value, multiplicity)`,
/// merging values closer than `tol` (relative to the spectral radius).
pub fn group_eigenvalues(values: &[f64], tol: f64) -> Vec<(f64, usize)> {
    let scale = values.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let mut out: Vec<(f64, usize, f64)> = Vec::new();
    for &v in values {
        match out.last_mut() {
            Some((_, cnt, sum)) if (*sum / *cnt as f64 - v).abs() <= tol * scale => {
                *cnt += 1;
                *sum += v;
            }
            _ => out.push((v, 1, v)),
        }
    }
    out.into_iter().map(|(_, c, s)| (s / c as f64, c)).collect()
}

/// Roots of a real polynomial given by coefficients from the leading term
/// down, via the companion matrix.
pub fn polynomial_roots(coeffs: &[f64]) -> Result<Vec<(f64, f64)>> {
    let lead = *coeffs.first().ok_or_else(|| Error::InvalidParameters("empty polynomial".into()))?;
    if lead == 0.0 {
        return Err(Error::InvalidParameters("leading coefficient is zero".into()));
    }
    let n = coeffs.len() - 1;
    let mut m = vec![0.0; n * n];
    for j in 0..n {
        m[j] = -coeffs[j + 1] / lead;
    }
    for i in 1..n {
        m[i * n + i - 1] = 1.0;
    }
    Ok(general_eigenvalues(n, &m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tridiagonal_matches_dense() {
        let diag = [2.0, -1.0, 0.5, 3.0, 0.0];
        let off = [1.0, 0.3, 2.0, -0.7];
        let n = diag.len();
        let mut dense = vec![0.0; n * n];
        for i in 0..n {
            dense[i * n + i] = diag[i];
            if i + 1 < n {
                dense[i * n + i + 1] = off[i];
                dense[(i + 1) * n + i] = off[i];
            }
        }
        let a = tridiagonal_eigenvalues(&diag, &off).unwrap();
        let b = symmetric_eigenvalues(n, &dense);
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).abs() < 1e-12, "{x} vs {y}");
        }
    }

    #[test]
    fn grouping_and_roots() {
        let g = group_eigenvalues(&[3.0, 1.0 + 1e-13, 1.0, -2.0], 1e-9);
        assert_eq!(g.len(), 3);
        assert_eq!(g[1].1, 2);
        let mut r: Vec<f64> = polynomial_roots(&[1.0, 0.0, -1.0]).unwrap().iter().map(|z| z.0).collect();
        r.sort_by(f64::total_cmp);
        assert!((r[0] + 1.0).abs() < 1e-12 && (r[1] - 1.0).abs() < 1e-12);
    }
}
