use serde::Serialize;

use super::array::IntersectionArray;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{group_eigenvalues, symmetric_eigenvalues, tridiagonal_eigenvalues};

/// Distinct eigenvalues with multiplicities, in descending order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<(f64, usize)>,
    /// Largest absolute value once one copy of the top eigenvalue is removed.
    pub zero_weight_radius: f64,
    pub theta_min: f64,
}

impl Spectrum {
    pub fn from_grouped(mut eigenvalues: Vec<(f64, usize)>) -> Self {
        eigenvalues.sort_by(|a, b| b.0.total_cmp(&a.0));
        let mut xi: f64 = 0.0;
        for (idx, &(v, m)) in eigenvalues.iter().enumerate() {
            if idx == 0 && m == 1 {
                continue;
            }
            xi = xi.max(v.abs());
        }
        let theta_min = eigenvalues.last().map_or(0.0, |e| e.0);
        Spectrum { eigenvalues, zero_weight_radius: xi, theta_min }
    }

    pub fn order(&self) -> usize {
        self.eigenvalues.iter().map(|e| e.1).sum()
    }

    /// Second largest distinct eigenvalue (the largest if only one).
    pub fn second_largest(&self) -> f64 {
        match self.eigenvalues.as_slice() {
            [(v, m), ..] if *m > 1 => *v,
            [_, (v, _), ..] => *v,
            [(v, _)] => *v,
            [] => 0.0,
        }
    }
}

/// Spectrum of an array from its symmetrized intersection matrix, with
/// multiplicities `n / sum_i k_i u_i(eta)^2`.
pub fn tridiagonal_spectrum(array: &IntersectionArray) -> Result<Spectrum> {
    array.require_valid()?;
    let d = array.diameter();
    let ks = array.sphere_sizes().expect("valid arrays have integral sphere sizes");
    let n: u64 = ks.iter().sum();
    let diag: Vec<f64> = (0..=d).map(|i| array.a(i) as f64).collect();
    let off: Vec<f64> = (0..d).map(|i| ((array.b(i) * array.c(i + 1)) as f64).sqrt()).collect();
    let values = tridiagonal_eigenvalues(&diag, &off)?;
    let k = array.k() as f64;
    let mut out = Vec::with_capacity(d + 1);
    for &eta in &values {
        let mut u = vec![1.0, if d > 0 { eta / k } else { 0.0 }];
        for i in 1..d {
            let next = ((eta - diag[i]) * u[i] - array.c(i) as f64 * u[i - 1]) / array.b(i) as f64;
            u.push(next);
        }
        let norm: f64 = (0..=d).map(|i| ks[i] as f64 * u[i] * u[i]).sum();
        let m = n as f64 / norm;
        let rounded = m.round();
        if (m - rounded).abs() > 1e-6 * n as f64 || rounded < 1.0 {
            return Err(Error::InvalidArray(format!(
                "{array}: eigenvalue {eta:.6} has non-integral multiplicity {m:.6}"
            )));
        }
        out.push((eta, rounded as usize));
    }
    let total: usize = out.iter().map(|e| e.1).sum();
    if total as u64 != n {
        return Err(Error::InvalidArray(format!("{array}: multiplicities sum to {total}, not n = {n}")));
    }
    Ok(Spectrum::from_grouped(out))
}

/// Dense adjacency spectrum of a graph, eigenvalues merged within `1e-8`
/// relative tolerance.
pub fn graph_spectrum(graph: &Graph) -> Spectrum {
    let values = symmetric_eigenvalues(graph.n(), &graph.adjacency_f64());
    Spectrum::from_grouped(group_eigenvalues(&values, 1e-8))
}

/// The array `{k, k-1, k-mu; 1, mu, k}` of a bipartite diameter-3 graph and
/// its spectrum `{k, sqrt(k-mu), -sqrt(k-mu), -k}`, middle multiplicities
/// `n/2 - 1`.
pub fn bipartite_diam3(k: u64, mu: u64) -> Result<(IntersectionArray, Spectrum)> {
    if mu == 0 || mu >= k {
        return Err(Error::InvalidParameters(format!("need 1 <= mu < k, got k = {k}, mu = {mu}")));
    }
    let array = IntersectionArray::new(vec![k, k - 1, k - mu], vec![1, mu, k])?;
    array.require_valid()?;
    let n = array.n().ok_or_else(|| Error::InvalidArray(format!("{array}: non-integral sphere sizes")))? as usize;
    let r = ((k - mu) as f64).sqrt();
    let spec = Spectrum::from_grouped(vec![(k as f64, 1), (r, n / 2 - 1), (-r, n / 2 - 1), (-(k as f64), 1)]);
    Ok((array, spec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drg::parse_array;

    fn values(s: &Spectrum) -> Vec<(i64, usize)> {
        s.eigenvalues.iter().map(|&(v, m)| ((v * 1000.0).round() as i64, m)).collect()
    }

    #[test]
    fn johnson_and_petersen() {
        let j = tridiagonal_spectrum(&parse_array("{12,6,2;1,4,9}").unwrap()).unwrap();
        assert_eq!(values(&j), vec![(12000, 1), (5000, 6), (0, 14), (-3000, 14)]);
        let p = tridiagonal_spectrum(&parse_array("{3,2;1,1}").unwrap()).unwrap();
        assert_eq!(values(&p), vec![(3000, 1), (1000, 5), (-2000, 4)]);
        assert!((p.zero_weight_radius - 2.0).abs() < 1e-12);
        assert!((p.theta_min + 2.0).abs() < 1e-12);
    }

    #[test]
    fn cube_fact() {
        let (a, s) = bipartite_diam3(3, 2).unwrap();
        assert_eq!(a.to_string(), "{3,2,1;1,2,3}");
        let t = tridiagonal_spectrum(&a).unwrap();
        assert_eq!(values(&t), values(&s));
        assert_eq!(values(&s), vec![(3000, 1), (1000, 3), (-1000, 3), (-3000, 1)]);
        assert!(bipartite_diam3(3, 3).is_err());
    }
}
