//! Rank-4 association schemes: the eigenvalue cubic of a constituent,
//! approximate spectral radii, the diameter-2 distinguishing bound and the
//! parameter inequalities that hold once one constituent dominates.

use serde::Serialize;

use crate::coherence::{structure_constants, StructureConstants};
use crate::config::{Color, Configuration};
use crate::error::{Error, Result};
use crate::geometry::{seidel_recognize, srg_parameters, SeidelRecognition};
use crate::linalg::symmetric_eigenvalues;
use crate::outcome::{require_le, Applicable, NotApplicable};

/// A symmetric rank-4 scheme with colors relabeled: the diagonal is 0 and
/// the others follow by degree (ties keep the original order).
#[derive(Debug, Clone)]
pub struct Rank4Scheme {
    sc: StructureConstants,
    /// `relabeling[new] = old`.
    relabeling: [Color; 4],
}

impl Rank4Scheme {
    pub fn from_config(cfg: &Configuration) -> Result<Self> {
        let sc = structure_constants(cfg).map_err(|v| Error::InvalidConfiguration(v.to_string()))?;
        Self::from_constants(sc)
    }

    pub fn from_constants(sc: StructureConstants) -> Result<Self> {
        if sc.rank() != 4 {
            return Err(Error::InvalidParameters(format!("rank {} is not 4", sc.rank())));
        }
        if !sc.is_homogeneous() {
            return Err(Error::InvalidConfiguration("not homogeneous".into()));
        }
        if !sc.is_symmetric() {
            return Err(Error::InvalidConfiguration("oriented colors present; see oriented_route".into()));
        }
        let diag = sc.diagonal_colors()[0];
        let mut rest: Vec<Color> = (0..4).filter(|&c| c != diag).collect();
        rest.sort_by_key(|&c| sc.degree(c));
        Ok(Rank4Scheme { relabeling: [diag, rest[0], rest[1], rest[2]], sc })
    }

    pub fn relabeling(&self) -> [Color; 4] {
        self.relabeling
    }

    pub fn constants(&self) -> &StructureConstants {
        &self.sc
    }

    /// `p_{i,j}^t` in the relabeled colors.
    pub fn p(&self, i: Color, j: Color, t: Color) -> i128 {
        let r = &self.relabeling;
        self.sc.p(r[i as usize], r[j as usize], r[t as usize]) as i128
    }

    pub fn k(&self, i: Color) -> i128 {
        self.sc.degree(self.relabeling[i as usize]) as i128
    }

    pub fn n(&self) -> i128 {
        self.sc.order() as i128
    }

    /// The same scheme with the original color `color` playing the role of
    /// color 1; the other two keep their degree order.
    fn focused(&self, color: Color) -> Result<Rank4Scheme> {
        let pos = self.relabeling.iter().position(|&c| c == color);
        match pos {
            Some(p) if p > 0 => {
                let mut r = self.relabeling;
                r[1..=p].rotate_right(1);
                Ok(Rank4Scheme { sc: self.sc.clone(), relabeling: r })
            }
            _ => Err(Error::InvalidParameters(format!("{color} is not a non-diagonal color"))),
        }
    }

    /// Scheme diameter: the largest number of steps in one color needed to
    /// reach another color, or `None` if the scheme is imprimitive.
    pub fn diameter(&self) -> Option<usize> {
        let mut d = 0;
        for i in 1..4 {
            for x in self.sc.color_distances(self.relabeling[i]) {
                d = d.max(x?);
            }
        }
        Some(d)
    }
}

/// Monic cubic `[1, a1, a2, a3]` whose roots include every nontrivial
/// eigenvalue of the constituent of (original) color `color`.
pub fn constituent_cubic(scheme: &Rank4Scheme, color: Color) -> Result<[i128; 4]> {
    let s = scheme.focused(color)?;
    let p = |i, j, t| s.p(i, j, t);
    let k1 = s.k(1);
    let a1 = -(p(1, 1, 1) + p(1, 2, 2) - p(1, 1, 3) - p(1, 2, 3));
    let a2 = (p(1, 2, 2) - p(1, 2, 3)) * (p(1, 1, 1) - p(1, 1, 3))
        - (p(1, 1, 2) - p(1, 1, 3)) * (p(1, 2, 1) - p(1, 2, 3))
        - (k1 - p(1, 1, 3));
    let a3 = (p(1, 2, 2) - p(1, 2, 3)) * (k1 - p(1, 1, 3)) + (p(1, 1, 2) - p(1, 1, 3)) * p(1, 2, 3);
    Ok([1, a1, a2, a3])
}

pub fn eval_cubic(c: &[i128; 4], x: f64) -> f64 {
    ((c[0] as f64 * x + c[1] as f64) * x + c[2] as f64) * x + c[3] as f64
}

/// Largest `|cubic(eta)|` over the nontrivial eigenvalues of the
/// constituent of `color`, computed from the adjacency matrix.
pub fn cubic_residual(cfg: &Configuration, color: Color) -> Result<f64> {
    let scheme = Rank4Scheme::from_config(cfg)?;
    let cubic = constituent_cubic(&scheme, color)?;
    let n = cfg.n();
    let mat: Vec<f64> = cfg.colors().iter().map(|&c| if c == color { 1.0 } else { 0.0 }).collect();
    let mut eig = symmetric_eigenvalues(n, &mat);
    // the all-ones vector carries the top eigenvalue k
    eig.remove(0);
    Ok(eig.into_iter().map(|e| eval_cubic(&cubic, e).abs()).fold(0.0, f64::max))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralRadiusBound {
    pub core: f64,
    pub slack: f64,
    /// `core + slack`, clamped to `[0, k]`.
    pub bound: f64,
    pub k: f64,
}

fn finish(core: f64, epsilon: f64, k: f64) -> SpectralRadiusBound {
    let slack = 25.0 * epsilon.cbrt() * k;
    SpectralRadiusBound { core, slack, bound: (core + slack).clamp(0.0, k), k }
}

/// Main term of the single-constituent estimate.
pub fn constituent_core(p111: f64, p122: f64, p112: f64, p121: f64) -> f64 {
    (p111 + p122 + ((p111 - p122).powi(2) + 4.0 * p112 * p121).sqrt()) / 2.0
}

/// Main term of the merged-constituent estimate.
pub fn merged_core(p111: f64, p122: f64, p222: f64, p221: f64) -> f64 {
    (p111 + p122 + p222 + ((p222 + p122 - p111).powi(2) + 4.0 * p122 * p221).sqrt()) / 2.0
}

fn check_epsilon(epsilon: f64) -> Result<()> {
    if epsilon > 0.0 && epsilon.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameters(format!("epsilon = {epsilon} must be positive")))
    }
}

/// Upper estimate of the zero-weight spectral radius of the smallest
/// constituent, valid when `p_{1,1}^3` and `p_{1,2}^3` are small.
pub fn constituent_spectral_bound(s: &Rank4Scheme, epsilon: f64) -> Result<Applicable<SpectralRadiusBound>> {
    check_epsilon(epsilon)?;
    let p = |i, j, t| s.p(i, j, t) as f64;
    let k1 = s.k(1) as f64;
    let checks = [
        ("1/epsilon <= k1", 1.0 / epsilon, k1),
        ("p_(1,1)^3 <= epsilon k1", p(1, 1, 3), epsilon * k1),
        ("p_(1,2)^3 <= epsilon k1", p(1, 2, 3), epsilon * k1),
    ];
    for (name, lhs, rhs) in checks {
        if let Err(na) = require_le(name, lhs, rhs) {
            return Ok(Err(na));
        }
    }
    Ok(Ok(finish(constituent_core(p(1, 1, 1), p(1, 2, 2), p(1, 1, 2), p(1, 2, 1)), epsilon, k1)))
}

/// Upper estimate of the zero-weight spectral radius of the union of the
/// two smaller constituents.
pub fn merged_spectral_bound(s: &Rank4Scheme, epsilon: f64) -> Result<Applicable<SpectralRadiusBound>> {
    check_epsilon(epsilon)?;
    let p = |i, j, t| s.p(i, j, t) as f64;
    let (k1, k2) = (s.k(1) as f64, s.k(2) as f64);
    let m = k1.min(k2);
    let checks = [
        ("1/epsilon <= k1", 1.0 / epsilon, k1),
        ("p_(1,1)^2 <= epsilon k1", p(1, 1, 2), epsilon * k1),
        ("p_(1,2)^3 <= epsilon min(k1, k2)", p(1, 2, 3), epsilon * m),
        ("p_(2,1)^3 <= epsilon min(k1, k2)", p(2, 1, 3), epsilon * m),
    ];
    for (name, lhs, rhs) in checks {
        if let Err(na) = require_le(name, lhs, rhs) {
            return Ok(Err(na));
        }
    }
    Ok(Ok(finish(merged_core(p(1, 1, 1), p(1, 2, 2), p(2, 2, 2), p(2, 2, 1)), epsilon, k1 + k2)))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Diam2Bound {
    pub bound: u64,
    pub gamma: f64,
    pub k2: u64,
    pub k3: u64,
}

/// Every pair of distinct vertices is distinguished by at least
/// `ceil(gamma (n-1) / 6)` vertices, `gamma = min(1, k2/k3)`.
pub fn diam2_distinguishing_bound(s: &Rank4Scheme) -> Applicable<Diam2Bound> {
    let d = s.diameter();
    if d != Some(2) {
        return Err(NotApplicable::compare("scheme diameter = 2", d.map_or(f64::INFINITY, |d| d as f64), 2.0));
    }
    let (k2, k3, n) = (s.k(2), s.k(3), s.n());
    let bound = if k2 >= k3 { (n - 1 + 5) / 6 } else { (k2 * (n - 1) + 6 * k3 - 1) / (6 * k3) };
    Ok(Diam2Bound { bound: bound as u64, gamma: (k2 as f64 / k3 as f64).min(1.0), k2: k2 as u64, k3: k3 as u64 })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Inequality {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

impl Inequality {
    fn le(name: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        Inequality { name: name.into(), lhs, rhs, holds: lhs <= rhs + 1e-9 }
    }

    fn ge(name: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        Inequality { name: name.into(), lhs, rhs, holds: lhs + 1e-9 >= rhs }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParamReport {
    pub epsilon: f64,
    pub relabeling: [Color; 4],
    /// `max(k1, k2) <= (epsilon/2) k3`; the remaining inequalities are only
    /// asserted when it holds.
    pub precondition: Inequality,
    pub inequalities: Vec<Inequality>,
    /// Triangle-inequality failures `p_{i,j}^s + p_{j,l}^r <= k_j + p_{i,l}^t`
    /// over all triangles `(s, r, t)`, checked regardless of epsilon.
    pub triangle_violations: Vec<Inequality>,
    /// False when an asserted inequality or a triangle inequality fails,
    /// which no real scheme can do.
    pub consistent: bool,
}

/// Parameter inequalities for a rank-4 scheme of diameter 2.
pub fn param_inequalities(s: &Rank4Scheme, epsilon: f64) -> Result<Applicable<ParamReport>> {
    check_epsilon(epsilon)?;
    let d = s.diameter();
    if d != Some(2) {
        return Ok(Err(NotApplicable::compare(
            "scheme diameter = 2",
            d.map_or(f64::INFINITY, |d| d as f64),
            2.0,
        )));
    }
    let p = |i, j, t| s.p(i, j, t) as f64;
    let k = |i| s.k(i) as f64;
    let e = epsilon;
    let precondition = Inequality::le("max(k1, k2) <= (epsilon/2) k3", k(1).max(k(2)), e / 2.0 * k(3));
    let mut ineq = Vec::new();
    if precondition.holds {
        ineq.push(Inequality::le("p_(1,2)^3 <= epsilon k1", p(1, 2, 3), e * k(1)));
        ineq.push(Inequality::le("p_(1,1)^3 <= epsilon k1", p(1, 1, 3), e * k(1)));
        ineq.push(Inequality::le("p_(2,2)^3 <= epsilon k2", p(2, 2, 3), e * k(2)));
        ineq.push(Inequality::ge("p_(3,3)^1 >= (1 - epsilon) k3", p(3, 3, 1), (1.0 - e) * k(3)));
        ineq.push(Inequality::ge("p_(3,3)^2 >= (1 - 2 epsilon) k3", p(3, 3, 2), (1.0 - 2.0 * e) * k(3)));
        for sc in 1..4 {
            for t in 1..4 {
                if s.p(sc, 3, t) == 0 {
                    continue;
                }
                for i in 1..3 {
                    for j in 1..3 {
                        ineq.push(Inequality::le(
                            format!("triangle ({sc},3,{t}): p_({i},{j})^{sc} <= p_({i},3)^{t} + epsilon k{j}"),
                            p(i, j, sc),
                            p(i, 3, t) + e * k(j),
                        ));
                    }
                }
            }
        }
        for sc in 1..3 {
            for i in 1..3 {
                for j in 1..3 {
                    ineq.push(Inequality::le(
                        format!("p_({i},{j})^{sc} <= p_({i},3)^{sc} + epsilon k{j}"),
                        p(i, j, sc),
                        p(i, 3, sc) + e * k(j),
                    ));
                    ineq.push(Inequality::le(
                        format!("2 p_({i},{j})^{sc} <= k{j} + epsilon k{i}"),
                        2.0 * p(i, j, sc),
                        k(j) + e * k(i),
                    ));
                }
            }
        }
        if k(1) <= k(2) {
            ineq.push(Inequality::le("2 p_(1,2)^2 <= (1 + epsilon) k1", 2.0 * p(1, 2, 2), (1.0 + e) * k(1)));
        }
    }
    let triangle_violations = triangle_check(s);
    let consistent = triangle_violations.is_empty() && ineq.iter().all(|q| q.holds);
    Ok(Ok(ParamReport {
        epsilon,
        relabeling: s.relabeling,
        precondition,
        inequalities: ineq,
        triangle_violations,
        consistent,
    }))
}

fn triangle_check(s: &Rank4Scheme) -> Vec<Inequality> {
    let mut out = Vec::new();
    for sc in 0..4 {
        for r in 0..4 {
            for t in 0..4 {
                if s.p(sc, r, t) == 0 {
                    continue;
                }
                for i in 0..4 {
                    for j in 0..4 {
                        for l in 0..4 {
                            let lhs = s.p(i, j, sc) + s.p(j, l, r);
                            let rhs = s.k(j) + s.p(i, l, t);
                            if lhs > rhs {
                                out.push(Inequality::le(
                                    format!("triangle ({sc},{r},{t}): p_({i},{j})^{sc} + p_({j},{l})^{r} <= k{j} + p_({i},{l})^{t}"),
                                    lhs as f64,
                                    rhs as f64,
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Rank-4 configurations with a pair of oriented colors: the undirected
/// constituent must be strongly regular, and is handed to the recognizer
/// for smallest eigenvalue -2.
pub fn oriented_route(cfg: &Configuration) -> Result<Applicable<SeidelRecognition>> {
    if cfg.rank() != 4 || !cfg.is_homogeneous() {
        return Err(Error::InvalidParameters("homogeneous rank-4 configuration required".into()));
    }
    let symmetric: Vec<Color> =
        (0..4).filter(|&c| !cfg.is_diagonal_color(c) && cfg.paired(c) == c).collect();
    let [u] = symmetric.as_slice() else {
        return Ok(Err(NotApplicable::compare(
            "exactly one undirected non-diagonal color",
            symmetric.len() as f64,
            1.0,
        )));
    };
    let g = cfg.constituent_graph(&[*u]);
    if !g.is_connected() || srg_parameters(&g).is_none() {
        return Ok(Err(NotApplicable::because("undirected constituent is connected and strongly regular")));
    }
    seidel_recognize(&g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn core_terms() {
        assert_eq!(constituent_core(5.0, 3.0, 2.0, 4.0), 7.0);
        assert_eq!(merged_core(3.0, 3.0, 3.0, 0.0), 6.0);
        let b = finish(7.0, 1e-3, 1e4);
        assert!((b.slack - 25000.0).abs() < 1e-6);
    }

    #[test]
    fn bad_epsilon() {
        let cfg = crate::catalog::generate(crate::catalog::Family::Cyclotomic { p: 13, e: 3 }).unwrap().config;
        let s = Rank4Scheme::from_config(&cfg).unwrap();
        assert!(constituent_spectral_bound(&s, 0.0).is_err());
        assert!(param_inequalities(&s, -1.0).is_err());
    }
}
