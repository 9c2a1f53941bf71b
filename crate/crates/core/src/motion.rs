//! Motion lower-bound certificates.
//!
//! Every rule bounds the minimal support of a non-identity automorphism.
//! Rules that bound fixed points (the spectral ones) round the fixed-point
//! count down; rules that count distinguishing vertices round up.

use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog::{exceptional_motion, recognize, Confirmation};
use crate::coherence::{structure_constants, StructureConstants};
use crate::config::{Color, Configuration};
use crate::distinguish::distinguishing_numbers;
use crate::drg::{extract_intersection_array, graph_spectrum, is_primitive, IntersectionArray};
use crate::error::{Error, Result};
use crate::geometry::sun_wilmes_bound;
use crate::graph::Graph;
use crate::outcome::{require_le, Applicable, NotApplicable};
use crate::wl::wl_stabilize;

/// Added to floating-point spectral radii before rounding fixed-point
/// counts, relative to the degree.
const SPECTRAL_MARGIN: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    Distinguishing,
    ColorPropagation,
    Spectral,
    BipartiteSpectral,
    PrimitiveDrg,
    BoundedDegree,
    SunWilmes,
    ExceptionalFamily,
}

impl std::fmt::Display for Rule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let v = serde_json::to_value(self).expect("unit variant");
        f.write_str(v.as_str().expect("string tag"))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MotionCertificate {
    pub n: usize,
    pub bound: u64,
    pub rule: Rule,
    pub inputs: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_motion: Option<u64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub all_rules: Vec<RuleResult>,
}

impl MotionCertificate {
    /// The bound is capped at `n`.
    pub fn new(n: usize, bound: u64, rule: Rule, inputs: Value) -> Self {
        MotionCertificate {
            n,
            bound: bound.min(n as u64),
            rule,
            inputs,
            family: None,
            exact_motion: None,
            all_rules: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RuleResult {
    pub rule: Rule,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub colors: Option<Vec<Color>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<u64>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub inputs: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub not_applicable: Option<NotApplicable>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl RuleResult {
    fn from(rule: Rule, colors: Option<Vec<Color>>, r: Result<Applicable<MotionCertificate>>) -> Self {
        let mut out =
            RuleResult { rule, colors, bound: None, inputs: Value::Null, not_applicable: None, error: None };
        match r {
            Ok(Ok(c)) => {
                out.bound = Some(c.bound);
                out.inputs = c.inputs;
            }
            Ok(Err(na)) => out.not_applicable = Some(na),
            Err(e) => out.error = Some(e.to_string()),
        }
        out
    }
}

/// Any non-identity automorphism moving `u` to `v` moves every vertex that
/// distinguishes them, so motion is at least `D_min`.
pub fn distinguishing_bound(cfg: &Configuration) -> Result<MotionCertificate> {
    let d = distinguishing_numbers(cfg)?;
    Ok(MotionCertificate::new(
        cfg.n(),
        d.d_min as u64,
        Rule::Distinguishing,
        json!({ "d_min": d.d_min, "per_color": d.per_color }),
    ))
}

fn primitive(sc: &StructureConstants) -> bool {
    sc.is_homogeneous()
        && (0..sc.rank() as Color)
            .filter(|&i| !sc.is_diagonal(i))
            .all(|i| sc.color_distances(i).iter().all(Option::is_some))
}

/// Lower bound on `D_min` from a single color: `D(j) <= dist_i(j) D(i)` for
/// every connected color `i`, so `D(i) >= D(j) / max_i dist_i(j)`.
pub fn color_propagation_bound(cfg: &Configuration) -> Result<Applicable<MotionCertificate>> {
    let Ok(sc) = structure_constants(cfg) else {
        return Ok(Err(NotApplicable::because("configuration is coherent")));
    };
    if !primitive(&sc) {
        return Ok(Err(NotApplicable::because("configuration is homogeneous and primitive")));
    }
    let d = distinguishing_numbers(cfg)?;
    let colors: Vec<Color> = (0..sc.rank() as Color).filter(|&i| !sc.is_diagonal(i)).collect();
    let dist: Vec<Vec<Option<usize>>> = colors.iter().map(|&i| sc.color_distances(i)).collect();
    let (mut best, mut arg) = (0u64, None);
    for &j in &colors {
        let dj = d.per_color[j as usize].expect("non-diagonal color") as u64;
        let steps = dist.iter().map(|row| row[j as usize].expect("primitive")).max().unwrap_or(1) as u64;
        let b = dj.div_ceil(steps.max(1));
        if b > best || arg.is_none() {
            best = b;
            arg = Some((j, dj, steps));
        }
    }
    let (j, dj, steps) = arg.ok_or_else(|| Error::InvalidConfiguration("no non-diagonal color".into()))?;
    Ok(Ok(MotionCertificate::new(
        cfg.n(),
        best,
        Rule::ColorPropagation,
        json!({ "color": j, "d": dj, "max_color_distance": steps }),
    )))
}

/// `max(D_min, color propagation)`.
pub fn bound_from_distinguishing(cfg: &Configuration) -> Result<MotionCertificate> {
    let base = distinguishing_bound(cfg)?;
    match color_propagation_bound(cfg)? {
        Ok(c) if c.bound > base.bound => Ok(c),
        _ => Ok(base),
    }
}

/// `max(0, n - floor(n (q + xi) / k))`.
pub fn spectral_formula(n: usize, k: f64, q: f64, xi: f64) -> u64 {
    let fixed = (n as f64 * (q + xi) / k).floor();
    (n as f64 - fixed).max(0.0) as u64
}

/// `max(0, n - floor(n (k + |lambda2| + q) / (2k)))`.
pub fn bipartite_spectral_formula(n: usize, k: f64, lambda2: f64, q: f64) -> u64 {
    let fixed = (n as f64 * (k + lambda2.abs() + q) / (2.0 * k)).floor();
    (n as f64 - fixed).max(0.0) as u64
}

fn regular_connected(graph: &Graph) -> Result<usize> {
    graph.require_connected()?;
    graph.require_regular()?;
    let k = graph.regular_degree().unwrap_or(0);
    if k == 0 {
        return Err(Error::InvalidParameters("graph has no edges".into()));
    }
    Ok(k)
}

/// Fixed-point bound from the zero-weight spectral radius of a connected
/// regular graph.
pub fn spectral_bound(graph: &Graph) -> Result<MotionCertificate> {
    let k = regular_connected(graph)?;
    let q = graph.max_common_neighbors();
    let xi = graph_spectrum(graph).zero_weight_radius;
    let n = graph.n();
    let bound = spectral_formula(n, k as f64, q as f64, xi + SPECTRAL_MARGIN * k as f64);
    Ok(MotionCertificate::new(n, bound, Rule::Spectral, json!({ "k": k, "q": q, "xi": xi })))
}

/// Fixed-point bound for a connected regular bipartite graph with equal
/// parts, from its second largest eigenvalue.
pub fn bipartite_spectral_bound(graph: &Graph) -> Result<MotionCertificate> {
    let k = regular_connected(graph)?;
    let side = graph
        .bipartition()
        .ok_or_else(|| Error::NotBalancedBipartite("graph is not bipartite".into()))?;
    let left = side.iter().filter(|&&s| s == 0).count();
    if 2 * left != graph.n() {
        return Err(Error::NotBalancedBipartite(format!("parts of sizes {left} and {}", graph.n() - left)));
    }
    let q = graph.max_common_neighbors();
    let lambda2 = graph_spectrum(graph).second_largest();
    let n = graph.n();
    let margin = SPECTRAL_MARGIN * k as f64;
    let bound = bipartite_spectral_formula(n, k as f64, lambda2.abs() + margin, q as f64);
    Ok(MotionCertificate::new(
        n,
        bound,
        Rule::BipartiteSpectral,
        json!({ "k": k, "q": q, "lambda2": lambda2 }),
    ))
}

/// Distinguishing bound for a primitive distance-regular graph:
/// `ceil(2 min(alpha, beta) (n - 1) / d^2)` with `alpha = b_j / k` and
/// `beta = c_{j+1} / k` at the best `1 <= j <= d - 1`.
pub fn primitive_drg_bound(array: &IntersectionArray) -> Result<Applicable<MotionCertificate>> {
    let d = array.diameter();
    if d < 2 {
        return Ok(Err(NotApplicable::compare("diameter >= 2", d as f64, 2.0)));
    }
    if !is_primitive(array)? {
        return Ok(Err(NotApplicable::because("array is primitive")));
    }
    let n = array.n().ok_or_else(|| Error::InvalidArray("vertex count is not integral".into()))?;
    let k = array.k();
    let (j, m) = (1..d).map(|j| (j, array.b(j).min(array.c(j + 1)))).max_by_key(|&(j, m)| (m, std::cmp::Reverse(j))).expect("d >= 2");
    let num = 2 * m as u128 * (n as u128 - 1);
    let den = k as u128 * (d * d) as u128;
    let bound = num.div_ceil(den) as u64;
    Ok(Ok(MotionCertificate::new(
        n as usize,
        bound,
        Rule::PrimitiveDrg,
        json!({
            "array": array.to_string(),
            "j": j,
            "alpha": array.b(j) as f64 / k as f64,
            "beta": array.c(j + 1) as f64 / k as f64,
            "d": d,
        }),
    )))
}

/// `ceil(min(delta, 1 - delta) n / (6 (r - 1)))` for a primitive scheme of
/// rank `r >= 3` in which every degree is at most `delta n`. `delta` is
/// given as `num / den`.
pub fn bounded_degree_bound(sc: &StructureConstants, num: u64, den: u64) -> Result<Applicable<MotionCertificate>> {
    if den == 0 || num > den {
        return Err(Error::InvalidParameters(format!("delta = {num}/{den} must lie in [0, 1]")));
    }
    let r = sc.rank();
    if r < 3 {
        return Ok(Err(NotApplicable::compare("rank >= 3", r as f64, 3.0)));
    }
    if !primitive(sc) {
        return Ok(Err(NotApplicable::because("scheme is primitive")));
    }
    let n = sc.order();
    for i in (0..r as Color).filter(|&i| !sc.is_diagonal(i)) {
        let k = sc.degree(i);
        if let Err(na) = require_le(&format!("k_{i} <= delta n"), (k as u128 * den as u128) as f64, (num as u128 * n as u128) as f64) {
            return Ok(Err(NotApplicable { lhs: Some(k as f64), rhs: Some(num as f64 * n as f64 / den as f64), ..na }));
        }
    }
    let m = num.min(den - num) as u128;
    let bound = (m * n as u128).div_ceil(den as u128 * 6 * (r as u128 - 1)) as u64;
    Ok(Ok(MotionCertificate::new(
        n as usize,
        bound,
        Rule::BoundedDegree,
        json!({ "delta": num as f64 / den as f64, "rank": r }),
    )))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrderThickness {
    pub ln_order: f64,
    pub log10_order: f64,
    /// `None` when the formula is unbounded.
    pub thickness: Option<f64>,
}

/// Upper bounds on `ln |Aut|` and on thickness from `n` and `D_min`.
pub fn order_and_thickness_bounds(n: usize, d_min: usize, alpha: f64) -> Result<OrderThickness> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidParameters(format!("alpha = {alpha} must lie in (0, 1)")));
    }
    if d_min == 0 {
        return Err(Error::InvalidParameters("D_min must be at least 1".into()));
    }
    let nf = n as f64;
    let exponent = 1.0 + 2.0 * nf * nf.ln() / d_min as f64;
    let t = 3.0 * (1.0 - alpha).powf(-1.0 / 3.0) / (1.0 / (1.0 - alpha)).ln() * nf.ln();
    Ok(OrderThickness {
        ln_order: exponent * nf.ln(),
        log10_order: exponent * nf.log10(),
        thickness: t.is_finite().then_some(t),
    })
}

/// Pairing-closed sets of non-diagonal colors to try as a triangular
/// constituent: all unions of pairing orbits when there are at most five
/// orbits, single orbits otherwise.
fn pairing_closed_sets(cfg: &Configuration) -> Vec<Vec<Color>> {
    let mut orbits: Vec<Vec<Color>> = Vec::new();
    for c in 0..cfg.rank() as Color {
        if cfg.is_diagonal_color(c) {
            continue;
        }
        let p = cfg.paired(c);
        if p >= c {
            orbits.push(if p == c { vec![c] } else { vec![c, p] });
        }
    }
    if orbits.len() > 5 {
        return orbits;
    }
    let mut out = Vec::new();
    for mask in 1u32..(1 << orbits.len()) {
        if mask == (1 << orbits.len()) - 1 {
            // the complete graph is never triangular
            continue;
        }
        let mut s: Vec<Color> = (0..orbits.len()).filter(|&i| mask >> i & 1 == 1).flat_map(|i| orbits[i].clone()).collect();
        s.sort_unstable();
        out.push(s);
    }
    out
}

/// Runs every rule on the coherent closure of `cfg` and returns the best
/// bound, with all rule outcomes attached. Ties go to the earlier rule.
pub fn certify(cfg: &Configuration) -> Result<MotionCertificate> {
    let n = cfg.n();
    let stable = wl_stabilize(cfg)?;
    let sc = structure_constants(&stable).map_err(|v| Error::Inconsistent(format!("closure is {v}")))?;
    let mut results: Vec<(RuleResult, Option<MotionCertificate>)> = Vec::new();
    let mut push = |rule, colors, r: Result<Applicable<MotionCertificate>>| {
        let keep = r.as_ref().ok().and_then(|a| a.as_ref().ok()).cloned();
        results.push((RuleResult::from(rule, colors, r), keep));
    };

    push(Rule::Distinguishing, None, distinguishing_bound(&stable).map(Ok));
    push(Rule::ColorPropagation, None, color_propagation_bound(&stable));

    let homogeneous = stable.is_homogeneous();
    let symmetric: Vec<Color> = (0..stable.rank() as Color)
        .filter(|&c| !stable.is_diagonal_color(c) && stable.paired(c) == c)
        .collect();
    let graphs: Vec<(Color, Graph)> = symmetric.iter().map(|&c| (c, stable.constituent_graph(&[c]))).collect();
    let usable = |g: &Graph| homogeneous && g.is_connected() && g.regular_degree().is_some_and(|k| k > 0);
    for (c, g) in &graphs {
        if usable(g) {
            push(Rule::Spectral, Some(vec![*c]), spectral_bound(g).map(Ok));
        }
    }
    for (c, g) in &graphs {
        if usable(g) && g.bipartition().is_some() {
            push(Rule::BipartiteSpectral, Some(vec![*c]), bipartite_spectral_bound(g).map(Ok));
        }
    }
    for (c, g) in &graphs {
        if !usable(g) {
            continue;
        }
        if let Ok(Ok(array)) = extract_intersection_array(g) {
            push(Rule::PrimitiveDrg, Some(vec![*c]), primitive_drg_bound(&array));
        }
    }
    if homogeneous && n > 0 {
        let kmax = (0..sc.rank() as Color).filter(|&i| !sc.is_diagonal(i)).map(|i| sc.degree(i)).max().unwrap_or(0);
        push(Rule::BoundedDegree, None, bounded_degree_bound(&sc, kmax, n as u64));
        for set in pairing_closed_sets(&stable) {
            let r = sun_wilmes_bound(&stable, &set);
            // only report sets whose union is triangular
            if matches!(r, Ok(Err(ref na)) if na.condition.contains("triangular")) {
                continue;
            }
            push(Rule::SunWilmes, Some(set), r);
        }
    }

    let mut family = None;
    let mut exact = None;
    if let Some(rec) = recognize(&stable)? {
        family = Some(rec.tag.clone());
        let m = exceptional_motion(rec.family)?;
        if rec.confirmation == Confirmation::Isomorphism {
            exact = Some(m);
            push(
                Rule::ExceptionalFamily,
                Some(vec![rec.color]),
                Ok(Ok(MotionCertificate::new(n, m, Rule::ExceptionalFamily, json!({ "family": rec.tag })))),
            );
        } else {
            push(
                Rule::ExceptionalFamily,
                Some(vec![rec.color]),
                Ok(Err(NotApplicable::because("family confirmed by isomorphism"))),
            );
        }
    }

    let mut best: Option<MotionCertificate> = None;
    for (_, c) in &results {
        if let Some(c) = c {
            if best.as_ref().is_none_or(|b| c.bound > b.bound) {
                best = Some(c.clone());
            }
        }
    }
    let mut best = best.expect("the distinguishing rule always applies");
    best.n = n;
    best.family = family;
    best.exact_motion = exact;
    best.all_rules = results.into_iter().map(|(r, _)| r).collect();
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formulas() {
        assert_eq!(spectral_formula(10, 6.0, 4.0, 2.0), 0);
        assert_eq!(spectral_formula(56, 10.0, 2.0, 4.0), 23);
        assert_eq!(spectral_formula(20, 3.0, 2.0, 5.0), 0);
        assert_eq!(bipartite_spectral_formula(8, 3.0, 1.0, 2.0), 0);
        let o = order_and_thickness_bounds(10, 6, 0.5).unwrap();
        assert!((o.log10_order - 8.675).abs() < 0.01);
        assert!(order_and_thickness_bounds(10, 6, 1.0).is_err());
        assert!(order_and_thickness_bounds(10, 6, 1.0 - 1e-17).is_err());
    }

    #[test]
    fn rule_names() {
        assert_eq!(Rule::PrimitiveDrg.to_string(), "primitive-drg");
        assert_eq!(Rule::SunWilmes.to_string(), "sun-wilmes");
    }
}
