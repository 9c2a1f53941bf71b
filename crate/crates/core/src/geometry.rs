//! Clique geometries: Metsch lines, geometry checks, Delsarte cliques,
//! line-graph reconstruction, recognition of strongly regular graphs with
//! smallest eigenvalue -2, and the triangular-constituent motion bound.

use std::collections::BTreeSet;
use std::time::Duration;

use serde::Serialize;
use serde_json::json;

use crate::catalog::{generate, Confirmation, Family};
use crate::config::{Color, Configuration};
use crate::drg::{extract_intersection_array, graph_spectrum, tridiagonal_spectrum, IntersectionArray};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::symmetric_eigenvalues;
use crate::motion::{MotionCertificate, Rule};
use crate::oracle::{isomorphism_within, IsoOutcome};
use crate::outcome::{require_le, Applicable, NotApplicable};

pub const PSD_TOLERANCE: f64 = 1e-9;
/// Seidel tags are confirmed by isomorphism up to this many vertices.
pub const SEIDEL_ORACLE_LIMIT: usize = 100;
const ORACLE_BUDGET: Duration = Duration::from_secs(5);

/// All maximal cliques with at least `min_size` vertices, each sorted, in
/// lexicographic order. Bron-Kerbosch with pivoting; branches that cannot
/// reach `min_size` are cut.
pub fn maximal_cliques(graph: &Graph, min_size: usize) -> Vec<Vec<usize>> {
    fn go(g: &Graph, r: &mut Vec<usize>, p: Vec<usize>, x: Vec<usize>, min: usize, out: &mut Vec<Vec<usize>>) {
        if r.len() + p.len() < min {
            return;
        }
        if p.is_empty() {
            if x.is_empty() {
                let mut c = r.clone();
                c.sort_unstable();
                out.push(c);
            }
            return;
        }
        let pivot = p
            .iter()
            .chain(&x)
            .copied()
            .max_by_key(|&u| (p.iter().filter(|&&v| g.adjacent(u, v)).count(), std::cmp::Reverse(u)))
            .expect("p is nonempty");
        let branch: Vec<usize> = p.iter().copied().filter(|&v| !g.adjacent(pivot, v)).collect();
        let (mut p, mut x) = (p, x);
        for v in branch {
            let np = p.iter().copied().filter(|&w| g.adjacent(v, w)).collect();
            let nx = x.iter().copied().filter(|&w| g.adjacent(v, w)).collect();
            r.push(v);
            go(g, r, np, nx, min, out);
            r.pop();
            p.retain(|&w| w != v);
            x.push(v);
        }
    }
    let mut order: Vec<usize> = (0..graph.n()).collect();
    order.sort_by_key(|&v| (graph.degree(v), v));
    let mut out = Vec::new();
    go(graph, &mut Vec::new(), order, Vec::new(), min_size.max(1), &mut out);
    out.sort();
    out
}

pub fn clique_number(graph: &Graph) -> usize {
    let mut best = 0;
    for c in maximal_cliques(graph, 1) {
        best = best.max(c.len());
    }
    best
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueGeometry {
    pub m: usize,
    pub lines: Vec<Vec<usize>>,
    /// Number of lines through each vertex.
    #[serde(skip)]
    pub incidence: Vec<usize>,
}

impl CliqueGeometry {
    pub fn to_json_value(&self) -> serde_json::Value {
        json!({ "m": self.m, "lines": self.lines })
    }
}

/// Checks that every edge lies on exactly one line and that each line is a
/// clique; returns the incidence counts.
fn cover_counts(graph: &Graph, lines: &[Vec<usize>]) -> Result<Vec<usize>> {
    let n = graph.n();
    let mut cover = vec![0u32; n * n];
    let mut incidence = vec![0usize; n];
    for line in lines {
        for (a, &u) in line.iter().enumerate() {
            if u >= n {
                return Err(Error::OutOfRange(format!("line vertex {u} with n = {n}")));
            }
            incidence[u] += 1;
            for &v in &line[a + 1..] {
                if !graph.adjacent(u, v) {
                    return Err(Error::InvalidParameters(format!("line contains non-adjacent pair ({u}, {v})")));
                }
                cover[u * n + v] += 1;
                cover[v * n + u] += 1;
            }
        }
    }
    for (u, v) in graph.edges() {
        let c = cover[u * n + v];
        if c != 1 {
            return Err(Error::InvalidParameters(format!("edge ({u}, {v}) is covered {c} times")));
        }
    }
    Ok(incidence)
}

/// Common-neighbor ranges: (min, max) over adjacent pairs and max over
/// non-adjacent distinct pairs.
pub fn common_neighbor_ranges(graph: &Graph) -> (usize, usize, usize) {
    let n = graph.n();
    let (mut lo, mut hi, mut mu) = (usize::MAX, 0, 0);
    for u in 0..n {
        for v in u + 1..n {
            let c = graph.common_neighbors(u, v);
            if graph.adjacent(u, v) {
                lo = lo.min(c);
                hi = hi.max(c);
            } else {
                mu = mu.max(c);
            }
        }
    }
    (if lo == usize::MAX { 0 } else { lo }, hi, mu)
}

/// Lines of a graph under the four-condition geometricity criterion with
/// parameters `lambda1 <= lambda(adjacent) <= lambda2`, `mu` and `m`.
pub fn metsch_lines(graph: &Graph, lambda1: u64, lambda2: u64, mu: u64, m: u64) -> Result<Applicable<CliqueGeometry>> {
    graph.require_connected()?;
    if mu < 1 {
        return Err(Error::InvalidParameters("mu must be at least 1".into()));
    }
    let (lo, hi, nonadj) = common_neighbor_ranges(graph);
    if graph.edge_count() > 0 && ((lo as u64) < lambda1 || (hi as u64) > lambda2) {
        return Err(Error::InvalidParameters(format!(
            "adjacent pairs have {lo}..={hi} common neighbors, outside [{lambda1}, {lambda2}]"
        )));
    }
    if nonadj as u64 > mu {
        return Err(Error::InvalidParameters(format!(
            "a non-adjacent pair has {nonadj} common neighbors, more than mu = {mu}"
        )));
    }
    let (l1, l2, mu, m) = (lambda1 as i64, lambda2 as i64, mu as i64, m as i64);
    let lhs3 = 2 * l1 - l2;
    let rhs3 = (2 * m - 1) * (mu - 1) - 1;
    if lhs3 <= rhs3 {
        return Ok(Err(NotApplicable::compare(
            "2 lambda1 - lambda2 > (2m - 1)(mu - 1) - 1",
            lhs3 as f64,
            rhs3 as f64,
        )));
    }
    // doubled to stay in integers
    let cap2 = 2 * (m + 1) * (l1 + 1) - m * (m + 1) * (mu - 1);
    let kmax = (0..graph.n()).map(|v| graph.degree(v)).max().unwrap_or(0) as i64;
    if 2 * kmax >= cap2 {
        return Ok(Err(NotApplicable::compare(
            "every degree < (m + 1)(lambda1 + 1) - m(m + 1)(mu - 1)/2",
            kmax as f64,
            cap2 as f64 / 2.0,
        )));
    }
    let threshold = (l1 + 2 - (m - 1) * (mu - 1)).max(2) as usize;
    let lines = maximal_cliques(graph, threshold);
    let incidence = cover_counts(graph, &lines)
        .map_err(|e| Error::Inconsistent(format!("criterion holds but lines fail: {e}")))?;
    let on = incidence.iter().copied().max().unwrap_or(0);
    if on as i64 > m {
        return Err(Error::Inconsistent(format!("a vertex lies on {on} lines, more than m = {m}")));
    }
    Ok(Ok(CliqueGeometry { m: on, lines, incidence }))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeometryReport {
    pub m: usize,
    /// Largest common-neighbor count over pairs at distance 2.
    pub mu: usize,
    pub mu_bound: usize,
    pub mu_bound_ok: bool,
    /// Diameter when the graph is distance-regular; the sharper bound
    /// `(m-1)^2` is used when it is at least 3.
    pub drg_diameter: Option<usize>,
    pub psd_min_eigenvalue: f64,
    pub psd_ok: bool,
}

/// Checks a family of lines: exact edge cover, `mu <= m^2` (or `(m-1)^2`
/// for distance-regular graphs of diameter at least 3), and positive
/// semidefiniteness of `N N^T + (m I - D)`.
pub fn verify_clique_geometry(graph: &Graph, lines: &[Vec<usize>]) -> Result<GeometryReport> {
    let incidence = cover_counts(graph, lines)?;
    let n = graph.n();
    let m = incidence.iter().copied().max().unwrap_or(0);
    let mut mu = 0;
    for u in 0..n {
        let d = graph.bfs(u);
        for v in u + 1..n {
            if d[v] == 2 {
                mu = mu.max(graph.common_neighbors(u, v));
            }
        }
    }
    let drg_diameter = match extract_intersection_array(graph) {
        Ok(Ok(a)) => Some(a.diameter()),
        _ => None,
    };
    let mu_bound = if drg_diameter.is_some_and(|d| d >= 3) { (m.max(1) - 1).pow(2) } else { m * m };
    let mut mat = vec![0.0; n * n];
    for line in lines {
        for &u in line {
            for &v in line {
                mat[u * n + v] += 1.0;
            }
        }
    }
    for v in 0..n {
        mat[v * n + v] += (m - incidence[v]) as f64;
    }
    let psd_min = symmetric_eigenvalues(n, &mat).into_iter().fold(f64::INFINITY, f64::min);
    let psd_min = if n == 0 { 0.0 } else { psd_min };
    Ok(GeometryReport {
        m,
        mu,
        mu_bound,
        mu_bound_ok: mu <= mu_bound,
        drg_diameter,
        psd_min_eigenvalue: psd_min,
        psd_ok: psd_min >= -PSD_TOLERANCE,
    })
}

/// `1 - k / theta_min`, the largest possible clique size.
pub fn delsarte_clique_bound(k: f64, theta_min: f64) -> Result<f64> {
    if !(theta_min < 0.0) {
        return Err(Error::InvalidParameters(format!("theta_min = {theta_min} must be negative")));
    }
    Ok(1.0 - k / theta_min)
}

pub fn is_delsarte_clique(size: usize, k: f64, theta_min: f64) -> bool {
    delsarte_clique_bound(k, theta_min).is_ok_and(|b| (size as f64 - b).abs() < 1e-9)
}

/// Krausz decomposition: cliques covering every edge once with every vertex
/// in at most two of them.
fn krausz(graph: &Graph) -> Option<Vec<Vec<usize>>> {
    struct St<'a> {
        g: &'a Graph,
        covered: Vec<bool>,
        owner: Vec<Vec<usize>>,
        cliques: Vec<Vec<usize>>,
    }
    impl St<'_> {
        fn edge(&self, u: usize, v: usize) -> usize {
            u * self.g.n() + v
        }
        fn open(&self, v: usize) -> Vec<usize> {
            self.g.neighbors(v).iter().copied().filter(|&w| !self.covered[self.edge(v, w)]).collect()
        }
        fn can_add(&self, c: &[usize]) -> bool {
            for (a, &u) in c.iter().enumerate() {
                if self.owner[u].len() >= 2 {
                    return false;
                }
                for &w in &c[a + 1..] {
                    if !self.g.adjacent(u, w) || self.covered[self.edge(u, w)] {
                        return false;
                    }
                }
            }
            true
        }
        fn set(&mut self, c: &[usize], on: bool) {
            for (a, &u) in c.iter().enumerate() {
                for &w in &c[a + 1..] {
                    let (e1, e2) = (self.edge(u, w), self.edge(w, u));
                    self.covered[e1] = on;
                    self.covered[e2] = on;
                }
            }
            if on {
                let id = self.cliques.len();
                for &u in c {
                    self.owner[u].push(id);
                }
                self.cliques.push(c.to_vec());
            } else {
                self.cliques.pop();
                for &u in c {
                    self.owner[u].pop();
                }
            }
        }
        fn solve(&mut self) -> bool {
            let Some(v) = (0..self.g.n()).find(|&v| !self.open(v).is_empty()) else {
                return true;
            };
            let open = self.open(v);
            let slots = 2usize.saturating_sub(self.owner[v].len());
            if slots == 0 {
                return false;
            }
            // open neighbors that are non-adjacent must go to different cliques
            let u0 = open[0];
            let rest = &open[1..];
            let mut splits: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
            let k = rest.len();
            if slots == 1 || k > 20 {
                splits.push((open.clone(), Vec::new()));
            }
            if slots == 2 && k <= 20 {
                for mask in 0u32..(1 << k) {
                    let mut a = vec![u0];
                    let mut b = Vec::new();
                    for (i, &w) in rest.iter().enumerate() {
                        if mask >> i & 1 == 1 {
                            b.push(w);
                        } else {
                            a.push(w);
                        }
                    }
                    let clique = |s: &[usize]| s.iter().enumerate().all(|(i, &x)| s[i + 1..].iter().all(|&y| self.g.adjacent(x, y)));
                    if clique(&a) && clique(&b) {
                        splits.push((a, b));
                    }
                }
            }
            for (a, b) in splits {
                let mut ca = a.clone();
                ca.push(v);
                ca.sort_unstable();
                if !self.can_add(&ca) {
                    continue;
                }
                self.set(&ca, true);
                let mut ok = true;
                let mut cb = Vec::new();
                if !b.is_empty() {
                    cb = b.clone();
                    cb.push(v);
                    cb.sort_unstable();
                    if self.can_add(&cb) {
                        self.set(&cb, true);
                    } else {
                        ok = false;
                    }
                }
                if ok && self.solve() {
                    return true;
                }
                if ok && !cb.is_empty() {
                    self.set(&cb, false);
                }
                self.set(&ca, false);
            }
            false
        }
    }
    let n = graph.n();
    let mut st = St { g: graph, covered: vec![false; n * n], owner: vec![Vec::new(); n], cliques: Vec::new() };
    st.solve().then_some(st.cliques)
}

/// A graph `Y` with `L(Y)` isomorphic to the input, or `None`. Vertex `x`
/// of the input becomes edge `x` of `Y`'s edge list (in input order), so
/// the correspondence is explicit. Isomorphism is re-checked with the
/// oracle when `n <= limit_n`.
pub fn line_graph_reconstruct(graph: &Graph, limit_n: usize) -> Result<Option<Graph>> {
    let n = graph.n();
    let Some(cliques) = krausz(graph) else { return Ok(None) };
    let mut owners = vec![Vec::new(); n];
    for (id, c) in cliques.iter().enumerate() {
        for &u in c {
            owners[u].push(id);
        }
    }
    let mut next = cliques.len();
    let mut edges = Vec::with_capacity(n);
    for o in &owners {
        let e = match o.as_slice() {
            [a, b] => (*a, *b),
            [a] => {
                next += 1;
                (*a, next - 1)
            }
            _ => {
                next += 2;
                (next - 2, next - 1)
            }
        };
        edges.push(e);
    }
    let y = Graph::from_edges(next, edges.iter().copied());
    if n <= limit_n {
        let lg = Graph::from_fn(n, |a, b| {
            let (p, q) = edges[a];
            let (r, s) = edges[b];
            p == r || p == s || q == r || q == s
        });
        if !matches!(
            isomorphism_within(&Configuration::adjacency(&lg), &Configuration::adjacency(graph), limit_n, None)?,
            IsoOutcome::Isomorphic(_)
        ) {
            return Err(Error::Inconsistent("reconstructed base graph does not reproduce the input".into()));
        }
    }
    Ok(Some(y))
}

/// Parameter constraints forced on a geometric diameter-3 graph with
/// smallest eigenvalue -3, `mu = 1` and `k > 24`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BangCheck {
    pub lambda: u64,
    pub b2: u64,
    pub c3: u64,
    /// `c3 / 3` when that is an integer.
    pub beta: Option<u64>,
    pub consistent: bool,
}

/// `lambda >= beta >= 2`, `b2 = 2 lambda - 2 beta + 4`, `c3 = 3 beta`.
pub fn bang_constraints(lambda: u64, b2: u64, c3: u64) -> BangCheck {
    let beta = c3.is_multiple_of(3).then_some(c3 / 3);
    let consistent = beta.is_some_and(|b| b >= 2 && lambda >= b && 2 * lambda + 4 == b2 + 2 * b);
    BangCheck { lambda, b2, c3, beta, consistent }
}

/// Evaluates [`bang_constraints`] on an intersection array after checking
/// the hypotheses readable from the array. Geometricity is not checked, so
/// an inconsistent result rules the graph out as geometric.
pub fn bang_check(array: &IntersectionArray) -> Result<Applicable<BangCheck>> {
    array.require_valid()?;
    if array.diameter() != 3 {
        return Ok(Err(NotApplicable::compare("diameter = 3", array.diameter() as f64, 3.0)));
    }
    if array.mu() != 1 {
        return Ok(Err(NotApplicable::compare("mu = 1", array.mu() as f64, 1.0)));
    }
    if array.k() <= 24 {
        return Ok(Err(NotApplicable::compare("k > 24", array.k() as f64, 24.0)));
    }
    let theta = tridiagonal_spectrum(array)?.theta_min;
    if (theta + 3.0).abs() > 1e-9 {
        return Ok(Err(NotApplicable::compare("smallest eigenvalue = -3", theta, -3.0)));
    }
    let lambda = u64::try_from(array.lambda()).map_err(|_| Error::InvalidArray("negative lambda".into()))?;
    Ok(Ok(bang_constraints(lambda, array.b(2), array.c(3))))
}

/// `(n, k, lambda, mu)` when the graph is strongly regular (and neither
/// complete nor edgeless).
pub fn srg_parameters(graph: &Graph) -> Option<(usize, usize, usize, usize)> {
    let k = graph.regular_degree()?;
    let n = graph.n();
    if k == 0 || k + 1 >= n {
        return None;
    }
    let (lo, hi, _) = common_neighbor_ranges(graph);
    if lo != hi {
        return None;
    }
    let mut mu = None;
    for u in 0..n {
        for v in u + 1..n {
            if !graph.adjacent(u, v) {
                let c = graph.common_neighbors(u, v);
                if *mu.get_or_insert(c) != c {
                    return None;
                }
            }
        }
    }
    Some((n, k, lo, mu?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "tag", rename_all = "kebab-case")]
pub enum SeidelTag {
    Triangular { s: usize },
    Lattice { s: usize },
    Grid { m1: usize, m2: usize },
    /// At most 28 vertices; the classification leaves these unnamed.
    Sporadic { n: usize },
    LineOfTriangleFree,
    /// None of the above; the classification says this cannot happen for
    /// strongly regular input.
    Unclassified,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeidelRecognition {
    pub tag: SeidelTag,
    pub srg: Option<(usize, usize, usize, usize)>,
    pub confirmation: Confirmation,
}

fn isqrt(n: usize) -> usize {
    let mut r = (n as f64).sqrt() as usize;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

fn confirm(graph: &Graph, family: Family) -> Result<Option<Confirmation>> {
    if graph.n() > SEIDEL_ORACLE_LIMIT {
        return Ok(Some(Confirmation::ParameterMatchOnly));
    }
    let model = generate(family)?.graph.expect("graph families");
    let a = Configuration::adjacency(graph);
    let b = Configuration::adjacency(&model);
    Ok(match isomorphism_within(&a, &b, SEIDEL_ORACLE_LIMIT, Some(ORACLE_BUDGET))? {
        IsoOutcome::Isomorphic(_) => Some(Confirmation::Isomorphism),
        IsoOutcome::TimedOut => Some(Confirmation::ParameterMatchOnly),
        IsoOutcome::NotIsomorphic => None,
    })
}

/// Recognition of connected regular graphs with smallest eigenvalue -2.
pub fn seidel_recognize(graph: &Graph) -> Result<Applicable<SeidelRecognition>> {
    graph.require_connected()?;
    graph.require_regular()?;
    let theta = graph_spectrum(graph).theta_min;
    if (theta + 2.0).abs() > 1e-9 {
        return Ok(Err(NotApplicable::compare("smallest eigenvalue = -2", theta, -2.0)));
    }
    let n = graph.n();
    let srg = srg_parameters(graph);
    if let Some((_, k, lambda, mu)) = srg {
        let s = isqrt(1 + 8 * n).div_ceil(2);
        if s >= 5 && s * (s - 1) / 2 == n && (k, lambda, mu) == (2 * (s - 2), s - 2, 4) {
            if let Some(c) = confirm(graph, Family::Triangular { s: s as u32 })? {
                return Ok(Ok(SeidelRecognition { tag: SeidelTag::Triangular { s }, srg, confirmation: c }));
            }
        }
        let s = isqrt(n);
        if s >= 2 && s * s == n && (k, lambda, mu) == (2 * (s - 1), s - 2, 2) {
            if let Some(c) = confirm(graph, Family::Lattice { s: s as u32 })? {
                return Ok(Ok(SeidelRecognition { tag: SeidelTag::Lattice { s }, srg, confirmation: c }));
            }
        }
        let tag = if n <= 28 { SeidelTag::Sporadic { n } } else { SeidelTag::Unclassified };
        return Ok(Ok(SeidelRecognition { tag, srg, confirmation: Confirmation::Isomorphism }));
    }
    let tag = match line_graph_reconstruct(graph, SEIDEL_ORACLE_LIMIT)? {
        Some(y) => {
            let used: Vec<usize> = (0..y.n()).filter(|&v| y.degree(v) > 0).collect();
            let sub = Graph::from_fn(used.len(), |a, b| y.adjacent(used[a], used[b]));
            if let Some(side) = sub.bipartition() {
                let m1 = side.iter().filter(|&&s| s == 0).count();
                let m2 = sub.n() - m1;
                if sub.edge_count() == m1 * m2 {
                    SeidelTag::Grid { m1: m1.min(m2), m2: m1.max(m2) }
                } else if sub.regular_degree().is_some() {
                    SeidelTag::LineOfTriangleFree
                } else {
                    SeidelTag::Unclassified
                }
            } else if sub.regular_degree().is_some() && (0..sub.n()).all(|u| sub.neighbors(u).iter().all(|&v| sub.common_neighbors(u, v) == 0)) {
                SeidelTag::LineOfTriangleFree
            } else if n <= 28 {
                SeidelTag::Sporadic { n }
            } else {
                SeidelTag::Unclassified
            }
        }
        None if n <= 28 => SeidelTag::Sporadic { n },
        None => SeidelTag::Unclassified,
    };
    Ok(Ok(SeidelRecognition { tag, srg: None, confirmation: Confirmation::Isomorphism }))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SunWilmesInputs {
    pub colors: Vec<Color>,
    pub s: usize,
    pub clique_size: usize,
    /// `alpha = alpha_num / clique_size`.
    pub alpha_num: usize,
    pub alpha: f64,
    /// Size guarantee `4/alpha ln|C| + 2` for a splitting set.
    pub splitting_set_bound: f64,
}

/// Motion bound for a homogeneous configuration in which the colors `set`
/// (closed under pairing) form a triangular graph, from how well the
/// Delsarte cliques of that graph are internally distinguished.
pub fn sun_wilmes_bound(cfg: &Configuration, set: &[Color]) -> Result<Applicable<MotionCertificate>> {
    let n = cfg.n();
    if !cfg.is_homogeneous() {
        return Ok(Err(NotApplicable::because("configuration is homogeneous")));
    }
    let colors: BTreeSet<Color> = set.iter().copied().collect();
    if colors.is_empty() || colors.iter().any(|&c| c as usize >= cfg.rank() || cfg.is_diagonal_color(c)) {
        return Err(Error::InvalidParameters(format!("{set:?} is not a set of non-diagonal colors")));
    }
    if colors.iter().any(|&c| !colors.contains(&cfg.paired(c))) {
        return Ok(Err(NotApplicable::because("color set closed under pairing")));
    }
    let set: Vec<Color> = colors.into_iter().collect();
    let g = cfg.constituent_graph(&set);
    if !g.is_connected() || g.regular_degree().is_none() {
        return Ok(Err(NotApplicable::because("union of the colors is a triangular graph")));
    }
    let s = match seidel_recognize(&g)? {
        Ok(SeidelRecognition { tag: SeidelTag::Triangular { s }, .. }) => s,
        _ => return Ok(Err(NotApplicable::because("union of the colors is a triangular graph"))),
    };
    let size = s - 1;
    let cliques = maximal_cliques(&g, size);
    if cliques.len() != s || cliques.iter().any(|c| c.len() != size) {
        return Err(Error::Inconsistent(format!("triangular({s}) should have {s} Delsarte cliques of size {size}")));
    }
    let mut worst = usize::MAX;
    for c in &cliques {
        for (a, &x) in c.iter().enumerate() {
            for &y in &c[a + 1..] {
                let d = c.iter().filter(|&&z| cfg.color(z, x) != cfg.color(z, y)).count();
                worst = worst.min(d);
            }
        }
    }
    if worst == 0 {
        return Ok(Err(NotApplicable::compare("alpha > 0", 0.0, 0.0)));
    }
    let alpha = worst as f64 / size as f64;
    // alpha is capped just below 1/2; for alpha >= 1/2 the bound is ceil(n/4)
    let bound = if 2 * worst >= size {
        n.div_ceil(4)
    } else {
        (worst * n).div_ceil(2 * size)
    };
    let inputs = SunWilmesInputs {
        colors: set,
        s,
        clique_size: size,
        alpha_num: worst,
        alpha,
        splitting_set_bound: 4.0 / alpha.min(0.5) * (size as f64).ln() + 2.0,
    };
    Ok(Ok(MotionCertificate::new(
        n,
        bound as u64,
        Rule::SunWilmes,
        serde_json::to_value(inputs).expect("plain data"),
    )))
}

/// Checks `mu <= m^2` for a graph with a line system; see
/// [`verify_clique_geometry`] for the full report.
pub fn clique_mu_bound_holds(graph: &Graph, lines: &[Vec<usize>]) -> Result<Applicable<()>> {
    let r = verify_clique_geometry(graph, lines)?;
    Ok(require_le("mu <= m^2", r.mu as f64, r.mu_bound as f64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri(s: u32) -> Graph {
        generate(Family::Triangular { s }).unwrap().graph.unwrap()
    }

    #[test]
    fn cliques_of_small_graphs() {
        let k4 = Graph::from_fn(4, |_, _| true);
        assert_eq!(maximal_cliques(&k4, 1), vec![vec![0, 1, 2, 3]]);
        assert_eq!(clique_number(&tri(5)), 4);
        let c5 = generate(Family::Cycle { n: 5 }).unwrap().graph.unwrap();
        assert_eq!(maximal_cliques(&c5, 2).len(), 5);
    }

    #[test]
    fn metsch_on_small_graphs() {
        let t = tri(11);
        let g = metsch_lines(&t, 9, 9, 4, 2).unwrap().unwrap();
        assert_eq!(g.lines.len(), 11);
        assert!(g.lines.iter().all(|l| l.len() == 10));
        let p = generate(Family::Petersen).unwrap().graph.unwrap();
        let na = metsch_lines(&p, 0, 0, 1, 2).unwrap().unwrap_err();
        assert_eq!((na.lhs, na.rhs), (Some(3.0), Some(3.0)));
        assert!(metsch_lines(&t, 10, 10, 4, 2).is_err());
    }

    #[test]
    fn delsarte() {
        assert_eq!(delsarte_clique_bound(6.0, -2.0).unwrap(), 4.0);
        assert_eq!(delsarte_clique_bound(12.0, -3.0).unwrap(), 5.0);
        assert!(delsarte_clique_bound(3.0, 0.0).is_err());
    }

    #[test]
    fn line_graphs() {
        let k5 = Graph::from_fn(5, |_, _| true);
        let y = line_graph_reconstruct(&tri(5), 60).unwrap().unwrap();
        assert!(crate::oracle::isomorphic(&Configuration::adjacency(&y), &Configuration::adjacency(&k5), 60).unwrap());
        let p = generate(Family::Petersen).unwrap().graph.unwrap();
        assert!(line_graph_reconstruct(&p, 60).unwrap().is_none());
    }
}
