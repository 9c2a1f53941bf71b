//! Structure constants, classification flags and color distances.

use std::collections::VecDeque;

use serde::Serialize;

use crate::config::{Color, Configuration};
use crate::error::{Error, Result};

/// Intersection numbers `p_{i,j}^t`, stored sparsely per color `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    rank: usize,
    pairing: Vec<Color>,
    diagonal: Vec<bool>,
    // entries[t] is sorted by (i, j) and holds only nonzero counts
    entries: Vec<Vec<(Color, Color, u64)>>,
    out_degree: Vec<u64>,
    in_degree: Vec<u64>,
}

/// Two pairs of the same color that disagree on some count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoherenceViolation {
    pub i: Color,
    pub j: Color,
    pub color: Color,
    pub first: (usize, usize),
    pub first_count: u64,
    pub second: (usize, usize),
    pub second_count: u64,
}

impl std::fmt::Display for CoherenceViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "not coherent: pairs {:?} and {:?} have color {} but {} vs {} walks of colors ({}, {})",
            self.first, self.second, self.color, self.first_count, self.second_count, self.i, self.j
        )
    }
}

/// Sorted sparse count list `((c(u,w), c(w,v)), count)` over all `w`.
pub(crate) fn pair_profile(cfg: &Configuration, u: usize, v: usize, buf: &mut Vec<u64>) -> Vec<(u64, u32)> {
    let n = cfg.n();
    let r = cfg.rank() as u64;
    buf.clear();
    let ru = cfg.row(u);
    for w in 0..n {
        buf.push(ru[w] as u64 * r + cfg.color(w, v) as u64);
    }
    buf.sort_unstable();
    let mut out: Vec<(u64, u32)> = Vec::new();
    for &key in buf.iter() {
        match out.last_mut() {
            Some((k, c)) if *k == key => *c += 1,
            _ => out.push((key, 1)),
        }
    }
    out
}

/// Computes the structure constants, or the first violation in row-major
/// order of pairs. The violation names the smallest `(i, j)` whose counts
/// differ between the first pair of the color and the offending pair.
pub fn structure_constants(cfg: &Configuration) -> std::result::Result<StructureConstants, CoherenceViolation> {
    let n = cfg.n();
    let r = cfg.rank();
    let mut reps: Vec<Option<((usize, usize), Vec<(u64, u32)>)>> = vec![None; r];
    let mut buf = Vec::with_capacity(n);
    for u in 0..n {
        for v in 0..n {
            let t = cfg.color(u, v) as usize;
            let prof = pair_profile(cfg, u, v, &mut buf);
            match &reps[t] {
                None => reps[t] = Some(((u, v), prof)),
                Some((first, rep)) if *rep != prof => {
                    let (key, a, b) = first_difference(rep, &prof);
                    return Err(CoherenceViolation {
                        i: (key / r as u64) as Color,
                        j: (key % r as u64) as Color,
                        color: t as Color,
                        first: *first,
                        first_count: a,
                        second: (u, v),
                        second_count: b,
                    });
                }
                Some(_) => {}
            }
        }
    }
    let entries = reps
        .into_iter()
        .map(|rep| {
            rep.map(|(_, prof)| {
                prof.into_iter()
                    .map(|(key, c)| ((key / r as u64) as Color, (key % r as u64) as Color, c as u64))
                    .collect()
            })
            .unwrap_or_default()
        })
        .collect();
    let diagonal = (0..r).map(|c| cfg.is_diagonal_color(c as Color)).collect();
    Ok(StructureConstants::assemble(r, cfg.pairing().to_vec(), diagonal, entries))
}

fn first_difference(a: &[(u64, u32)], b: &[(u64, u32)]) -> (u64, u64, u64) {
    let (mut x, mut y) = (0, 0);
    loop {
        let ka = a.get(x).map(|e| e.0);
        let kb = b.get(y).map(|e| e.0);
        match (ka, kb) {
            (Some(p), Some(q)) if p == q => {
                if a[x].1 != b[y].1 {
                    return (p, a[x].1 as u64, b[y].1 as u64);
                }
                x += 1;
                y += 1;
            }
            (Some(p), Some(q)) if p < q => return (p, a[x].1 as u64, 0),
            (Some(_), Some(q)) => return (q, 0, b[y].1 as u64),
            (Some(p), None) => return (p, a[x].1 as u64, 0),
            (None, Some(q)) => return (q, 0, b[y].1 as u64),
            (None, None) => unreachable!("profiles are equal"),
        }
    }
}

impl StructureConstants {
    /// Builds a tensor from explicit entries `(i, j, t, p)`. Used for
    /// parameter-derived tensors that have no configuration behind them.
    pub fn from_entries(
        rank: usize,
        pairing: Vec<Color>,
        diagonal: Vec<bool>,
        values: impl IntoIterator<Item = (Color, Color, Color, u64)>,
    ) -> Result<Self> {
        if pairing.len() != rank || diagonal.len() != rank {
            return Err(Error::InvalidParameters("pairing and diagonal flags must have rank entries".into()));
        }
        let mut entries: Vec<Vec<(Color, Color, u64)>> = vec![Vec::new(); rank];
        for (i, j, t, p) in values {
            if i as usize >= rank || j as usize >= rank || t as usize >= rank {
                return Err(Error::OutOfRange(format!("color index ({i}, {j}, {t}) for rank {rank}")));
            }
            if p > 0 {
                entries[t as usize].push((i, j, p));
            }
        }
        for e in &mut entries {
            e.sort_unstable();
            let len = e.len();
            e.dedup_by(|a, b| a.0 == b.0 && a.1 == b.1);
            if e.len() != len {
                return Err(Error::InvalidParameters("duplicate tensor entry".into()));
            }
        }
        Ok(StructureConstants::assemble(rank, pairing, diagonal, entries))
    }

    fn assemble(rank: usize, pairing: Vec<Color>, diagonal: Vec<bool>, entries: Vec<Vec<(Color, Color, u64)>>) -> Self {
        let mut sc = StructureConstants {
            rank,
            pairing,
            diagonal,
            entries,
            out_degree: vec![0; rank],
            in_degree: vec![0; rank],
        };
        let diag: Vec<Color> = (0..rank as Color).filter(|&t| sc.diagonal[t as usize]).collect();
        for i in 0..rank as Color {
            let ip = sc.pairing[i as usize];
            sc.out_degree[i as usize] = diag.iter().map(|&t| sc.p(i, ip, t)).max().unwrap_or(0);
            sc.in_degree[i as usize] = diag.iter().map(|&t| sc.p(ip, i, t)).max().unwrap_or(0);
        }
        sc
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn pairing(&self) -> &[Color] {
        &self.pairing
    }

    pub fn paired(&self, c: Color) -> Color {
        self.pairing[c as usize]
    }

    pub fn is_diagonal(&self, c: Color) -> bool {
        self.diagonal[c as usize]
    }

    pub fn diagonal_colors(&self) -> Vec<Color> {
        (0..self.rank as Color).filter(|&c| self.is_diagonal(c)).collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.diagonal.iter().filter(|&&d| d).count() == 1
    }

    pub fn is_symmetric(&self) -> bool {
        self.pairing.iter().enumerate().all(|(c, &p)| c == p as usize)
    }

    /// `p_{i,j}^t`.
    pub fn p(&self, i: Color, j: Color, t: Color) -> u64 {
        let e = &self.entries[t as usize];
        e.binary_search_by(|probe| (probe.0, probe.1).cmp(&(i, j)))
            .map(|k| e[k].2)
            .unwrap_or(0)
    }

    /// Nonzero entries `(i, j, p)` for color `t`, sorted.
    pub fn entries(&self, t: Color) -> &[(Color, Color, u64)] {
        &self.entries[t as usize]
    }

    /// Out-degree `k_i` of the constituent of color `i`.
    pub fn degree(&self, i: Color) -> u64 {
        self.out_degree[i as usize]
    }

    pub fn degrees(&self) -> &[u64] {
        &self.out_degree
    }

    pub fn in_degree(&self, i: Color) -> u64 {
        self.in_degree[i as usize]
    }

    /// Vertex count of a homogeneous configuration.
    pub fn order(&self) -> u64 {
        self.out_degree.iter().sum()
    }

    /// Checks `sum_j p_{i,j}^t = k_i` and `k_t p_{i,j}^t = k_i p_{t,j*}^i`
    /// for a homogeneous tensor. Returns the failures as readable strings.
    pub fn identity_failures(&self) -> Result<Vec<String>> {
        let mut out = Vec::new();
        if !self.is_homogeneous() {
            return Ok(out);
        }
        let r = self.rank as Color;
        for t in 0..r {
            for i in 0..r {
                let s: u64 = (0..r).map(|j| self.p(i, j, t)).sum();
                if s != self.degree(i) {
                    out.push(format!("sum_j p_({i},j)^{t} = {s} but k_{i} = {}", self.degree(i)));
                }
                for j in 0..r {
                    let lhs = self
                        .p(i, j, t)
                        .checked_mul(self.degree(t))
                        .ok_or(Error::Overflow("identity check"))?;
                    let rhs = self
                        .p(t, self.paired(j), i)
                        .checked_mul(self.degree(i))
                        .ok_or(Error::Overflow("identity check"))?;
                    if lhs != rhs {
                        out.push(format!("k_{t} p_({i},{j})^{t} = {lhs} but k_{i} p_({t},{j}*)^{i} = {rhs}"));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Shortest number of color-`i` steps realizing color `j`, found by
    /// breadth-first search over colors using the tensor. `None` when `j` is
    /// unreachable. Defined for homogeneous configurations.
    pub fn color_distance(&self, i: Color, j: Color) -> Option<usize> {
        self.color_distances(i)[j as usize]
    }

    /// `color_distance(i, j)` for every `j`.
    pub fn color_distances(&self, i: Color) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.rank];
        let mut queue = VecDeque::new();
        for t in self.diagonal_colors() {
            dist[t as usize] = Some(0);
            queue.push_back(t);
        }
        while let Some(e) = queue.pop_front() {
            let de = dist[e as usize].expect("queued colors have a distance");
            for e2 in 0..self.rank as Color {
                if dist[e2 as usize].is_none() && self.p(e, i, e2) > 0 {
                    dist[e2 as usize] = Some(de + 1);
                    queue.push_back(e2);
                }
            }
        }
        dist
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let mut p = Vec::new();
        for t in 0..self.rank {
            for &(i, j, c) in &self.entries[t] {
                p.push(serde_json::json!([i, j, t, c]));
            }
        }
        serde_json::json!({
            "rank": self.rank,
            "pairing": self.pairing,
            "degrees": self.out_degree,
            "in_degrees": self.in_degree,
            "p": p,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub homogeneous: bool,
    pub association_scheme: bool,
    pub primitive: bool,
    /// Directed diameter of each non-diagonal constituent; `None` when not
    /// strongly connected or when the color is diagonal.
    pub constituent_diameters: Vec<Option<usize>>,
    pub scheme_diameter: Option<usize>,
    pub oriented_colors: Vec<Color>,
    /// Weak connectivity of each constituent, computed on the graph itself.
    pub weakly_connected: Vec<bool>,
}

/// Classification flags. Strong connectivity comes from color distances,
/// weak connectivity from a union-find pass; for homogeneous coherent input
/// the two agree, and [`Error::Inconsistent`] is returned otherwise.
pub fn classify(cfg: &Configuration, sc: &StructureConstants) -> Result<ClassificationReport> {
    let r = cfg.rank();
    let homogeneous = cfg.is_homogeneous();
    let association_scheme = homogeneous && sc.is_symmetric();
    let oriented_colors = (0..r as Color).filter(|&c| sc.paired(c) != c).collect();
    let weakly_connected: Vec<bool> = (0..r as Color)
        .map(|c| !cfg.is_diagonal_color(c) && weakly_connected(cfg, c))
        .collect();
    let mut constituent_diameters = vec![None; r];
    if homogeneous {
        for i in 0..r as Color {
            if sc.is_diagonal(i) {
                continue;
            }
            let d = sc.color_distances(i);
            let strong = d.iter().all(Option::is_some);
            if strong != weakly_connected[i as usize] {
                return Err(Error::Inconsistent(format!(
                    "constituent {i}: strong connectivity {strong} but weak connectivity {}",
                    weakly_connected[i as usize]
                )));
            }
            if strong {
                constituent_diameters[i as usize] = d.into_iter().flatten().max();
            }
        }
    }
    let non_diag: Vec<usize> = (0..r).filter(|&c| !sc.is_diagonal(c as Color)).collect();
    let primitive = homogeneous && non_diag.iter().all(|&c| constituent_diameters[c].is_some());
    let scheme_diameter = if primitive {
        non_diag.iter().filter_map(|&c| constituent_diameters[c]).max().or(Some(0))
    } else {
        None
    };
    Ok(ClassificationReport {
        homogeneous,
        association_scheme,
        primitive,
        constituent_diameters,
        scheme_diameter,
        oriented_colors,
        weakly_connected,
    })
}

fn weakly_connected(cfg: &Configuration, c: Color) -> bool {
    let n = cfg.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut comps = n;
    for u in 0..n {
        for v in 0..n {
            if cfg.color(u, v) == c {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a != b {
                    parent[a] = b;
                    comps -= 1;
                }
            }
        }
    }
    comps <= 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn cycle(n: usize) -> Graph {
        Graph::from_fn(n, |u, v| (u + 1) % n == v || (v + 1) % n == u)
    }

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edges(10, e)
    }

    #[test]
    fn petersen_constants() {
        let cfg = Configuration::distance(&petersen()).unwrap();
        let sc = structure_constants(&cfg).unwrap();
        assert_eq!(sc.p(1, 1, 2), 1);
        assert_eq!(sc.p(1, 1, 1), 0);
        assert_eq!(sc.degrees(), &[1, 3, 6]);
        assert!(sc.identity_failures().unwrap().is_empty());
        assert_eq!(sc.color_distance(2, 1), Some(2));
        let rep = classify(&cfg, &sc).unwrap();
        assert!(rep.homogeneous && rep.association_scheme && rep.primitive);
        assert_eq!(rep.scheme_diameter, Some(2));
    }

    #[test]
    fn path_is_not_coherent() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        let cfg = Configuration::distance(&p4).unwrap();
        let v = structure_constants(&cfg).unwrap_err();
        assert_eq!((v.i, v.j, v.color), (1, 2, 1));
        assert_eq!(v.first, (0, 1));
        assert_eq!(v.second, (1, 0));
        assert_ne!(v.first_count, v.second_count);
    }

    #[test]
    fn hexagon_is_imprimitive() {
        let cfg = Configuration::distance(&cycle(6)).unwrap();
        let sc = structure_constants(&cfg).unwrap();
        assert_eq!(sc.color_distance(1, 3), Some(3));
        assert_eq!(sc.color_distance(3, 1), None);
        let rep = classify(&cfg, &sc).unwrap();
        assert!(!rep.primitive);
        assert!(!rep.weakly_connected[3]);
    }

    #[test]
    fn explicit_tensor_round_trip() {
        let cfg = Configuration::distance(&cycle(5)).unwrap();
        let sc = structure_constants(&cfg).unwrap();
        let mut vals = Vec::new();
        for t in 0..3 {
            for &(i, j, p) in sc.entries(t) {
                vals.push((i, j, t, p));
            }
        }
        let back = StructureConstants::from_entries(3, vec![0, 1, 2], vec![true, false, false], vals).unwrap();
        assert_eq!(back, sc);
    }
}
