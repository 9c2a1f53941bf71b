//! The configuration data model: a coloring of all ordered vertex pairs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};
use crate::graph::Graph;

/// Color ids are stored in 16 bits, so the rank is capped at 2^16. Every
/// configuration on at most 256 vertices fits.
pub type Color = u16;
pub const MAX_RANK: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    n: usize,
    rank: usize,
    colors: Vec<Color>,
    pairing: Vec<Color>,
}

/// A violated configuration axiom, with its witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "kebab-case")]
pub enum Violation {
    /// Axiom (i): `c(v,v) = c(u,w)` with `u != w`.
    DiagonalClash { v: usize, u: usize, w: usize, color: Color },
    /// Axiom (ii): `c(u,v) = color` but `c(v,u) != pairing[color]`.
    PairingMismatch { u: usize, v: usize, color: Color, found: Color, expected: Color },
    PairingNotInvolution { color: Color, paired: Color },
    MissingColor { color: Color },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct ConfigJson {
    n: usize,
    rank: usize,
    colors: Vec<Vec<usize>>,
    pairing: Vec<usize>,
}

impl Configuration {
    /// Assembles a configuration from raw parts, checking only shape and id
    /// ranges. Axioms are checked separately by [`Configuration::verify`].
    pub fn from_parts(n: usize, rank: usize, colors: Vec<Color>, pairing: Vec<Color>) -> Result<Self> {
        if rank > MAX_RANK {
            return Err(Error::RankOverflow(rank));
        }
        if colors.len() != n * n {
            return Err(Error::InvalidConfiguration(format!(
                "expected {} colors, found {}",
                n * n,
                colors.len()
            )));
        }
        if pairing.len() != rank {
            return Err(Error::InvalidConfiguration(format!(
                "pairing has {} entries for rank {rank}",
                pairing.len()
            )));
        }
        if let Some(&c) = colors.iter().chain(&pairing).find(|&&c| c as usize >= rank) {
            return Err(Error::InvalidConfiguration(format!("color {c} outside [0, {rank})")));
        }
        Ok(Configuration { n, rank, colors, pairing })
    }

    /// Builds a configuration from a row-major color matrix; the rank is one
    /// more than the largest color and the pairing is read off the first
    /// occurrence of each color.
    pub fn from_matrix(n: usize, colors: &[usize]) -> Result<Self> {
        if colors.len() != n * n {
            return Err(Error::InvalidConfiguration(format!(
                "expected {} colors, found {}",
                n * n,
                colors.len()
            )));
        }
        let rank = colors.iter().max().map_or(0, |&m| m + 1);
        if rank > MAX_RANK {
            return Err(Error::RankOverflow(rank));
        }
        let mut pairing: Vec<Option<Color>> = vec![None; rank];
        for u in 0..n {
            for v in 0..n {
                let c = colors[u * n + v];
                if pairing[c].is_none() {
                    pairing[c] = Some(colors[v * n + u] as Color);
                }
            }
        }
        let pairing = pairing
            .into_iter()
            .enumerate()
            .map(|(c, p)| p.unwrap_or(c as Color))
            .collect();
        let colors = colors.iter().map(|&c| c as Color).collect();
        Configuration::from_parts(n, rank, colors, pairing)
    }

    /// Colors pairs by graph distance.
    pub fn distance(graph: &Graph) -> Result<Self> {
        let d = graph.distance_matrix()?;
        Configuration::from_matrix(graph.n(), &d)
    }

    /// Colors pairs as diagonal (0), edge (1) or non-edge (2). Unused colors
    /// are compacted away, so complete and edgeless graphs have rank 2.
    pub fn adjacency(graph: &Graph) -> Self {
        let n = graph.n();
        let has_edge = graph.edge_count() > 0;
        let non_edge = if has_edge { 2 } else { 1 };
        let mut m = vec![0usize; n * n];
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    m[u * n + v] = if graph.adjacent(u, v) { 1 } else { non_edge };
                }
            }
        }
        Configuration::from_matrix(n, &m).expect("adjacency configuration is well formed")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.rank
    }

    #[inline]
    pub fn color(&self, u: usize, v: usize) -> Color {
        self.colors[u * self.n + v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn row(&self, u: usize) -> &[Color] {
        &self.colors[u * self.n..(u + 1) * self.n]
    }

    pub fn pairing(&self) -> &[Color] {
        &self.pairing
    }

    pub fn paired(&self, c: Color) -> Color {
        self.pairing[c as usize]
    }

    /// Sorted list of colors appearing on the diagonal.
    pub fn diagonal_colors(&self) -> Vec<Color> {
        let mut d: Vec<Color> = (0..self.n).map(|v| self.color(v, v)).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn is_diagonal_color(&self, c: Color) -> bool {
        (0..self.n).any(|v| self.color(v, v) == c)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.n == 0 || (0..self.n).all(|v| self.color(v, v) == self.color(0, 0))
    }

    /// Number of pairs of each color.
    pub fn color_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.rank];
        for &c in &self.colors {
            counts[c as usize] += 1;
        }
        counts
    }

    /// Checks axioms (i) and (ii) plus the bookkeeping invariants. An empty
    /// result means the configuration is valid.
    pub fn verify(&self) -> Vec<Violation> {
        let n = self.n;
        let mut out = Vec::new();
        let mut diag_witness: Vec<Option<usize>> = vec![None; self.rank];
        for v in 0..n {
            let c = self.color(v, v) as usize;
            diag_witness[c].get_or_insert(v);
        }
        for u in 0..n {
            for w in 0..n {
                if u == w {
                    continue;
                }
                let c = self.color(u, w);
                if let Some(v) = diag_witness[c as usize] {
                    out.push(Violation::DiagonalClash { v, u, w, color: c });
                }
            }
        }
        for u in 0..n {
            for v in 0..n {
                let c = self.color(u, v);
                let found = self.color(v, u);
                let expected = self.pairing[c as usize];
                if found != expected {
                    out.push(Violation::PairingMismatch { u, v, color: c, found, expected });
                }
            }
        }
        for (c, &p) in self.pairing.iter().enumerate() {
            if self.pairing[p as usize] as usize != c {
                out.push(Violation::PairingNotInvolution { color: c as Color, paired: p });
            }
        }
        for (c, &k) in self.color_counts().iter().enumerate() {
            if k == 0 {
                out.push(Violation::MissingColor { color: c as Color });
            }
        }
        out
    }

    /// The same configuration with vertex `v` renamed `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Configuration {
        let n = self.n;
        let mut colors = vec![0; n * n];
        for u in 0..n {
            for v in 0..n {
                colors[perm[u] * n + perm[v]] = self.color(u, v);
            }
        }
        Configuration { n, rank: self.rank, colors, pairing: self.pairing.clone() }
    }

    /// Renames colors through `map` (a permutation of `0..rank`).
    pub fn recolored(&self, map: &[Color]) -> Configuration {
        let colors = self.colors.iter().map(|&c| map[c as usize]).collect();
        let mut pairing = vec![0; self.rank];
        for (c, &p) in self.pairing.iter().enumerate() {
            pairing[map[c] as usize] = map[p as usize];
        }
        Configuration { n: self.n, rank: self.rank, colors, pairing }
    }

    /// True iff both colorings induce the same partition of `V x V`, i.e.
    /// they are equal up to renaming colors.
    pub fn same_up_to_relabeling(&self, other: &Configuration) -> bool {
        if self.n != other.n || self.rank != other.rank {
            return false;
        }
        let mut fwd = vec![None; self.rank];
        let mut back = vec![None; other.rank];
        for (&a, &b) in self.colors.iter().zip(&other.colors) {
            match (fwd[a as usize], back[b as usize]) {
                (None, None) => {
                    fwd[a as usize] = Some(b);
                    back[b as usize] = Some(a);
                }
                (Some(x), Some(y)) if x == b && y == a => {}
                _ => return false,
            }
        }
        true
    }

    /// Graph whose edges are the pairs colored in `set`. The set must be
    /// closed under pairing for the result to be meaningful.
    pub fn constituent_graph(&self, set: &[Color]) -> Graph {
        let mut member = vec![false; self.rank];
        for &c in set {
            member[c as usize] = true;
        }
        Graph::from_fn(self.n, |u, v| member[self.color(u, v) as usize] || member[self.color(v, u) as usize])
    }

    pub fn to_json(&self) -> String {
        let j = ConfigJson {
            n: self.n,
            rank: self.rank,
            colors: (0..self.n).map(|u| self.row(u).iter().map(|&c| c as usize).collect()).collect(),
            pairing: self.pairing.iter().map(|&c| c as usize).collect(),
        };
        serde_json::to_string(&j).expect("configuration serializes")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::from_str(&self.to_json()).expect("valid json")
    }
}

/// Parses the configuration JSON format
/// `{ "n": int, "rank": int, "colors": [[int]], "pairing": [int] }`.
pub fn parse_configuration_json(text: &str) -> std::result::Result<Configuration, ParseError> {
    let j: ConfigJson = serde_json::from_str(text)
        .map_err(|e| ParseError::new(e.line().max(1), e.column().max(1), e.to_string()))?;
    let at_end = |msg: String| ParseError::new(text.lines().count().max(1), 1, msg);
    if j.colors.len() != j.n {
        return Err(at_end(format!("\"colors\" has {} rows, expected n = {}", j.colors.len(), j.n)));
    }
    if j.rank > MAX_RANK {
        return Err(at_end(format!("rank {} exceeds the cap {MAX_RANK}", j.rank)));
    }
    let mut flat = Vec::with_capacity(j.n * j.n);
    for (u, row) in j.colors.iter().enumerate() {
        if row.len() != j.n {
            return Err(at_end(format!("row {u} has {} entries, expected {}", row.len(), j.n)));
        }
        for &c in row {
            if c >= j.rank {
                return Err(at_end(format!("color {c} in row {u} outside [0, {})", j.rank)));
            }
            flat.push(c as Color);
        }
    }
    if j.pairing.len() != j.rank || j.pairing.iter().any(|&p| p >= j.rank) {
        return Err(at_end(format!("\"pairing\" must list {} colors in [0, rank)", j.rank)));
    }
    let pairing = j.pairing.iter().map(|&p| p as Color).collect();
    Configuration::from_parts(j.n, j.rank, flat, pairing).map_err(|e| at_end(e.to_string()))
}
