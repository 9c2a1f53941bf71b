//! Simple undirected graphs and the edge-list text format.
//!
//! The edge-list format is a header line `n m` followed by `m` lines `u v`
//! with 0-indexed endpoints. Blank lines and lines starting with `#` are
//! ignored. Loops and repeated edges are rejected.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, ParseError, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    matrix: Vec<bool>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            matrix: vec![false; n * n],
        }
    }

    /// Builds a graph from an edge iterator. Panics on loops or out-of-range
    /// endpoints; duplicate edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            assert!(u < n && v < n, "edge ({u},{v}) out of range for n={n}");
            assert_ne!(u, v, "loop at vertex {u}");
            g.add_edge(u, v);
        }
        g.finish();
        g
    }

    /// Builds a graph on `n` vertices with `u ~ v` iff `adjacent(u, v)`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g.finish();
        g
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        if !self.matrix[u * self.n + v] {
            self.matrix[u * self.n + v] = true;
            self.matrix[v * self.n + u] = true;
            self.adj[u].push(v);
            self.adj[v].push(u);
        }
    }

    fn finish(&mut self) {
        for list in &mut self.adj {
            list.sort_unstable();
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.matrix[u * self.n + v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Common degree, or `None` for irregular graphs. The empty graph on zero
    /// vertices counts as 0-regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|a| a.len() == k).then_some(k)
    }

    pub fn require_regular(&self) -> Result<usize> {
        let k = self.adj.first().map_or(0, Vec::len);
        match self.adj.iter().position(|a| a.len() != k) {
            None => Ok(k),
            Some(v) => Err(Error::Irregular {
                vertex: v,
                degree: self.adj[v].len(),
                expected: k,
            }),
        }
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        let (a, b) = (&self.adj[u], &self.adj[v]);
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    /// Maximum number of common neighbors over distinct pairs (the `q` of the
    /// spectral tool).
    pub fn max_common_neighbors(&self) -> usize {
        let mut q = 0;
        for u in 0..self.n {
            for v in u + 1..self.n {
                q = q.max(self.common_neighbors(u, v));
            }
        }
        q
    }

    /// BFS distances from `source`; unreachable vertices get `usize::MAX`.
    pub fn bfs(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// All-pairs distance matrix (row-major). Errors with a witness pair if
    /// the graph is disconnected.
    pub fn distance_matrix(&self) -> Result<Vec<usize>> {
        let mut out = Vec::with_capacity(self.n * self.n);
        for u in 0..self.n {
            let d = self.bfs(u);
            if let Some(v) = d.iter().position(|&x| x == usize::MAX) {
                return Err(Error::Disconnected(u, v));
            }
            out.extend(d);
        }
        Ok(out)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs(0).iter().all(|&d| d != usize::MAX)
    }

    /// Errors with a witness pair if some vertex is unreachable from 0.
    pub fn require_connected(&self) -> Result<()> {
        if self.n == 0 {
            return Ok(());
        }
        match self.bfs(0).iter().position(|&d| d == usize::MAX) {
            Some(v) => Err(Error::Disconnected(0, v)),
            None => Ok(()),
        }
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n, |u, v| !self.adjacent(u, v))
    }

    /// Line graph; vertex `i` of the result is the `i`-th edge of
    /// [`Graph::edges`].
    pub fn line_graph(&self) -> Graph {
        let edges = self.edges();
        Graph::from_fn(edges.len(), |a, b| {
            let (x, y) = edges[a];
            let (p, q) = edges[b];
            x == p || x == q || y == p || y == q
        })
    }

    /// Two-coloring of a bipartite graph (`None` if an odd cycle exists).
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        Graph::from_edges(self.n, self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])))
    }

    pub fn adjacency_f64(&self) -> Vec<f64> {
        self.matrix.iter().map(|&b| if b { 1.0 } else { 0.0 }).collect()
    }

    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut s = String::new();
        let _ = writeln!(s, "{} {}", self.n, edges.len());
        for (u, v) in edges {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }
}

fn parse_field(token: &str, line: usize, column: usize, what: &str) -> std::result::Result<usize, ParseError> {
    token
        .parse::<usize>()
        .map_err(|_| ParseError::new(line, column, format!("expected {what}, found {token:?}")))
}

/// Splits a line into `(column, token)` pairs, columns 1-based.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split_whitespace().map(move |t| {
        let offset = t.as_ptr() as usize - line.as_ptr() as usize;
        (line[..offset].chars().count() + 1, t)
    })
}

/// Parses the edge-list text format.
pub fn parse_edge_list(text: &str) -> std::result::Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        });

    let (hline, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, 1, "missing header line \"n m\""))?;
    let head: Vec<_> = tokens(header).collect();
    if head.len() != 2 {
        let col = head.get(2).map_or(header.len() + 1, |t| t.0);
        return Err(ParseError::new(hline, col, "header must be exactly \"n m\""));
    }
    let n = parse_field(head[0].1, hline, head[0].0, "vertex count")?;
    let m = parse_field(head[1].1, hline, head[1].0, "edge count")?;
    // bound memory before allocating the adjacency matrix
    if n > 1 << 14 {
        return Err(ParseError::new(hline, head[0].0, format!("vertex count {n} too large")));
    }
    if m > n.saturating_mul(n.saturating_sub(1)) / 2 {
        return Err(ParseError::new(hline, head[1].0, format!("{m} edges impossible on {n} vertices")));
    }

    let mut g = Graph::empty(n);
    let mut seen = 0usize;
    for (lineno, line) in lines {
        let toks: Vec<_> = tokens(line).collect();
        if toks.len() != 2 {
            let col = toks.get(2).map_or(line.len() + 1, |t| t.0);
            return Err(ParseError::new(lineno, col, "edge line must be exactly \"u v\""));
        }
        let u = parse_field(toks[0].1, lineno, toks[0].0, "vertex id")?;
        let v = parse_field(toks[1].1, lineno, toks[1].0, "vertex id")?;
        for (x, col) in [(u, toks[0].0), (v, toks[1].0)] {
            if x >= n {
                return Err(ParseError::new(lineno, col, format!("vertex {x} out of range 0..{n}")));
            }
        }
        if u == v {
            return Err(ParseError::new(lineno, toks[1].0, format!("loop at vertex {u}")));
        }
        if g.adjacent(u, v) {
            return Err(ParseError::new(lineno, toks[0].0, format!("repeated edge {u} {v}")));
        }
        seen += 1;
        if seen > m {
            return Err(ParseError::new(lineno, 1, format!("more than the declared {m} edges")));
        }
        g.add_edge(u, v);
    }
    if seen != m {
        let last = text.lines().count().max(1);
        return Err(ParseError::new(last, 1, format!("declared {m} edges, found {seen}")));
    }
    g.finish();
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_round_trips() {
        let g = parse_edge_list("4 3\n0 1\n1 2\n2 3\n").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn reports_line_and_column() {
        let err = parse_edge_list("3 2\n0 1\n1  x\n").unwrap_err();
        assert_eq!((err.line, err.column), (3, 4));
        let err = parse_edge_list("3 1\n0 0\n").unwrap_err();
        assert_eq!(err.line, 2);
        let err = parse_edge_list("3 2\n0 1\n").unwrap_err();
        assert!(err.message.contains("declared 2"));
        let err = parse_edge_list("2 1\n0 5\n").unwrap_err();
        assert_eq!((err.line, err.column), (2, 3));
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("3 1\n0 1\n1 0\n").is_err());
    }

    #[test]
    fn distances_and_connectivity() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        let d = p4.distance_matrix().unwrap();
        assert_eq!(d[3], 3);
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]);
        assert_eq!(two.distance_matrix(), Err(Error::Disconnected(0, 2)));
        assert!(p4.bipartition().is_some());
        let c5 = Graph::from_fn(5, |u, v| (u + 1) % 5 == v || (v + 1) % 5 == u);
        assert!(c5.bipartition().is_none());
        assert_eq!(c5.max_common_neighbors(), 1);
    }

    #[test]
    fn line_graph_of_triangle_and_star() {
        let k3 = Graph::from_fn(3, |_, _| true);
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]);
        assert_eq!(k3.line_graph().edge_count(), 3);
        assert_eq!(star.line_graph().edge_count(), 3);
    }
}
