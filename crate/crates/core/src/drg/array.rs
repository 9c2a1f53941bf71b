use std::fmt;

use serde::Serialize;

use crate::error::{Error, ParseError, Result};
use crate::graph::Graph;

/// Intersection array `{b_0, ..., b_{d-1}; c_1, ..., c_d}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct IntersectionArray {
    b: Vec<u64>,
    c: Vec<u64>,
}

impl IntersectionArray {
    pub fn new(b: Vec<u64>, c: Vec<u64>) -> Result<Self> {
        if b.is_empty() || b.len() != c.len() {
            return Err(Error::InvalidArray(format!(
                "need d >= 1 entries on each side, got {} and {}",
                b.len(),
                c.len()
            )));
        }
        Ok(IntersectionArray { b, c })
    }

    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    pub fn k(&self) -> u64 {
        self.b[0]
    }

    /// `b_i`, zero for `i >= d`.
    pub fn b(&self, i: usize) -> u64 {
        self.b.get(i).copied().unwrap_or(0)
    }

    /// `c_i`, zero for `i = 0` and past the diameter.
    pub fn c(&self, i: usize) -> u64 {
        if i == 0 {
            0
        } else {
            self.c.get(i - 1).copied().unwrap_or(0)
        }
    }

    /// `a_i = k - b_i - c_i`, possibly negative for invalid arrays.
    pub fn a(&self, i: usize) -> i64 {
        self.k() as i64 - self.b(i) as i64 - self.c(i) as i64
    }

    pub fn lambda(&self) -> i64 {
        self.a(1)
    }

    pub fn mu(&self) -> u64 {
        self.c(2)
    }

    pub fn bs(&self) -> &[u64] {
        &self.b
    }

    pub fn cs(&self) -> &[u64] {
        &self.c
    }

    /// Sphere sizes `k_0..k_d` from `k_i b_i = k_{i+1} c_{i+1}`; `None` if
    /// some `k_i` is not an integer or a `c_i` vanishes.
    pub fn sphere_sizes(&self) -> Option<Vec<u64>> {
        let mut ks = vec![1u64];
        for i in 0..self.diameter() {
            let num = (ks[i] as u128).checked_mul(self.b(i) as u128)?;
            let den = self.c(i + 1) as u128;
            if den == 0 || num % den != 0 {
                return None;
            }
            ks.push(u64::try_from(num / den).ok()?);
        }
        Some(ks)
    }

    pub fn n(&self) -> Option<u64> {
        self.sphere_sizes()?.iter().try_fold(0u64, |acc, &k| acc.checked_add(k))
    }

    /// Every violated structural condition, in a fixed order. Empty means
    /// the array passes.
    pub fn validate(&self) -> Vec<String> {
        let d = self.diameter();
        let mut out = Vec::new();
        if self.c(1) != 1 {
            out.push(format!("c_1 = {} but must be 1", self.c(1)));
        }
        for i in 0..=d {
            if self.a(i) < 0 {
                out.push(format!("a_{i} = {} is negative", self.a(i)));
            }
        }
        for i in 0..d {
            if self.b(i) == 0 {
                out.push(format!("b_{i} = 0 before the diameter"));
            }
            if self.c(i + 1) == 0 {
                out.push(format!("c_{} = 0", i + 1));
            }
        }
        for i in 1..d {
            if self.b(i) > self.b(i - 1) {
                out.push(format!("b_{i} = {} exceeds b_{} = {}", self.b(i), i - 1, self.b(i - 1)));
            }
            if self.c(i + 1) < self.c(i) {
                out.push(format!("c_{} = {} is below c_{i} = {}", i + 1, self.c(i + 1), self.c(i)));
            }
        }
        if self.c(1) != 0 && (1..=d).all(|i| self.c(i) > 0) && self.sphere_sizes().is_none() {
            out.push("some k_i = k_(i-1) b_(i-1) / c_i is not an integer".to_string());
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub(crate) fn require_valid(&self) -> Result<()> {
        match self.validate().into_iter().next() {
            Some(msg) => Err(Error::InvalidArray(format!("{self}: {msg}"))),
            None => Ok(()),
        }
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{{{};{}}}", join(&self.b), join(&self.c))
    }
}

/// Parses `{b0,b1,...;c1,...,cd}`. Whitespace is ignored.
pub fn parse_array(text: &str) -> std::result::Result<IntersectionArray, ParseError> {
    let line = 1 + text.trim_end().matches('\n').count();
    let trimmed = text.trim();
    let start = text.find(|ch: char| !ch.is_whitespace()).unwrap_or(0);
    let col_of = |byte: usize| text[..byte].chars().rev().take_while(|&c| c != '\n').count() + 1;
    let line_of = |byte: usize| 1 + text[..byte].matches('\n').count();
    if !trimmed.starts_with('{') {
        return Err(ParseError::new(line_of(start), col_of(start), "expected '{'"));
    }
    if !trimmed.ends_with('}') {
        let end = start + trimmed.len();
        return Err(ParseError::new(line, col_of(end), "expected closing '}'"));
    }
    let inner_start = start + 1;
    let inner = &trimmed[1..trimmed.len() - 1];
    let mut halves = inner.splitn(2, ';');
    let left = halves.next().unwrap_or("");
    let Some(right) = halves.next() else {
        let end = start + trimmed.len() - 1;
        return Err(ParseError::new(line_of(end), col_of(end), "expected ';' between b and c lists"));
    };
    if right.contains(';') {
        let pos = inner_start + left.len() + 1 + right.find(';').unwrap_or(0);
        return Err(ParseError::new(line_of(pos), col_of(pos), "more than one ';'"));
    }
    let parse_list = |part: &str, offset: usize| -> std::result::Result<Vec<u64>, ParseError> {
        let mut out = Vec::new();
        let mut pos = offset;
        for tok in part.split(',') {
            let lead = tok.len() - tok.trim_start().len();
            let t = tok.trim();
            let at = pos + lead;
            if t.is_empty() {
                return Err(ParseError::new(line_of(at), col_of(at), "empty entry"));
            }
            let v: u64 = t
                .parse()
                .map_err(|_| ParseError::new(line_of(at), col_of(at), format!("'{t}' is not a non-negative integer")))?;
            out.push(v);
            pos += tok.len() + 1;
        }
        Ok(out)
    };
    let b = parse_list(left, inner_start)?;
    let c = parse_list(right, inner_start + left.len() + 1)?;
    if b.len() != c.len() {
        return Err(ParseError::new(
            line,
            col_of(start + trimmed.len() - 1),
            format!("b list has {} entries but c list has {}", b.len(), c.len()),
        ));
    }
    IntersectionArray::new(b, c).map_err(|e| ParseError::new(line, 1, e.to_string()))
}

/// Witness that a graph is not distance-regular: for the pair `(v, w)` at
/// distance `i`, the counts `(c, a, b)` differ from those of an earlier pair.
/// Irregular graphs are reported at `i = 0` with `b` the degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NotDrg {
    pub v: usize,
    pub w: usize,
    pub i: usize,
    pub expected: (usize, usize, usize),
    pub found: (usize, usize, usize),
}

impl fmt::Display for NotDrg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "not distance-regular: vertices {} and {} at distance {} have (c, a, b) = {:?}, expected {:?}",
            self.v, self.w, self.i, self.found, self.expected
        )
    }
}

/// Reads off the intersection array by counting, for every ordered pair
/// `(v, w)` at distance `i`, the neighbors of `w` at distance `i-1`, `i`
/// and `i+1` from `v`.
pub fn extract_intersection_array(graph: &Graph) -> Result<std::result::Result<IntersectionArray, NotDrg>> {
    let n = graph.n();
    if n < 2 {
        return Err(Error::InvalidArray("a graph needs two vertices to have an intersection array".into()));
    }
    let dist = graph.distance_matrix()?;
    let k = graph.degree(0);
    if let Some(v) = (0..n).find(|&v| graph.degree(v) != k) {
        return Ok(Err(NotDrg { v, w: v, i: 0, expected: (0, 0, k), found: (0, 0, graph.degree(v)) }));
    }
    let d = dist.iter().copied().max().unwrap_or(0);
    let mut consts: Vec<Option<(usize, usize, usize)>> = vec![None; d + 1];
    for v in 0..n {
        for w in 0..n {
            let i = dist[v * n + w];
            let mut cnt = (0, 0, 0);
            for &x in graph.neighbors(w) {
                let dx = dist[v * n + x];
                if dx + 1 == i {
                    cnt.0 += 1;
                } else if dx == i {
                    cnt.1 += 1;
                } else {
                    cnt.2 += 1;
                }
            }
            match consts[i] {
                None => consts[i] = Some(cnt),
                Some(e) if e != cnt => return Ok(Err(NotDrg { v, w, i, expected: e, found: cnt })),
                Some(_) => {}
            }
        }
    }
    let consts: Vec<(usize, usize, usize)> = consts.into_iter().map(|c| c.expect("every distance occurs")).collect();
    let b = (0..d).map(|i| consts[i].2 as u64).collect();
    let c = (1..=d).map(|i| consts[i].0 as u64).collect();
    Ok(Ok(IntersectionArray::new(b, c)?))
}
