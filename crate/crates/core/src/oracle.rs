//! Brute-force ground truth for small instances: color-preserving
//! automorphisms, exact motion and isomorphism.

use std::cell::Cell;
use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::config::{Color, Configuration};
use crate::error::{Error, Result};
use crate::wl::wl_stabilize;

pub const DEFAULT_LIMIT: usize = 60;
/// Groups up to this order are listed element by element.
pub const ELEMENT_LIMIT: u128 = 100_000;
/// Motion is computed by enumeration up to this order, by a support-bounded
/// search above it.
pub const ENUMERATION_LIMIT: u128 = 1_000_000;

pub type Perm = Vec<usize>;

fn check_limit(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        Err(Error::TooLarge { n, limit })
    } else {
        Ok(())
    }
}

/// True iff `perm` preserves every color of `cfg`.
pub fn is_automorphism(cfg: &Configuration, perm: &[usize]) -> bool {
    let n = cfg.n();
    perm.len() == n && (0..n).all(|u| (0..n).all(|v| cfg.color(perm[u], perm[v]) == cfg.color(u, v)))
}

fn maps_onto(a: &Configuration, b: &Configuration, perm: &[usize]) -> bool {
    let n = a.n();
    (0..n).all(|u| (0..n).all(|v| b.color(perm[u], perm[v]) == a.color(u, v)))
}

pub fn support(perm: &[usize]) -> usize {
    perm.iter().enumerate().filter(|(i, &p)| *i != p).count()
}

fn compose(p: &[usize], q: &[usize]) -> Perm {
    q.iter().map(|&x| p[x]).collect()
}

/// Joint search for color-preserving maps from `a` to `b`, both already
/// WL-stable. `orig_a`/`orig_b` are checked at every leaf.
struct Search<'a> {
    a: &'a Configuration,
    b: &'a Configuration,
    orig_a: &'a Configuration,
    orig_b: &'a Configuration,
    deadline: Option<Instant>,
    timed_out: Cell<bool>,
}

type Cells = Vec<u32>;

impl<'a> Search<'a> {
    fn new(a: &'a Configuration, b: &'a Configuration, orig_a: &'a Configuration, orig_b: &'a Configuration) -> Self {
        Search { a, b, orig_a, orig_b, deadline: None, timed_out: Cell::new(false) }
    }

    fn initial(&self) -> (Cells, Cells) {
        let ca = (0..self.a.n()).map(|v| self.a.color(v, v) as u32).collect();
        let cb = (0..self.b.n()).map(|v| self.b.color(v, v) as u32).collect();
        (ca, cb)
    }

    fn signature(cfg: &Configuration, cells: &[u32], v: usize) -> (u32, Vec<(Color, u32)>) {
        let mut s: Vec<(Color, u32)> = (0..cfg.n()).map(|w| (cfg.color(v, w), cells[w])).collect();
        s.sort_unstable();
        (cells[v], s)
    }

    /// Equitable refinement of both sides with shared names. Returns false
    /// as soon as the two sides disagree on class sizes.
    fn refine(&self, ca: &mut Cells, cb: &mut Cells) -> bool {
        let n = ca.len();
        let mut classes = count_classes(ca);
        loop {
            let sa: Vec<_> = (0..n).map(|v| Self::signature(self.a, ca, v)).collect();
            let sb: Vec<_> = (0..n).map(|v| Self::signature(self.b, cb, v)).collect();
            let mut names: BTreeMap<&(u32, Vec<(Color, u32)>), u32> = BTreeMap::new();
            for s in sa.iter().chain(&sb) {
                names.insert(s, 0);
            }
            for (idx, val) in names.values_mut().enumerate() {
                *val = idx as u32;
            }
            let mut hist = vec![0i64; names.len()];
            for v in 0..n {
                ca[v] = names[&sa[v]];
                cb[v] = names[&sb[v]];
                hist[ca[v] as usize] += 1;
                hist[cb[v] as usize] -= 1;
            }
            if hist.iter().any(|&h| h != 0) {
                return false;
            }
            let now = names.len();
            if now == classes {
                return true;
            }
            classes = now;
        }
    }

    fn individualize(ca: &mut Cells, cb: &mut Cells, v: usize, w: usize) {
        let fresh = ca.iter().chain(cb.iter()).copied().max().unwrap_or(0) + 1;
        ca[v] = fresh;
        cb[w] = fresh;
    }

    /// Target cell: smallest non-singleton class, lowest name on ties.
    fn target(ca: &[u32]) -> Option<u32> {
        let mut sizes: BTreeMap<u32, usize> = BTreeMap::new();
        for &c in ca {
            *sizes.entry(c).or_default() += 1;
        }
        sizes.into_iter().filter(|&(_, s)| s > 1).min_by_key(|&(c, s)| (s, c)).map(|(c, _)| c)
    }

    /// Lower bound on the support of any map below this node: a vertex
    /// whose cell differs between the two sides cannot be fixed.
    fn moved_so_far(ca: &[u32], cb: &[u32]) -> usize {
        ca.iter().zip(cb).filter(|(x, y)| x != y).count()
    }

    /// Depth-first search; `leaf` returns true to stop. `bound` prunes
    /// nodes that already move at least that many points; the leaf callback
    /// may lower it as the search goes.
    fn dfs(&self, mut ca: Cells, mut cb: Cells, bound: Option<&Cell<usize>>, leaf: &mut dyn FnMut(Perm) -> bool) -> bool {
        if self.deadline.is_some_and(|d| Instant::now() > d) {
            self.timed_out.set(true);
            return true;
        }
        if !self.refine(&mut ca, &mut cb) {
            return false;
        }
        if let Some(b) = bound {
            if Self::moved_so_far(&ca, &cb) >= b.get() {
                return false;
            }
        }
        let Some(cell) = Self::target(&ca) else {
            let mut pos = vec![usize::MAX; ca.iter().copied().max().map_or(0, |m| m as usize + 1)];
            for (w, &c) in cb.iter().enumerate() {
                pos[c as usize] = w;
            }
            let perm: Perm = ca.iter().map(|&c| pos[c as usize]).collect();
            if maps_onto(self.orig_a, self.orig_b, &perm) {
                return leaf(perm);
            }
            return false;
        };
        let v = ca.iter().position(|&c| c == cell).expect("cell is nonempty");
        let mut cands: Vec<usize> = (0..cb.len()).filter(|&w| cb[w] == cell).collect();
        if let Some(p) = cands.iter().position(|&w| w == v) {
            cands.remove(p);
            cands.insert(0, v);
        }
        for w in cands {
            let (mut a2, mut b2) = (ca.clone(), cb.clone());
            Self::individualize(&mut a2, &mut b2, v, w);
            if self.dfs(a2, b2, bound, leaf) {
                return true;
            }
        }
        false
    }

    fn with_prefix(&self, prefix: &[usize]) -> (Cells, Cells) {
        let (mut ca, mut cb) = self.initial();
        for &p in prefix {
            Self::individualize(&mut ca, &mut cb, p, p);
        }
        (ca, cb)
    }

    /// Some map fixing `prefix` pointwise and sending `v` to `w`.
    fn find(&self, prefix: &[usize], v: usize, w: usize) -> Option<Perm> {
        let (mut ca, mut cb) = self.with_prefix(prefix);
        Self::individualize(&mut ca, &mut cb, v, w);
        let mut found = None;
        self.dfs(ca, cb, None, &mut |p| {
            found = Some(p);
            true
        });
        found
    }
}

fn count_classes(c: &[u32]) -> usize {
    let mut v = c.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

/// Automorphism group as a stabilizer chain.
#[derive(Debug, Clone, Serialize)]
pub struct AutomorphismGroup {
    pub n: usize,
    pub base: Vec<usize>,
    pub orbit_sizes: Vec<usize>,
    pub generators: Vec<Perm>,
    #[serde(skip)]
    transversals: Vec<Vec<Perm>>,
}

impl AutomorphismGroup {
    /// Exact order, or `None` if it does not fit in 128 bits.
    pub fn order(&self) -> Option<u128> {
        self.orbit_sizes.iter().try_fold(1u128, |acc, &s| acc.checked_mul(s as u128))
    }

    pub fn log10_order(&self) -> f64 {
        self.orbit_sizes.iter().map(|&s| (s as f64).log10()).sum()
    }

    /// Visits every element exactly once, as `t_1 t_2 ... t_L` over the
    /// transversals.
    pub fn for_each_element(&self, f: &mut dyn FnMut(&[usize])) {
        fn go(level: usize, acc: &Perm, ts: &[Vec<Perm>], f: &mut dyn FnMut(&[usize])) {
            if level == ts.len() {
                f(acc);
                return;
            }
            for t in &ts[level] {
                go(level + 1, &compose(acc, t), ts, f);
            }
        }
        go(0, &(0..self.n).collect(), &self.transversals, f);
    }

    /// All elements, when the order is at most [`ELEMENT_LIMIT`].
    pub fn elements(&self) -> Option<Vec<Perm>> {
        if self.order()? > ELEMENT_LIMIT {
            return None;
        }
        let mut out = Vec::new();
        self.for_each_element(&mut |p| out.push(p.to_vec()));
        Some(out)
    }
}

/// Color-preserving automorphisms of `cfg`.
pub fn automorphisms(cfg: &Configuration, limit_n: usize) -> Result<AutomorphismGroup> {
    let n = cfg.n();
    check_limit(n, limit_n)?;
    let st = wl_stabilize(cfg)?;
    let s = Search::new(&st, &st, cfg, cfg);
    let mut base = Vec::new();
    let mut orbit_sizes = Vec::new();
    let mut generators: Vec<Perm> = Vec::new();
    let mut transversals = Vec::new();
    loop {
        let (mut ca, mut cb) = s.with_prefix(&base);
        if !s.refine(&mut ca, &mut cb) {
            return Err(Error::Inconsistent("identity refinement diverged".into()));
        }
        let Some(cell) = Search::target(&ca) else { break };
        let beta = ca.iter().position(|&c| c == cell).expect("cell is nonempty");
        let fixes_prefix = |g: &Perm| base.iter().all(|&p| g[p] == p);
        let mut reps: Vec<Option<Perm>> = vec![None; n];
        reps[beta] = Some((0..n).collect());
        let close = |reps: &mut Vec<Option<Perm>>, gens: &[Perm]| {
            let mut queue: Vec<usize> = (0..n).filter(|&x| reps[x].is_some()).collect();
            while let Some(x) = queue.pop() {
                for g in gens {
                    let y = g[x];
                    if reps[y].is_none() {
                        reps[y] = Some(compose(g, reps[x].as_ref().expect("visited")));
                        queue.push(y);
                    }
                }
            }
        };
        let mut level_gens: Vec<Perm> = generators.iter().filter(|g| fixes_prefix(g)).cloned().collect();
        close(&mut reps, &level_gens);
        for w in 0..n {
            if ca[w] != cell || reps[w].is_some() {
                continue;
            }
            if let Some(g) = s.find(&base, beta, w) {
                generators.push(g.clone());
                level_gens.push(g);
                close(&mut reps, &level_gens);
            }
        }
        let t: Vec<Perm> = reps.into_iter().flatten().collect();
        orbit_sizes.push(t.len());
        transversals.push(t);
        base.push(beta);
    }
    Ok(AutomorphismGroup { n, base, orbit_sizes, generators, transversals })
}

/// Motion by listing every element.
pub fn motion_by_enumeration(group: &AutomorphismGroup) -> Option<usize> {
    let mut best: Option<usize> = None;
    group.for_each_element(&mut |p| {
        let s = support(p);
        if s > 0 && best.is_none_or(|b| s < b) {
            best = Some(s);
        }
    });
    best
}

/// Motion by a support-bounded search: for each `v`, look for
/// automorphisms fixing `0..v` and moving `v`, pruning any branch that
/// already moves as many points as the best element so far.
pub fn motion_by_search(cfg: &Configuration, limit_n: usize) -> Result<Option<usize>> {
    let n = cfg.n();
    check_limit(n, limit_n)?;
    let st = wl_stabilize(cfg)?;
    let s = Search::new(&st, &st, cfg, cfg);
    let best = Cell::new(n + 1);
    for v in 0..n {
        let prefix: Vec<usize> = (0..v).collect();
        let (mut ca, mut cb) = s.with_prefix(&prefix);
        if !s.refine(&mut ca, &mut cb) {
            continue;
        }
        for w in (0..n).filter(|&w| w != v && ca[w] == ca[v]) {
            let (mut a2, mut b2) = (ca.clone(), cb.clone());
            Search::individualize(&mut a2, &mut b2, v, w);
            s.dfs(a2, b2, Some(&best), &mut |p| {
                best.set(best.get().min(support(&p)));
                false
            });
        }
    }
    Ok((best.get() <= n).then(|| best.get()))
}

/// Minimal support of a non-identity automorphism; `None` when the group is
/// trivial.
pub fn exact_motion(cfg: &Configuration, limit_n: usize) -> Result<Option<usize>> {
    let g = automorphisms(cfg, limit_n)?;
    match g.order() {
        Some(o) if o <= ENUMERATION_LIMIT => Ok(motion_by_enumeration(&g)),
        _ => motion_by_search(cfg, limit_n),
    }
}

/// Whether some bijection maps every color of `a` onto the same color of
/// `b`. Different sizes give `false`.
pub fn isomorphic(a: &Configuration, b: &Configuration, limit_n: usize) -> Result<bool> {
    Ok(find_isomorphism(a, b, limit_n)?.is_some())
}

pub fn find_isomorphism(a: &Configuration, b: &Configuration, limit_n: usize) -> Result<Option<Perm>> {
    match isomorphism_within(a, b, limit_n, None)? {
        IsoOutcome::Isomorphic(p) => Ok(Some(p)),
        _ => Ok(None),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoOutcome {
    Isomorphic(Perm),
    NotIsomorphic,
    TimedOut,
}

/// Isomorphism search that gives up after `budget`.
pub fn isomorphism_within(
    a: &Configuration,
    b: &Configuration,
    limit_n: usize,
    budget: Option<Duration>,
) -> Result<IsoOutcome> {
    if a.n() != b.n() || a.rank() != b.rank() {
        return Ok(IsoOutcome::NotIsomorphic);
    }
    check_limit(a.n(), limit_n)?;
    if a.color_counts() != b.color_counts() {
        return Ok(IsoOutcome::NotIsomorphic);
    }
    let (wa, wb) = (wl_stabilize(a)?, wl_stabilize(b)?);
    if wa.rank() != wb.rank() || wa.color_counts() != wb.color_counts() {
        return Ok(IsoOutcome::NotIsomorphic);
    }
    let mut s = Search::new(&wa, &wb, a, b);
    s.deadline = budget.map(|d| Instant::now() + d);
    let (ca, cb) = s.initial();
    let mut found = None;
    s.dfs(ca, cb, None, &mut |p| {
        found = Some(p);
        true
    });
    Ok(match found {
        Some(p) => IsoOutcome::Isomorphic(p),
        None if s.timed_out.get() => IsoOutcome::TimedOut,
        None => IsoOutcome::NotIsomorphic,
    })
}

/// Number of automorphisms by plain backtracking over partial maps, with no
/// refinement. Exponential; a reference for the refined search on tiny
/// inputs.
pub fn count_automorphisms_unpruned(cfg: &Configuration) -> u64 {
    fn go(cfg: &Configuration, image: &mut Vec<usize>, used: &mut [bool]) -> u64 {
        let u = image.len();
        if u == cfg.n() {
            return 1;
        }
        let mut total = 0;
        for w in 0..cfg.n() {
            if used[w] || cfg.color(w, w) != cfg.color(u, u) {
                continue;
            }
            let ok = (0..u).all(|x| cfg.color(image[x], w) == cfg.color(x, u) && cfg.color(w, image[x]) == cfg.color(u, x));
            if ok {
                used[w] = true;
                image.push(w);
                total += go(cfg, image, used);
                image.pop();
                used[w] = false;
            }
        }
        total
    }
    go(cfg, &mut Vec::new(), &mut vec![false; cfg.n()])
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

    fn adj(g: &Graph) -> Configuration {
        Configuration::adjacency(g)
    }

    #[test]
    fn small_groups() {
        let p = automorphisms(&adj(&petersen()), DEFAULT_LIMIT).unwrap();
        assert_eq!(p.order(), Some(120));
        assert_eq!(automorphisms(&adj(&cycle(5)), 60).unwrap().order(), Some(10));
        assert_eq!(exact_motion(&adj(&petersen()), 60).unwrap(), Some(6));
        assert_eq!(exact_motion(&adj(&cycle(6)), 60).unwrap(), Some(4));
    }

    #[test]
    fn asymmetric_tree_is_rigid() {
        let t = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)]);
        assert_eq!(automorphisms(&adj(&t), 60).unwrap().order(), Some(1));
        assert_eq!(exact_motion(&adj(&t), 60).unwrap(), None);
    }

    #[test]
    fn enumeration_and_search_agree() {
        for g in [petersen(), cycle(6), cycle(7), Graph::from_fn(6, |_, _| true)] {
            let cfg = adj(&g);
            let grp = automorphisms(&cfg, 60).unwrap();
            assert_eq!(motion_by_enumeration(&grp), motion_by_search(&cfg, 60).unwrap());
        }
    }

    #[test]
    fn group_is_closed() {
        let g = automorphisms(&adj(&petersen()), 60).unwrap();
        let els = g.elements().unwrap();
        let set: std::collections::HashSet<Perm> = els.iter().cloned().collect();
        assert_eq!(set.len(), 120);
        for a in els.iter().take(10) {
            for b in &els {
                assert!(set.contains(&compose(a, b)));
            }
        }
    }

    #[test]
    fn isomorphism() {
        let k33 = Graph::from_fn(6, |u, v| (u < 3) != (v < 3));
        assert!(!isomorphic(&adj(&k33), &adj(&cycle(6)), 60).unwrap());
        let shuffled = petersen().permuted(&[3, 7, 1, 9, 0, 2, 8, 4, 6, 5]);
        assert!(isomorphic(&adj(&petersen()), &adj(&shuffled), 60).unwrap());
        assert!(matches!(automorphisms(&adj(&cycle(70)), 60), Err(Error::TooLarge { .. })));
    }
}
