//! Two-dimensional Weisfeiler-Leman refinement and individualization.

use std::collections::BTreeMap;

use crate::coherence::pair_profile;
use crate::config::{Color, Configuration, MAX_RANK};
use crate::error::{Error, Result};

type Signature = (Color, Vec<(u64, u32)>);

/// One refinement round. New colors are numbered by the lexicographic order
/// of `(old color, sorted count list)`, which makes the result independent
/// of vertex names.
pub fn wl_round(cfg: &Configuration) -> Result<Configuration> {
    let n = cfg.n();
    let counts = cfg.color_counts();
    let mut interned: BTreeMap<Signature, usize> = BTreeMap::new();
    let mut tmp = vec![0usize; n * n];
    let mut buf = Vec::with_capacity(n);
    for u in 0..n {
        for v in 0..n {
            let old = cfg.color(u, v);
            // a singleton class cannot split further
            let prof = if counts[old as usize] == 1 {
                Vec::new()
            } else {
                pair_profile(cfg, u, v, &mut buf)
            };
            let next = interned.len();
            tmp[u * n + v] = *interned.entry((old, prof)).or_insert(next);
        }
    }
    if interned.len() > MAX_RANK {
        return Err(Error::RankOverflow(interned.len()));
    }
    let mut rename = vec![0usize; interned.len()];
    for (rank, id) in interned.values().enumerate() {
        rename[*id] = rank;
    }
    let colors: Vec<usize> = tmp.into_iter().map(|id| rename[id]).collect();
    Configuration::from_matrix(n, &colors)
}

/// Iterates [`wl_round`] until the number of colors stops growing. The
/// fixed point is coherent.
pub fn wl_stabilize(cfg: &Configuration) -> Result<Configuration> {
    let mut cur = wl_round(cfg)?;
    loop {
        let next = wl_round(&cur)?;
        if next.rank() == cur.rank() {
            return Ok(next);
        }
        cur = next;
    }
}

/// Gives each vertex of `set` its own fresh diagonal color, then refines.
/// The flag reports whether every vertex ended up in its own class.
pub fn individualize_and_refine(cfg: &Configuration, set: &[usize]) -> Result<(Configuration, bool)> {
    let n = cfg.n();
    let mut s: Vec<usize> = set.to_vec();
    s.sort_unstable();
    s.dedup();
    if let Some(&v) = s.iter().find(|&&v| v >= n) {
        return Err(Error::OutOfRange(format!("vertex {v} in a configuration on {n} vertices")));
    }
    let r = cfg.rank();
    if r + s.len() > MAX_RANK {
        return Err(Error::RankOverflow(r + s.len()));
    }
    let mut colors: Vec<usize> = cfg.colors().iter().map(|&c| c as usize).collect();
    for (idx, &v) in s.iter().enumerate() {
        colors[v * n + v] = r + idx;
    }
    let marked = Configuration::from_matrix(n, &colors)?;
    let out = wl_stabilize(&marked)?;
    let splits = out.diagonal_colors().len() == n;
    Ok((out, splits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coherence::structure_constants;
    use crate::graph::Graph;

    fn cycle(n: usize) -> Graph {
        Graph::from_fn(n, |u, v| (u + 1) % n == v || (v + 1) % n == u)
    }

    #[test]
    fn path_splits_into_ends_and_middle() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        let cfg = Configuration::distance(&p4).unwrap();
        let st = wl_stabilize(&cfg).unwrap();
        assert!(st.rank() > cfg.rank());
        assert!(structure_constants(&st).is_ok());
        let d: Vec<_> = (0..4).map(|v| st.color(v, v)).collect();
        assert_eq!(d[0], d[3]);
        assert_eq!(d[1], d[2]);
        assert_ne!(d[0], d[1]);
    }

    #[test]
    fn coherent_input_is_kept() {
        let cfg = Configuration::distance(&cycle(7)).unwrap();
        let st = wl_stabilize(&cfg).unwrap();
        assert!(st.same_up_to_relabeling(&cfg));
    }

    #[test]
    fn individualizing_pentagon() {
        let cfg = Configuration::distance(&cycle(5)).unwrap();
        assert!(!individualize_and_refine(&cfg, &[0]).unwrap().1);
        assert!(individualize_and_refine(&cfg, &[0, 1]).unwrap().1);
        let one = Configuration::from_matrix(1, &[0]).unwrap();
        assert!(individualize_and_refine(&one, &[]).unwrap().1);
    }
}
