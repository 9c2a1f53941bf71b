//! Distinguishing numbers and greedy distinguishing sets.

use serde::Serialize;

use crate::config::{Color, Configuration};
use crate::error::{Error, Result};

/// `D(u,v)`: the number of `x` with `c(x,u) != c(x,v)`.
pub fn pair_distinguishing_number(cfg: &Configuration, u: usize, v: usize) -> usize {
    (0..cfg.n()).filter(|&x| cfg.color(x, u) != cfg.color(x, v)).count()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistinguishingNumbers {
    /// `D(i)` per color for homogeneous coherent input; `None` for diagonal
    /// colors, and empty when the input is not homogeneous.
    pub per_color: Vec<Option<usize>>,
    pub d_min: usize,
}

/// All `D(u,v)` over `u != v`. For homogeneous input the value must depend
/// only on `c(u,v)`; a disagreement is reported as an inconsistency.
pub fn distinguishing_numbers(cfg: &Configuration) -> Result<DistinguishingNumbers> {
    let n = cfg.n();
    let homogeneous = cfg.is_homogeneous();
    let mut per_color: Vec<Option<usize>> = vec![None; if homogeneous { cfg.rank() } else { 0 }];
    let mut d_min = usize::MAX;
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            let d = pair_distinguishing_number(cfg, u, v);
            d_min = d_min.min(d);
            if homogeneous {
                let c = cfg.color(u, v) as usize;
                match per_color[c] {
                    None => per_color[c] = Some(d),
                    Some(prev) if prev != d => {
                        return Err(Error::Inconsistent(format!(
                            "D differs within color {c}: {prev} vs {d} at ({u}, {v})"
                        )))
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok(DistinguishingNumbers {
        per_color,
        d_min: if d_min == usize::MAX { 0 } else { d_min },
    })
}

/// True iff every pair of distinct vertices is split by some member of `set`.
pub fn is_distinguishing(cfg: &Configuration, set: &[usize]) -> bool {
    let n = cfg.n();
    (0..n).all(|u| (u + 1..n).all(|v| set.iter().any(|&s| cfg.color(s, u) != cfg.color(s, v))))
}

/// Greedy set cover of the vertex pairs: repeatedly take the vertex that
/// splits the most unsplit pairs, lowest id on ties.
pub fn greedy_distinguishing_set(cfg: &Configuration) -> Vec<usize> {
    let n = cfg.n();
    let mut open: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut chosen = Vec::new();
    while !open.is_empty() {
        let splits = |s: usize, &(u, v): &(usize, usize)| cfg.color(s, u) != cfg.color(s, v);
        let mut best = (0, 0);
        for s in 0..n {
            let gain = open.iter().filter(|p| splits(s, p)).count();
            if gain > best.0 {
                best = (gain, s);
            }
        }
        if best.0 == 0 {
            break;
        }
        let s = best.1;
        chosen.push(s);
        open.retain(|p| !splits(s, p));
    }
    chosen.sort_unstable();
    chosen
}

/// The size guarantee `2 n ln(n) / D_min + 1` for a greedy set.
pub fn greedy_size_bound(n: usize, d_min: usize) -> f64 {
    if d_min == 0 {
        return f64::INFINITY;
    }
    2.0 * n as f64 * (n as f64).ln() / d_min as f64 + 1.0
}

/// Colors `c(s, v)` for `s` in `set`, the fingerprint of `v` with respect to
/// a distinguishing set.
pub fn fingerprint(cfg: &Configuration, set: &[usize], v: usize) -> Vec<Color> {
    set.iter().map(|&s| cfg.color(s, v)).collect()
}
