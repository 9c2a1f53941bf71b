//! Named families: generators, closed-form spectra, exact motion of the
//! exceptional families, and recognition.

use std::fmt;
use std::time::Duration;

use serde::Serialize;

use crate::config::{Color, Configuration};
use crate::drg::{extract_intersection_array, IntersectionArray, Spectrum};
use crate::error::{Error, ParseError, Result};
use crate::graph::Graph;
use crate::oracle::{isomorphism_within, IsoOutcome};

/// Largest instance the generators will build.
pub const MAX_VERTICES: usize = 5000;
/// Recognition confirms isomorphism up to this many vertices.
pub const RECOGNITION_LIMIT: usize = 200;
pub const RECOGNITION_BUDGET: Duration = Duration::from_secs(5);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "name", rename_all = "kebab-case")]
pub enum Family {
    Johnson { m: u32, t: u32 },
    Hamming { s: u32, m: u32 },
    Triangular { s: u32 },
    Lattice { s: u32 },
    Cocktail { m: u32 },
    Cycle { n: u32 },
    /// Not one of the exceptional families; a rank-4 test fixture.
    Cyclotomic { p: u32, e: u32 },
    Kneser { n: u32, k: u32 },
    Complete { n: u32 },
    Path { n: u32 },
    Petersen,
    Heawood,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Johnson { m, t } => write!(f, "johnson({m},{t})"),
            Family::Hamming { s, m } => write!(f, "hamming({s},{m})"),
            Family::Triangular { s } => write!(f, "triangular({s})"),
            Family::Lattice { s } => write!(f, "lattice({s})"),
            Family::Cocktail { m } => write!(f, "cocktail({m})"),
            Family::Cycle { n } => write!(f, "cycle({n})"),
            Family::Cyclotomic { p, e } => write!(f, "cyclotomic({p},{e})"),
            Family::Kneser { n, k } => write!(f, "kneser({n},{k})"),
            Family::Complete { n } => write!(f, "complete({n})"),
            Family::Path { n } => write!(f, "path({n})"),
            Family::Petersen => write!(f, "petersen"),
            Family::Heawood => write!(f, "heawood"),
        }
    }
}

/// Parses `name:a,b` (or a bare name for the fixed graphs), for example
/// `johnson:7,3` or `crown:4`.
pub fn parse_family(text: &str) -> std::result::Result<Family, ParseError> {
    let text = text.trim();
    let (name, args) = match text.split_once(':') {
        Some((n, a)) => (n.trim(), Some(a)),
        None => (text, None),
    };
    let mut nums = Vec::new();
    if let Some(args) = args {
        let mut col = name.len() + 2;
        for part in args.split(',') {
            let p = part.trim();
            let v: u32 = p
                .parse()
                .map_err(|_| ParseError::new(1, col, format!("expected a non-negative integer, found {p:?}")))?;
            nums.push(v);
            col += part.len() + 1;
        }
    }
    let want = |k: usize| -> std::result::Result<(), ParseError> {
        if nums.len() == k {
            Ok(())
        } else {
            Err(ParseError::new(1, 1, format!("{name} takes {k} parameter(s), got {}", nums.len())))
        }
    };
    let fam = match name.to_ascii_lowercase().as_str() {
        "johnson" => want(2).map(|_| Family::Johnson { m: nums[0], t: nums[1] })?,
        "hamming" => want(2).map(|_| Family::Hamming { s: nums[0], m: nums[1] })?,
        "triangular" => want(1).map(|_| Family::Triangular { s: nums[0] })?,
        "lattice" => want(1).map(|_| Family::Lattice { s: nums[0] })?,
        "cocktail" | "cocktail-party" | "crown" => want(1).map(|_| Family::Cocktail { m: nums[0] })?,
        "cycle" => want(1).map(|_| Family::Cycle { n: nums[0] })?,
        "cyclotomic" => want(2).map(|_| Family::Cyclotomic { p: nums[0], e: nums[1] })?,
        "kneser" => want(2).map(|_| Family::Kneser { n: nums[0], k: nums[1] })?,
        "complete" => want(1).map(|_| Family::Complete { n: nums[0] })?,
        "path" => want(1).map(|_| Family::Path { n: nums[0] })?,
        "petersen" => want(0).map(|_| Family::Petersen)?,
        "heawood" => want(0).map(|_| Family::Heawood)?,
        _ => return Err(ParseError::new(1, 1, format!("unknown family {name:?}"))),
    };
    Ok(fam)
}

pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// `binomial` with negative arguments read as zero.
fn binom_i(n: i64, k: i64) -> u64 {
    if n < 0 || k < 0 {
        0
    } else {
        binomial(n as u64, k as u64).unwrap_or(u64::MAX)
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d: &u32| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn bad(msg: String) -> Error {
    Error::InvalidParameters(msg)
}

impl Family {
    /// The same family under its preferred name: `johnson(m,2)` is
    /// `triangular(m)`, `hamming(2,m)` is `lattice(m)`, and the cube
    /// `hamming(3,2)` is `cocktail(4)`.
    pub fn canonical(self) -> Family {
        match self {
            Family::Johnson { m, t: 2 } => Family::Triangular { s: m },
            Family::Hamming { s: 2, m } => Family::Lattice { s: m },
            Family::Hamming { s: 3, m: 2 } => Family::Cocktail { m: 4 },
            f => f,
        }
    }

    /// Parameter checks and vertex count.
    pub fn order(&self) -> Result<usize> {
        let n: u64 = match *self {
            Family::Johnson { m, t } => {
                if t < 2 || m < 2 * t + 1 {
                    return Err(bad(format!("johnson({m},{t}) needs t >= 2 and m >= 2t + 1")));
                }
                binomial(m as u64, t as u64).unwrap_or(u64::MAX)
            }
            Family::Hamming { s, m } => {
                if m < 2 || s < 1 {
                    return Err(bad(format!("hamming({s},{m}) needs s >= 1 and m >= 2")));
                }
                (m as u64).checked_pow(s).unwrap_or(u64::MAX)
            }
            Family::Triangular { s } => {
                if s < 5 {
                    return Err(bad(format!("triangular({s}) needs s >= 5")));
                }
                binomial(s as u64, 2).unwrap_or(u64::MAX)
            }
            Family::Lattice { s } => {
                if s < 2 {
                    return Err(bad(format!("lattice({s}) needs s >= 2")));
                }
                (s as u64).saturating_mul(s as u64)
            }
            Family::Cocktail { m } => {
                if m < 2 {
                    return Err(bad(format!("cocktail({m}) needs m >= 2")));
                }
                2 * m as u64
            }
            Family::Cycle { n } => {
                if n < 3 {
                    return Err(bad(format!("cycle({n}) needs n >= 3")));
                }
                n as u64
            }
            Family::Cyclotomic { p, e } => {
                if !is_prime(p) || p == 2 {
                    return Err(bad(format!("cyclotomic({p},{e}) needs an odd prime p")));
                }
                if e == 0 || (p - 1) % e != 0 || ((p - 1) / e) % 2 != 0 {
                    return Err(bad(format!(
                        "cyclotomic({p},{e}) needs e | p - 1 with (p - 1)/e even, so that the classes are symmetric"
                    )));
                }
                p as u64
            }
            Family::Kneser { n, k } => {
                if k < 1 || n < 2 * k + 1 {
                    return Err(bad(format!("kneser({n},{k}) needs k >= 1 and n >= 2k + 1")));
                }
                binomial(n as u64, k as u64).unwrap_or(u64::MAX)
            }
            Family::Complete { n } | Family::Path { n } => {
                if n < 2 {
                    return Err(bad(format!("{self} needs n >= 2")));
                }
                n as u64
            }
            Family::Petersen => 10,
            Family::Heawood => 14,
        };
        if n > MAX_VERTICES as u64 {
            return Err(Error::TooLarge { n: n.min(usize::MAX as u64) as usize, limit: MAX_VERTICES });
        }
        Ok(n as usize)
    }

    /// Exact motion is known in closed form for these.
    pub fn is_exceptional(&self) -> bool {
        matches!(
            self,
            Family::Johnson { .. }
                | Family::Hamming { .. }
                | Family::Triangular { .. }
                | Family::Lattice { .. }
                | Family::Cocktail { .. }
        )
    }
}

/// A generated instance. `graph` is absent for schemes that are not built
/// from a single graph.
#[derive(Debug, Clone)]
pub struct Instance {
    pub family: Family,
    pub graph: Option<Graph>,
    /// Distance configuration of the graph when it is connected, otherwise
    /// its adjacency configuration; the scheme itself for cyclotomic input.
    pub config: Configuration,
}

fn subsets(m: u32, t: u32) -> Vec<u64> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = (0..t).collect();
    loop {
        out.push(cur.iter().fold(0u64, |acc, &x| acc | 1 << x));
        let mut i = t as usize;
        while i > 0 && cur[i - 1] == m - t + (i as u32 - 1) {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        cur[i - 1] += 1;
        for j in i..t as usize {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

fn johnson_graph(m: u32, t: u32) -> Graph {
    let sets = subsets(m, t);
    Graph::from_fn(sets.len(), |u, v| (sets[u] & sets[v]).count_ones() == t - 1)
}

fn hamming_graph(s: u32, m: u32) -> Graph {
    let n = (m as usize).pow(s);
    let digits = |mut x: usize| -> Vec<usize> {
        (0..s)
            .map(|_| {
                let d = x % m as usize;
                x /= m as usize;
                d
            })
            .collect()
    };
    let words: Vec<Vec<usize>> = (0..n).map(digits).collect();
    Graph::from_fn(n, |u, v| words[u].iter().zip(&words[v]).filter(|(a, b)| a != b).count() == 1)
}

/// `K_{m,m}` minus a perfect matching; `i` and `m + i` are the unmatched
/// pair.
fn cocktail_graph(m: u32) -> Graph {
    let m = m as usize;
    Graph::from_fn(2 * m, |u, v| (u < m) != (v < m) && u % m != v % m)
}

fn petersen_graph() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, e)
}

/// Incidence graph of the Fano plane: points `0..7`, line `7 + j` is
/// `{j, j+1, j+3} mod 7`.
fn heawood_graph() -> Graph {
    let mut e = Vec::new();
    for j in 0..7 {
        for off in [0, 1, 3] {
            e.push(((j + off) % 7, 7 + j));
        }
    }
    Graph::from_edges(14, e)
}

fn primitive_root(p: u32) -> u32 {
    let phi = p - 1;
    let mut factors = Vec::new();
    let mut x = phi;
    let mut d = 2;
    while d * d <= x {
        if x.is_multiple_of(d) {
            factors.push(d);
            while x.is_multiple_of(d) {
                x /= d;
            }
        }
        d += 1;
    }
    if x > 1 {
        factors.push(x);
    }
    let pow = |b: u32, mut e: u32| {
        let (mut r, mut b) = (1u64, b as u64);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p as u64;
            }
            b = b * b % p as u64;
            e >>= 1;
        }
        r
    };
    (2..p).find(|&g| factors.iter().all(|&q| pow(g, phi / q) != 1)).unwrap_or(1)
}

/// Classes of `Z_p` by the discrete logarithm of `y - x` modulo `e`.
fn cyclotomic_scheme(p: u32, e: u32) -> Result<Configuration> {
    let g = primitive_root(p) as u64;
    let mut log = vec![0u32; p as usize];
    let mut x = 1u64;
    for i in 0..p - 1 {
        log[x as usize] = i;
        x = x * g % p as u64;
    }
    let n = p as usize;
    let colors: Vec<usize> = (0..n * n)
        .map(|idx| {
            let (u, v) = (idx / n, idx % n);
            if u == v {
                0
            } else {
                1 + (log[(v + n - u) % n] % e) as usize
            }
        })
        .collect();
    Configuration::from_matrix(n, &colors)
}

pub fn generate(family: Family) -> Result<Instance> {
    family.order()?;
    let graph = match family {
        Family::Johnson { m, t } => johnson_graph(m, t),
        Family::Triangular { s } => johnson_graph(s, 2),
        Family::Hamming { s, m } => hamming_graph(s, m),
        Family::Lattice { s } => hamming_graph(2, s),
        Family::Cocktail { m } => cocktail_graph(m),
        Family::Cycle { n } => {
            let n = n as usize;
            Graph::from_fn(n, |u, v| (u + 1) % n == v || (v + 1) % n == u)
        }
        Family::Kneser { n, k } => {
            let sets = subsets(n, k);
            Graph::from_fn(sets.len(), |u, v| sets[u] & sets[v] == 0)
        }
        Family::Complete { n } => Graph::from_fn(n as usize, |_, _| true),
        Family::Path { n } => Graph::from_fn(n as usize, |u, v| u + 1 == v || v + 1 == u),
        Family::Petersen => petersen_graph(),
        Family::Heawood => heawood_graph(),
        Family::Cyclotomic { p, e } => {
            return Ok(Instance { family, graph: None, config: cyclotomic_scheme(p, e)? });
        }
    };
    let config = if graph.is_connected() {
        Configuration::distance(&graph)?
    } else {
        Configuration::adjacency(&graph)
    };
    Ok(Instance { family, graph: Some(graph), config })
}

/// Intersection array of the distance-regular families, from the closed
/// forms.
pub fn family_array(family: Family) -> Result<IntersectionArray> {
    family.order()?;
    let (b, c): (Vec<u64>, Vec<u64>) = match family {
        Family::Johnson { m, t } => (0..t as u64)
            .map(|i| ((t as u64 - i) * (m as u64 - t as u64 - i), (i + 1) * (i + 1)))
            .unzip(),
        Family::Triangular { s } => return family_array(Family::Johnson { m: s, t: 2 }),
        Family::Hamming { s, m } => (0..s as u64).map(|i| ((s as u64 - i) * (m as u64 - 1), i + 1)).unzip(),
        Family::Lattice { s } => return family_array(Family::Hamming { s: 2, m: s }),
        Family::Cocktail { m } if m >= 3 => {
            let m = m as u64;
            (vec![m - 1, m - 2, 1], vec![1, m - 2, m - 1])
        }
        Family::Cycle { n } => {
            let d = n as u64 / 2;
            let b = (0..d).map(|i| if i == 0 { 2 } else { 1 }).collect();
            let c = (1..=d).map(|i| if i == d && n % 2 == 0 { 2 } else { 1 }).collect();
            (b, c)
        }
        Family::Complete { n } => (vec![n as u64 - 1], vec![1]),
        Family::Petersen => (vec![3, 2], vec![1, 1]),
        Family::Heawood => (vec![3, 2, 2], vec![1, 1, 3]),
        _ => return Err(bad(format!("{family} is not a distance-regular family"))),
    };
    IntersectionArray::new(b, c)
}

pub fn closed_form_spectrum(family: Family) -> Result<Spectrum> {
    family.order()?;
    let eig: Vec<(f64, usize)> = match family {
        Family::Johnson { m, t } => johnson_spectrum(m as i64, t as i64),
        Family::Triangular { s } => johnson_spectrum(s as i64, 2),
        Family::Hamming { s, m } => hamming_spectrum(s as i64, m as i64),
        Family::Lattice { s } => hamming_spectrum(2, s as i64),
        _ => return Err(bad(format!("no closed-form spectrum for {family}"))),
    };
    Ok(Spectrum::from_grouped(eig))
}

fn johnson_spectrum(m: i64, t: i64) -> Vec<(f64, usize)> {
    (0..=t)
        .map(|j| {
            let v = (t - j) * (m - t - j) - j;
            let mult = binom_i(m, j) - binom_i(m, j - 1);
            (v as f64, mult as usize)
        })
        .collect()
}

fn hamming_spectrum(s: i64, m: i64) -> Vec<(f64, usize)> {
    (0..=s)
        .map(|j| {
            let v = s * (m - 1) - j * m;
            let mult = binom_i(s, j) * (m as u64 - 1).pow(j as u32);
            (v as f64, mult as usize)
        })
        .collect()
}

/// Motion of the Johnson group on `binom(m,t)^d` points: the smaller of the
/// supports of a transposition and of a 3-cycle acting in one coordinate.
pub fn johnson_motion_formula(m: u64, t: u64, d: u32) -> Option<u64> {
    let (m, t) = (m as i64, t as i64);
    let n = binom_i(m, t);
    let two = n.checked_sub(binom_i(m - 2, t) + binom_i(m - 2, t - 2))?;
    let three = n.checked_sub(binom_i(m - 3, t) + binom_i(m - 3, t - 3))?;
    two.min(three).checked_mul(n.checked_pow(d.checked_sub(1)?)?)
}

/// Motion of `S_m wr S_s` on `m^s` words, the power `d` taken as extra
/// coordinates of the same product action: a symbol transposition moves
/// `2 m^(s-1)` words, a coordinate swap `m^(s-1) (m-1)`.
pub fn hamming_motion_formula(s: u32, m: u64) -> Option<u64> {
    let base = m.checked_pow(s.checked_sub(1)?)?;
    let symbol = base.checked_mul(2)?;
    if s >= 2 {
        Some(symbol.min(base.checked_mul(m - 1)?))
    } else {
        Some(symbol)
    }
}

/// Exact motion of an exceptional family.
pub fn exceptional_motion(family: Family) -> Result<u64> {
    family.order()?;
    let v = match family {
        Family::Johnson { m, t } => johnson_motion_formula(m as u64, t as u64, 1),
        Family::Triangular { s } => johnson_motion_formula(s as u64, 2, 1),
        Family::Hamming { s, m } => hamming_motion_formula(s, m as u64),
        Family::Lattice { s } => hamming_motion_formula(2, s as u64),
        // a transposition of two matched pairs; m = 2 is two disjoint edges
        Family::Cocktail { m } => Some(if m >= 3 { 4 } else { 2 }),
        _ => return Err(bad(format!("no exact motion formula for {family}"))),
    };
    v.ok_or(Error::Overflow("exceptional motion"))
}

/// Exceptional families on exactly `n` vertices, canonical names only.
pub fn exceptional_candidates(n: usize) -> Vec<Family> {
    let n64 = n as u64;
    let mut out = Vec::new();
    let mut t = 2u32;
    while binomial(2 * t as u64 + 1, t as u64).is_some_and(|b| b <= n64) {
        let mut m = 2 * t + 1;
        while let Some(b) = binomial(m as u64, t as u64).filter(|&b| b <= n64) {
            if b == n64 {
                out.push(Family::Johnson { m, t }.canonical());
            }
            m += 1;
        }
        t += 1;
    }
    for s in 1..=usize::BITS - n.leading_zeros() {
        let m = (n as f64).powf(1.0 / s as f64).round() as u64;
        for m in m.saturating_sub(1)..=m + 1 {
            if m >= 2 && m.checked_pow(s) == Some(n64) {
                let f = Family::Hamming { s, m: m as u32 }.canonical();
                if !out.contains(&f) {
                    out.push(f);
                }
            }
        }
    }
    if n.is_multiple_of(2) && n >= 6 {
        let f = Family::Cocktail { m: n as u32 / 2 };
        if !out.contains(&f) {
            out.push(f);
        }
    }
    out.sort();
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Confirmation {
    Isomorphism,
    /// Parameters match but the isomorphism search was skipped or ran out
    /// of time.
    ParameterMatchOnly,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Recognition {
    pub family: Family,
    pub tag: String,
    /// The color whose graph is the family graph.
    pub color: Color,
    /// True when that color is not the first non-diagonal one, e.g. the
    /// Petersen scheme seen as the complement of `triangular(5)`.
    pub complement: bool,
    pub confirmation: Confirmation,
}

/// Recognizes configurations that are the distance scheme of an exceptional
/// family graph, by matching intersection arrays and then confirming with
/// the isomorphism oracle.
pub fn recognize(cfg: &Configuration) -> Result<Option<Recognition>> {
    recognize_with_budget(cfg, RECOGNITION_BUDGET)
}

pub fn recognize_with_budget(cfg: &Configuration, budget: Duration) -> Result<Option<Recognition>> {
    let n = cfg.n();
    if !cfg.is_homogeneous() || n < 3 {
        return Ok(None);
    }
    let candidates = exceptional_candidates(n);
    if candidates.is_empty() {
        return Ok(None);
    }
    let arrays: Vec<(Family, IntersectionArray)> =
        candidates.into_iter().filter_map(|f| family_array(f).ok().map(|a| (f, a))).collect();
    let first = (0..cfg.rank() as Color).find(|&c| !cfg.is_diagonal_color(c));
    for color in 0..cfg.rank() as Color {
        if cfg.is_diagonal_color(color) || cfg.paired(color) != color {
            continue;
        }
        let g = cfg.constituent_graph(&[color]);
        if !g.is_connected() {
            continue;
        }
        let Ok(Ok(array)) = extract_intersection_array(&g) else { continue };
        let Some((family, _)) = arrays.iter().find(|(_, a)| *a == array) else { continue };
        let dist = Configuration::distance(&g)?;
        if !dist.same_up_to_relabeling(cfg) {
            continue;
        }
        let confirmation = if n <= RECOGNITION_LIMIT {
            let model = generate(*family)?;
            match isomorphism_within(&dist, &model.config, RECOGNITION_LIMIT, Some(budget))? {
                IsoOutcome::Isomorphic(_) => Confirmation::Isomorphism,
                IsoOutcome::TimedOut => Confirmation::ParameterMatchOnly,
                IsoOutcome::NotIsomorphic => continue,
            }
        } else {
            Confirmation::ParameterMatchOnly
        };
        let complement = Some(color) != first;
        let tag = if complement { format!("{family}-complement") } else { family.to_string() };
        return Ok(Some(Recognition { family: *family, tag, color, complement, confirmation }));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        assert_eq!(parse_family("johnson:7,3").unwrap(), Family::Johnson { m: 7, t: 3 });
        assert_eq!(parse_family("crown:4").unwrap(), Family::Cocktail { m: 4 });
        assert_eq!(parse_family("petersen").unwrap().to_string(), "petersen");
        assert!(parse_family("johnson:7").is_err());
        assert!(parse_family("johnson:7,x").is_err());
        assert!(parse_family("moore:57").is_err());
    }

    #[test]
    fn generators() {
        let j = generate(Family::Johnson { m: 7, t: 3 }).unwrap().graph.unwrap();
        assert_eq!((j.n(), j.regular_degree()), (35, Some(12)));
        let h = generate(Family::Hamming { s: 3, m: 3 }).unwrap().graph.unwrap();
        assert_eq!((h.n(), h.regular_degree()), (27, Some(6)));
        assert!(generate(Family::Johnson { m: 6, t: 3 }).is_err());
        assert!(generate(Family::Cyclotomic { p: 13, e: 2 }).is_ok());
        assert!(generate(Family::Cyclotomic { p: 7, e: 2 }).is_err());
        let c = generate(Family::Cyclotomic { p: 13, e: 3 }).unwrap().config;
        assert_eq!(c.rank(), 4);
        assert_eq!(c.color_counts(), vec![13, 52, 52, 52]);
    }

    #[test]
    fn spectra_and_motion() {
        let s = closed_form_spectrum(Family::Johnson { m: 7, t: 3 }).unwrap();
        assert_eq!(s.eigenvalues, vec![(12.0, 1), (5.0, 6), (0.0, 14), (-3.0, 14)]);
        let h = closed_form_spectrum(Family::Hamming { s: 3, m: 3 }).unwrap();
        assert_eq!(h.eigenvalues, vec![(6.0, 1), (3.0, 6), (0.0, 12), (-3.0, 8)]);
        let t = closed_form_spectrum(Family::Triangular { s: 5 }).unwrap();
        assert_eq!(t.eigenvalues, vec![(6.0, 1), (1.0, 4), (-2.0, 5)]);
        assert_eq!(exceptional_motion(Family::Johnson { m: 7, t: 3 }).unwrap(), 20);
        assert_eq!(exceptional_motion(Family::Hamming { s: 3, m: 3 }).unwrap(), 18);
        assert_eq!(exceptional_motion(Family::Triangular { s: 5 }).unwrap(), 6);
        assert_eq!(exceptional_motion(Family::Cocktail { m: 4 }).unwrap(), 4);
        assert_eq!(johnson_motion_formula(7, 3, 2), Some(20 * 35));
        assert!(exceptional_motion(Family::Petersen).is_err());
    }

    #[test]
    fn candidates() {
        assert_eq!(exceptional_candidates(35), vec![Family::Johnson { m: 7, t: 3 }, Family::Hamming { s: 1, m: 35 }]);
        assert_eq!(
            exceptional_candidates(8),
            vec![Family::Hamming { s: 1, m: 8 }, Family::Cocktail { m: 4 }]
        );
        assert!(exceptional_candidates(10).contains(&Family::Triangular { s: 5 }));
    }
}
