//! Generators for standard examples, wheels, Kelly posets and the random
//! instance families used by the theorem harness.
//!
//! Label grammar: standard examples use `a1..ad`, `b1..bd`; wheels use
//! `r(i,j)`, `min` and (optionally) `max`; Kelly posets use `a{i}` for the
//! singleton `{i}`, `b{i}` for `[d] - {i}`, `p{i}` for the prefix `[1,i]` and
//! `s{i}` for the suffix `[i,d]`.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poset::Poset;

/// The cyclic interval `⟨i,j⟩` of `[n]`: `[i,j]` when `i <= j`, otherwise
/// `[i,n] ∪ [1,j]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicInterval {
    pub i: usize,
    pub j: usize,
    pub n: usize,
}

impl CyclicInterval {
    pub fn new(i: usize, j: usize, n: usize) -> Result<Self> {
        for idx in [i, j] {
            if idx == 0 || idx > n {
                return Err(Error::IndexOutOfRange {
                    index: idx,
                    modulus: n,
                });
            }
        }
        Ok(CyclicInterval { i, j, n })
    }

    /// Members in cyclic order starting at `i`.
    pub fn members(&self) -> Vec<usize> {
        (0..self.len())
            .map(|k| (self.i - 1 + k) % self.n + 1)
            .collect()
    }

    pub fn len(&self) -> usize {
        if self.i <= self.j {
            self.j - self.i + 1
        } else {
            self.n - self.i + 1 + self.j
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, alpha: usize) -> bool {
        if self.i <= self.j {
            self.i <= alpha && alpha <= self.j
        } else {
            alpha >= self.i || alpha <= self.j
        }
    }

    /// Bitmask over `[n]` (bit `k-1` for member `k`).
    pub fn mask(&self) -> u128 {
        self.members()
            .into_iter()
            .fold(0u128, |m, k| m | (1u128 << (k - 1)))
    }

    /// True iff this interval is a legal wheel index (`j + 1 ≢ i mod n`).
    pub fn is_wheel_index(&self) -> bool {
        (self.j % self.n) + 1 != self.i
    }
}

/// Member set of `⟨i,j⟩` as a sorted list.
pub fn cyclic_interval_members(i: usize, j: usize, n: usize) -> Result<Vec<usize>> {
    let mut m = CyclicInterval::new(i, j, n)?.members();
    m.sort_unstable();
    Ok(m)
}

/// A wheel element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WheelLabel {
    Min,
    Max,
    R(usize, usize),
}

impl fmt::Display for WheelLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WheelLabel::Min => write!(f, "min"),
            WheelLabel::Max => write!(f, "max"),
            WheelLabel::R(i, j) => write!(f, "r({i},{j})"),
        }
    }
}

impl FromStr for WheelLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min" => return Ok(WheelLabel::Min),
            "max" => return Ok(WheelLabel::Max),
            _ => {}
        }
        let bad = || Error::Format(format!("not a wheel label: `{s}`"));
        let inner = s
            .strip_prefix("r(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (i, j) = inner.split_once(',').ok_or_else(bad)?;
        let i = i.trim().parse().map_err(|_| bad())?;
        let j = j.trim().parse().map_err(|_| bad())?;
        Ok(WheelLabel::R(i, j))
    }
}

pub fn wheel_label(i: usize, j: usize) -> String {
    WheelLabel::R(i, j).to_string()
}

/// `S_d`: `a_i < b_j` iff `i != j`.
pub fn standard_example(d: usize) -> Result<Poset> {
    if d < 2 {
        return Err(Error::OrderTooSmall { order: d, min: 2 });
    }
    let mut labels: Vec<String> = (1..=d).map(|i| format!("a{i}")).collect();
    labels.extend((1..=d).map(|i| format!("b{i}")));
    let mut pairs = Vec::with_capacity(d * (d - 1));
    for i in 0..d {
        for j in 0..d {
            if i != j {
                pairs.push((i, d + j));
            }
        }
    }
    Poset::from_index_pairs(labels, &pairs)
}

/// Labels of the standard example sitting inside `wheel(n)`: `a_α = r(α+1,α-1)`
/// and `b_α = r(α,α)`, returned as `(a_list, b_list)`.
pub fn wheel_standard_example_labels(n: usize) -> (Vec<String>, Vec<String>) {
    let a = (1..=n)
        .map(|alpha| wheel_label(alpha % n + 1, (alpha + n - 2) % n + 1))
        .collect();
    let b = (1..=n).map(|alpha| wheel_label(alpha, alpha)).collect();
    (a, b)
}

/// Every legal wheel index `(i, j)` of order `n`, grouped by start.
pub fn wheel_indices(n: usize) -> Vec<CyclicInterval> {
    let mut out = Vec::with_capacity(n * (n - 1));
    for i in 1..=n {
        for j in 1..=n {
            let c = CyclicInterval { i, j, n };
            if c.is_wheel_index() {
                out.push(c);
            }
        }
    }
    out
}

/// The wheel `H_n`: cyclic intervals ordered by reverse proper containment,
/// plus a global minimum and optionally a global maximum.
pub fn wheel(n: usize, attach_max: bool) -> Result<Poset> {
    if n < 3 {
        return Err(Error::OrderTooSmall { order: n, min: 3 });
    }
    if n > 120 {
        return Err(Error::Format(format!("wheel order {n} too large")));
    }
    let idx = wheel_indices(n);
    let masks: Vec<u128> = idx.iter().map(|c| c.mask()).collect();
    let mut labels = vec!["min".to_string()];
    labels.extend(idx.iter().map(|c| wheel_label(c.i, c.j)));
    let mut pairs = Vec::new();
    for (x, &mx) in masks.iter().enumerate() {
        pairs.push((0, x + 1));
        for (y, &my) in masks.iter().enumerate() {
            // y ⊊ x  means  x < y
            if x != y && my & mx == my && my != mx {
                pairs.push((x + 1, y + 1));
            }
        }
    }
    if attach_max {
        let t = labels.len();
        labels.push("max".to_string());
        pairs.extend((0..t).map(|x| (x, t)));
    }
    Poset::from_index_pairs(labels, &pairs)
}

/// Kelly's planar poset `K_d`: the subsets `{i}`, `[d]-{i}`, `[1,i]` and
/// `[i,d]` of `[d]` ordered by inclusion.
pub fn kelly(d: usize) -> Result<Poset> {
    if d < 3 {
        return Err(Error::OrderTooSmall { order: d, min: 3 });
    }
    let full: u128 = if d == 128 {
        u128::MAX
    } else {
        (1u128 << d) - 1
    };
    let mut sets: Vec<(String, u128)> = Vec::new();
    for i in 1..=d {
        sets.push((format!("a{i}"), 1u128 << (i - 1)));
    }
    for i in 1..=d {
        sets.push((format!("b{i}"), full & !(1u128 << (i - 1))));
    }
    let range = |lo: usize, hi: usize| (lo..=hi).fold(0u128, |m, k| m | (1u128 << (k - 1)));
    // [1,1], [1,d-1], [d,d], [2,d] already appear above
    for i in 2..=d.saturating_sub(2) {
        sets.push((format!("p{i}"), range(1, i)));
    }
    for i in 3..d {
        sets.push((format!("s{i}"), range(i, d)));
    }
    let labels: Vec<String> = sets.iter().map(|(l, _)| l.clone()).collect();
    let mut pairs = Vec::new();
    for (x, &(_, mx)) in sets.iter().enumerate() {
        for (y, &(_, my)) in sets.iter().enumerate() {
            if x != y && mx & my == mx && mx != my {
                pairs.push((x, y));
            }
        }
    }
    Poset::from_index_pairs(labels, &pairs)
}

/// Random cover-planar poset with a unique minimal element.
///
/// A stacked triangulation on `size_budget` vertices is thinned to a random
/// connected spanning subgraph, and every edge is oriented along a random
/// growth order rooted at `v0`. The transitive reduction of the resulting DAG
/// is a subgraph of a planar graph, and `v0` is the only source. Budgets
/// below 2 are clamped to the 2-chain.
pub fn random_cover_planar_with_unique_min(seed: u64, size_budget: usize) -> Poset {
    let n = size_budget.max(2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    if n == 2 {
        edges.push((0, 1));
    } else {
        edges.extend([(0, 1), (1, 2), (0, 2)]);
        let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1]];
        for v in 3..n {
            let f = rng.gen_range(0..faces.len());
            let [x, y, z] = faces.swap_remove(f);
            edges.extend([(x, v), (y, v), (z, v)]);
            faces.extend([[x, y, v], [y, z, v], [z, x, v]]);
        }
    }
    // thin out: keep a random spanning tree plus each other edge with probability `keep`
    let keep: f64 = rng.gen_range(0.15..0.85);
    edges.shuffle(&mut rng);
    let mut dsu: Vec<usize> = (0..n).collect();
    fn find(d: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while d[r] != r {
            r = d[r];
        }
        let mut c = x;
        while d[c] != r {
            let nx = d[c];
            d[c] = r;
            c = nx;
        }
        r
    }
    let mut kept = Vec::new();
    let mut extra = Vec::new();
    for &(u, v) in &edges {
        let (ru, rv) = (find(&mut dsu, u), find(&mut dsu, v));
        if ru != rv {
            dsu[ru] = rv;
            kept.push((u, v));
        } else {
            extra.push((u, v));
        }
    }
    for e in extra {
        if rng.gen_bool(keep) {
            kept.push(e);
        }
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in &kept {
        adj[u].push(v);
        adj[v].push(u);
    }
    for a in adj.iter_mut() {
        a.sort_unstable();
    }
    // random growth order from a random root
    let root = rng.gen_range(0..n);
    let mut rank = vec![usize::MAX; n];
    let mut order = vec![root];
    rank[root] = 0;
    let mut frontier: Vec<usize> = Vec::new();
    let push_nbrs = |v: usize, rank: &Vec<usize>, frontier: &mut Vec<usize>| {
        for &w in &adj[v] {
            if rank[w] == usize::MAX && !frontier.contains(&w) {
                frontier.push(w);
            }
        }
    };
    push_nbrs(root, &rank, &mut frontier);
    while !frontier.is_empty() {
        let k = rng.gen_range(0..frontier.len());
        let v = frontier.swap_remove(k);
        rank[v] = order.len();
        order.push(v);
        push_nbrs(v, &rank, &mut frontier);
    }
    let labels: Vec<String> = (0..n).map(|k| format!("v{k}")).collect();
    let pairs: Vec<(usize, usize)> = kept
        .iter()
        .map(|&(u, v)| {
            if rank[u] < rank[v] {
                (rank[u], rank[v])
            } else {
                (rank[v], rank[u])
            }
        })
        .collect();
    Poset::from_index_pairs(labels, &pairs).expect("growth order is acyclic")
}

/// Interval order of `n` random closed intervals: `x < y` iff `x` ends
/// strictly before `y` starts.
pub fn interval_order(seed: u64, n: usize) -> Poset {
    let n = n.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let intervals: Vec<(u32, u32)> = (0..n)
        .map(|_| {
            let l = rng.gen_range(0..100u32);
            (l, l + rng.gen_range(0..30u32))
        })
        .collect();
    interval_order_from(&intervals, |k| format!("i{k}"))
}

/// All intervals `[a,b]` with `1 <= a < b <= n`, labelled `"[a,b]"`, with
/// `[a,b] < [c,d]` iff `b <= c` (intervals read as half-open).
pub fn interval_order_all(n: usize) -> Poset {
    let mut intervals = Vec::new();
    for a in 1..=n as u32 {
        for b in a + 1..=n as u32 {
            intervals.push((2 * a, 2 * b - 1));
        }
    }
    let names: Vec<String> = intervals
        .iter()
        .map(|(a, b)| format!("[{},{}]", a / 2, b.div_ceil(2)))
        .collect();
    interval_order_from(&intervals, |k| names[k].clone())
}

fn interval_order_from(intervals: &[(u32, u32)], name: impl Fn(usize) -> String) -> Poset {
    let labels: Vec<String> = (0..intervals.len()).map(name).collect();
    let mut pairs = Vec::new();
    for (x, &(_, rx)) in intervals.iter().enumerate() {
        for (y, &(ly, _)) in intervals.iter().enumerate() {
            if rx < ly {
                pairs.push((x, y));
            }
        }
    }
    Poset::from_index_pairs(labels, &pairs).expect("interval precedence is acyclic")
}

/// Random poset on `n` elements: each pair `i < j` of a hidden linear order
/// is related with probability `density`, then closed transitively.
pub fn random_poset(seed: u64, n: usize, density: f64) -> Poset {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density.clamp(0.0, 1.0)) {
                pairs.push((perm[i], perm[j]));
            }
        }
    }
    let labels = (0..n).map(|k| format!("e{k}")).collect();
    Poset::from_index_pairs(labels, &pairs).expect("pairs follow a linear order")
}

/// A chain `c0 < c1 < ...`.
pub fn chain(n: usize) -> Poset {
    let labels = (0..n).map(|k| format!("c{k}")).collect();
    let pairs: Vec<(usize, usize)> = (1..n).map(|k| (k - 1, k)).collect();
    Poset::from_index_pairs(labels, &pairs).expect("chain")
}

/// An antichain `x0, x1, ...`.
pub fn antichain(n: usize) -> Poset {
    let labels = (0..n).map(|k| format!("x{k}")).collect();
    Poset::from_index_pairs(labels, &[]).expect("antichain")
}
