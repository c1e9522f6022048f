//! Leftmost and rightmost witnessing paths, left/right pairs, intervals
//! bounded by two witnessing paths, separating paths and certificate checks.

use std::fmt;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;

use crate::containment::verify_standard_example;
use crate::embedding::{embed_poset, entering_slot, PlaneEmbedding, Region, Side, SidePartition};
use crate::error::{Error, Result};
use crate::graph::CoverGraph;
use crate::poset::Poset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Left,
    Right,
}

impl Direction {
    pub fn opposite(self) -> Direction {
        match self {
            Direction::Left => Direction::Right,
            Direction::Right => Direction::Left,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Left => "left",
            Direction::Right => "right",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathOrder {
    LeftOf,
    RightOf,
    PrefixRelated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairClass {
    Comparable,
    LeftPair,
    RightPair,
    Mixed,
}

/// A cover-planar poset with a unique minimum `x0` and a plane embedding of
/// its cover graph carrying `e_∞` at `x0`.
#[derive(Debug)]
pub struct PlanePoset {
    poset: Poset,
    cover: CoverGraph,
    emb: PlaneEmbedding,
    x0: usize,
    cache: [Vec<OnceLock<Vec<usize>>>; 2],
}

impl Clone for PlanePoset {
    fn clone(&self) -> Self {
        PlanePoset::new(self.poset.clone(), self.emb.clone()).expect("already validated")
    }
}

impl PlanePoset {
    pub fn new(poset: Poset, emb: PlaneEmbedding) -> Result<Self> {
        let cover = CoverGraph::of(&poset);
        if emb.graph().len() != poset.len() || emb.graph().edges() != cover.graph.edges() {
            return Err(Error::InvalidEmbedding(
                "embedding is not of the cover graph".into(),
            ));
        }
        let x0 = emb.x0().ok_or(Error::MissingEInfinity)?;
        let mins = poset.minimal_elements();
        if mins != [x0] {
            return Err(Error::PreconditionViolated(format!(
                "e_infinity must sit at the unique minimal element, found at `{}`",
                poset.label(x0)
            )));
        }
        if !emb.outer_face_vertices().contains(&x0) {
            return Err(Error::EmbeddingConstraintUnsatisfied(
                poset.label(x0).to_string(),
            ));
        }
        let n = poset.len();
        let cache = [
            (0..n).map(|_| OnceLock::new()).collect(),
            (0..n).map(|_| OnceLock::new()).collect(),
        ];
        Ok(PlanePoset {
            poset,
            cover,
            emb,
            x0,
            cache,
        })
    }

    /// Embeds the cover graph with [`embed_poset`].
    pub fn embed(poset: Poset) -> Result<Self> {
        let emb = embed_poset(&poset)?;
        PlanePoset::new(poset, emb)
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn cover(&self) -> &CoverGraph {
        &self.cover
    }

    pub fn embedding(&self) -> &PlaneEmbedding {
        &self.emb
    }

    pub fn x0(&self) -> usize {
        self.x0
    }

    /// The same poset drawn in the mirror.
    pub fn reflect(&self) -> PlanePoset {
        PlanePoset::new(self.poset.clone(), self.emb.reflect()).expect("mirror keeps e_infinity")
    }

    /// `(u,e)`-ordering of the edges leaving `u`, as their upper endpoints.
    pub fn u_e_ordering(&self, u: usize, from: Option<usize>) -> Result<Vec<usize>> {
        crate::embedding::u_e_ordering(&self.emb, &self.cover, u, from)
    }

    /// `W_L(u)` or `W_R(u)`.
    pub fn witnessing_path(&self, u: usize, dir: Direction) -> Vec<usize> {
        let slot = match dir {
            Direction::Left => 0,
            Direction::Right => 1,
        };
        self.cache[slot][u]
            .get_or_init(|| {
                self.extreme_path(self.x0, None, u, dir, &|_| true, &|_, _| true)
                    .expect("x0 is below every element")
            })
            .clone()
    }

    /// Greedy extreme path from `source` (entered along `from -> source`, or
    /// `e_∞`) to `target`, using only vertices and edges accepted by the
    /// filters. At each step the first (Left) or last (Right) leaving edge
    /// that can still reach `target` is taken.
    pub fn extreme_path(
        &self,
        source: usize,
        from: Option<usize>,
        target: usize,
        dir: Direction,
        vertex_ok: &dyn Fn(usize) -> bool,
        edge_ok: &dyn Fn(usize, usize) -> bool,
    ) -> Result<Vec<usize>> {
        let n = self.poset.len();
        let mut reach = FixedBitSet::with_capacity(n);
        reach.insert(target);
        let mut stack = vec![target];
        while let Some(v) = stack.pop() {
            for &w in &self.cover.down[v] {
                if !reach.contains(w) && vertex_ok(w) && edge_ok(w, v) {
                    reach.insert(w);
                    stack.push(w);
                }
            }
        }
        if !reach.contains(source) {
            return Err(Error::InvalidPath(format!(
                "no witnessing path from `{}` to `{}`",
                self.poset.label(source),
                self.poset.label(target)
            )));
        }
        let mut path = vec![source];
        let mut prev = from;
        let mut u = source;
        while u != target {
            let slot = entering_slot(&self.emb, &self.cover, u, prev)?;
            let order: Vec<usize> = self
                .emb
                .clockwise_after(u, slot)
                .into_iter()
                .filter(|&v| self.cover.is_up(u, v) && reach.contains(v) && edge_ok(u, v))
                .collect();
            let next = match dir {
                Direction::Left => order.first(),
                Direction::Right => order.last(),
            };
            let v = *next.expect("a reachable vertex below the target has a reachable cover");
            path.push(v);
            prev = Some(u);
            u = v;
        }
        Ok(path)
    }

    fn check_witnessing(&self, w: &[usize]) -> Result<()> {
        if w.first() != Some(&self.x0) {
            return Err(Error::PathNotAnchored);
        }
        for s in w.windows(2) {
            if !self.cover.is_up(s[0], s[1]) {
                return Err(Error::InvalidPath(format!(
                    "`{}` -> `{}` is not a cover edge",
                    self.poset.label(s[0]),
                    self.poset.label(s[1])
                )));
            }
        }
        Ok(())
    }

    /// Left/right comparison of two witnessing paths from `x0`.
    pub fn compare_paths(&self, w: &[usize], w2: &[usize]) -> Result<PathOrder> {
        self.check_witnessing(w)?;
        self.check_witnessing(w2)?;
        let i = match (1..w.len().min(w2.len())).find(|&i| w[i] != w2[i]) {
            Some(i) => i,
            None => return Ok(PathOrder::PrefixRelated),
        };
        let from = if i >= 2 { Some(w[i - 2]) } else { None };
        let order = self.u_e_ordering(w[i - 1], from)?;
        let p1 = order
            .iter()
            .position(|&v| v == w[i])
            .expect("cover edge leaves u");
        let p2 = order
            .iter()
            .position(|&v| v == w2[i])
            .expect("cover edge leaves u");
        Ok(if p1 < p2 {
            PathOrder::LeftOf
        } else {
            PathOrder::RightOf
        })
    }

    pub fn classify_pair(&self, a: usize, b: usize) -> PairClass {
        if self.poset.comparable(a, b) {
            return PairClass::Comparable;
        }
        let l = self.compare_paths(
            &self.witnessing_path(a, Direction::Left),
            &self.witnessing_path(b, Direction::Left),
        );
        let r = self.compare_paths(
            &self.witnessing_path(a, Direction::Right),
            &self.witnessing_path(b, Direction::Right),
        );
        match (l, r) {
            (Ok(PathOrder::LeftOf), Ok(PathOrder::LeftOf)) => PairClass::LeftPair,
            (Ok(PathOrder::RightOf), Ok(PathOrder::RightOf)) => PairClass::RightPair,
            _ => PairClass::Mixed,
        }
    }

    /// Left/right of every vertex relative to a path starting at `x0`.
    pub fn side_partition(&self, path: &[usize]) -> Result<SidePartition> {
        self.emb.side_partition(path)
    }

    /// The `(x,y,W,W')`-interval: the closed region bounded by `W` and `W'`
    /// away from `e_∞`.
    pub fn interval(&self, w: &[usize], w_prime: &[usize]) -> Result<Interval<'_>> {
        for path in [w, w_prime] {
            if path.len() < 2 {
                return Err(Error::InvalidPath(
                    "interval paths need at least one edge".into(),
                ));
            }
            for s in path.windows(2) {
                if !self.cover.is_up(s[0], s[1]) {
                    return Err(Error::InvalidPath(format!(
                        "`{}` -> `{}` is not a cover edge",
                        self.poset.label(s[0]),
                        self.poset.label(s[1])
                    )));
                }
            }
        }
        let (x, y) = (w[0], *w.last().unwrap());
        if w_prime[0] != x || *w_prime.last().unwrap() != y {
            return Err(Error::InvalidPath(
                "W and W' must share both endpoints".into(),
            ));
        }
        let mut seen = FixedBitSet::with_capacity(self.poset.len());
        for &v in &w[1..w.len() - 1] {
            seen.insert(v);
        }
        for &v in &w_prime[1..w_prime.len() - 1] {
            if seen.contains(v) {
                return Err(Error::PathsIntersect(self.poset.label(v).to_string()));
            }
        }
        if w.len() == 2 && w_prime.len() == 2 {
            return Err(Error::PathsIntersect("W and W' are the same edge".into()));
        }
        let mut cycle = w.to_vec();
        cycle.extend(w_prime[1..w_prime.len() - 1].iter().rev());
        let region = self.emb.enclosed_region(&cycle)?;
        Ok(Interval {
            pp: self,
            x,
            y,
            w: w.to_vec(),
            w_prime: w_prime.to_vec(),
            region,
        })
    }
}

/// First failure of the shadowing property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShadowingViolation {
    pub z: usize,
    pub dir: Direction,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HatPartition {
    /// Elements incomparable to `y`.
    pub a_hat: Vec<usize>,
    /// Elements strictly above `y`.
    pub b_hat: Vec<usize>,
    /// Elements between `x` and `y`.
    pub e_hat: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatingPath {
    pub dir: Direction,
    pub a: usize,
    pub b: usize,
    pub peak: usize,
    /// `x[W_D'(a)]a`, `a[W]peak` and `y[W_D(b)]peak`.
    pub segments: [Vec<usize>; 3],
}

impl SeparatingPath {
    /// The concatenated path from `x` to `y`.
    pub fn path(&self) -> Vec<usize> {
        let mut out = self.segments[0].clone();
        out.extend(&self.segments[1][1..]);
        out.extend(self.segments[2].iter().rev().skip(1));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Obs21Outcome {
    pub pair: PairClass,
    /// Side of `a'` relative to `N_L(a,b)` and `N_R(a,b)`.
    pub sides: [Option<Side>; 2],
    pub holds: bool,
}

pub struct Interval<'a> {
    pp: &'a PlanePoset,
    pub x: usize,
    pub y: usize,
    pub w: Vec<usize>,
    pub w_prime: Vec<usize>,
    region: Region,
}

impl Interval<'_> {
    pub fn contains(&self, v: usize) -> bool {
        self.region.contains(v)
    }

    pub fn members(&self) -> Vec<usize> {
        self.region.members()
    }

    pub fn region(&self) -> &Region {
        &self.region
    }

    /// The subposet `Q` induced by the interval.
    pub fn poset(&self) -> Result<Poset> {
        self.pp.poset.induced_subposet(&self.members())
    }

    fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.region.contains_edge(&self.pp.emb, u, v)
    }

    /// Checks that `W_D(z)` passes through `x` and then stays inside, for
    /// every `z` in the interval and both directions.
    pub fn shadowing(&self) -> std::result::Result<(), ShadowingViolation> {
        for z in self.members() {
            for dir in [Direction::Left, Direction::Right] {
                let path = self.pp.witnessing_path(z, dir);
                let Some(start) = path.iter().position(|&v| v == self.x) else {
                    return Err(ShadowingViolation {
                        z,
                        dir,
                        reason: "path avoids x".into(),
                    });
                };
                let tail = &path[start..];
                if let Some(&v) = tail.iter().find(|&&v| !self.contains(v)) {
                    return Err(ShadowingViolation {
                        z,
                        dir,
                        reason: format!("path leaves the interval at `{}`", self.pp.poset.label(v)),
                    });
                }
                if let Some(s) = tail.windows(2).find(|s| !self.contains_edge(s[0], s[1])) {
                    return Err(ShadowingViolation {
                        z,
                        dir,
                        reason: format!(
                            "edge `{}`-`{}` runs outside the interval",
                            self.pp.poset.label(s[0]),
                            self.pp.poset.label(s[1])
                        ),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn hat_partition(&self) -> HatPartition {
        let p = &self.pp.poset;
        let mut h = HatPartition {
            a_hat: Vec::new(),
            b_hat: Vec::new(),
            e_hat: Vec::new(),
        };
        for z in self.members() {
            if p.incomparable(z, self.y) {
                h.a_hat.push(z);
            } else if p.lt(self.y, z) {
                h.b_hat.push(z);
            }
            if p.le(self.x, z) && p.le(z, self.y) {
                h.e_hat.push(z);
            }
        }
        h
    }

    /// `N_L(a,b)` or `N_R(a,b)`. The middle segment is the leftmost
    /// witnessing path from `a` to the peak inside the interval, entered
    /// along the last edge of the first segment.
    pub fn separating_path(&self, a: usize, b: usize, dir: Direction) -> Result<SeparatingPath> {
        let p = &self.pp.poset;
        if !self.contains(a) || !self.contains(b) {
            return Err(Error::PreconditionViolated(
                "a and b must lie in the interval".into(),
            ));
        }
        if !p.incomparable(a, self.y) || !p.lt(self.y, b) || !p.lt(a, b) {
            return Err(Error::PreconditionViolated(format!(
                "need a || y < b and a < b, got a=`{}`, b=`{}`",
                p.label(a),
                p.label(b)
            )));
        }
        let to_b = self.pp.witnessing_path(b, dir);
        let to_a = self.pp.witnessing_path(a, dir.opposite());
        let y_pos = to_b.iter().position(|&v| v == self.y).ok_or_else(|| {
            Error::PreconditionViolated(format!(
                "`{}` is not on W_{}(`{}`)",
                p.label(self.y),
                dir,
                p.label(b)
            ))
        })?;
        let x_pos = to_a.iter().position(|&v| v == self.x).ok_or_else(|| {
            Error::PreconditionViolated(format!(
                "`{}` is not on the path to `{}`",
                p.label(self.x),
                p.label(a)
            ))
        })?;
        let peak_pos =
            (0..to_b.len())
                .find(|&i| p.lt(a, to_b[i]))
                .ok_or_else(|| Error::NoPeak {
                    a: p.label(a).into(),
                    b: p.label(b).into(),
                })?;
        let peak = to_b[peak_pos];
        let first = to_a[x_pos..].to_vec();
        let from = first.len().checked_sub(2).map(|i| first[i]);
        let middle = self.pp.extreme_path(
            a,
            from,
            peak,
            Direction::Left,
            &|v| self.contains(v),
            &|u, v| self.contains_edge(u, v),
        )?;
        let last = to_b[y_pos..=peak_pos].to_vec();
        Ok(SeparatingPath {
            dir,
            a,
            b,
            peak,
            segments: [first, middle, last],
        })
    }

    /// Sides of the interval relative to a separating path.
    pub fn sides(&self, n: &SeparatingPath) -> Result<SidePartition> {
        self.region.side_of_path(&self.pp.emb, &n.path())
    }

    /// Checks that `a'` lies on the right (left pair) or left (right pair)
    /// of both separating paths of `(a,b)`.
    pub fn obs21_check(&self, a: usize, a2: usize, b: usize) -> Result<Obs21Outcome> {
        let h = self.hat_partition();
        if !h.a_hat.contains(&a) || !h.a_hat.contains(&a2) || !h.b_hat.contains(&b) {
            return Err(Error::PreconditionViolated(
                "need a, a' incomparable to y and b above y".into(),
            ));
        }
        let pair = self.pp.classify_pair(a, a2);
        let want = match pair {
            PairClass::LeftPair => Side::Right,
            PairClass::RightPair => Side::Left,
            other => {
                return Err(Error::PreconditionViolated(format!(
                    "(a, a') is {other:?}, not a left or right pair"
                )));
            }
        };
        let mut sides = [None; 2];
        for (k, dir) in [Direction::Left, Direction::Right].into_iter().enumerate() {
            let n = self.separating_path(a, b, dir)?;
            sides[k] = self.sides(&n)?.of(a2);
        }
        let holds = sides.iter().all(|&s| s == Some(want));
        Ok(Obs21Outcome { pair, sides, holds })
    }
}

/// Two witnessing paths `W`, `W'` from `x` to `y` and lists `a`, `b` of equal length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalCertificate {
    pub x: usize,
    pub y: usize,
    pub w: Vec<usize>,
    pub w_prime: Vec<usize>,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ItemResult {
    pub holds: bool,
    pub counterexample: Option<String>,
}

impl ItemResult {
    fn pass() -> Self {
        ItemResult {
            holds: true,
            counterexample: None,
        }
    }

    fn fail(msg: String) -> Self {
        ItemResult {
            holds: false,
            counterexample: Some(msg),
        }
    }
}

/// Outcome of each of the four certificate items, in order: shadowing,
/// standard example, position relative to `y`, left pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub items: [ItemResult; 4],
}

impl LemmaReport {
    pub fn holds(&self) -> bool {
        self.items.iter().all(|i| i.holds)
    }

    pub fn failed_items(&self) -> Vec<usize> {
        (0..4)
            .filter(|&i| !self.items[i].holds)
            .map(|i| i + 1)
            .collect()
    }
}

pub fn verify_lemma_certificate(
    pp: &PlanePoset,
    cert: &IntervalCertificate,
) -> Result<LemmaReport> {
    let p = pp.poset();
    let k = cert.a.len();
    if k < 2 || cert.b.len() != k {
        return Err(Error::MalformedCertificate(format!(
            "need equal lists of length at least 2, got {} and {}",
            cert.a.len(),
            cert.b.len()
        )));
    }
    let all = cert
        .a
        .iter()
        .chain(&cert.b)
        .chain(&cert.w)
        .chain(&cert.w_prime);
    if let Some(&v) = all.clone().find(|&&v| v >= p.len()) {
        return Err(Error::MalformedCertificate(format!(
            "element #{v} out of range"
        )));
    }
    if cert.w.first() != Some(&cert.x)
        || cert.w_prime.first() != Some(&cert.x)
        || cert.w.last() != Some(&cert.y)
        || cert.w_prime.last() != Some(&cert.y)
    {
        return Err(Error::MalformedCertificate(
            "W and W' must run from x to y".into(),
        ));
    }
    let interval = pp
        .interval(&cert.w, &cert.w_prime)
        .map_err(|e| Error::MalformedCertificate(e.to_string()))?;
    let label = |v: usize| p.label(v).to_string();

    let item1 = match interval.shadowing() {
        Ok(()) => ItemResult::pass(),
        Err(v) => ItemResult::fail(format!("W_{}(`{}`): {}", v.dir, label(v.z), v.reason)),
    };

    let outside: Vec<usize> = cert
        .a
        .iter()
        .chain(&cert.b)
        .copied()
        .filter(|&v| !interval.contains(v))
        .collect();
    let pairs: Vec<(usize, usize)> = cert.a.iter().copied().zip(cert.b.iter().copied()).collect();
    let item2 = if let Some(&v) = outside.first() {
        ItemResult::fail(format!("`{}` is not in the interval", label(v)))
    } else if verify_standard_example(p, &pairs)? {
        ItemResult::pass()
    } else {
        ItemResult::fail(first_se_violation(p, &pairs))
    };

    let mut item3 = ItemResult::pass();
    for alpha in 0..k {
        if !p.incomparable(cert.a[alpha], cert.y) {
            item3 = ItemResult::fail(format!(
                "a{} = `{}` is comparable to y",
                alpha + 1,
                label(cert.a[alpha])
            ));
            break;
        }
        if !p.lt(cert.y, cert.b[alpha]) {
            item3 = ItemResult::fail(format!(
                "b{} = `{}` is not above y",
                alpha + 1,
                label(cert.b[alpha])
            ));
            break;
        }
    }

    let mut item4 = ItemResult::pass();
    'outer: for (name, list) in [("a", &cert.a), ("b", &cert.b)] {
        for i in 0..k {
            for j in i + 1..k {
                let c = pp.classify_pair(list[i], list[j]);
                if c != PairClass::LeftPair {
                    item4 =
                        ItemResult::fail(format!("({name}{}, {name}{}) is {c:?}", i + 1, j + 1));
                    break 'outer;
                }
            }
        }
    }
    Ok(LemmaReport {
        items: [item1, item2, item3, item4],
    })
}

fn first_se_violation(p: &Poset, pairs: &[(usize, usize)]) -> String {
    let k = pairs.len();
    for i in 0..k {
        for j in 0..k {
            let (a, b) = (pairs[i].0, pairs[j].1);
            if i == j && p.comparable(a, b) {
                return format!("a{} and b{} are comparable", i + 1, j + 1);
            }
            if i != j && !p.lt(a, b) {
                return format!("a{} is not below b{}", i + 1, j + 1);
            }
            if i < j {
                if p.comparable(pairs[i].0, pairs[j].0) {
                    return format!("a{} and a{} are comparable", i + 1, j + 1);
                }
                if p.comparable(pairs[i].1, pairs[j].1) {
                    return format!("b{} and b{} are comparable", i + 1, j + 1);
                }
            }
        }
    }
    "elements repeat".into()
}
