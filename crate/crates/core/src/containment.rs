//! Standard example number, wheel and Kelly numbers, and subposet search.
//!
//! `se(P)` reduces to a maximum clique in the graph whose vertices are the
//! incomparable ordered pairs `(a, b)` and whose edges join pairs that
//! together induce `S_2` with that pairing. A clique of size `d` is then
//! exactly a copy of `S_d`.

use fixedbitset::FixedBitSet;

use crate::budget::{Budget, Meter};
use crate::clique::{max_clique, BitGraph};
use crate::error::{Error, Result};
use crate::families;
use crate::poset::Poset;

/// `se(P)` together with the pairs `(a_i, b_i)` of a witnessing copy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardExampleNumber {
    pub value: usize,
    /// Empty when `value == 1` and `P` contains no `S_2`.
    pub pairs: Vec<(usize, usize)>,
}

impl StandardExampleNumber {
    /// The witness as an embedding of `S_d` (`a1.., b1..` index order) into `P`.
    pub fn embedding(&self) -> Vec<usize> {
        let mut m: Vec<usize> = self.pairs.iter().map(|p| p.0).collect();
        m.extend(self.pairs.iter().map(|p| p.1));
        m
    }
}

/// Do `(a, b)` and `(a2, b2)` induce `S_2` with that pairing?
#[inline]
pub fn se_compatible(p: &Poset, (a, b): (usize, usize), (a2, b2): (usize, usize)) -> bool {
    p.lt(a, b2) && p.lt(a2, b) && p.incomparable(a, a2) && p.incomparable(b, b2)
}

/// Exact `se(P)` capped at `cap`.
pub fn se(p: &Poset, cap: usize, budget: &Budget) -> Result<StandardExampleNumber> {
    let mut meter = budget.start();
    se_with_meter(p, cap, &mut meter)
}

pub(crate) fn se_with_meter(
    p: &Poset,
    cap: usize,
    meter: &mut Meter,
) -> Result<StandardExampleNumber> {
    let pairs: Vec<(usize, usize)> = p.incomparable_pairs();
    let mut g = BitGraph::new(pairs.len());
    for (i, &pi) in pairs.iter().enumerate() {
        for (j, &pj) in pairs.iter().enumerate().skip(i + 1) {
            if se_compatible(p, pi, pj) {
                g.add_edge(i, j);
            }
        }
        if i % 64 == 0 {
            meter.tick()?;
        }
    }
    let has_edge = (0..g.len()).any(|v| g.degree(v) > 0);
    if !has_edge {
        return Ok(StandardExampleNumber {
            value: 1,
            pairs: Vec::new(),
        });
    }
    let clique = max_clique(&g, cap.max(2), meter)?;
    let mut chosen: Vec<(usize, usize)> = clique.into_iter().map(|v| pairs[v]).collect();
    chosen.sort_unstable();
    Ok(StandardExampleNumber {
        value: chosen.len(),
        pairs: chosen,
    })
}

/// True iff `map` (pattern index -> host index) is injective and preserves
/// comparability and incomparability in both directions.
pub fn verify_embedding(host: &Poset, pattern: &Poset, map: &[usize]) -> bool {
    if map.len() != pattern.len() {
        return false;
    }
    let mut seen = FixedBitSet::with_capacity(host.len());
    for &h in map {
        if h >= host.len() || seen.put(h) {
            return false;
        }
    }
    (0..pattern.len())
        .all(|x| (0..pattern.len()).all(|y| x == y || pattern.lt(x, y) == host.lt(map[x], map[y])))
}

/// Searches for a copy of `pattern` inside `host`; `Ok(None)` is exhaustive.
pub fn contains_subposet(
    host: &Poset,
    pattern: &Poset,
    budget: &Budget,
) -> Result<Option<Vec<usize>>> {
    let mut meter = budget.start();
    contains_with_meter(host, pattern, &mut meter)
}

pub(crate) fn contains_with_meter(
    host: &Poset,
    pattern: &Poset,
    meter: &mut Meter,
) -> Result<Option<Vec<usize>>> {
    let (pn, hn) = (pattern.len(), host.len());
    if pn > hn {
        return Ok(None);
    }
    if pn == 0 {
        return Ok(Some(Vec::new()));
    }
    if pattern.height() > host.height() || pattern.width() > host.width() {
        return Ok(None);
    }
    let p_up: Vec<usize> = (0..pn)
        .map(|x| pattern.strict_up(x).count_ones(..))
        .collect();
    let p_down: Vec<usize> = (0..pn)
        .map(|x| pattern.strict_down(x).count_ones(..))
        .collect();
    let h_up: Vec<usize> = (0..hn).map(|x| host.strict_up(x).count_ones(..)).collect();
    let h_down: Vec<usize> = (0..hn)
        .map(|x| host.strict_down(x).count_ones(..))
        .collect();
    let h_par: Vec<FixedBitSet> = (0..hn)
        .map(|x| {
            let mut s = FixedBitSet::with_capacity(hn);
            s.insert_range(..);
            s.difference_with(host.strict_up(x));
            s.difference_with(host.strict_down(x));
            s.set(x, false);
            s
        })
        .collect();

    // order: most comparabilities to already placed elements first
    let degree = |x: usize| p_up[x] + p_down[x];
    let mut order = Vec::with_capacity(pn);
    let mut placed = vec![false; pn];
    while order.len() < pn {
        let next = (0..pn)
            .filter(|&x| !placed[x])
            .max_by_key(|&x| {
                let links = order.iter().filter(|&&y| pattern.comparable(x, y)).count();
                (links, degree(x), std::cmp::Reverse(x))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    let mut base = FixedBitSet::with_capacity(hn);
    base.insert_range(..);
    let static_ok: Vec<FixedBitSet> = (0..pn)
        .map(|x| {
            let mut s = FixedBitSet::with_capacity(hn);
            for h in 0..hn {
                if h_up[h] >= p_up[x] && h_down[h] >= p_down[x] {
                    s.insert(h);
                }
            }
            s
        })
        .collect();

    let mut map = vec![usize::MAX; pn];
    let mut used = FixedBitSet::with_capacity(hn);
    let ctx = EmbedCtx {
        host,
        pattern,
        order: &order,
        h_par: &h_par,
        static_ok: &static_ok,
    };
    if ctx.extend(0, &mut map, &mut used, meter)? {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

struct EmbedCtx<'a> {
    host: &'a Poset,
    pattern: &'a Poset,
    order: &'a [usize],
    h_par: &'a [FixedBitSet],
    static_ok: &'a [FixedBitSet],
}

impl EmbedCtx<'_> {
    fn extend(
        &self,
        depth: usize,
        map: &mut [usize],
        used: &mut FixedBitSet,
        meter: &mut Meter,
    ) -> Result<bool> {
        meter.tick()?;
        if depth == self.order.len() {
            return Ok(true);
        }
        let x = self.order[depth];
        let mut cand = self.static_ok[x].clone();
        cand.difference_with(used);
        for &y in &self.order[..depth] {
            let hy = map[y];
            if self.pattern.lt(x, y) {
                cand.intersect_with(self.host.strict_down(hy));
            } else if self.pattern.lt(y, x) {
                cand.intersect_with(self.host.strict_up(hy));
            } else {
                cand.intersect_with(&self.h_par[hy]);
            }
            if cand.is_clear() {
                return Ok(false);
            }
        }
        for h in cand.ones() {
            map[x] = h;
            used.insert(h);
            if self.extend(depth + 1, map, used, meter)? {
                return Ok(true);
            }
            used.set(h, false);
        }
        map[x] = usize::MAX;
        Ok(false)
    }
}

/// Result of a wheel or Kelly number query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyNumber {
    pub value: usize,
    /// Order and embedding of the largest copy found, if any.
    pub witness: Option<(usize, Vec<usize>)>,
    pub se: StandardExampleNumber,
}

/// `wheel(P)`: the largest order `N >= 3` of a wheel in `P`, or `se(P)` when
/// there is none.
pub fn wheel_number(p: &Poset, cap: usize, budget: &Budget) -> Result<FamilyNumber> {
    let mut meter = budget.start();
    let se = se_with_meter(p, cap.max(2), &mut meter)?;
    let mut top = cap.min(se.value).min(p.height());
    while top >= 3 && top * top - top + 1 > p.len() {
        top -= 1;
    }
    for n in (3..=top).rev() {
        let pattern = families::wheel(n, false)?;
        if let Some(map) = contains_with_meter(p, &pattern, &mut meter)? {
            return Ok(FamilyNumber {
                value: n,
                witness: Some((n, map)),
                se,
            });
        }
    }
    Ok(FamilyNumber {
        value: se.value,
        witness: None,
        se,
    })
}

/// `kelly(P)`: the largest order `d >= 3` of a Kelly poset in `P`, or `se(P)`
/// when there is none.
pub fn kelly_number(p: &Poset, cap: usize, budget: &Budget) -> Result<FamilyNumber> {
    let mut meter = budget.start();
    let se = se_with_meter(p, cap.max(2), &mut meter)?;
    // K_d has height d - 1 and 4d - 6 elements
    let mut top = cap.min(se.value).min(p.height() + 1);
    while top >= 3 && 4 * top - 6 > p.len() {
        top -= 1;
    }
    for d in (3..=top).rev() {
        let pattern = families::kelly(d)?;
        if let Some(map) = contains_with_meter(p, &pattern, &mut meter)? {
            return Ok(FamilyNumber {
                value: d,
                witness: Some((d, map)),
                se,
            });
        }
    }
    Ok(FamilyNumber {
        value: se.value,
        witness: None,
        se,
    })
}

/// Checks `map` against `families::standard_example(d)` where `d = pairs.len()`.
pub fn verify_standard_example(p: &Poset, pairs: &[(usize, usize)]) -> Result<bool> {
    if pairs.len() < 2 {
        return Err(Error::PreconditionViolated(
            "need at least two pairs".into(),
        ));
    }
    let s = families::standard_example(pairs.len())?;
    let mut map: Vec<usize> = pairs.iter().map(|p| p.0).collect();
    map.extend(pairs.iter().map(|p| p.1));
    Ok(verify_embedding(p, &s, &map))
}
