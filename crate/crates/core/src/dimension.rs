//! Exact Dushnik–Miller dimension.
//!
//! `dim(P) <= t` iff the critical pairs can be split into `t` classes that
//! are each reversible, i.e. contain no alternating cycle. The search colors
//! critical pairs one at a time (most constrained first) and keeps, per
//! class, the transitive closure of `P` plus the reversals chosen so far, so
//! that feasibility of a new pair is a single bit test.

use fixedbitset::FixedBitSet;

use crate::budget::{Budget, Meter};
use crate::clique::{max_clique, BitGraph};
use crate::containment::se_with_meter;
use crate::error::{Error, Result};
use crate::poset::{LinearExtension, Poset, Realizer};

/// Outcome of [`dim_at_most`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DimOutcome {
    Realized(Realizer),
    /// Exhaustive search found no realizer of the requested size.
    Refuted,
}

/// How the lower bound of [`dim_exact`] was established.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LowerBound {
    /// Dimension 0 or 1 needs no witness beyond the realizer.
    Trivial,
    /// A copy of `S_d` given by its pairs `(a_i, b_i)`.
    StandardExample(Vec<(usize, usize)>),
    /// `d - 1` extensions were refuted by exhaustive search.
    Exhaustive { refuted: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionCertificate {
    pub dimension: usize,
    pub realizer: Realizer,
    pub lower_bound: LowerBound,
}

/// Result of [`is_reversible`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reversibility {
    Reversible(LinearExtension),
    /// Pairs `(a_1,b_1), ..., (a_k,b_k)` with `a_i <= b_{i+1}` cyclically.
    AlternatingCycle(Vec<(usize, usize)>),
}

/// Decides whether some linear extension puts `b` below `a` for every pair.
pub fn is_reversible(p: &Poset, pairs: &[(usize, usize)]) -> Result<Reversibility> {
    for &(a, b) in pairs {
        if a >= p.len() || b >= p.len() {
            return Err(Error::UnknownElement(format!("#{}", a.max(b))));
        }
        if p.comparable(a, b) {
            return Err(Error::PreconditionViolated(format!(
                "({}, {}) is not an incomparable pair",
                p.label(a),
                p.label(b)
            )));
        }
    }
    let k = pairs.len();
    // i -> j whenever a_i <= b_j; a cycle is an alternating cycle
    let succ: Vec<Vec<usize>> = (0..k)
        .map(|i| (0..k).filter(|&j| p.le(pairs[i].0, pairs[j].1)).collect())
        .collect();
    let mut shortest: Option<Vec<usize>> = None;
    for s in 0..k {
        // BFS for the shortest cycle through s
        let mut prev = vec![usize::MAX; k];
        let mut queue = std::collections::VecDeque::from([s]);
        let mut seen = vec![false; k];
        seen[s] = true;
        let mut closing = None;
        'bfs: while let Some(u) = queue.pop_front() {
            for &v in &succ[u] {
                if v == s {
                    closing = Some(u);
                    break 'bfs;
                }
                if !seen[v] {
                    seen[v] = true;
                    prev[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if let Some(mut u) = closing {
            let mut cyc = vec![u];
            while u != s {
                u = prev[u];
                cyc.push(u);
            }
            cyc.reverse();
            if shortest.as_ref().is_none_or(|c| cyc.len() < c.len()) {
                shortest = Some(cyc);
            }
        }
    }
    if let Some(c) = shortest {
        return Ok(Reversibility::AlternatingCycle(
            c.into_iter().map(|i| pairs[i]).collect(),
        ));
    }
    let mut class = ClassClosure::new(p);
    for &(a, b) in pairs {
        class.add(a, b);
    }
    Ok(Reversibility::Reversible(class.extension()))
}

/// Closure of `P` plus the reversals `b < a` of one color class.
#[derive(Clone)]
struct ClassClosure {
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
}

impl ClassClosure {
    fn new(p: &Poset) -> Self {
        let n = p.len();
        ClassClosure {
            up: (0..n).map(|x| p.strict_up(x).clone()).collect(),
            down: (0..n).map(|x| p.strict_down(x).clone()).collect(),
        }
    }

    /// Adding `b < a` keeps the class acyclic iff `a` is not already below `b`.
    #[inline]
    fn can_add(&self, a: usize, b: usize) -> bool {
        !self.up[a].contains(b)
    }

    #[inline]
    fn implies(&self, a: usize, b: usize) -> bool {
        self.up[b].contains(a)
    }

    fn add(&mut self, a: usize, b: usize) {
        if self.implies(a, b) {
            return;
        }
        let mut lower = self.down[b].clone();
        lower.insert(b);
        let mut upper = self.up[a].clone();
        upper.insert(a);
        for x in lower.ones() {
            self.up[x].union_with(&upper);
        }
        for y in upper.ones() {
            self.down[y].union_with(&lower);
        }
    }

    fn extension(&self) -> LinearExtension {
        let mut order: Vec<usize> = (0..self.up.len()).collect();
        order.sort_by_key(|&x| (self.down[x].count_ones(..), x));
        LinearExtension(order)
    }
}

/// Searches for a realizer with at most `t` extensions.
pub fn dim_at_most(p: &Poset, t: usize, budget: &Budget) -> Result<DimOutcome> {
    let mut meter = budget.start();
    let crit = p.critical_pairs();
    let clique = conflict_clique(p, &crit, t + 1, &mut meter)?;
    dim_at_most_inner(p, t, &crit, &clique, &mut meter)
}

fn dim_at_most_inner(
    p: &Poset,
    t: usize,
    crit: &[(usize, usize)],
    clique: &[usize],
    meter: &mut Meter,
) -> Result<DimOutcome> {
    if t == 0 {
        return Ok(if p.is_empty() {
            DimOutcome::Realized(Realizer {
                extensions: vec![LinearExtension(Vec::new())],
            })
        } else {
            DimOutcome::Refuted
        });
    }
    if crit.is_empty() {
        return Ok(DimOutcome::Realized(Realizer {
            extensions: vec![p.a_linear_extension()],
        }));
    }
    if clique.len() > t {
        return Ok(DimOutcome::Refuted);
    }
    let mut search = ColoringSearch::new(p, crit, t);
    for (c, &i) in clique.iter().enumerate() {
        search.assign(i, c);
    }
    search.used = clique.len().max(1).min(t);
    if search.solve(meter)? {
        let mut extensions: Vec<LinearExtension> = search
            .classes
            .iter()
            .take(search.used.max(1))
            .map(|c| c.extension())
            .collect();
        extensions.dedup();
        Ok(DimOutcome::Realized(Realizer { extensions }))
    } else {
        Ok(DimOutcome::Refuted)
    }
}

/// Clique in the graph of critical pairs that form 2-cycles: any such set
/// needs pairwise distinct extensions.
fn conflict_clique(
    p: &Poset,
    crit: &[(usize, usize)],
    target: usize,
    meter: &mut Meter,
) -> Result<Vec<usize>> {
    let g = conflict_graph(p, crit);
    max_clique(&g, target, meter)
}

fn conflict_graph(p: &Poset, crit: &[(usize, usize)]) -> BitGraph {
    let mut g = BitGraph::new(crit.len());
    for (i, &(a, b)) in crit.iter().enumerate() {
        for (j, &(a2, b2)) in crit.iter().enumerate().skip(i + 1) {
            if p.le(a, b2) && p.le(a2, b) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

struct ColoringSearch<'a> {
    crit: &'a [(usize, usize)],
    t: usize,
    classes: Vec<ClassClosure>,
    color: Vec<Option<usize>>,
    conflicts: Vec<usize>,
    used: usize,
}

impl<'a> ColoringSearch<'a> {
    fn new(p: &Poset, crit: &'a [(usize, usize)], t: usize) -> Self {
        let g = conflict_graph(p, crit);
        ColoringSearch {
            crit,
            t,
            classes: vec![ClassClosure::new(p); t],
            color: vec![None; crit.len()],
            conflicts: (0..crit.len()).map(|i| g.degree(i)).collect(),
            used: 0,
        }
    }

    fn assign(&mut self, i: usize, c: usize) {
        let (a, b) = self.crit[i];
        self.classes[c].add(a, b);
        self.color[i] = Some(c);
    }

    /// Picks the uncolored, not yet implied pair with the fewest feasible
    /// classes. `Err(())` means some pair has none.
    fn select(&self) -> std::result::Result<Option<(usize, Vec<usize>)>, ()> {
        let open = (self.used + 1).min(self.t);
        let mut best: Option<(usize, Vec<usize>)> = None;
        for (i, &(a, b)) in self.crit.iter().enumerate() {
            if self.color[i].is_some() {
                continue;
            }
            if self.classes[..self.used].iter().any(|c| c.implies(a, b)) {
                continue;
            }
            let feasible: Vec<usize> = (0..open)
                .filter(|&c| self.classes[c].can_add(a, b))
                .collect();
            if feasible.is_empty() {
                return Err(());
            }
            let better = match &best {
                None => true,
                Some((j, f)) => {
                    (feasible.len(), std::cmp::Reverse(self.conflicts[i]))
                        < (f.len(), std::cmp::Reverse(self.conflicts[*j]))
                }
            };
            if better {
                best = Some((i, feasible));
            }
        }
        Ok(best)
    }

    fn solve(&mut self, meter: &mut Meter) -> Result<bool> {
        meter.tick()?;
        let (i, feasible) = match self.select() {
            Err(()) => return Ok(false),
            Ok(None) => return Ok(true),
            Ok(Some(x)) => x,
        };
        for c in feasible {
            let saved = self.classes[c].clone();
            let saved_used = self.used;
            self.assign(i, c);
            self.used = self.used.max(c + 1);
            if self.solve(meter)? {
                return Ok(true);
            }
            self.classes[c] = saved;
            self.color[i] = None;
            self.used = saved_used;
        }
        Ok(false)
    }
}

/// Exact dimension (at most `cap`) with a realizer and a lower-bound witness.
pub fn dim_exact(p: &Poset, cap: usize, budget: &Budget) -> Result<DimensionCertificate> {
    let mut meter = budget.start();
    if p.is_empty() || p.is_chain() {
        return Ok(DimensionCertificate {
            dimension: usize::from(!p.is_empty()).max(1),
            realizer: Realizer {
                extensions: vec![p.a_linear_extension()],
            },
            lower_bound: LowerBound::Trivial,
        });
    }
    let crit = p.critical_pairs();
    let se = se_with_meter(p, cap + 1, &mut meter)?;
    let clique = conflict_clique(p, &crit, cap + 1, &mut meter)?;
    let start = se.value.max(clique.len()).max(2);
    if start > cap {
        return Err(Error::BudgetExceeded(format!(
            "dimension exceeds cap {cap}"
        )));
    }
    for t in start..=cap {
        match dim_at_most_inner(p, t, &crit, &clique, &mut meter)? {
            DimOutcome::Realized(realizer) => {
                let lower_bound = if t == start && se.value == t {
                    LowerBound::StandardExample(se.pairs.clone())
                } else if t == 2 {
                    LowerBound::Trivial
                } else {
                    LowerBound::Exhaustive { refuted: t - 1 }
                };
                return Ok(DimensionCertificate {
                    dimension: t,
                    realizer,
                    lower_bound,
                });
            }
            DimOutcome::Refuted => continue,
        }
    }
    Err(Error::BudgetExceeded(format!(
        "dimension exceeds cap {cap}"
    )))
}
