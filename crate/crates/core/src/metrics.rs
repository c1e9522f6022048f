//! Exact treewidth with tree decompositions, grid subgraphs and grid minors.

use std::collections::{HashMap, HashSet};

use crate::budget::{Budget, Meter};
use crate::error::{Error, Result};
use crate::families;
use crate::graph::{CoverGraph, Graph};

/// Largest graph handled by the exact treewidth search.
pub const TREEWIDTH_MAX_VERTICES: usize = 128;
/// Largest graph handled by the generic grid-minor search.
pub const MINOR_MAX_VERTICES: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub bags: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    pub fn width(&self) -> usize {
        self.bags
            .iter()
            .map(Vec::len)
            .max()
            .unwrap_or(1)
            .saturating_sub(1)
    }

    /// Checks the three decomposition axioms and that the bag graph is a tree.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        let nb = self.bags.len();
        if g.is_empty() {
            return Ok(());
        }
        if nb == 0 {
            return Err("no bags".into());
        }
        if self.edges.len() + 1 != nb {
            return Err(format!(
                "{} bags joined by {} edges is not a tree",
                nb,
                self.edges.len()
            ));
        }
        let tree =
            Graph::from_edges(vec![String::new(); nb], &self.edges).map_err(|e| e.to_string())?;
        if !tree.is_connected() {
            return Err("bag graph is disconnected".into());
        }
        for v in 0..g.len() {
            let holding: Vec<usize> = (0..nb).filter(|&b| self.bags[b].contains(&v)).collect();
            if holding.is_empty() {
                return Err(format!("vertex `{}` is in no bag", g.label(v)));
            }
            let keep: HashSet<usize> = holding.iter().copied().collect();
            let mut seen = HashSet::from([holding[0]]);
            let mut stack = vec![holding[0]];
            while let Some(b) = stack.pop() {
                for &c in tree.neighbors(b) {
                    if keep.contains(&c) && seen.insert(c) {
                        stack.push(c);
                    }
                }
            }
            if seen.len() != holding.len() {
                return Err(format!("bags holding `{}` are not connected", g.label(v)));
            }
        }
        for (u, v) in g.edges() {
            if !self.bags.iter().any(|b| b.contains(&u) && b.contains(&v)) {
                return Err(format!(
                    "edge `{}`-`{}` is in no bag",
                    g.label(u),
                    g.label(v)
                ));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct Treewidth {
    pub width: usize,
    pub decomposition: TreeDecomposition,
}

type Mask = u128;

fn bit(v: usize) -> Mask {
    1 << v
}

fn ones(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(v)
    })
}

struct Elimination<'a> {
    adj: Vec<Mask>,
    n: usize,
    failed: HashSet<Mask>,
    meter: &'a mut Meter,
}

impl Elimination<'_> {
    /// Neighbours of `v` once the vertices in `gone` are eliminated.
    fn neighborhood(&self, gone: Mask, v: usize) -> Mask {
        let mut seen = bit(v);
        let mut stack = vec![v];
        let mut out = 0;
        while let Some(u) = stack.pop() {
            for w in ones(self.adj[u] & !seen) {
                seen |= bit(w);
                if gone & bit(w) != 0 {
                    stack.push(w);
                } else {
                    out |= bit(w);
                }
            }
        }
        out
    }

    fn is_clique(&self, gone: Mask, m: Mask) -> bool {
        let vs: Vec<usize> = ones(m).collect();
        vs.iter().all(|&a| {
            let na = self.neighborhood(gone, a);
            vs.iter().all(|&b| a == b || na & bit(b) != 0)
        })
    }

    /// Elimination order of the remaining vertices with every degree at most `k`.
    fn solve(&mut self, gone: Mask, k: usize, order: &mut Vec<usize>) -> Result<bool> {
        let full: Mask = if self.n == 128 { !0 } else { bit(self.n) - 1 };
        let left = full & !gone;
        if left.count_ones() as usize <= k + 1 {
            order.extend(ones(left));
            return Ok(true);
        }
        if self.failed.contains(&gone) {
            return Ok(false);
        }
        self.meter.tick()?;
        let mut degs: Vec<(usize, usize, Mask)> = ones(left)
            .map(|v| {
                let nb = self.neighborhood(gone, v);
                (nb.count_ones() as usize, v, nb)
            })
            .collect();
        degs.sort_unstable();
        if degeneracy(&degs) > k {
            self.failed.insert(gone);
            return Ok(false);
        }
        // a simplicial vertex of small degree is always safe to eliminate
        for &(d, v, nb) in &degs {
            if d > k {
                break;
            }
            if d <= 1 || self.is_clique(gone, nb) {
                order.push(v);
                if self.solve(gone | bit(v), k, order)? {
                    return Ok(true);
                }
                order.pop();
                self.failed.insert(gone);
                return Ok(false);
            }
        }
        for &(d, v, _) in &degs {
            if d > k {
                break;
            }
            order.push(v);
            if self.solve(gone | bit(v), k, order)? {
                return Ok(true);
            }
            order.pop();
        }
        self.failed.insert(gone);
        Ok(false)
    }
}

/// Degeneracy of the graph given as `(degree, vertex, neighbourhood)` rows.
fn degeneracy(rows: &[(usize, usize, Mask)]) -> usize {
    let mut nb: Vec<(usize, Mask)> = rows.iter().map(|&(_, v, m)| (v, m)).collect();
    let mut alive: Mask = nb.iter().fold(0, |m, &(v, _)| m | bit(v));
    let mut best = 0;
    while !nb.is_empty() {
        let (i, d) = nb
            .iter()
            .enumerate()
            .map(|(i, &(_, m))| (i, (m & alive).count_ones() as usize))
            .min_by_key(|&(_, d)| d)
            .unwrap();
        best = best.max(d);
        alive &= !bit(nb[i].0);
        nb.swap_remove(i);
    }
    best
}

/// Degeneracy lower bound, improved by contracting each minimum-degree
/// vertex into its lowest-degree neighbour.
pub fn treewidth_lower_bound(g: &Graph) -> usize {
    let n = g.len();
    let mut adj: Vec<HashSet<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let mut alive: HashSet<usize> = (0..n).collect();
    let mut best = 0;
    while alive.len() > 1 {
        let v = *alive.iter().min_by_key(|&&v| (adj[v].len(), v)).unwrap();
        best = best.max(adj[v].len());
        let target = adj[v].iter().copied().min_by_key(|&w| (adj[w].len(), w));
        let nbrs: Vec<usize> = adj[v].iter().copied().collect();
        for &w in &nbrs {
            adj[w].remove(&v);
        }
        if let Some(t) = target {
            for &w in &nbrs {
                if w != t {
                    adj[w].insert(t);
                    adj[t].insert(w);
                }
            }
        }
        adj[v].clear();
        alive.remove(&v);
    }
    best
}

/// Exact treewidth, searched upward from the lower bound. Fails with
/// `BudgetExceeded` if the width exceeds `cap` or the budget runs out.
pub fn treewidth_exact(g: &Graph, cap: usize, budget: &Budget) -> Result<Treewidth> {
    let n = g.len();
    if n > TREEWIDTH_MAX_VERTICES {
        return Err(Error::BudgetExceeded(format!(
            "treewidth search is limited to {TREEWIDTH_MAX_VERTICES} vertices"
        )));
    }
    if n == 0 {
        return Ok(Treewidth {
            width: 0,
            decomposition: TreeDecomposition {
                bags: Vec::new(),
                edges: Vec::new(),
            },
        });
    }
    let adj: Vec<Mask> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | bit(w)))
        .collect();
    let mut meter = budget.start();
    let lower = treewidth_lower_bound(g);
    let greedy = min_fill_order(g);
    let upper = decomposition_from_order(g, &greedy);
    let best = upper.width();
    for k in lower..best.min(cap + 1) {
        let mut e = Elimination {
            adj: adj.clone(),
            n,
            failed: HashSet::new(),
            meter: &mut meter,
        };
        let mut order = Vec::new();
        if e.solve(0, k, &mut order)? {
            let decomposition = decomposition_from_order(g, &order);
            debug_assert!(decomposition.validate(g).is_ok());
            return Ok(Treewidth {
                width: decomposition.width(),
                decomposition,
            });
        }
    }
    if best <= cap {
        return Ok(Treewidth {
            width: best,
            decomposition: upper,
        });
    }
    Err(Error::BudgetExceeded(format!(
        "treewidth exceeds cap {cap}"
    )))
}

/// Greedy elimination order that always removes a vertex adding the fewest fill edges.
pub fn min_fill_order(g: &Graph) -> Vec<usize> {
    let n = g.len();
    let mut adj: Vec<HashSet<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let mut alive: Vec<bool> = vec![true; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| {
                let nb: Vec<usize> = adj[v].iter().copied().collect();
                let mut fill = 0;
                for (i, &a) in nb.iter().enumerate() {
                    for &b in &nb[i + 1..] {
                        if !adj[a].contains(&b) {
                            fill += 1;
                        }
                    }
                }
                (fill, nb.len(), v)
            })
            .unwrap();
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        for &a in &nb {
            adj[a].remove(&v);
            for &b in &nb {
                if a != b {
                    adj[a].insert(b);
                }
            }
        }
        alive[v] = false;
        order.push(v);
    }
    order
}

/// Tree decomposition induced by an elimination order.
pub fn decomposition_from_order(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.len();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut adj: Vec<HashSet<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let mut bags = Vec::with_capacity(n);
    let mut later = Vec::with_capacity(n);
    for &v in order {
        let nb: Vec<usize> = adj[v]
            .iter()
            .copied()
            .filter(|&w| pos[w] > pos[v])
            .collect();
        for &a in &nb {
            for &b in &nb {
                if a != b {
                    adj[a].insert(b);
                }
            }
        }
        let mut bag = nb.clone();
        bag.push(v);
        bag.sort_unstable();
        bags.push(bag);
        later.push(nb);
    }
    let mut edges = Vec::new();
    let mut roots = Vec::new();
    for i in 0..n {
        match later[i].iter().map(|&w| pos[w]).min() {
            Some(j) => edges.push((i, j)),
            None => roots.push(i),
        }
    }
    for w in roots.windows(2) {
        edges.push((w[0], w[1]));
    }
    TreeDecomposition { bags, edges }
}

/// Checks that `map[r * n + c]` embeds the `n x n` grid into `g` as a subgraph.
pub fn verify_grid_map(g: &Graph, n: usize, map: &[usize]) -> bool {
    if map.len() != n * n || map.iter().any(|&v| v >= g.len()) {
        return false;
    }
    let distinct: HashSet<usize> = map.iter().copied().collect();
    if distinct.len() != map.len() {
        return false;
    }
    Graph::grid(n, n)
        .edges()
        .into_iter()
        .all(|(a, b)| g.has_edge(map[a], map[b]))
}

/// An `n x n` grid subgraph of `g`, as the image of `g(r,c)` at index `r * n + c`.
pub fn grid_subgraph(g: &Graph, n: usize, budget: &Budget) -> Result<Option<Vec<usize>>> {
    let mut meter = budget.start();
    grid_subgraph_with(g, n, &mut meter)
}

fn grid_subgraph_with(g: &Graph, n: usize, meter: &mut Meter) -> Result<Option<Vec<usize>>> {
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    let grid = Graph::grid(n, n);
    if g.len() < n * n || g.edge_count() < grid.edge_count() {
        return Ok(None);
    }
    let mut map = vec![usize::MAX; n * n];
    let mut used = vec![false; g.len()];
    fn rec(
        g: &Graph,
        grid: &Graph,
        k: usize,
        map: &mut [usize],
        used: &mut [bool],
        meter: &mut Meter,
    ) -> Result<bool> {
        if k == map.len() {
            return Ok(true);
        }
        meter.tick()?;
        let earlier: Vec<usize> = grid
            .neighbors(k)
            .iter()
            .copied()
            .filter(|&q| q < k)
            .collect();
        let candidates: Vec<usize> = match earlier.first() {
            Some(&q) => g.neighbors(map[q]).to_vec(),
            None => (0..g.len()).collect(),
        };
        for v in candidates {
            if used[v]
                || g.degree(v) < grid.degree(k)
                || !earlier.iter().all(|&q| g.has_edge(v, map[q]))
            {
                continue;
            }
            map[k] = v;
            used[v] = true;
            if rec(g, grid, k + 1, map, used, meter)? {
                return Ok(true);
            }
            used[v] = false;
        }
        map[k] = usize::MAX;
        Ok(false)
    }
    Ok(rec(g, &grid, 0, &mut map, &mut used, meter)?.then_some(map))
}

/// Checks branch sets of an `n x n` grid minor: disjoint, connected, and
/// adjacent wherever the grid is.
pub fn verify_grid_minor(g: &Graph, n: usize, branch: &[Vec<usize>]) -> bool {
    if branch.len() != n * n {
        return false;
    }
    let mut owner = vec![usize::MAX; g.len()];
    for (i, set) in branch.iter().enumerate() {
        if set.is_empty() {
            return false;
        }
        for &v in set {
            if v >= g.len() || owner[v] != usize::MAX {
                return false;
            }
            owner[v] = i;
        }
        let mut seen = HashSet::from([set[0]]);
        let mut stack = vec![set[0]];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if owner[w] == i && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        if seen.len() != set.len() {
            return false;
        }
    }
    Graph::grid(n, n).edges().into_iter().all(|(a, b)| {
        branch[a]
            .iter()
            .any(|&u| g.neighbors(u).iter().any(|&w| owner[w] == b))
    })
}

/// Branch sets of an `n x n` grid minor (`n <= 3`, at most 30 vertices
/// unless a grid subgraph is found directly).
pub fn grid_minor(g: &Graph, n: usize, budget: &Budget) -> Result<Option<Vec<Vec<usize>>>> {
    if n < 2 {
        return Err(Error::PreconditionViolated(
            "grid minors need n >= 2".into(),
        ));
    }
    let mut meter = budget.start();
    if let Some(map) = grid_subgraph_with(g, n, &mut meter)? {
        return Ok(Some(map.into_iter().map(|v| vec![v]).collect()));
    }
    if g.is_forest() {
        return Ok(None);
    }
    if n == 2 {
        return Ok(long_cycle(g, &mut meter)?.map(|c| split_cycle(&c)));
    }
    if n > 3 || g.len() > MINOR_MAX_VERTICES {
        return Err(Error::BudgetExceeded(format!(
            "generic grid minor search is limited to n <= 3 and {MINOR_MAX_VERTICES} vertices"
        )));
    }
    let tw = treewidth_exact(g, n.saturating_sub(1), &budget.with_nodes(200_000));
    if let Ok(t) = tw {
        if t.width < n {
            return Ok(None);
        }
    }
    let sets: Vec<Vec<usize>> = (0..g.len()).map(|v| vec![v]).collect();
    let mut search = MinorSearch {
        n,
        failed: HashSet::new(),
        meter: &mut meter,
    };
    search.run(g.clone(), sets)
}

/// A cycle with at least four vertices, if any.
fn long_cycle(g: &Graph, meter: &mut Meter) -> Result<Option<Vec<usize>>> {
    for (u, v) in g.edges() {
        // path from v back to u avoiding the edge, with at least 3 more vertices
        let mut path = vec![v];
        let mut on = vec![false; g.len()];
        on[v] = true;
        on[u] = true;
        fn dfs(
            g: &Graph,
            target: usize,
            path: &mut Vec<usize>,
            on: &mut [bool],
            meter: &mut Meter,
        ) -> Result<bool> {
            meter.tick()?;
            let x = *path.last().unwrap();
            for &w in g.neighbors(x) {
                if w == target && path.len() >= 3 {
                    return Ok(true);
                }
                if !on[w] {
                    on[w] = true;
                    path.push(w);
                    if dfs(g, target, path, on, meter)? {
                        return Ok(true);
                    }
                    path.pop();
                }
            }
            Ok(false)
        }
        if dfs(g, u, &mut path, &mut on, meter)? {
            let mut cycle = vec![u];
            cycle.extend(path);
            return Ok(Some(cycle));
        }
    }
    Ok(None)
}

/// Four consecutive arcs of a cycle, in grid order `g(0,0), g(0,1), g(1,0), g(1,1)`.
fn split_cycle(c: &[usize]) -> Vec<Vec<usize>> {
    let arcs = [
        c[0..1].to_vec(),
        c[1..2].to_vec(),
        c[2..3].to_vec(),
        c[3..].to_vec(),
    ];
    // cycle order 00 -> 01 -> 11 -> 10
    vec![
        arcs[0].clone(),
        arcs[1].clone(),
        arcs[3].clone(),
        arcs[2].clone(),
    ]
}

struct MinorSearch<'a> {
    n: usize,
    failed: HashSet<Vec<(usize, usize)>>,
    meter: &'a mut Meter,
}

impl MinorSearch<'_> {
    fn key(g: &Graph, sets: &[Vec<usize>]) -> Vec<(usize, usize)> {
        let rep: Vec<usize> = sets.iter().map(|s| *s.iter().min().unwrap()).collect();
        let mut k: Vec<(usize, usize)> = g
            .edges()
            .into_iter()
            .map(|(a, b)| (rep[a].min(rep[b]), rep[a].max(rep[b])))
            .collect();
        k.extend(rep.iter().map(|&r| (r, r)));
        k.sort_unstable();
        k
    }

    fn run(&mut self, g: Graph, sets: Vec<Vec<usize>>) -> Result<Option<Vec<Vec<usize>>>> {
        let (g, sets) = prune(g, sets);
        let need = self.n * self.n;
        let grid_edges = 2 * self.n * (self.n - 1);
        if g.len() < need || g.edge_count() < grid_edges {
            return Ok(None);
        }
        let key = Self::key(&g, &sets);
        if self.failed.contains(&key) {
            return Ok(None);
        }
        if let Some(map) = grid_subgraph_with(&g, self.n, self.meter)? {
            return Ok(Some(map.into_iter().map(|v| sets[v].clone()).collect()));
        }
        if g.len() == need {
            self.failed.insert(key);
            return Ok(None);
        }
        for (u, v) in g.edges() {
            self.meter.tick()?;
            let (h, s) = contract(&g, &sets, u, v);
            if let Some(found) = self.run(h, s)? {
                return Ok(Some(found));
            }
        }
        for v in 0..g.len() {
            let (h, s) = delete(&g, &sets, v);
            if let Some(found) = self.run(h, s)? {
                return Ok(Some(found));
            }
        }
        self.failed.insert(key);
        Ok(None)
    }
}

/// Drops vertices of degree at most one; the grid has minimum degree two.
fn prune(mut g: Graph, mut sets: Vec<Vec<usize>>) -> (Graph, Vec<Vec<usize>>) {
    while let Some(v) = (0..g.len()).find(|&v| g.degree(v) <= 1) {
        (g, sets) = delete(&g, &sets, v);
    }
    (g, sets)
}

fn rebuild(
    g: &Graph,
    sets: &[Vec<usize>],
    keep: &[usize],
    merge: Option<(usize, usize)>,
) -> (Graph, Vec<Vec<usize>>) {
    let mut idx: HashMap<usize, usize> = HashMap::new();
    for (i, &v) in keep.iter().enumerate() {
        idx.insert(v, i);
    }
    if let Some((into, from)) = merge {
        idx.insert(from, idx[&into]);
    }
    let mut h = Graph::new(keep.iter().map(|&v| g.label(v).to_string()).collect());
    for (a, b) in g.edges() {
        if let (Some(&x), Some(&y)) = (idx.get(&a), idx.get(&b)) {
            h.add_edge(x, y);
        }
    }
    let mut s: Vec<Vec<usize>> = keep.iter().map(|&v| sets[v].clone()).collect();
    if let Some((into, from)) = merge {
        let extra = sets[from].clone();
        s[idx[&into]].extend(extra);
    }
    (h, s)
}

fn contract(g: &Graph, sets: &[Vec<usize>], u: usize, v: usize) -> (Graph, Vec<Vec<usize>>) {
    let keep: Vec<usize> = (0..g.len()).filter(|&w| w != v).collect();
    rebuild(g, sets, &keep, Some((u, v)))
}

fn delete(g: &Graph, sets: &[Vec<usize>], v: usize) -> (Graph, Vec<Vec<usize>>) {
    let keep: Vec<usize> = (0..g.len()).filter(|&w| w != v).collect();
    rebuild(g, sets, &keep, None)
}

/// The `n x n` grid inside the cover graph of `H_{2n+1}`: `g(r,c)` maps to
/// the interval starting at `c+1` of length `r-c+n`.
pub fn wheel_grid_certificate(n: usize) -> Result<(CoverGraph, Vec<usize>)> {
    if n < 2 {
        return Err(Error::OrderTooSmall { order: n, min: 2 });
    }
    let order = 2 * n + 1;
    let p = families::wheel(order, false)?;
    let mut map = Vec::with_capacity(n * n);
    for r in 0..n {
        for c in 0..n {
            let i = c + 1;
            let j = (r + n - 1) % order + 1;
            map.push(p.index_of(&families::wheel_label(i, j))?);
        }
    }
    Ok((CoverGraph::of(&p), map))
}
