//! Maximum clique by branch and bound with a greedy-coloring bound.

use fixedbitset::FixedBitSet;

use crate::budget::Meter;
use crate::error::Result;

/// Undirected graph as bitset adjacency rows.
#[derive(Debug, Clone)]
pub struct BitGraph {
    adj: Vec<FixedBitSet>,
}

impl BitGraph {
    pub fn new(n: usize) -> Self {
        BitGraph {
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones(..)
    }

    pub fn neighbors(&self, u: usize) -> &FixedBitSet {
        &self.adj[u]
    }
}

/// Finds a maximum clique, stopping early once one of size `target` is seen.
pub fn max_clique(g: &BitGraph, target: usize, meter: &mut Meter) -> Result<Vec<usize>> {
    let n = g.len();
    let mut best: Vec<usize> = Vec::new();
    if n == 0 {
        return Ok(best);
    }
    // initial incumbent from a greedy pass, highest degree first
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    for &start in by_degree.iter().take(16) {
        let mut clique = vec![start];
        let mut cand = g.adj[start].clone();
        while let Some(v) = cand.ones().max_by_key(|&v| {
            let mut c = cand.clone();
            c.intersect_with(&g.adj[v]);
            c.count_ones(..)
        }) {
            clique.push(v);
            cand.intersect_with(&g.adj[v]);
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    if best.len() >= target {
        best.truncate(target.max(1));
        return Ok(best);
    }
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    let mut current = Vec::new();
    expand(g, &mut current, all, &mut best, target, meter)?;
    Ok(best)
}

fn expand(
    g: &BitGraph,
    current: &mut Vec<usize>,
    mut cand: FixedBitSet,
    best: &mut Vec<usize>,
    target: usize,
    meter: &mut Meter,
) -> Result<bool> {
    meter.tick()?;
    let (order, colors) = color_sort(g, &cand);
    for k in (0..order.len()).rev() {
        if current.len() + colors[k] <= best.len() {
            return Ok(false);
        }
        let v = order[k];
        current.push(v);
        let mut next = cand.clone();
        next.intersect_with(&g.adj[v]);
        if next.is_clear() {
            if current.len() > best.len() {
                *best = current.clone();
                if best.len() >= target {
                    return Ok(true);
                }
            }
        } else if expand(g, current, next, best, target, meter)? {
            return Ok(true);
        }
        current.pop();
        cand.set(v, false);
    }
    Ok(false)
}

/// Greedy sequential coloring; returns vertices in nondecreasing color order
/// together with their color numbers (1-based).
fn color_sort(g: &BitGraph, cand: &FixedBitSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::new();
    let mut colors = Vec::new();
    let mut uncolored = cand.clone();
    let mut color = 0;
    while !uncolored.is_clear() {
        color += 1;
        let mut avail = uncolored.clone();
        while let Some(v) = avail.ones().next() {
            avail.set(v, false);
            avail.difference_with(&g.adj[v]);
            uncolored.set(v, false);
            order.push(v);
            colors.push(color);
        }
    }
    (order, colors)
}
