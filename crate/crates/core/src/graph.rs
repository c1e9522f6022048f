//! Simple undirected graphs and the oriented cover graph of a poset.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::poset::Poset;

/// Simple undirected graph with labelled vertices and sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(labels: Vec<String>) -> Self {
        let n = labels.len();
        Graph {
            labels,
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_edges(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(labels);
        for &(u, v) in edges {
            if u >= g.len() || v >= g.len() {
                return Err(Error::UnknownElement(format!("#{}", u.max(v))));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from labelled edges, ignoring any orientation.
    pub fn from_labelled_edges<S: AsRef<str>>(labels: &[S], edges: &[(S, S)]) -> Result<Self> {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateElement(l.clone()));
            }
        }
        let mut idx_edges = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            let ui = *index
                .get(u.as_ref())
                .ok_or_else(|| Error::UnknownElement(u.as_ref().into()))?;
            let vi = *index
                .get(v.as_ref())
                .ok_or_else(|| Error::UnknownElement(v.as_ref().into()))?;
            idx_edges.push((ui, vi));
        }
        Graph::from_edges(labels, &idx_edges)
    }

    /// The `rows x cols` grid; vertex `(r, c)` has index `r * cols + c` and
    /// label `g(r,c)`.
    pub fn grid(rows: usize, cols: usize) -> Self {
        let labels = (0..rows * cols)
            .map(|k| format!("g({},{})", k / cols, k % cols))
            .collect();
        let mut g = Graph::new(labels);
        for r in 0..rows {
            for c in 0..cols {
                let v = r * cols + c;
                if c + 1 < cols {
                    g.add_edge(v, v + 1);
                }
                if r + 1 < rows {
                    g.add_edge(v, v + cols);
                }
            }
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new((0..n).map(|k| format!("k{k}")).collect());
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::new((0..n).map(|k| format!("c{k}")).collect());
        for u in 0..n {
            g.add_edge(u, (u + 1) % n);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u == v || self.has_edge(u, v) {
            return;
        }
        let pu = self.adj[u].binary_search(&v).unwrap_err();
        self.adj[u].insert(pu, v);
        let pv = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pv, u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if let Ok(p) = self.adj[u].binary_search(&v) {
            self.adj[u].remove(p);
        }
        if let Ok(p) = self.adj[v].binary_search(&u) {
            self.adj[v].remove(p);
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.len() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Connected components as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![s];
            comp[s] = id;
            let mut members = Vec::new();
            while let Some(v) = stack.pop() {
                members.push(v);
                for &w in &self.adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.len()
    }
}

/// The cover graph of a poset: an edge `x -> y` whenever `y` covers `x`.
#[derive(Debug, Clone)]
pub struct CoverGraph {
    pub graph: Graph,
    /// Upward neighbours (elements covering `v`).
    pub up: Vec<Vec<usize>>,
    /// Downward neighbours (elements covered by `v`).
    pub down: Vec<Vec<usize>>,
}

impl CoverGraph {
    pub fn of(p: &Poset) -> Self {
        let covers = p.covers();
        let graph =
            Graph::from_edges(p.labels().to_vec(), &covers).expect("cover indices are valid");
        let mut up = vec![Vec::new(); p.len()];
        let mut down = vec![Vec::new(); p.len()];
        for &(x, y) in &covers {
            up[x].push(y);
            down[y].push(x);
        }
        CoverGraph { graph, up, down }
    }

    /// Directed edges `(x, y)` with `y` covering `x`.
    pub fn directed_edges(&self) -> Vec<(usize, usize)> {
        (0..self.up.len())
            .flat_map(|x| self.up[x].iter().map(move |&y| (x, y)))
            .collect()
    }

    /// True iff the edge `x -> y` is in the cover graph (y covers x).
    pub fn is_up(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(&y)
    }
}

/// Shorthand for [`CoverGraph::of`].
pub fn cover_graph(p: &Poset) -> CoverGraph {
    CoverGraph::of(p)
}
