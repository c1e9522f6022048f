//! Finite posets stored as a transitively closed strict order.
//!
//! Every element carries an opaque string label; internally elements are the
//! indices `0..len()`. Comparability queries are O(1) bit lookups, which is
//! what the search modules lean on.

use std::collections::HashMap;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A finite poset. Immutable after construction.
#[derive(Clone)]
pub struct Poset {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    above: Vec<FixedBitSet>,
    below: Vec<FixedBitSet>,
}

/// A permutation of the ground set, listed bottom to top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearExtension(pub Vec<usize>);

/// A family of linear extensions whose intersection is the poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realizer {
    pub extensions: Vec<LinearExtension>,
}

impl LinearExtension {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Position of every element, indexed by element.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![usize::MAX; self.0.len()];
        for (k, &e) in self.0.iter().enumerate() {
            if e < pos.len() {
                pos[e] = k;
            }
        }
        pos
    }
}

impl Realizer {
    pub fn len(&self) -> usize {
        self.extensions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.extensions.is_empty()
    }
}

impl Poset {
    /// Builds a poset from the pairs `(x, y)` meaning "y covers x".
    ///
    /// Redundant pairs are accepted and simply disappear in the cover
    /// relation of the result.
    pub fn from_cover_pairs<S: AsRef<str>>(elements: &[S], covers: &[(S, S)]) -> Result<Poset> {
        let labels: Vec<String> = elements.iter().map(|s| s.as_ref().to_string()).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateElement(l.clone()));
            }
        }
        let mut pairs = Vec::with_capacity(covers.len());
        for (x, y) in covers {
            let xi = *index
                .get(x.as_ref())
                .ok_or_else(|| Error::UnknownElement(x.as_ref().to_string()))?;
            let yi = *index
                .get(y.as_ref())
                .ok_or_else(|| Error::UnknownElement(y.as_ref().to_string()))?;
            pairs.push((xi, yi));
        }
        Self::from_index_pairs(labels, &pairs)
    }

    /// Same as [`Poset::from_cover_pairs`] with pairs given as indices into `labels`.
    pub fn from_index_pairs(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Poset> {
        let n = labels.len();
        let mut index = HashMap::with_capacity(n);
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateElement(l.clone()));
            }
        }
        let mut succ = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for &(x, y) in pairs {
            if x >= n {
                return Err(Error::UnknownElement(format!("#{x}")));
            }
            if y >= n {
                return Err(Error::UnknownElement(format!("#{y}")));
            }
            if x == y {
                return Err(Error::CycleDetected(labels[x].clone()));
            }
            succ[x].push(y);
            indeg[y] += 1;
        }
        // Kahn; anything left over sits on a cycle
        let mut order = Vec::with_capacity(n);
        let mut stack: Vec<usize> = (0..n).rev().filter(|&v| indeg[v] == 0).collect();
        while let Some(v) = stack.pop() {
            order.push(v);
            for &w in &succ[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    stack.push(w);
                }
            }
        }
        if order.len() < n {
            let stuck = (0..n).find(|&v| indeg[v] > 0).unwrap();
            return Err(Error::CycleDetected(labels[stuck].clone()));
        }
        let mut above = vec![FixedBitSet::with_capacity(n); n];
        for &v in order.iter().rev() {
            let mut acc = FixedBitSet::with_capacity(n);
            for &w in &succ[v] {
                acc.insert(w);
                acc.union_with(&above[w]);
            }
            above[v] = acc;
        }
        let mut below = vec![FixedBitSet::with_capacity(n); n];
        for (x, up) in above.iter().enumerate() {
            for y in up.ones() {
                below[y].insert(x);
            }
        }
        Ok(Poset {
            labels,
            index,
            above,
            below,
        })
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

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    /// Strict comparison `x < y`.
    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.above[x].contains(y)
    }

    #[inline]
    pub fn le(&self, x: usize, y: usize) -> bool {
        x == y || self.above[x].contains(y)
    }

    #[inline]
    pub fn comparable(&self, x: usize, y: usize) -> bool {
        x == y || self.above[x].contains(y) || self.below[x].contains(y)
    }

    #[inline]
    pub fn incomparable(&self, x: usize, y: usize) -> bool {
        !self.comparable(x, y)
    }

    /// Elements strictly above `x`.
    pub fn strict_up(&self, x: usize) -> &FixedBitSet {
        &self.above[x]
    }

    /// Elements strictly below `x`.
    pub fn strict_down(&self, x: usize) -> &FixedBitSet {
        &self.below[x]
    }

    /// `{y : x <= y}` in increasing index order.
    pub fn upset(&self, x: usize) -> Vec<usize> {
        let mut u: Vec<usize> = self.above[x].ones().collect();
        u.push(x);
        u.sort_unstable();
        u
    }

    /// Number of strict comparabilities.
    pub fn comparability_count(&self) -> usize {
        self.above.iter().map(|s| s.count_ones(..)).sum()
    }

    /// The cover relation as pairs `(x, y)` with `y` covering `x`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            for y in self.above[x].ones() {
                if self.above[x].is_disjoint(&self.below[y]) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn covers_pair(&self, x: usize, y: usize) -> bool {
        self.lt(x, y) && self.above[x].is_disjoint(&self.below[y])
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.below[x].is_clear())
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.above[x].is_clear())
            .collect()
    }

    /// Elements sorted so that every element precedes everything above it.
    pub fn topological_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| (self.below[x].count_ones(..), x));
        order
    }

    /// Size of a longest chain.
    pub fn height(&self) -> usize {
        let mut level = vec![0usize; self.len()];
        let mut best = 0;
        for x in self.topological_order() {
            let l = 1 + self.below[x].ones().map(|w| level[w]).max().unwrap_or(0);
            level[x] = l;
            best = best.max(l);
        }
        best
    }

    /// Size of a largest antichain, via Dilworth: `n - maximum matching`
    /// in the bipartite graph of strict comparabilities.
    pub fn width(&self) -> usize {
        let n = self.len();
        let mut match_right: Vec<Option<usize>> = vec![None; n];
        let mut matched = 0;
        for x in 0..n {
            let mut seen = vec![false; n];
            if self.augment(x, &mut seen, &mut match_right) {
                matched += 1;
            }
        }
        n - matched
    }

    fn augment(&self, x: usize, seen: &mut [bool], match_right: &mut [Option<usize>]) -> bool {
        for y in self.above[x].ones() {
            if seen[y] {
                continue;
            }
            seen[y] = true;
            let free = match match_right[y] {
                None => true,
                Some(z) => self.augment(z, seen, match_right),
            };
            if free {
                match_right[y] = Some(x);
                return true;
            }
        }
        false
    }

    pub fn is_chain(&self) -> bool {
        (0..self.len()).all(|x| (x + 1..self.len()).all(|y| self.comparable(x, y)))
    }

    /// Subposet induced on `subset` (order of `subset` becomes the new index order).
    pub fn induced_subposet(&self, subset: &[usize]) -> Result<Poset> {
        let n = self.len();
        let mut seen = FixedBitSet::with_capacity(n);
        for &s in subset {
            if s >= n {
                return Err(Error::UnknownElement(format!("#{s}")));
            }
            if seen.put(s) {
                return Err(Error::DuplicateElement(self.labels[s].clone()));
            }
        }
        let labels: Vec<String> = subset.iter().map(|&s| self.labels[s].clone()).collect();
        let mut pairs = Vec::new();
        for (i, &a) in subset.iter().enumerate() {
            for (j, &b) in subset.iter().enumerate() {
                if self.lt(a, b) {
                    pairs.push((i, j));
                }
            }
        }
        Poset::from_index_pairs(labels, &pairs)
    }

    pub fn induced_by_labels<S: AsRef<str>>(&self, subset: &[S]) -> Result<Poset> {
        let idx = subset
            .iter()
            .map(|s| self.index_of(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        self.induced_subposet(&idx)
    }

    /// Ordered pairs `(a, b)` of incomparable elements.
    pub fn incomparable_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b && self.incomparable(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Incomparable `(a, b)` with `D(a) ⊆ D(b)` and `U(b) ⊆ U(a)`.
    ///
    /// A family of linear extensions that puts `b` below `a` for every
    /// critical pair is a realizer.
    pub fn critical_pairs(&self) -> Vec<(usize, usize)> {
        self.incomparable_pairs()
            .into_iter()
            .filter(|&(a, b)| {
                self.below[a].is_subset(&self.below[b]) && self.above[b].is_subset(&self.above[a])
            })
            .collect()
    }

    pub fn is_linear_extension(&self, order: &[usize]) -> bool {
        let n = self.len();
        if order.len() != n {
            return false;
        }
        let mut pos = vec![usize::MAX; n];
        for (k, &e) in order.iter().enumerate() {
            if e >= n || pos[e] != usize::MAX {
                return false;
            }
            pos[e] = k;
        }
        (0..n).all(|x| self.above[x].ones().all(|y| pos[x] < pos[y]))
    }

    /// True iff every extension is linear and every incomparable pair is
    /// reversed by at least one of them.
    pub fn verify_realizer(&self, r: &Realizer) -> bool {
        if r.extensions.is_empty() {
            return false;
        }
        if !r.extensions.iter().all(|l| self.is_linear_extension(&l.0)) {
            return false;
        }
        let positions: Vec<Vec<usize>> = r.extensions.iter().map(|l| l.positions()).collect();
        self.incomparable_pairs()
            .into_iter()
            .all(|(a, b)| positions.iter().any(|pos| pos[b] < pos[a]))
    }

    /// Extends a linear extension of the upset `U` of `x` to the whole poset:
    /// the order inside `U` is kept and everything outside `U` comes first.
    pub fn lift_extension(&self, x: usize, upset_order: &[usize]) -> Result<LinearExtension> {
        let n = self.len();
        if x >= n {
            return Err(Error::UnknownElement(format!("#{x}")));
        }
        let upset = self.upset(x);
        let mut in_u = FixedBitSet::with_capacity(n);
        for &u in &upset {
            in_u.insert(u);
        }
        if upset_order.len() != upset.len() {
            return Err(Error::NotAnUpsetExtension(format!(
                "expected {} elements, got {}",
                upset.len(),
                upset_order.len()
            )));
        }
        let mut seen = FixedBitSet::with_capacity(n);
        for &e in upset_order {
            if e >= n || !in_u.contains(e) {
                return Err(Error::NotAnUpsetExtension(format!(
                    "element #{e} is not in the upset"
                )));
            }
            if seen.put(e) {
                return Err(Error::NotAnUpsetExtension(format!(
                    "element {} repeated",
                    self.labels[e]
                )));
            }
        }
        for (k, &a) in upset_order.iter().enumerate() {
            for &b in &upset_order[..k] {
                if self.lt(a, b) {
                    return Err(Error::NotAnUpsetExtension(format!(
                        "{} is listed after {} but lies below it",
                        self.labels[a], self.labels[b]
                    )));
                }
            }
        }
        // P - U is a downset, so any linear extension of it may go first
        let mut order: Vec<usize> = self
            .topological_order()
            .into_iter()
            .filter(|&e| !in_u.contains(e))
            .collect();
        order.extend_from_slice(upset_order);
        Ok(LinearExtension(order))
    }

    /// Some linear extension (the canonical topological order).
    pub fn a_linear_extension(&self) -> LinearExtension {
        LinearExtension(self.topological_order())
    }

    /// Relabels elements; `f` must be injective.
    pub fn relabel(&self, f: impl Fn(&str) -> String) -> Result<Poset> {
        let labels: Vec<String> = self.labels.iter().map(|l| f(l)).collect();
        let pairs: Vec<(usize, usize)> = (0..self.len())
            .flat_map(|x| self.above[x].ones().map(move |y| (x, y)))
            .collect();
        Poset::from_index_pairs(labels, &pairs)
    }

    /// Adds one new element above everything.
    pub fn with_top(&self, label: &str) -> Result<Poset> {
        let mut labels = self.labels.clone();
        labels.push(label.to_string());
        let t = self.len();
        let mut pairs: Vec<(usize, usize)> = (0..self.len())
            .flat_map(|x| self.above[x].ones().map(move |y| (x, y)))
            .collect();
        pairs.extend((0..t).map(|x| (x, t)));
        Poset::from_index_pairs(labels, &pairs)
    }

    /// Adds one new element below everything.
    pub fn with_bottom(&self, label: &str) -> Result<Poset> {
        let mut labels = vec![label.to_string()];
        labels.extend(self.labels.iter().cloned());
        let mut pairs: Vec<(usize, usize)> = (0..self.len())
            .flat_map(|x| self.above[x].ones().map(move |y| (x + 1, y + 1)))
            .collect();
        pairs.extend((1..=self.len()).map(|x| (0, x)));
        Poset::from_index_pairs(labels, &pairs)
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> = self
            .covers()
            .into_iter()
            .map(|(x, y)| format!("{}<{}", self.labels[x], self.labels[y]))
            .collect();
        f.debug_struct("Poset")
            .field("elements", &self.labels)
            .field("covers", &covers)
            .finish()
    }
}

impl PartialEq for Poset {
    /// Label-identical posets with the same order.
    fn eq(&self, other: &Self) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let map: Option<Vec<usize>> = self
            .labels
            .iter()
            .map(|l| other.index.get(l).copied())
            .collect();
        let Some(map) = map else { return false };
        (0..self.len()).all(|x| (0..self.len()).all(|y| self.lt(x, y) == other.lt(map[x], map[y])))
    }
}
