//! Combinatorial plane embeddings: rotation systems, face tracing, the
//! one-end edge `e_∞`, `(u,e)`-orderings and left/right classification.
//!
//! Rotations are stored clockwise. A face is traced by leaving `v` along the
//! clockwise successor of the dart we arrived on, which keeps the face on
//! the left of every dart. A *corner* `k` at `v` is the angle between
//! `rot[v][k-1]` and `rot[v][k]`; the dart `v -> rot[v][k]` bounds the face
//! containing it. `e_∞` is recorded as a corner of the outer face.

use std::collections::{HashMap, VecDeque};
use std::f64::consts::PI;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::families;
use crate::graph::{CoverGraph, Graph};
use crate::planarity::{kuratowski_witness, planar_rotation, KuratowskiWitness};
use crate::poset::Poset;

/// A directed half-edge `from -> to`.
pub type Dart = (usize, usize);

#[derive(Debug, Clone)]
pub struct PlaneEmbedding {
    graph: Graph,
    rot: Vec<Vec<usize>>,
    outer: Option<Dart>,
    e_infinity: Option<(usize, usize)>,
    dart_index: HashMap<Dart, usize>,
    offsets: Vec<usize>,
}

/// Outcome of [`is_planar`].
#[derive(Debug, Clone)]
pub enum Planarity {
    Planar(Box<PlaneEmbedding>),
    NonPlanar(KuratowskiWitness),
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar(_))
    }

    pub fn embedding(self) -> Option<PlaneEmbedding> {
        match self {
            Planarity::Planar(e) => Some(*e),
            Planarity::NonPlanar(_) => None,
        }
    }
}

/// Position in the cyclic order around a vertex: a corner or an edge end.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    Corner(usize),
    Edge(usize),
}

impl Slot {
    fn code(self) -> usize {
        match self {
            Slot::Corner(k) => 2 * k,
            Slot::Edge(k) => 2 * k + 1,
        }
    }
}

/// Which side of a path a vertex lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
    On,
}

impl Side {
    pub fn flipped(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
            Side::On => Side::On,
        }
    }
}

/// Side of every vertex under consideration (`None` = not considered).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SidePartition {
    pub side: Vec<Option<Side>>,
}

impl SidePartition {
    fn collect(&self, s: Side) -> Vec<usize> {
        (0..self.side.len())
            .filter(|&v| self.side[v] == Some(s))
            .collect()
    }

    pub fn left(&self) -> Vec<usize> {
        self.collect(Side::Left)
    }

    pub fn right(&self) -> Vec<usize> {
        self.collect(Side::Right)
    }

    pub fn on(&self) -> Vec<usize> {
        self.collect(Side::On)
    }

    pub fn of(&self, v: usize) -> Option<Side> {
        self.side[v]
    }
}

/// Tests planarity; on success the embedding's outer face is the first traced face.
pub fn is_planar(g: &Graph) -> Planarity {
    match planar_rotation(g) {
        Some(rot) => {
            let emb = PlaneEmbedding::from_rotation(g.clone(), rot, None)
                .expect("path addition yields a valid rotation system");
            Planarity::Planar(Box::new(emb))
        }
        None => {
            Planarity::NonPlanar(kuratowski_witness(g).expect("non-planar graph has a witness"))
        }
    }
}

/// Embeds the cover graph of `p` with `e_∞` at its unique minimal element.
pub fn embed_poset(p: &Poset) -> Result<PlaneEmbedding> {
    let mins = p.minimal_elements();
    if mins.len() != 1 {
        return Err(Error::PreconditionViolated(format!(
            "expected a unique minimal element, found {}",
            mins.len()
        )));
    }
    let cover = CoverGraph::of(p);
    let emb = is_planar(&cover.graph)
        .embedding()
        .ok_or(Error::NotPlanar)?;
    emb.with_e_infinity_at(mins[0])
}

impl PlaneEmbedding {
    /// Validates `rot` (a clockwise permutation of each adjacency list) and
    /// the Euler formula on every component.
    pub fn from_rotation(graph: Graph, rot: Vec<Vec<usize>>, outer: Option<Dart>) -> Result<Self> {
        let n = graph.len();
        if rot.len() != n {
            return Err(Error::InvalidEmbedding(format!(
                "rotation covers {} of {n} vertices",
                rot.len()
            )));
        }
        let mut offsets = Vec::with_capacity(n);
        let mut dart_index = HashMap::new();
        let mut next = 0;
        for (v, r) in rot.iter().enumerate() {
            let mut sorted = r.clone();
            sorted.sort_unstable();
            if sorted != graph.neighbors(v) {
                return Err(Error::InvalidEmbedding(format!(
                    "rotation at `{}` is not a permutation of its neighbours",
                    graph.label(v)
                )));
            }
            offsets.push(next);
            for &w in r {
                dart_index.insert((v, w), next);
                next += 1;
            }
        }
        let outer = match outer {
            Some(d) if !dart_index.contains_key(&d) => {
                return Err(Error::InvalidEmbedding(format!(
                    "outer dart {d:?} is not an edge"
                )));
            }
            Some(d) => Some(d),
            None => (0..n).find(|&v| !rot[v].is_empty()).map(|v| (v, rot[v][0])),
        };
        let emb = PlaneEmbedding {
            graph,
            rot,
            outer,
            e_infinity: None,
            dart_index,
            offsets,
        };
        if !emb.euler_holds() {
            return Err(Error::InvalidEmbedding(
                "rotation system is not planar (Euler check)".into(),
            ));
        }
        Ok(emb)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn len(&self) -> usize {
        self.graph.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graph.is_empty()
    }

    /// Clockwise neighbour list of `v`.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rot[v]
    }

    pub fn position(&self, v: usize, w: usize) -> Option<usize> {
        self.dart_index.get(&(v, w)).map(|&d| d - self.offsets[v])
    }

    pub fn e_infinity(&self) -> Option<(usize, usize)> {
        self.e_infinity
    }

    /// The vertex carrying `e_∞`.
    pub fn x0(&self) -> Option<usize> {
        self.e_infinity.map(|(v, _)| v)
    }

    pub fn outer_dart(&self) -> Option<Dart> {
        self.outer
    }

    /// Clockwise successor of `w` around `v`.
    pub fn succ(&self, v: usize, w: usize) -> usize {
        let k = self.position(v, w).expect("dart exists");
        self.rot[v][(k + 1) % self.rot[v].len()]
    }

    /// Dart following `(u, v)` on its face.
    pub fn next_dart(&self, (u, v): Dart) -> Dart {
        (v, self.succ(v, u))
    }

    fn dart_count(&self) -> usize {
        self.dart_index.len()
    }

    /// Faces as dart cycles, plus the face index of every dart id.
    pub fn faces_with_index(&self) -> (Vec<Vec<Dart>>, Vec<usize>) {
        let mut face_of = vec![usize::MAX; self.dart_count()];
        let mut faces = Vec::new();
        for v in 0..self.len() {
            for &w in &self.rot[v] {
                let id = self.dart_index[&(v, w)];
                if face_of[id] != usize::MAX {
                    continue;
                }
                let f = faces.len();
                let mut walk = Vec::new();
                let mut d = (v, w);
                loop {
                    let di = self.dart_index[&d];
                    if face_of[di] != usize::MAX {
                        break;
                    }
                    face_of[di] = f;
                    walk.push(d);
                    d = self.next_dart(d);
                }
                faces.push(walk);
            }
        }
        (faces, face_of)
    }

    /// Faces as cyclic vertex sequences.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        self.faces_with_index()
            .0
            .into_iter()
            .map(|f| f.into_iter().map(|(u, _)| u).collect())
            .collect()
    }

    pub fn face_of_dart(&self, d: Dart) -> Option<usize> {
        let id = *self.dart_index.get(&d)?;
        Some(self.faces_with_index().1[id])
    }

    /// `V - E + F = 2` on every component (isolated vertices count one face).
    pub fn euler_holds(&self) -> bool {
        let (faces, face_of) = self.faces_with_index();
        let _ = faces;
        for comp in self.graph.components() {
            let v = comp.len() as i64;
            let e: i64 = comp.iter().map(|&x| self.rot[x].len() as i64).sum::<i64>() / 2;
            let mut fs: Vec<usize> = comp
                .iter()
                .flat_map(|&x| self.rot[x].iter().map(move |&w| (x, w)))
                .map(|d| face_of[self.dart_index[&d]])
                .collect();
            fs.sort_unstable();
            fs.dedup();
            let f = if e == 0 { 1 } else { fs.len() as i64 };
            if v - e + f != 2 {
                return false;
            }
        }
        true
    }

    /// The outer face as a dart cycle (empty for an edgeless graph).
    pub fn outer_face(&self) -> Vec<Dart> {
        let Some(start) = self.outer else {
            return Vec::new();
        };
        let mut walk = vec![start];
        let mut d = self.next_dart(start);
        while d != start {
            walk.push(d);
            d = self.next_dart(d);
        }
        walk
    }

    pub fn outer_face_vertices(&self) -> Vec<usize> {
        match self.outer {
            None => self.e_infinity.map(|(v, _)| vec![v]).unwrap_or_default(),
            Some(_) => self.outer_face().into_iter().map(|(u, _)| u).collect(),
        }
    }

    /// Re-designates the outer face as a face incident to `x0` (keeping the
    /// current one if it already is) and attaches `e_∞` in it at `x0`.
    pub fn with_e_infinity_at(mut self, x0: usize) -> Result<Self> {
        if x0 >= self.len() {
            return Err(Error::UnknownElement(format!("#{x0}")));
        }
        if self.rot[x0].is_empty() {
            if self.graph.edge_count() > 0 {
                return Err(Error::EmbeddingConstraintUnsatisfied(
                    self.graph.label(x0).to_string(),
                ));
            }
            self.e_infinity = Some((x0, 0));
            return Ok(self);
        }
        let current = self.outer_face();
        let dart = match current.iter().find(|&&(u, _)| u == x0) {
            Some(&d) => d,
            None => {
                let start = (x0, self.rot[x0][0]);
                self.outer = Some(start);
                start
            }
        };
        let k = self.position(x0, dart.1).unwrap();
        self.e_infinity = Some((x0, k));
        self.outer = Some(dart);
        Ok(self)
    }

    /// Attaches `e_∞` at a specific corner of `x0`; that corner's face becomes outer.
    pub fn with_e_infinity_corner(mut self, x0: usize, corner: usize) -> Result<Self> {
        let d = self.rot[x0].len();
        if d == 0 {
            self.e_infinity = Some((x0, 0));
            return Ok(self);
        }
        if corner >= d {
            return Err(Error::InvalidEmbedding(format!(
                "corner {corner} out of range at degree {d}"
            )));
        }
        self.e_infinity = Some((x0, corner));
        self.outer = Some((x0, self.rot[x0][corner]));
        Ok(self)
    }

    /// Mirror image: every rotation reversed; `e_∞` stays in the same corner.
    pub fn reflect(&self) -> PlaneEmbedding {
        let rot: Vec<Vec<usize>> = self
            .rot
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        let mut out =
            PlaneEmbedding::from_rotation(self.graph.clone(), rot, self.outer.map(|(u, w)| (w, u)))
                .expect("mirror of a plane embedding is plane");
        if let Some((v, k)) = self.e_infinity {
            let d = self.rot[v].len();
            let k2 = if d == 0 { 0 } else { (d - k) % d };
            out = out.with_e_infinity_corner(v, k2).expect("corner in range");
        }
        out
    }

    /// Neighbours of `v` in clockwise order strictly after `slot`.
    pub fn clockwise_after(&self, v: usize, slot: Slot) -> Vec<usize> {
        let d = self.rot[v].len();
        if d == 0 {
            return Vec::new();
        }
        let start = slot.code();
        (1..=2 * d)
            .map(|s| (start + s) % (2 * d))
            .filter(|c| c % 2 == 1)
            .map(|c| self.rot[v][c / 2])
            .collect()
    }

    /// Slot of the edge `v - w` at `v`.
    pub fn edge_slot(&self, v: usize, w: usize) -> Result<Slot> {
        self.position(v, w).map(Slot::Edge).ok_or_else(|| {
            Error::InvalidPath(format!(
                "`{}` and `{}` are not adjacent",
                self.graph.label(v),
                self.graph.label(w)
            ))
        })
    }

    /// First corner of `v` on the outer face walk.
    pub fn outer_corner(&self, v: usize) -> Option<usize> {
        if self.rot[v].is_empty() {
            return (self.outer.is_none()).then_some(0);
        }
        self.outer_face()
            .into_iter()
            .find(|&(u, _)| u == v)
            .map(|(u, w)| self.position(u, w).unwrap())
    }

    /// Splits the neighbours of `v` off the path: clockwise from `incoming`
    /// up to `outgoing` is the left fan, the rest the right fan.
    fn fans(&self, v: usize, incoming: Slot, outgoing: Slot) -> (Vec<usize>, Vec<usize>) {
        let d = self.rot[v].len();
        let (mut left, mut right) = (Vec::new(), Vec::new());
        if d == 0 {
            return (left, right);
        }
        let (a, b) = (incoming.code(), outgoing.code());
        let mut past_out = false;
        for s in 1..2 * d {
            let c = (a + s) % (2 * d);
            if c == b {
                past_out = true;
                continue;
            }
            if c % 2 == 1 {
                let w = self.rot[v][c / 2];
                if past_out {
                    right.push(w);
                } else {
                    left.push(w);
                }
            }
        }
        (left, right)
    }

    fn check_path(&self, path: &[usize]) -> Result<()> {
        if path.is_empty() {
            return Err(Error::InvalidPath("empty path".into()));
        }
        let mut seen = FixedBitSet::with_capacity(self.len());
        for &v in path {
            if v >= self.len() {
                return Err(Error::UnknownElement(format!("#{v}")));
            }
            if seen.put(v) {
                return Err(Error::InvalidPath(format!(
                    "vertex `{}` repeated",
                    self.graph.label(v)
                )));
            }
        }
        for w in path.windows(2) {
            if !self.graph.has_edge(w[0], w[1]) {
                return Err(Error::InvalidPath(format!(
                    "`{}` and `{}` are not adjacent",
                    self.graph.label(w[0]),
                    self.graph.label(w[1])
                )));
            }
        }
        Ok(())
    }

    /// Left/right classification of all vertices relative to a path that
    /// starts at the `e_∞` vertex and ends on the outer face.
    ///
    /// The curve is `e_∞`, the path, and a ray from the first outer-face
    /// corner of the last vertex. Fans at every path vertex seed a flood
    /// fill through the vertices off the path.
    pub fn side_partition(&self, path: &[usize]) -> Result<SidePartition> {
        let (x0, corner) = self.e_infinity.ok_or(Error::MissingEInfinity)?;
        self.check_path(path)?;
        if path[0] != x0 {
            return Err(Error::PathNotAnchored);
        }
        let last = *path.last().unwrap();
        let end_corner = self.outer_corner(last).ok_or_else(|| {
            Error::PathNotSeparating(format!(
                "`{}` is not on the outer face",
                self.graph.label(last)
            ))
        })?;
        let n = self.len();
        let mut side: Vec<Option<Side>> = vec![None; n];
        for &v in path {
            side[v] = Some(Side::On);
        }
        let mut queue = VecDeque::new();
        for (i, &v) in path.iter().enumerate() {
            let incoming = if i == 0 {
                Slot::Corner(corner)
            } else {
                self.edge_slot(v, path[i - 1])?
            };
            let outgoing = if i + 1 == path.len() {
                Slot::Corner(end_corner)
            } else {
                self.edge_slot(v, path[i + 1])?
            };
            let (l, r) = self.fans(v, incoming, outgoing);
            for (ws, s) in [(l, Side::Left), (r, Side::Right)] {
                for w in ws {
                    match side[w] {
                        None => {
                            side[w] = Some(s);
                            queue.push_back(w);
                        }
                        Some(Side::On) => {}
                        Some(t) if t != s => {
                            return Err(Error::PathNotSeparating(format!(
                                "`{}` is reached from both sides",
                                self.graph.label(w)
                            )))
                        }
                        _ => {}
                    }
                }
            }
        }
        while let Some(v) = queue.pop_front() {
            let s = side[v].unwrap();
            for &w in self.graph.neighbors(v) {
                match side[w] {
                    None => {
                        side[w] = Some(s);
                        queue.push_back(w);
                    }
                    Some(t) if t != s && t != Side::On => {
                        return Err(Error::PathNotSeparating(format!(
                            "`{}` is reached from both sides",
                            self.graph.label(w)
                        )))
                    }
                    _ => {}
                }
            }
        }
        Ok(SidePartition { side })
    }

    /// The closed region bounded by the simple cycle `cycle` (a vertex
    /// sequence, first vertex not repeated) on the side away from the
    /// outer face.
    pub fn enclosed_region(&self, cycle: &[usize]) -> Result<Region> {
        if cycle.len() < 3 {
            return Err(Error::InvalidPath(
                "a cycle needs at least three vertices".into(),
            ));
        }
        self.check_path(cycle)?;
        let (first, last) = (cycle[0], *cycle.last().unwrap());
        if !self.graph.has_edge(first, last) {
            return Err(Error::InvalidPath("cycle is not closed".into()));
        }
        let (faces, face_of) = self.faces_with_index();
        let m = cycle.len();
        let darts: Vec<Dart> = (0..m).map(|i| (cycle[i], cycle[(i + 1) % m])).collect();
        let mut on_cycle_edge: std::collections::HashSet<(usize, usize)> =
            std::collections::HashSet::new();
        for &(u, v) in &darts {
            on_cycle_edge.insert((u.min(v), u.max(v)));
        }
        let mut dsu: Vec<usize> = (0..faces.len()).collect();
        for (u, v) in self.graph.edges() {
            if on_cycle_edge.contains(&(u, v)) {
                continue;
            }
            let f1 = face_of[self.dart_index[&(u, v)]];
            let f2 = face_of[self.dart_index[&(v, u)]];
            union(&mut dsu, f1, f2);
        }
        let left_root = find(&mut dsu, face_of[self.dart_index[&darts[0]]]);
        let right_root = find(
            &mut dsu,
            face_of[self.dart_index[&(darts[0].1, darts[0].0)]],
        );
        if left_root == right_root {
            return Err(Error::PathNotSeparating(
                "cycle does not separate the faces".into(),
            ));
        }
        for &(u, v) in &darts {
            let l = find(&mut dsu, face_of[self.dart_index[&(u, v)]]);
            let r = find(&mut dsu, face_of[self.dart_index[&(v, u)]]);
            if l != left_root || r != right_root {
                return Err(Error::PathNotSeparating(
                    "cycle sides are inconsistent".into(),
                ));
            }
        }
        let outer_face = self
            .outer
            .map(|d| face_of[self.dart_index[&d]])
            .ok_or_else(|| Error::InvalidEmbedding("no outer face".into()))?;
        let outer_root = find(&mut dsu, outer_face);
        let inside_root = if outer_root == left_root {
            right_root
        } else {
            left_root
        };
        let inside_face: Vec<bool> = (0..faces.len())
            .map(|f| find(&mut dsu, f) == inside_root)
            .collect();
        let mut boundary = FixedBitSet::with_capacity(self.len());
        for &v in cycle {
            boundary.insert(v);
        }
        let mut vertices = boundary.clone();
        for v in 0..self.len() {
            if boundary.contains(v) {
                continue;
            }
            if self.rot[v]
                .iter()
                .any(|&w| inside_face[face_of[self.dart_index[&(v, w)]]])
            {
                vertices.insert(v);
            }
        }
        Ok(Region {
            cycle: cycle.to_vec(),
            vertices,
            boundary,
            inside_face,
            face_of,
        })
    }
}

fn find(d: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while d[r] != r {
        r = d[r];
    }
    let mut c = x;
    while d[c] != r {
        let n = d[c];
        d[c] = r;
        c = n;
    }
    r
}

fn union(d: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(d, a), find(d, b));
    if ra != rb {
        d[ra] = rb;
    }
}

/// A closed disc of the embedding bounded by a simple cycle.
#[derive(Debug, Clone)]
pub struct Region {
    pub cycle: Vec<usize>,
    /// Boundary and interior vertices.
    pub vertices: FixedBitSet,
    pub boundary: FixedBitSet,
    inside_face: Vec<bool>,
    face_of: Vec<usize>,
}

impl Region {
    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(v)
    }

    pub fn members(&self) -> Vec<usize> {
        self.vertices.ones().collect()
    }

    /// True iff the edge `u - v` runs through the region.
    pub fn contains_edge(&self, emb: &PlaneEmbedding, u: usize, v: usize) -> bool {
        match (emb.dart_index.get(&(u, v)), emb.dart_index.get(&(v, u))) {
            (Some(&a), Some(&b)) => {
                self.inside_face[self.face_of[a]] || self.inside_face[self.face_of[b]]
            }
            _ => false,
        }
    }

    /// Left/right of a path that crosses the region from one boundary vertex
    /// to another, computed on the faces inside the region.
    pub fn side_of_path(&self, emb: &PlaneEmbedding, path: &[usize]) -> Result<SidePartition> {
        emb.check_path(path)?;
        for &v in path {
            if !self.contains(v) {
                return Err(Error::InvalidPath(format!(
                    "`{}` lies outside the region",
                    emb.graph.label(v)
                )));
            }
        }
        for w in path.windows(2) {
            if !self.contains_edge(emb, w[0], w[1]) {
                return Err(Error::InvalidPath(format!(
                    "edge `{}`-`{}` runs outside the region",
                    emb.graph.label(w[0]),
                    emb.graph.label(w[1])
                )));
            }
        }
        let (a, b) = (path[0], *path.last().unwrap());
        if !self.boundary.contains(a) || !self.boundary.contains(b) {
            return Err(Error::PathNotSeparating(
                "path endpoints must lie on the boundary".into(),
            ));
        }
        let nf = self.inside_face.len();
        let mut on_path = std::collections::HashSet::new();
        for w in path.windows(2) {
            on_path.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
        let mut dsu: Vec<usize> = (0..nf).collect();
        for (u, v) in emb.graph.edges() {
            if on_path.contains(&(u, v)) {
                continue;
            }
            let f1 = self.face_of[emb.dart_index[&(u, v)]];
            let f2 = self.face_of[emb.dart_index[&(v, u)]];
            if self.inside_face[f1] && self.inside_face[f2] {
                union(&mut dsu, f1, f2);
            }
        }
        let mut label: HashMap<usize, Side> = HashMap::new();
        for w in path.windows(2) {
            for (d, s) in [((w[0], w[1]), Side::Left), ((w[1], w[0]), Side::Right)] {
                let f = self.face_of[emb.dart_index[&d]];
                if !self.inside_face[f] {
                    continue;
                }
                let r = find(&mut dsu, f);
                match label.get(&r) {
                    Some(&t) if t != s => {
                        return Err(Error::PathNotSeparating("a face lies on both sides".into()));
                    }
                    _ => {
                        label.insert(r, s);
                    }
                }
            }
        }
        let mut side: Vec<Option<Side>> = vec![None; emb.len()];
        for &v in path {
            side[v] = Some(Side::On);
        }
        for v in self.vertices.ones() {
            if side[v].is_some() {
                continue;
            }
            let mut found: Option<Side> = None;
            for &w in &emb.rot[v] {
                let f = self.face_of[emb.dart_index[&(v, w)]];
                if !self.inside_face[f] {
                    continue;
                }
                if let Some(&s) = label.get(&find(&mut dsu, f)) {
                    if found.is_some_and(|t| t != s) {
                        return Err(Error::PathNotSeparating(format!(
                            "`{}` touches both sides",
                            emb.graph.label(v)
                        )));
                    }
                    found = Some(s);
                }
            }
            side[v] = found;
        }
        Ok(SidePartition { side })
    }
}

/// `(u,e)`-ordering: the edges leaving `u` (to elements covering `u`) in
/// clockwise order starting from the entering edge `from -> u`, or from
/// `e_∞` when `from` is `None`.
pub fn u_e_ordering(
    emb: &PlaneEmbedding,
    cover: &CoverGraph,
    u: usize,
    from: Option<usize>,
) -> Result<Vec<usize>> {
    let slot = entering_slot(emb, cover, u, from)?;
    Ok(emb
        .clockwise_after(u, slot)
        .into_iter()
        .filter(|&w| cover.is_up(u, w))
        .collect())
}

pub(crate) fn entering_slot(
    emb: &PlaneEmbedding,
    cover: &CoverGraph,
    u: usize,
    from: Option<usize>,
) -> Result<Slot> {
    match from {
        None => match emb.e_infinity {
            Some((x0, k)) if x0 == u => Ok(Slot::Corner(k)),
            Some(_) => Err(Error::EdgeDoesNotEnter {
                from: "e_infinity".into(),
                to: emb.graph.label(u).into(),
                at: emb.graph.label(u).into(),
            }),
            None => Err(Error::MissingEInfinity),
        },
        Some(v) => {
            if !cover.is_up(v, u) {
                return Err(Error::EdgeDoesNotEnter {
                    from: emb.graph.label(v).into(),
                    to: emb.graph.label(u).into(),
                    at: emb.graph.label(u).into(),
                });
            }
            emb.edge_slot(u, v)
        }
    }
}

/// Clockwise rotation from straight-line coordinates (y axis pointing up).
pub fn rotation_from_coordinates(g: &Graph, pos: &[(f64, f64)]) -> Vec<Vec<usize>> {
    (0..g.len())
        .map(|v| {
            let mut nb: Vec<(f64, usize)> = g
                .neighbors(v)
                .iter()
                .map(|&w| ((pos[w].1 - pos[v].1).atan2(pos[w].0 - pos[v].0), w))
                .collect();
            // clockwise = decreasing angle
            nb.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
            nb.into_iter().map(|(_, w)| w).collect()
        })
        .collect()
}

/// The radial drawing of the wheel `H_n`: `min` at the centre, interval
/// `r(i,j)` of length `l` on ring `n - l` at the angle of its midpoint.
/// Indices follow `families::wheel(n, false)`.
pub fn wheel_coordinates(n: usize) -> Result<(Poset, Vec<(f64, f64)>)> {
    let p = families::wheel(n, false)?;
    let mut pos = vec![(0.0, 0.0); p.len()];
    for c in families::wheel_indices(n) {
        let v = p.index_of(&families::wheel_label(c.i, c.j))?;
        let l = c.len() as f64;
        let mid = (c.i - 1) as f64 + (l - 1.0) / 2.0;
        let theta = 2.0 * PI * mid / n as f64;
        let radius = n as f64 - l;
        pos[v] = (radius * theta.cos(), radius * theta.sin());
    }
    Ok((p, pos))
}

/// Canonical embedding of `H_n` with `e_∞` at `min`, placed in the face
/// `min, r(n,n-2), r(1,n-2), r(1,n-1)`.
pub fn canonical_wheel_embedding(n: usize) -> Result<(Poset, PlaneEmbedding)> {
    let (p, pos) = wheel_coordinates(n)?;
    let cover = CoverGraph::of(&p);
    let rot = rotation_from_coordinates(&cover.graph, &pos);
    let emb = PlaneEmbedding::from_rotation(cover.graph.clone(), rot, None)?;
    let min = p.index_of("min")?;
    let anchor = p.index_of(&families::wheel_label(n, n - 2))?;
    let k = emb
        .position(min, anchor)
        .ok_or_else(|| Error::InvalidEmbedding("min is not adjacent to the anchor".into()))?;
    let emb = emb.with_e_infinity_corner(min, k)?;
    Ok((p, emb))
}
