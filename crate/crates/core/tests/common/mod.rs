//! Brute-force oracles shared by the integration tests. None of them call
//! the solvers they are compared against.

#![allow(dead_code)]

pub mod props;

use std::collections::BTreeSet;

use posetlab::witness::{Direction, Obs21Outcome, PairClass, PlanePoset};
use posetlab::Poset;

/// Strict order as a boolean matrix, closed by Floyd-Warshall from covers.
pub fn closure(n: usize, pairs: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut lt = vec![vec![false; n]; n];
    for &(x, y) in pairs {
        lt[x][y] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if lt[i][k] {
                for j in 0..n {
                    if lt[k][j] {
                        lt[i][j] = true;
                    }
                }
            }
        }
    }
    lt
}

pub fn order_matrix(p: &Poset) -> Vec<Vec<bool>> {
    (0..p.len())
        .map(|x| (0..p.len()).map(|y| p.lt(x, y)).collect())
        .collect()
}

/// Every linear extension, by plain recursion over minimal elements.
pub fn linear_extensions(p: &Poset) -> Vec<Vec<usize>> {
    fn go(p: &Poset, placed: &mut Vec<bool>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let n = p.len();
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !placed[v] && (0..n).all(|u| !p.lt(u, v) || placed[u]) {
                placed[v] = true;
                cur.push(v);
                go(p, placed, cur, out);
                cur.pop();
                placed[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(p, &mut vec![false; p.len()], &mut Vec::new(), &mut out);
    out
}

/// Dimension by set cover: each extension reverses some incomparable
/// ordered pairs; find the fewest extensions covering all of them.
pub fn brute_dim(p: &Poset) -> usize {
    let n = p.len();
    let mut inc = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if x != y && p.incomparable(x, y) {
                inc.push((x, y));
            }
        }
    }
    if inc.is_empty() {
        return 1;
    }
    let mut sets: BTreeSet<u128> = BTreeSet::new();
    for l in linear_extensions(p) {
        let mut pos = vec![0; n];
        for (i, &v) in l.iter().enumerate() {
            pos[v] = i;
        }
        let mut mask = 0u128;
        for (k, &(x, y)) in inc.iter().enumerate() {
            if pos[y] < pos[x] {
                mask |= 1 << k;
            }
        }
        sets.insert(mask);
    }
    let maximal: Vec<u128> = sets
        .iter()
        .copied()
        .filter(|&s| !sets.iter().any(|&t| t != s && t & s == s))
        .collect();
    let full = if inc.len() == 128 {
        u128::MAX
    } else {
        (1u128 << inc.len()) - 1
    };
    fn cover(sets: &[u128], full: u128, have: u128, start: usize, left: usize) -> bool {
        if have == full {
            return true;
        }
        if left == 0 {
            return false;
        }
        (start..sets.len()).any(|i| cover(sets, full, have | sets[i], i + 1, left - 1))
    }
    (2..=n)
        .find(|&t| cover(&maximal, full, 0, 0, t))
        .expect("n extensions always suffice")
}

/// Largest k with pairs (a_i, b_i) such that a_i || b_i and a_i < b_j for
/// i != j, and 1 when there is no such pair of pairs.
pub fn brute_se(p: &Poset) -> usize {
    let n = p.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| a != b && p.incomparable(a, b))
        .collect();
    fn ok(p: &Poset, chosen: &[(usize, usize)], (a, b): (usize, usize)) -> bool {
        chosen.iter().all(|&(a2, b2)| {
            a != a2
                && a != b2
                && b != a2
                && b != b2
                && p.lt(a, b2)
                && p.lt(a2, b)
                && p.incomparable(a, a2)
                && p.incomparable(b, b2)
        })
    }
    fn go(
        p: &Poset,
        pairs: &[(usize, usize)],
        start: usize,
        chosen: &mut Vec<(usize, usize)>,
        best: &mut usize,
    ) {
        *best = (*best).max(chosen.len());
        for i in start..pairs.len() {
            if ok(p, chosen, pairs[i]) {
                chosen.push(pairs[i]);
                go(p, pairs, i + 1, chosen, best);
                chosen.pop();
            }
        }
    }
    let mut best = 0;
    go(p, &pairs, 0, &mut Vec::new(), &mut best);
    best.max(1)
}

/// Whether the incomparability graph has a transitive orientation, which
/// is exactly dimension at most two.
pub fn incomparability_transitively_orientable(p: &Poset) -> bool {
    let n = p.len();
    let adj: Vec<Vec<bool>> = (0..n)
        .map(|x| (0..n).map(|y| x != y && p.incomparable(x, y)).collect())
        .collect();
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .filter(|&(x, y)| adj[x][y])
        .collect();
    // dir[x][y] == true means oriented x -> y
    let mut dir = vec![vec![false; n]; n];
    fn consistent(adj: &[Vec<bool>], dir: &[Vec<bool>], a: usize, b: usize) -> bool {
        (0..adj.len()).all(|c| {
            let fwd = !dir[b][c] || (adj[a][c] && !dir[c][a]);
            let back = !dir[c][a] || (adj[c][b] && !dir[b][c]);
            fwd && back
        })
    }
    fn go(adj: &[Vec<bool>], edges: &[(usize, usize)], k: usize, dir: &mut Vec<Vec<bool>>) -> bool {
        if k == edges.len() {
            return true;
        }
        let (x, y) = edges[k];
        for (a, b) in [(x, y), (y, x)] {
            dir[a][b] = true;
            if consistent(adj, dir, a, b) && go(adj, edges, k + 1, dir) {
                return true;
            }
            dir[a][b] = false;
        }
        false
    }
    go(&adj, &edges, 0, &mut dir)
}

/// Walk around the cycle of `n` from `i` to `j`.
pub fn cyclic_walk(i: usize, j: usize, n: usize) -> Vec<usize> {
    let mut out = vec![i];
    let mut k = i;
    while k != j {
        k = k % n + 1;
        out.push(k);
    }
    out
}

/// Faces counted from the rotation system alone.
pub fn face_count(emb: &posetlab::embedding::PlaneEmbedding) -> usize {
    let g = emb.graph();
    let mut seen = BTreeSet::new();
    let mut faces = 0;
    for (u, v) in g.edges() {
        for start in [(u, v), (v, u)] {
            if seen.contains(&start) {
                continue;
            }
            faces += 1;
            let mut d = start;
            loop {
                seen.insert(d);
                let rot = emb.rotation(d.1);
                let k = rot.iter().position(|&w| w == d.0).unwrap();
                d = (d.1, rot[(k + 1) % rot.len()]);
                if d == start {
                    break;
                }
            }
        }
    }
    faces
}

/// Ray-casting point-in-polygon test.
pub fn inside_polygon(pt: (f64, f64), poly: &[(f64, f64)]) -> bool {
    let mut inside = false;
    let k = poly.len();
    for i in 0..k {
        let (a, b) = (poly[i], poly[(i + k - 1) % k]);
        if (a.1 > pt.1) != (b.1 > pt.1) && pt.0 < (b.0 - a.0) * (pt.1 - a.1) / (b.1 - a.1) + a.0 {
            inside = !inside;
        }
    }
    inside
}

/// Every upward cover path from `from` to `to`.
pub fn all_paths(pp: &PlanePoset, from: usize, to: usize, limit: usize) -> Vec<Vec<usize>> {
    fn go(
        pp: &PlanePoset,
        to: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        let v = *cur.last().unwrap();
        if v == to {
            out.push(cur.clone());
            return;
        }
        for &w in &pp.cover().up[v] {
            if pp.poset().le(w, to) {
                cur.push(w);
                go(pp, to, cur, out, limit);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(pp, to, &mut vec![from], &mut out, limit);
    out
}

/// Ranks of each step in the ordering of the edges leaving its tail.
pub fn step_ranks(pp: &PlanePoset, path: &[usize]) -> Vec<usize> {
    (1..path.len())
        .map(|i| {
            let from = if i >= 2 { Some(path[i - 2]) } else { None };
            let order = pp.u_e_ordering(path[i - 1], from).unwrap();
            order.iter().position(|&v| v == path[i]).unwrap()
        })
        .collect()
}

/// The extreme path to `u` among all paths from `x0`, by lexicographic rank.
pub fn extreme_by_enumeration(pp: &PlanePoset, u: usize, dir: Direction) -> Option<Vec<usize>> {
    let paths = all_paths(pp, pp.x0(), u, 20_000);
    if paths.len() >= 20_000 {
        return None;
    }
    let keyed = paths.into_iter().map(|p| (step_ranks(pp, &p), p));
    match dir {
        Direction::Left => keyed.min_by(|a, b| a.0.cmp(&b.0)),
        Direction::Right => keyed.max_by(|a, b| a.0.cmp(&b.0)),
    }
    .map(|(_, p)| p)
}

/// Left- or right-pair instances of the separating-path observation: for
/// each `y`, the interval between the first split of `W_L(y)` and `W_R(y)`
/// and their first rejoin when it has the shadowing property, then every
/// admissible `(a, a', b)` inside.
pub fn obs21_instances(pp: &PlanePoset) -> Vec<Obs21Outcome> {
    let p = pp.poset();
    let mut out = Vec::new();
    for y in 0..p.len() {
        let wl = pp.witnessing_path(y, Direction::Left);
        let wr = pp.witnessing_path(y, Direction::Right);
        let Some(s) = (1..wl.len().min(wr.len())).find(|&i| wl[i] != wr[i]) else {
            continue;
        };
        let Some(j) = (s..wl.len()).find(|&i| wr[s..].contains(&wl[i])) else {
            continue;
        };
        let k = wr.iter().position(|&v| v == wl[j]).unwrap();
        let Ok(iv) = pp.interval(&wl[s - 1..=j], &wr[s - 1..=k]) else {
            continue;
        };
        if iv.shadowing().is_err() {
            continue;
        }
        let h = iv.hat_partition();
        for &a in &h.a_hat {
            for &a2 in &h.a_hat {
                if a == a2
                    || !matches!(
                        pp.classify_pair(a, a2),
                        PairClass::LeftPair | PairClass::RightPair
                    )
                {
                    continue;
                }
                for &b in &h.b_hat {
                    if p.lt(a, b) {
                        if let Ok(o) = iv.obs21_check(a, a2, b) {
                            out.push(o);
                        }
                    }
                }
            }
        }
    }
    out
}
