//! Planarity testing by path addition (Demoucron, Malgrange, Pertuiset) on
//! each biconnected block, with a Kuratowski subgraph extracted by edge
//! minimisation when the test fails.

use std::collections::HashSet;

use crate::graph::Graph;

/// Which Kuratowski graph a witness subdivides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subdivision of `K_5` or `K_{3,3}` inside the input graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    pub branch_vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

/// Clockwise rotation system (neighbour lists) of a planar graph, or `None`.
pub fn planar_rotation(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.len();
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in biconnected_blocks(g) {
        if block.len() == 1 {
            let (u, v) = block[0];
            rotation[u].push(v);
            rotation[v].push(u);
            continue;
        }
        let local = embed_block(&block)?;
        for (v, cyc) in local {
            rotation[v].extend(cyc);
        }
    }
    Some(rotation)
}

/// Edge lists of the biconnected blocks (bridges come out as single edges).
pub fn biconnected_blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // frames: (vertex, parent, next neighbour index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, parent, ref mut next)) = stack.last_mut() {
            if *next < g.degree(v) {
                let w = g.neighbors(v)[*next];
                *next += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(u, _, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == (u, v) {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

/// Embeds one biconnected block; returns `(vertex, clockwise neighbours)`.
fn embed_block(edges: &[(usize, usize)]) -> Option<Vec<(usize, Vec<usize>)>> {
    let mut verts: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    verts.sort_unstable();
    verts.dedup();
    let k = verts.len();
    let loc = |v: usize| verts.binary_search(&v).unwrap();
    let mut adj = vec![Vec::new(); k];
    for &(u, v) in edges {
        let (a, b) = (loc(u), loc(v));
        adj[a].push(b);
        adj[b].push(a);
    }
    for a in adj.iter_mut() {
        a.sort_unstable();
        a.dedup();
    }
    if edges.len() > 3 * k - 6 && k >= 3 {
        return None;
    }
    let cycle = find_cycle(&adj)?;
    let mut emb_v = vec![false; k];
    let mut emb_e: HashSet<(usize, usize)> = HashSet::new();
    let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
    for (i, &v) in cycle.iter().enumerate() {
        emb_v[v] = true;
        emb_e.insert(key(v, cycle[(i + 1) % cycle.len()]));
    }
    let total_edges: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];

    while emb_e.len() < total_edges {
        let fragments = fragments(&adj, &emb_v, &emb_e);
        let face_sets: Vec<HashSet<usize>> =
            faces.iter().map(|f| f.iter().copied().collect()).collect();
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&f| frag.attachments.iter().all(|a| face_sets[f].contains(a)))
                .collect();
            if admissible.is_empty() {
                return None;
            }
            if admissible.len() == 1 {
                choice = Some((fi, admissible[0]));
                break;
            }
            if choice.is_none() {
                choice = Some((fi, admissible[0]));
            }
        }
        let (fi, face_idx) = choice?;
        let path = fragment_path(&adj, &emb_v, &fragments[fi]);
        for w in path.windows(2) {
            emb_e.insert(key(w[0], w[1]));
        }
        for &v in &path {
            emb_v[v] = true;
        }
        let face = faces.swap_remove(face_idx);
        let (a, b) = split_face(&face, &path);
        faces.push(a);
        faces.push(b);
    }

    // rotation from faces: for consecutive (x, y, z) on a face, z follows x around y
    let mut succ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k];
    for f in &faces {
        let m = f.len();
        for i in 0..m {
            let (x, y, z) = (f[i], f[(i + 1) % m], f[(i + 2) % m]);
            succ[y].push((x, z));
        }
    }
    let mut out = Vec::with_capacity(k);
    for y in 0..k {
        let start = adj[y][0];
        let mut cyc = vec![start];
        let mut cur = start;
        loop {
            let nxt = succ[y].iter().find(|&&(x, _)| x == cur)?.1;
            if nxt == start {
                break;
            }
            cyc.push(nxt);
            cur = nxt;
            if cyc.len() > adj[y].len() {
                return None;
            }
        }
        if cyc.len() != adj[y].len() {
            return None;
        }
        out.push((verts[y], cyc.into_iter().map(|l| verts[l]).collect()));
    }
    Some(out)
}

fn find_cycle(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    let k = adj.len();
    let mut parent = vec![usize::MAX; k];
    let mut depth = vec![usize::MAX; k];
    let mut stack = vec![(0usize, 0usize)];
    depth[0] = 0;
    while let Some((v, i)) = stack.pop() {
        if i < adj[v].len() {
            stack.push((v, i + 1));
            let w = adj[v][i];
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                parent[w] = v;
                stack.push((w, 0));
            } else if w != parent[v] && depth[w] < depth[v] {
                let mut cyc = vec![v];
                let mut u = v;
                while u != w {
                    u = parent[u];
                    cyc.push(u);
                }
                return Some(cyc);
            }
        }
    }
    None
}

struct Fragment {
    /// Either a single chord `(u, v)` or a component of unembedded vertices.
    chord: Option<(usize, usize)>,
    vertices: Vec<usize>,
    attachments: Vec<usize>,
}

fn fragments(adj: &[Vec<usize>], emb_v: &[bool], emb_e: &HashSet<(usize, usize)>) -> Vec<Fragment> {
    let k = adj.len();
    let mut out = Vec::new();
    for u in 0..k {
        if !emb_v[u] {
            continue;
        }
        for &v in &adj[u] {
            if u < v && emb_v[v] && !emb_e.contains(&(u, v)) {
                out.push(Fragment {
                    chord: Some((u, v)),
                    vertices: Vec::new(),
                    attachments: vec![u, v],
                });
            }
        }
    }
    let mut seen = vec![false; k];
    for s in 0..k {
        if emb_v[s] || seen[s] {
            continue;
        }
        let mut comp = Vec::new();
        let mut att = HashSet::new();
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            comp.push(v);
            for &w in &adj[v] {
                if emb_v[w] {
                    att.insert(w);
                } else if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        let mut attachments: Vec<usize> = att.into_iter().collect();
        attachments.sort_unstable();
        out.push(Fragment {
            chord: None,
            vertices: comp,
            attachments,
        });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(adj: &[Vec<usize>], emb_v: &[bool], frag: &Fragment) -> Vec<usize> {
    if let Some((u, v)) = frag.chord {
        return vec![u, v];
    }
    let u = frag.attachments[0];
    let inside: HashSet<usize> = frag.vertices.iter().copied().collect();
    let mut prev: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
    let mut queue = std::collections::VecDeque::new();
    for &w in &adj[u] {
        if inside.contains(&w) && !prev.contains_key(&w) {
            prev.insert(w, u);
            queue.push_back(w);
        }
    }
    while let Some(w) = queue.pop_front() {
        if let Some(&t) = adj[w].iter().find(|&&t| emb_v[t] && t != u) {
            let mut path = vec![t, w];
            let mut c = w;
            while let Some(&p) = prev.get(&c) {
                path.push(p);
                if p == u {
                    break;
                }
                c = p;
            }
            path.reverse();
            return path;
        }
        for &x in &adj[w] {
            if inside.contains(&x) && !prev.contains_key(&x) {
                prev.insert(x, w);
                queue.push_back(x);
            }
        }
    }
    unreachable!("fragment of a biconnected block has two attachments")
}

/// Splits `face` along `path`, whose endpoints lie on the face.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = face.len();
    let (u, v) = (path[0], *path.last().unwrap());
    let iu = face.iter().position(|&x| x == u).unwrap();
    let iv = face.iter().position(|&x| x == v).unwrap();
    let interior = &path[1..path.len() - 1];
    let mut a = Vec::new();
    let mut i = iu;
    loop {
        a.push(face[i]);
        if i == iv {
            break;
        }
        i = (i + 1) % m;
    }
    a.extend(interior.iter().rev());
    let mut b = Vec::new();
    let mut i = iv;
    loop {
        b.push(face[i]);
        if i == iu {
            break;
        }
        i = (i + 1) % m;
    }
    b.extend(interior.iter());
    (a, b)
}

/// Minimal non-planar subgraph, classified as a `K_5` or `K_{3,3}` subdivision.
pub fn kuratowski_witness(g: &Graph) -> Option<KuratowskiWitness> {
    if planar_rotation(g).is_some() {
        return None;
    }
    let mut h = g.clone();
    for (u, v) in g.edges() {
        h.remove_edge(u, v);
        if planar_rotation(&h).is_some() {
            h.add_edge(u, v);
        }
    }
    let edges = h.edges();
    let branch: Vec<usize> = (0..h.len()).filter(|&v| h.degree(v) >= 3).collect();
    let kind = if branch.len() == 5 && branch.iter().all(|&v| h.degree(v) == 4) {
        KuratowskiKind::K5
    } else {
        KuratowskiKind::K33
    };
    Some(KuratowskiWitness {
        kind,
        branch_vertices: branch,
        edges,
    })
}
