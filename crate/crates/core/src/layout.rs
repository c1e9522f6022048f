//! Figures for human inspection: straight-line SVG drawings of plane
//! embeddings and DOT diagrams of cover graphs.

use std::f64::consts::PI;
use std::fmt::Write;

use crate::embedding::PlaneEmbedding;
use crate::graph::CoverGraph;
use crate::poset::Poset;

/// Tutte barycentric drawing: outer face on a circle, every other vertex
/// at the average of its neighbours.
pub fn tutte_layout(emb: &PlaneEmbedding) -> Vec<(f64, f64)> {
    let g = emb.graph();
    let n = g.len();
    let mut pos = vec![(0.0, 0.0); n];
    let mut fixed = vec![false; n];
    let mut outer = Vec::new();
    for v in emb.outer_face_vertices() {
        if !outer.contains(&v) {
            outer.push(v);
        }
    }
    let k = outer.len().max(1) as f64;
    for (i, &v) in outer.iter().enumerate() {
        // counter-clockwise placement keeps the clockwise rotations consistent
        let t = -2.0 * PI * i as f64 / k;
        pos[v] = (t.cos(), t.sin());
        fixed[v] = true;
    }
    for (c, comp) in g.components().into_iter().enumerate() {
        if comp.iter().any(|&v| fixed[v]) {
            continue;
        }
        let t = 2.0 * PI * c as f64 / 7.0;
        for (i, &v) in comp.iter().enumerate() {
            pos[v] = (1.5 + 0.3 * t.cos() + 0.05 * i as f64, 1.5 + 0.3 * t.sin());
        }
        fixed[comp[0]] = true;
    }
    for _ in 0..2000 {
        let mut moved = 0.0f64;
        for v in 0..n {
            if fixed[v] || g.degree(v) == 0 {
                continue;
            }
            let d = g.degree(v) as f64;
            let (sx, sy) = g
                .neighbors(v)
                .iter()
                .fold((0.0, 0.0), |(x, y), &w| (x + pos[w].0, y + pos[w].1));
            let next = (sx / d, sy / d);
            moved = moved.max((next.0 - pos[v].0).abs() + (next.1 - pos[v].1).abs());
            pos[v] = next;
        }
        if moved < 1e-9 {
            break;
        }
    }
    pos
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// SVG of a straight-line drawing; `highlight` edges are drawn in red.
pub fn svg(emb: &PlaneEmbedding, pos: &[(f64, f64)], highlight: &[usize]) -> String {
    let g = emb.graph();
    let size = 640.0;
    let (mut lo_x, mut lo_y, mut hi_x, mut hi_y) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &(x, y) in pos {
        lo_x = lo_x.min(x);
        lo_y = lo_y.min(y);
        hi_x = hi_x.max(x);
        hi_y = hi_y.max(y);
    }
    let span = (hi_x - lo_x).max(hi_y - lo_y).max(1e-9);
    let map = |(x, y): (f64, f64)| {
        (
            40.0 + (x - lo_x) / span * (size - 80.0),
            size - 40.0 - (y - lo_y) / span * (size - 80.0),
        )
    };
    let on_path = |u: usize, v: usize| {
        highlight
            .windows(2)
            .any(|w| (w[0] == u && w[1] == v) || (w[0] == v && w[1] == u))
    };
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    for (u, v) in g.edges() {
        let (a, b) = (map(pos[u]), map(pos[v]));
        let (color, width) = if on_path(u, v) {
            ("#c0392b", 3.0)
        } else {
            ("#555555", 1.2)
        };
        let _ = writeln!(
            out,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{color}" stroke-width="{width}"/>"#,
            a.0, a.1, b.0, b.1
        );
    }
    for v in 0..g.len() {
        let (x, y) = map(pos[v]);
        let fill = if emb.x0() == Some(v) {
            "#2e86c1"
        } else {
            "#f4d03f"
        };
        let _ = writeln!(
            out,
            r#"<circle cx="{x:.2}" cy="{y:.2}" r="5" fill="{fill}" stroke="black"/>"#
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" font-size="10" font-family="monospace">{}</text>"#,
            x + 6.0,
            y - 6.0,
            escape(g.label(v))
        );
    }
    out.push_str("</svg>\n");
    out
}

/// DOT digraph of the cover graph, drawn bottom-up with one rank per height level.
pub fn dot(p: &Poset) -> String {
    let cover = CoverGraph::of(p);
    let mut level = vec![0usize; p.len()];
    for v in p.topological_order() {
        for &w in &cover.up[v] {
            level[w] = level[w].max(level[v] + 1);
        }
    }
    let quote = |s: &str| format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""));
    let mut out = String::from("digraph P {\n  rankdir=BT;\n  node [shape=circle, fontsize=10];\n");
    for (x, y) in cover.directed_edges() {
        let _ = writeln!(out, "  {} -> {};", quote(p.label(x)), quote(p.label(y)));
    }
    let top = level.iter().copied().max().unwrap_or(0);
    for l in 0..=top {
        let names: Vec<String> = (0..p.len())
            .filter(|&v| level[v] == l)
            .map(|v| quote(p.label(v)))
            .collect();
        if !names.is_empty() {
            let _ = writeln!(out, "  {{ rank=same; {}; }}", names.join("; "));
        }
    }
    for v in (0..p.len()).filter(|&v| cover.up[v].is_empty() && cover.down[v].is_empty()) {
        let _ = writeln!(out, "  {};", quote(p.label(v)));
    }
    out.push_str("}\n");
    out
}
