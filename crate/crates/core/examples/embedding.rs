//! Planarity of cover graphs, the canonical wheel embedding and left/right
//! classification. Pass a path to write an SVG of H_5.

use posetlab::embedding::{canonical_wheel_embedding, is_planar, Planarity};
use posetlab::families::standard_example;
use posetlab::graph::CoverGraph;
use posetlab::layout::{svg, tutte_layout};

fn main() -> posetlab::Result<()> {
    for d in [4, 5] {
        let g = CoverGraph::of(&standard_example(d)?).graph;
        match is_planar(&g) {
            Planarity::Planar(e) => println!("S_{d}: planar, {} faces", e.faces().len()),
            Planarity::NonPlanar(w) => println!(
                "S_{d}: not planar ({:?} subdivision, {} edges)",
                w.kind,
                w.edges.len()
            ),
        }
    }

    let (p, emb) = canonical_wheel_embedding(5)?;
    let outer: Vec<&str> = emb
        .outer_face_vertices()
        .iter()
        .map(|&v| p.label(v))
        .collect();
    println!(
        "H_5: {} faces, outer face {}",
        emb.faces().len(),
        outer.join(" ")
    );

    let spoke: Vec<usize> = [
        "min", "r(3,1)", "r(4,1)", "r(5,1)", "r(1,1)", "r(1,2)", "r(1,3)",
    ]
    .iter()
    .map(|l| p.index_of(l))
    .collect::<posetlab::Result<_>>()?;
    let sides = emb.side_partition(&spoke)?;
    let name = |vs: Vec<usize>| {
        vs.iter()
            .map(|&v| p.label(v).to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    println!("left of the path:  {}", name(sides.left()));
    println!("right of the path: {}", name(sides.right()));

    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, svg(&emb, &tutte_layout(&emb), &spoke))?;
        println!("wrote {path}");
    }
    Ok(())
}
