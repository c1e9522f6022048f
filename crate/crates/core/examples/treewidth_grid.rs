//! Treewidth with decompositions, and grids inside wheel cover graphs.

use posetlab::families::kelly;
use posetlab::graph::{CoverGraph, Graph};
use posetlab::metrics::{grid_minor, treewidth_exact, verify_grid_map, wheel_grid_certificate};
use posetlab::Budget;

fn main() -> posetlab::Result<()> {
    let budget = Budget::default();
    for n in 2..=4 {
        let t = treewidth_exact(&Graph::grid(n, n), 8, &budget)?;
        println!(
            "tw({n}x{n} grid) = {} with {} bags",
            t.width,
            t.decomposition.bags.len()
        );
    }
    for d in 3..=7 {
        let g = CoverGraph::of(&kelly(d)?).graph;
        println!(
            "tw(cover(K_{d})) = {}",
            treewidth_exact(&g, 8, &budget)?.width
        );
    }
    for n in 2..=3 {
        let (cover, map) = wheel_grid_certificate(n)?;
        let cells: Vec<&str> = map.iter().map(|&v| cover.graph.label(v)).collect();
        println!(
            "{n}x{n} grid in H_{}: {} ({})",
            2 * n + 1,
            cells.join(" "),
            verify_grid_map(&cover.graph, n, &map)
        );
    }
    let ring = Graph::cycle(9);
    println!(
        "2x2 grid minor in a 9-cycle: {:?}",
        grid_minor(&ring, 2, &budget)?
    );
    Ok(())
}
