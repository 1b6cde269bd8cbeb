// Vertex-minimal excess-k subgraphs, their short cycles, chords and stable
// sets.

use rainbow_core::excess::{chord_bound, chord_census, minimal_excess_subgraph, short_cycle_excess2};
use rainbow_core::oracle::max_stable_set;
use rainbow_core::{Edge, EdgeColouredGraph, Subgraph};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // K4 on 0..4, a path 3-4-5 and a 5-cycle on 5..10, every edge its own colour
    let pairs = [
        (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
        (3, 4), (4, 5),
        (5, 6), (6, 7), (7, 8), (8, 9), (9, 5),
    ];
    let g = EdgeColouredGraph::rainbow_from_pairs(10, &pairs)?;
    let r = minimal_excess_subgraph(&g.full(), 2)?;
    println!("minimal excess-2 subgraph on {:?}, excess {}", r.vertices(), r.excess());
    println!("shortest cycle {}", short_cycle_excess2(&r)?);
    let alpha = max_stable_set(&g.full().two_core())?;
    println!("max stable set of the 2-core: {:?}", alpha.vertices);

    // Two chords of the K4: one in a new colour, one reusing colour 0.
    let mut edges = g.edges().to_vec();
    edges.push(Edge::new(0, 2, 13));
    edges.push(Edge::new(1, 2, 0));
    let h = EdgeColouredGraph::new(10, 14, edges)?;
    let r = Subgraph::new(&h, 0..6)?;
    let census = chord_census(&r, &h.full())?;
    println!(
        "chords of the K4: {} in new colours, {} in colours of the K4 (bound {})",
        census.novel,
        census.plain,
        chord_bound(2, 2)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
