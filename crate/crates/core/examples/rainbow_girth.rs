// Exact rainbow girth, plain girth and directed girth.

use rainbow_core::oracle::{directed_girth, girth_exact, rainbow_girth_exact, RainbowGirth};
use rainbow_core::{Digraph, Edge, EdgeColouredGraph};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // A 6-cycle coloured 0,1,2,0,1,2 with a chord of colour 3.
    let mut edges: Vec<Edge> = (0..6).map(|i| Edge::new(i, (i + 1) % 6, i % 3)).collect();
    edges.push(Edge::new(0, 3, 3));
    let g = EdgeColouredGraph::new(6, 4, edges)?;

    println!("girth: {:?}", girth_exact(&g.full()).length());
    for cap in [3, 4, 6] {
        match rainbow_girth_exact(&g, cap)? {
            RainbowGirth::Finite(c) => println!("cap {cap}: rainbow cycle {c}, colours {:?}", c.colours(&g)),
            RainbowGirth::NoneWithin(cap) => println!("cap {cap}: no rainbow cycle"),
        }
    }

    let d = Digraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)])?;
    println!("directed girth: {:?}", directed_girth(&d).length());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
