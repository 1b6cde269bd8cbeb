// A digraph as an edge-coloured graph: the out-arcs of each vertex form one
// colour class, and shortest rainbow cycles are shortest directed cycles.

use rainbow_core::instances::{from_digraph, psi_digraph, psi_graph, random_digraph};
use rainbow_core::oracle::{directed_girth, rainbow_girth_exact};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for seed in 0..5 {
        let d = random_digraph(12, 2, seed)?;
        let reduction = from_digraph(&d);
        let rg = rainbow_girth_exact(&reduction.graph, 12)?;
        println!(
            "seed {seed}: directed girth {:?}, rainbow girth {:?}, psi {} = {}",
            directed_girth(&d).length(),
            rg.length(),
            psi_digraph(&d)?,
            psi_graph(&reduction.graph)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
