// Rainbow cycles of length at most 4n/9 + 7 when every colour class has
// three edges, one instance per branch.

use rainbow_core::short_cycle::find_short_rainbow_cycle;
use rainbow_core::instances::{circulant_digraph, from_digraph, random_instance, ClassShape, ShapeMix};
use rainbow_core::EdgeColouredGraph;

fn report(name: &str, g: &EdgeColouredGraph) -> Result<(), Box<dyn std::error::Error>> {
    let found = find_short_rainbow_cycle(g)?;
    let n = g.vertex_count();
    println!(
        "{name}: n = {n}, branch {}, cycle {} with colours {:?} (bound {})",
        found.branch,
        found.certificate,
        found.certificate.colours(g),
        (4 * n + 63) / 9
    );
    found.certificate.validate(g)?;
    Ok(())
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let triangles = random_instance(45, 45, 3, 1, &ShapeMix::only(ClassShape::Triangle))?;
    report("random triangles", &triangles)?;

    let stars = from_digraph(&circulant_digraph(30, &[1, 2, 3])?).graph;
    report("out-stars of a circulant", &stars)?;

    let mixed = random_instance(27, 27, 3, 4, &ShapeMix::parse("star:6,uniform:1")?)?;
    report("mostly stars", &mixed)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
