// A three-colouring of K_n with balanced classes and no rainbow cycle.

use rainbow_core::instances::balanced_three_colouring;
use rainbow_core::oracle::rainbow_girth_exact;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for n in [100, 101, 105] {
        let g = balanced_three_colouring(n)?;
        let sizes: Vec<usize> = g.classes().map(<[usize]>::len).collect();
        // three colours: any rainbow cycle has length 2 or 3
        let rg = rainbow_girth_exact(&g, 3)?;
        println!("n = {n}: class sizes {sizes:?}, rainbow girth {rg:?}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
