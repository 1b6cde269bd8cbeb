// The harmonic weight psi and the outdegree defect of digraphs, against
// their directed girth.

use num_rational::BigRational;
use rainbow_core::instances::{defect, psi_digraph, random_digraph_between};
use rainbow_core::oracle::directed_girth;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for seed in 0..6 {
        let d = random_digraph_between(16, 1, 3, seed)?;
        let psi = psi_digraph(&d)?;
        let girth = directed_girth(&d).length().ok_or("acyclic")?;
        let two_psi = &psi * BigRational::from_integer(2.into());
        println!(
            "seed {seed}: girth {girth}, psi {psi}, girth <= 2 psi: {}, defect at r=2: {}",
            BigRational::from_integer(girth.into()) <= two_psi,
            defect(&d, 2)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
