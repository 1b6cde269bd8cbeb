// Randomised checks of the excess, stable set, chord and digraph bounds,
// rendered as a table.

use rainbow_core::harness::lemma_report;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let report = lemma_report(7, 150)?;
    print!("{}", report.render());
    if !report.passed() {
        return Err("a suite failed".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
