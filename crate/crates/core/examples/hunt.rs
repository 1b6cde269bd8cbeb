// Random search for short rainbow girth, checked against proved bounds.

use rainbow_core::harness::{hunt, Check, HuntConfig, Verdict};
use rainbow_core::instances::ShapeMix;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let config = HuntConfig {
        n: 15,
        t: 15,
        r: 3,
        trials: 300,
        seed: 2024,
        shape: ShapeMix::parse("star:4,triangle:1,matching:1")?,
        check: Some(Check::NOverR),
    };
    let report = hunt(&config)?;
    print!("{}", report.render());
    if let Some(worst) = report.max_trial() {
        println!("largest girth at trial {} (seed {})", worst.index, worst.seed);
    }
    assert_eq!(report.count(Verdict::Fault), 0);

    let digraphs = HuntConfig { check: Some(Check::DigraphGirth), r: 2, trials: 200, ..config };
    print!("{}", hunt(&digraphs)?.render());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
