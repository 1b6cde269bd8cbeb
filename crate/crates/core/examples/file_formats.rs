// The `ecg`, `dgr` and `cert` text formats, and the command-line front end
// driven in-process.

use rainbow_core::cli::run;
use rainbow_core::format::{parse_cert, parse_ecg, write_cert, write_dgr, write_ecg};
use rainbow_core::instances::circulant_digraph;
use rainbow_core::oracle::rainbow_girth_exact;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = parse_ecg("ecg 4 5 3\ne 0 1 0\ne 1 2 1\ne 2 3 2\ne 3 0 0\ne 0 2 2\n")?;
    print!("{}", write_ecg(&g));
    let cert = rainbow_girth_exact(&g, 4)?.certificate().cloned().ok_or("no rainbow cycle")?;
    let text = write_cert(&cert);
    print!("{text}");
    parse_cert(&text)?.validate(&g)?;
    print!("{}", write_dgr(&circulant_digraph(5, &[1, 2])?));

    let dir = std::env::temp_dir().join(format!("rainbow-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let input = dir.join("g.ecg");
    let cert_path = dir.join("g.cert");
    std::fs::write(&input, write_ecg(&g))?;
    std::fs::write(&cert_path, &text)?;
    let out = run(["rainbow", "verify", "--input", input.to_str().unwrap(), "--cert", cert_path.to_str().unwrap()]);
    print!("verify: {}", out.stdout);
    std::fs::remove_dir_all(&dir)?;
    if out.code != 0 {
        return Err(out.stderr.into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
