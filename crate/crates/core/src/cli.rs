//! The `rainbow` command line, callable in-process through [`run`].
//!
//! Exit codes: 0 success, 1 a property or verification failed, 2 bad usage,
//! unreadable input or unmet precondition, 3 a proved bound failed (a bug).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::short_cycle::find_short_rainbow_cycle;
use crate::error::{Error, Result};
use crate::format::{parse_cert, parse_dgr, parse_ecg, sniff, write_cert, write_dgr, write_ecg, DocumentKind};
use crate::graph::{CycleCertificate, EdgeColouredGraph};
use crate::harness::{hunt, lemma_report, Check, HuntConfig, Verdict};
use crate::instances::{
    balanced_three_colouring, circulant_digraph, from_digraph, random_digraph_between, random_instance, ShapeMix,
};
use crate::oracle::{default_cap, directed_girth, girth_exact, rainbow_girth_exact, DirectedGirth, RainbowGirth};

#[derive(Debug, Parser)]
#[command(name = "rainbow", about = "Short rainbow cycles in edge-coloured graphs")]
struct Cli {
    /// Worker threads for hunts and reports (default: one per core).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rainbow cycle of length at most 4n/9 + 7 when every colour class has
    /// at least three edges and there are at least n colours.
    FindCycle {
        #[arg(long)]
        input: PathBuf,
    },
    /// Exact rainbow girth up to a cap (plain girth with --plain; directed
    /// girth for a dgr file).
    Girth {
        #[arg(long)]
        input: PathBuf,
        /// Longest cycle searched for [default: ceil(n / smallest class) + 2].
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        plain: bool,
    },
    /// Write an instance.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: Option<usize>,
        /// Class size (random) or largest outdegree (random-digraph).
        #[arg(long)]
        r: Option<usize>,
        /// Smallest outdegree for random-digraph [default: r].
        #[arg(long)]
        min_out: Option<usize>,
        /// Comma-separated circulant jumps.
        #[arg(long, value_delimiter = ',')]
        jumps: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Class shapes, `shape` or weighted `star:3,uniform:1`.
        #[arg(long, default_value = "uniform")]
        shape: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a certificate against an instance.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        cert: PathBuf,
    },
    /// Sample random instances and check a bound on each.
    Hunt {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long, default_value_t = 2)]
        r: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "uniform")]
        shape: String,
        #[arg(long, value_parser = parse_check)]
        check: Option<Check>,
        /// Write the instance with the largest observed girth here.
        #[arg(long)]
        keep_witness: Option<PathBuf>,
    },
    /// Run the randomized property suites.
    Report {
        #[arg(long, value_enum, default_value_t = Suite::Lemmas)]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Thm218,
    DigraphCirculant,
    Random,
    RandomDigraph,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Suite {
    Lemmas,
}

fn parse_check(s: &str) -> std::result::Result<Check, String> {
    Check::parse(s).ok_or_else(|| format!("unknown check `{s}` (aharoni, r2, psi, thm41)"))
}

/// Captured result of one invocation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: 0 }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    let result = match cli.jobs {
        Some(0) => Err(Error::precondition("--jobs must be at least 1")),
        Some(jobs) => match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(|| dispatch(cli.command)),
            Err(e) => Err(Error::precondition(format!("cannot start {jobs} threads: {e}"))),
        },
        None => dispatch(cli.command),
    };
    result.unwrap_or_else(|e| failure(&e))
}

fn failure(e: &Error) -> Outcome {
    match e {
        Error::TheoremViolation(v) => Outcome {
            stdout: String::new(),
            stderr: format!("FAULT {v}\n# failing instance\n{}", v.instance),
            code: 3,
        },
        other => Outcome { stdout: String::new(), stderr: format!("error: {other}\n"), code: 2 },
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::precondition(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::precondition(format!("cannot write {}: {e}", path.display())))
}

fn dispatch(command: Command) -> Result<Outcome> {
    match command {
        Command::FindCycle { input } => find_cycle(&input),
        Command::Girth { input, cap, plain } => girth(&input, cap, plain),
        Command::Gen { family, n, t, r, min_out, jumps, seed, shape, out } => {
            let text = generate(family, n, t, r, min_out, &jumps, seed, &shape)?;
            match out {
                Some(path) => write(&path, &text).map(|_| Outcome::ok(String::new())),
                None => Ok(Outcome::ok(text)),
            }
        }
        Command::Verify { input, cert } => verify(&input, &cert),
        Command::Hunt { n, t, r, trials, seed, shape, check, keep_witness } => {
            let config = HuntConfig { n, t: t.unwrap_or(n), r, trials, seed, shape: ShapeMix::parse(&shape)?, check };
            let report = hunt(&config)?;
            let mut stdout = report.render();
            if let Some(path) = keep_witness {
                if let Some(text) = report.witness()? {
                    write(&path, &text)?;
                    writeln!(stdout, "witness {}", path.display()).unwrap();
                }
            }
            let code = if report.count(Verdict::Fault) > 0 { 3 } else { 0 };
            Ok(Outcome { stdout, stderr: String::new(), code })
        }
        Command::Report { suite: Suite::Lemmas, seed, trials } => {
            let report = lemma_report(seed, trials)?;
            let code = if report.passed() { 0 } else { 1 };
            Ok(Outcome { stdout: report.render(), stderr: String::new(), code })
        }
    }
}

fn certificate_block(g: &EdgeColouredGraph, cert: &CycleCertificate) -> String {
    let colours: Vec<String> = cert.colours(g).iter().map(ToString::to_string).collect();
    format!("# colours {}\n{}", colours.join(" "), write_cert(cert))
}

fn find_cycle(input: &Path) -> Result<Outcome> {
    let g = parse_ecg(&read(input)?)?;
    let found = find_short_rainbow_cycle(&g)?;
    let n = g.vertex_count();
    let l = found.certificate.len();
    let mut out = String::new();
    writeln!(out, "# branch {}", found.branch).unwrap();
    writeln!(out, "# n {n} length {l} bound-check 9*{l} <= 4*{n}+63").unwrap();
    out.push_str(&certificate_block(&g, &found.certificate));
    Ok(Outcome::ok(out))
}

fn girth(input: &Path, cap: Option<usize>, plain: bool) -> Result<Outcome> {
    let text = read(input)?;
    let mut out = String::new();
    if sniff(&text) == Some(DocumentKind::Dgr) {
        let d = parse_dgr(&text)?;
        match directed_girth(&d) {
            DirectedGirth::Finite(c) => {
                writeln!(out, "Finite({})", c.len()).unwrap();
                for v in &c.vertices {
                    writeln!(out, "v {v}").unwrap();
                }
            }
            DirectedGirth::Infinite => out.push_str("Infinite\n"),
        }
        return Ok(Outcome::ok(out));
    }
    let g = parse_ecg(&text)?;
    let cap = cap.unwrap_or_else(|| default_cap(&g));
    if cap < 2 {
        return Err(Error::precondition(format!("cap must be at least 2, got {cap}")));
    }
    let found = if plain {
        girth_exact(&g.full()).certificate().filter(|c| c.len() <= cap).cloned()
    } else {
        match rainbow_girth_exact(&g, cap)? {
            RainbowGirth::Finite(c) => Some(c),
            RainbowGirth::NoneWithin(_) => None,
        }
    };
    match found {
        Some(c) => {
            writeln!(out, "Finite({})", c.len()).unwrap();
            out.push_str(&certificate_block(&g, &c));
        }
        None => writeln!(out, "NoneWithin({cap})").unwrap(),
    }
    Ok(Outcome::ok(out))
}

#[allow(clippy::too_many_arguments)]
fn generate(
    family: Family,
    n: usize,
    t: Option<usize>,
    r: Option<usize>,
    min_out: Option<usize>,
    jumps: &[usize],
    seed: u64,
    shape: &str,
) -> Result<String> {
    let need = |x: Option<usize>, flag: &str| x.ok_or_else(|| Error::Infeasible(format!("--{flag} is required")));
    Ok(match family {
        Family::Thm218 => write_ecg(&balanced_three_colouring(n)?),
        Family::DigraphCirculant => {
            if jumps.is_empty() {
                return Err(Error::Infeasible("--jumps is required".into()));
            }
            write_ecg(&from_digraph(&circulant_digraph(n, jumps)?).graph)
        }
        Family::Random => {
            write_ecg(&random_instance(n, t.unwrap_or(n), need(r, "r")?, seed, &ShapeMix::parse(shape)?)?)
        }
        Family::RandomDigraph => {
            let hi = need(r, "r")?;
            write_dgr(&random_digraph_between(n, min_out.unwrap_or(hi), hi, seed)?)
        }
    })
}

fn verify(input: &Path, cert: &Path) -> Result<Outcome> {
    let g = parse_ecg(&read(input)?)?;
    let c = parse_cert(&read(cert)?)?;
    Ok(match c.validate(&g) {
        Ok(()) => Outcome::ok(format!("ok {}\n", c.len())),
        Err(v) => Outcome { stdout: format!("violation: {v}\n"), stderr: String::new(), code: 1 },
    })
}
