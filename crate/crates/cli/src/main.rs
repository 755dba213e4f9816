mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "heartlab", version, about = "Mod-2 hearts of permutation groups and endomorphism audits")]
struct Cli {
    /// Seed for every randomized step
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Stamp the report with the current UTC time
    #[arg(long, global = true)]
    timestamp: bool,

    /// Compact single-line JSON
    #[arg(long, global = true)]
    compact: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Audit a group for scalar heart endomorphisms and unboundedness
    Audit(AuditArgs),
    /// Build the heart of a group and analyse it
    Heart(HeartArgs),
    /// Compare Frobenius cycle types of a polynomial with candidate groups
    Probe(ProbeArgs),
    /// List supported groups and the bundled fact table
    Zoo(ZooArgs),
}

#[derive(Debug, Args)]
struct AuditArgs {
    /// Group such as M23, A9, S7, PSL(3,4), PGL(2,8)
    group: String,
    /// Number of roots; defaults to the natural degree of the group
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Debug, Args)]
struct HeartArgs {
    group: String,
    /// Compute the endomorphism algebra
    #[arg(long)]
    endo: bool,
    /// Run the MeatAxe irreducibility test
    #[arg(long)]
    meataxe: bool,
    /// Search the endomorphism algebra for idempotents
    #[arg(long)]
    indecomposable: bool,
}

#[derive(Debug, Args)]
struct ProbeArgs {
    /// Polynomial in x with integer coefficients, e.g. "x^5-x-1"
    #[arg(required_unless_present = "file", conflicts_with = "file")]
    poly: Option<String>,
    /// File with one polynomial per line
    #[arg(long)]
    file: Option<PathBuf>,
    /// Number of primes to reduce at
    #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(1..=100_000))]
    primes: u64,
    /// Comma-separated candidate groups, e.g. "A5,S5" or "PSL(3,2)"; may be repeated
    #[arg(long)]
    candidates: Vec<String>,
}

#[derive(Debug, Args)]
struct ZooArgs {
    /// Largest degree to list
    #[arg(long, default_value_t = 24)]
    max_degree: usize,
}

#[derive(Debug, Serialize)]
struct Envelope<P: Serialize> {
    tool: &'static str,
    version: &'static str,
    command: Vec<String>,
    timestamp: Option<String>,
    payload: P,
    citations: Vec<String>,
}

/// What a command hands back to `main`.
pub struct Outcome<P> {
    pub payload: P,
    pub citations: Vec<String>,
    pub summary: String,
    pub exit: u8,
}

pub const EXIT_USAGE: u8 = 1;

fn run(cli: Cli, argv: Vec<String>) -> anyhow::Result<u8> {
    let outcome = match &cli.command {
        Command::Audit(a) => commands::audit(&a.group, a.n, cli.seed)?.boxed(),
        Command::Heart(h) => commands::heart(&h.group, h.endo, h.meataxe, h.indecomposable, cli.seed)?.boxed(),
        Command::Probe(p) => {
            let polys = match (&p.poly, &p.file) {
                (Some(text), None) => vec![text.clone()],
                (None, Some(path)) => commands::read_polynomials(path)?,
                _ => anyhow::bail!("give a polynomial or --file"),
            };
            commands::probe(&polys, p.file.is_some(), p.primes as usize, &p.candidates, cli.seed)?.boxed()
        }
        Command::Zoo(z) => commands::zoo(z.max_degree)?.boxed(),
    };
    let envelope = Envelope {
        tool: "heartlab",
        version: env!("CARGO_PKG_VERSION"),
        command: argv,
        timestamp: cli.timestamp.then(|| chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)),
        payload: outcome.payload,
        citations: outcome.citations,
    };
    let json = if cli.compact {
        serde_json::to_string(&envelope)?
    } else {
        serde_json::to_string_pretty(&envelope)?
    };
    println!("{json}");
    eprintln!("{}", outcome.summary);
    Ok(outcome.exit)
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli, argv.into_iter().skip(1).collect()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
