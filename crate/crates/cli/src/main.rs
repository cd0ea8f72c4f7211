mod report;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use neural_polar::{Code, Cover};

use report::Report;

/// Polarization of neural codes: canonical forms, primary decompositions,
/// free resolutions and polar complexes over F2.
#[derive(Debug, Parser)]
#[command(name = "neural-polar", version)]
struct Cli {
    /// Emit a versioned JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Report timing on standard error.
    #[arg(long, short, global = true)]
    verbose: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Canonical form of the neural ideal.
    Canon { code: PathBuf },
    /// Indicator generators of the neural ideal, one per non-codeword.
    Gens { code: PathBuf },
    /// Minimal primes of the neural ideal.
    Decompose { code: PathBuf },
    /// Squarefree monomial generators of the polarized canonical form.
    Polarize { code: PathBuf },
    /// Minimal primes of the polarized ideal.
    PolarPrimes {
        code: PathBuf,
        /// Show the variable partition and interval certificate of each prime.
        #[arg(long)]
        witness: bool,
    },
    /// Taylor resolution of the polarized ideal.
    Taylor { code: PathBuf },
    /// Minimal free resolution of the polarized ideal.
    MinRes { code: PathBuf },
    /// Minimal resolution depolarized back to the neural ring.
    CanonicalRes { code: PathBuf },
    /// Betti numbers of the polarized ideal.
    Betti { code: PathBuf },
    /// Facets of the polar complex.
    PolarComplex { code: PathBuf },
    /// Cohen-Macaulay report for the neural and polarized rings.
    Cm { code: PathBuf },
    /// Code of a cover given as JSON.
    FromCover { cover: PathBuf },
    /// Receptive-field relations of a cover given as JSON.
    Rf { cover: PathBuf },
    /// Cross-check every algorithm against an independent method.
    Selfcheck { code: PathBuf },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Canon { .. } => "canon",
            Command::Gens { .. } => "gens",
            Command::Decompose { .. } => "decompose",
            Command::Polarize { .. } => "polarize",
            Command::PolarPrimes { .. } => "polar-primes",
            Command::Taylor { .. } => "taylor",
            Command::MinRes { .. } => "min-res",
            Command::CanonicalRes { .. } => "canonical-res",
            Command::Betti { .. } => "betti",
            Command::PolarComplex { .. } => "polar-complex",
            Command::Cm { .. } => "cm",
            Command::FromCover { .. } => "from-cover",
            Command::Rf { .. } => "rf",
            Command::Selfcheck { .. } => "selfcheck",
        }
    }
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_code(path: &Path) -> Result<Code, String> {
    Code::parse(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_cover(path: &Path) -> Result<Cover, String> {
    Cover::from_json(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn execute(command: &Command) -> Result<Report, String> {
    let domain = |e: neural_polar::Error| e.to_string();
    Ok(match command {
        Command::Canon { code } => report::canon(&load_code(code)?),
        Command::Gens { code } => report::gens(&load_code(code)?),
        Command::Decompose { code } => report::decompose(&load_code(code)?),
        Command::Polarize { code } => report::polarize(&load_code(code)?),
        Command::PolarPrimes { code, witness } => report::polar_primes(&load_code(code)?, *witness),
        Command::Taylor { code } => {
            let c = load_code(code)?;
            let ideal = neural_polar::polarize_ideal(&c);
            let taylor = neural_polar::taylor_complex_in(c.polar_ring(), ideal.generators()).map_err(domain)?;
            report::resolution("taylor", &taylor)?
        }
        Command::MinRes { code } => {
            report::resolution("min-res", &neural_polar::minimal_polar_resolution(&load_code(code)?).map_err(domain)?)?
        }
        Command::CanonicalRes { code } => {
            report::resolution("canonical-res", &neural_polar::canonical_resolution(&load_code(code)?).map_err(domain)?)?
        }
        Command::Betti { code } => report::betti(&load_code(code)?).map_err(domain)?,
        Command::PolarComplex { code } => report::polar_complex_report(&load_code(code)?),
        Command::Cm { code } => report::cm(&load_code(code)?),
        Command::FromCover { cover } => report::from_cover(&load_cover(cover)?),
        Command::Rf { cover } => report::rf(&load_cover(cover)?),
        Command::Selfcheck { code } => report::selfcheck(&load_code(code)?).map_err(domain)?,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = execute(&cli.command);
    if cli.verbose {
        eprintln!("{} finished in {:.3}s", cli.command.name(), start.elapsed().as_secs_f64());
    }
    match result {
        Ok(report) => {
            let text = if cli.json { report.json() } else { report.text.clone() };
            let mut out = io::stdout().lock();
            if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::FAILURE;
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}
