use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand, ValueEnum};

use bchcover::cli::{self, DecodeMode, Table1Options};

#[derive(Parser)]
#[command(
    name = "bchcover",
    version,
    about = "BCH codes, covering radii and list-decoding bounds"
)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rebuild the BCH coverage table as CSV and check it against the reference values
    Table1 {
        #[arg(long, default_value_t = 31)]
        max_n: usize,
        /// Search covering radii past the default budget (hours for n = 63)
        #[arg(long)]
        long_running: bool,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Directory for per-code stratum checkpoints
        #[arg(long)]
        checkpoint_dir: Option<PathBuf>,
    },
    /// General and binary Johnson radii as CSV
    Johnson {
        /// Integer floors for d = 1..n/2
        #[arg(long)]
        n: Option<usize>,
        /// Normalized curves sampled at this many points
        #[arg(long)]
        steps: Option<usize>,
    },
    /// Exact covering radius of a BCH code
    Radius {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Perfect / A-covered classification of a BCH code
    Classify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Decode a received word (0/1 string, leftmost = coordinate 0)
    Decode {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        word: String,
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        tau: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Ml,
    List,
    Bounded,
}

impl From<Mode> for DecodeMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Ml => DecodeMode::Ml,
            Mode::List => DecodeMode::List,
            Mode::Bounded => DecodeMode::Bounded,
        }
    }
}

fn run(args: Args) -> Result<bool> {
    match args.command {
        Command::Table1 {
            max_n,
            long_running,
            jobs,
            checkpoint_dir,
        } => {
            let out = cli::table1(&Table1Options {
                max_n,
                long_running,
                jobs,
                checkpoint_dir,
            })?;
            print!("{}", out.to_csv());
            for m in &out.mismatches {
                eprintln!("mismatch: {m}");
            }
            return Ok(out.mismatches.is_empty());
        }
        Command::Johnson { n: Some(n), .. } => print!("{}", cli::johnson_table(n)?),
        Command::Johnson {
            n: None,
            steps: Some(steps),
        } => print!("{}", cli::johnson_curve(steps)?),
        Command::Johnson { .. } => bail!("johnson needs --n or --steps"),
        Command::Radius {
            n,
            delta,
            jobs,
            checkpoint,
        } => print!("{}", cli::radius_report(n, delta, jobs, checkpoint)?),
        Command::Classify { n, delta, jobs } => print!("{}", cli::classify_report(n, delta, jobs)?.0),
        Command::Decode {
            n,
            delta,
            word,
            mode,
            tau,
        } => print!("{}", cli::decode_report(n, delta, &word, mode.into(), tau)?),
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Args::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
