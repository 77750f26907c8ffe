use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use bcrank::explore::{cmd_explore, ExploreConfig};
use bcrank::verify::{builtin_cases, cmd_verify};
use bcrank::{cmd_oracle, cmd_rank, cmd_report, load_matrix, CliError};
use bicomplex_rank::rank::DEFAULT_MAX_DIM;

/// Exact rank computations for bicomplex matrices.
#[derive(Parser)]
#[command(name = "bcrank", version)]
struct Cli {
    /// Largest max(rows, cols) accepted by the chain-rank search.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_DIM)]
    max_dim: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Chain rank with its nested-submatrix certificate.
    Rank { file: PathBuf },
    /// All ranks, determinant and classification.
    Report {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Replay the built-in worked examples.
    Verify {
        /// Print case identifiers without running them.
        #[arg(long)]
        list: bool,
    },
    /// Random search for non-singular, entrywise-invertible matrices of
    /// deficient chain rank (JSON lines on stdout).
    Explore {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        n: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long)]
        seed: u64,
        /// Bound on the Gaussian-integer idempotent parts of each entry.
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(i64).range(1..))]
        bound: i64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: u64,
    },
    /// Cross-check the engine against brute-force references.
    Oracle { file: PathBuf },
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match cli.command {
        Command::Rank { file } => cmd_rank(&load_matrix(&file)?.matrix, cli.max_dim, out),
        Command::Report { file, json } => cmd_report(&load_matrix(&file)?.matrix, cli.max_dim, json, out),
        Command::Verify { list } => Ok(cmd_verify(&builtin_cases(), list, out)?),
        Command::Explore { n, trials, seed, bound, jobs } => {
            let cfg = ExploreConfig { n: n as usize, trials, seed, bound, jobs: jobs as usize, max_dim: cli.max_dim };
            cmd_explore(&cfg, out)
        }
        Command::Oracle { file } => cmd_oracle(&load_matrix(&file)?.matrix, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let code = match run(cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    let _ = out.flush();
    ExitCode::from(code as u8)
}
