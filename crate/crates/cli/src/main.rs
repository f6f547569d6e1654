//! `lagcorr`: verification suites, series and star products from the
//! command line.
//!
//! Exit codes: 0 success, 1 verification or computation failure, 2 usage or
//! parse error.

mod commands;
mod output;
mod props;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;

use output::{Format, Output};

#[derive(Parser, Debug)]
#[command(name = "lagcorr", version, about = "Exact lagrangian-correspondence and GW/DT computations")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Directory searched for input files that are not found as given.
    #[arg(long, env = "LAGCORR_DATA_DIR", global = true)]
    data_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check 𝓛⋆𝓛† and 𝓛†⋆𝓛 for every weight up to `--n`.
    Unitarity {
        #[arg(long, default_value_t = 4)]
        n: u32,
        /// Relation table (JSON) replacing the built-in one.
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Print a worked-example series.
    Series {
        #[arg(value_enum)]
        kind: SeriesKind,
        /// n for `qint` and `wall`, the degree d for `multicover`.
        #[arg(long)]
        n: i64,
        /// ħ-order, or the number of geometric terms for `wall`.
        #[arg(long, default_value_t = 10)]
        order: i64,
    },
    /// Integrality report for a series with contact data.
    Check { input: PathBuf },
    /// Compose two correspondences, left then right.
    Star {
        left: PathBuf,
        right: PathBuf,
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Fock-ring operations on element files.
    Fock {
        #[command(subcommand)]
        op: FockOp,
    },
    /// Seeded randomized property suites.
    Props {
        #[arg(long, default_value_t = 20240601)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        cases: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SeriesKind {
    Qint,
    Wall,
    Multicover,
}

#[derive(Subcommand, Debug)]
enum FockOp {
    Exp {
        input: PathBuf,
    },
    Log {
        input: PathBuf,
    },
    Mul {
        left: PathBuf,
        right: PathBuf,
        #[arg(long, value_enum, default_value_t = MulModeArg::Binomial)]
        mode: MulModeArg,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MulModeArg {
    Binomial,
    OrbitSum,
}

/// Why a command did not produce a passing result.
pub enum Failure {
    /// Bad input: exit code 2.
    Usage(String),
    /// The computation itself failed: exit code 1.
    Compute(String),
}

pub type Outcome = Result<(Output, bool), Failure>;

pub struct Inputs {
    data_dir: Option<PathBuf>,
}

impl Inputs {
    fn resolve(&self, path: &Path) -> PathBuf {
        if path.exists() || path.is_absolute() {
            return path.to_path_buf();
        }
        let fallback = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data");
        for dir in self.data_dir.iter().chain([&PathBuf::from("data"), &fallback]) {
            let p = dir.join(path);
            if p.exists() {
                return p;
            }
        }
        path.to_path_buf()
    }

    pub fn read_json<T: DeserializeOwned>(&self, path: &Path) -> Result<T, Failure> {
        let p = self.resolve(path);
        let text =
            std::fs::read_to_string(&p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
        serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let inputs = Inputs { data_dir: cli.data_dir };
    let outcome = match cli.command {
        Command::Unitarity { n, table } => commands::unitarity(&inputs, n, table.as_deref()),
        Command::Series { kind: SeriesKind::Qint, n, order } => commands::series_qint(n, order),
        Command::Series { kind: SeriesKind::Wall, n, order } => commands::series_wall(n, order),
        Command::Series { kind: SeriesKind::Multicover, n, order } => commands::series_multicover(n, order),
        Command::Check { input } => commands::check(&inputs, &input),
        Command::Star { left, right, table } => commands::star(&inputs, &left, &right, table.as_deref()),
        Command::Fock { op } => match op {
            FockOp::Exp { input } => commands::fock_unary(&inputs, &input, true),
            FockOp::Log { input } => commands::fock_unary(&inputs, &input, false),
            FockOp::Mul { left, right, mode } => {
                commands::fock_mul(&inputs, &left, &right, mode == MulModeArg::OrbitSum)
            }
        },
        Command::Props { seed, cases } => props::run(seed, cases),
    };
    match outcome {
        Ok((out, pass)) => {
            print!("{}", out.render(cli.format));
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
