//! `real-enum`: compute invariants, check identities and theorems on tables,
//! and manage the result cache.

mod commands;
mod error;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "real-enum", version, about = "Exact complex and real counts of rational curves")]
struct Cli {
    /// Cache directory; defaults to $REAL_ENUM_CACHE, then
    /// $XDG_CACHE_HOME/real-enum, then ~/.cache/real-enum.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Neither read nor write the cache.
    #[arg(long, global = true)]
    no_cache: bool,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Enumerate on one thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute invariants and print them as a table.
    #[command(subcommand)]
    Compute(Compute),
    /// Run identity and theorem checks; exit 1 if any check fails.
    #[command(subcommand)]
    Check(Check),
    /// Validate an external table and store it in the cache.
    Ingest { file: PathBuf },
    #[command(subcommand)]
    Cache(CacheCommand),
}

#[derive(Debug, Args)]
pub struct ClassArgs {
    /// cp2, f0, f2 or cp2_<k>.
    #[arg(long, default_value = "cp2")]
    surface: String,
    /// Degree of a plane curve.
    #[arg(long, conflicts_with = "class")]
    degree: Option<i64>,
    /// Class coordinates, comma separated, e.g. `2,3`.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    class: Option<Vec<i64>>,
}

#[derive(Debug, Subcommand)]
enum Compute {
    /// Gromov-Witten invariant.
    Gw(ClassArgs),
    /// Welschinger invariant with all points real.
    Welschinger(ClassArgs),
    /// Welschinger invariant of the ellipsoid in class d(l1 + l2).
    Ellipsoid {
        #[arg(long)]
        degree: i64,
    },
    /// Real counts on F2 of the classes d - kE.
    Strata {
        /// Class `a,b` of `a h + b f` on F2.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        class: Vec<i64>,
        #[arg(long)]
        k_max: Option<u32>,
    },
}

#[derive(Debug, Subcommand)]
enum Check {
    /// GW invariants of the quadric against the binomial sum over F2.
    AbvComplex(QuadricArgs),
    /// Welschinger invariants of the hyperboloid against the real sum.
    AbvReal {
        #[command(flatten)]
        classes: QuadricArgs,
        /// Sign bit in the multiplicities; defaults to the calibrated value.
        #[arg(long)]
        gamma: Option<u8>,
    },
    /// Ellipsoid invariant against the real count on F2 and the chi = 2 sum.
    ClassTrop {
        /// Check every degree from 1 up to this one.
        #[arg(long, default_value_t = 3)]
        max_degree: u32,
    },
    /// Vanishing, divisibility and sign statements on stored tables.
    Table {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// A JSON list of {"chi": n, "value": "v"} records.
    Monotonicity { file: PathBuf },
    /// Dimension of the invariant classes modulo G, and the claimed basis.
    Homology {
        /// Built-in model; all of them when neither option is given.
        #[arg(long, conflicts_with = "model_file")]
        model: Option<String>,
        #[arg(long)]
        model_file: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct QuadricArgs {
    /// A single bidegree `a,b`.
    #[arg(long, value_delimiter = ',', conflicts_with = "max_total")]
    class: Option<Vec<i64>>,
    /// Every bidegree with `a + b` up to this bound.
    #[arg(long, default_value_t = 4)]
    max_total: i64,
}

#[derive(Debug, Subcommand)]
enum CacheCommand {
    /// List cached tables.
    Ls,
    /// Remove every cached table.
    Clear,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}

impl Cli {
    fn execution(&self) -> real_enum_core::floors::Execution {
        if self.sequential {
            real_enum_core::floors::Execution::Sequential
        } else {
            real_enum_core::floors::Execution::default()
        }
    }
}
