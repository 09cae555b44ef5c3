//! Command-line front end for `recos-core`.
//!
//! | command    | does                                                       |
//! |------------|------------------------------------------------------------|
//! | `sim`      | scores one vector pair with a chosen metric                |
//! | `bounds`   | prints the four-term bound chain for a pair                |
//! | `bench`    | Spearman ρ×100 of a metric against a pair file's gold column |
//! | `compare`  | paired statistics of method A against B over a score table |
//! | `selftest` | randomized check of the bound chain and its equality cases |
//!
//! Exit codes: [`EXIT_OK`], [`EXIT_DATA`], [`EXIT_USAGE`] (emitted by clap),
//! [`EXIT_SELFTEST`].

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use recos_core::MetricKind;

mod commands;
mod report;
pub mod selftest;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DATA: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SELFTEST: i32 = 3;

/// Seed used by `selftest` when none is given.
pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Parser)]
#[command(name = "recos", version, about = "Rearrangement-based similarity metrics")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Score one pair of vectors.
    Sim {
        #[arg(long, value_parser = parse_metric)]
        metric: MetricKind,
        /// Comma-separated components, e.g. 1,5.5,2,4
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    /// Print |u·v| <= rearrangement <= cauchy_schwarz <= am_qm.
    Bounds {
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    /// Spearman correlation (×100) of metric scores with gold scores.
    Bench {
        /// CSV with header gold,u_0..u_{d-1},v_0..v_{d-1}
        #[arg(long)]
        pairs: PathBuf,
        #[arg(long, value_parser = parse_metric)]
        metric: MetricKind,
    },
    /// Paired comparison of two methods over a results table.
    Compare {
        /// CSV with header model,method,dataset,score
        #[arg(long)]
        results: PathBuf,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// Test A != B instead of A > B.
        #[arg(long)]
        two_sided: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Check the bound chain and equality conditions on seeded random inputs.
    Selftest {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
}

fn parse_metric(s: &str) -> Result<MetricKind, String> {
    s.parse().map_err(|e: recos_core::SimilarityError| e.to_string())
}

/// Runs a parsed command, writing results to `out` and diagnostics to `err`.
/// Returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let outcome = match cli.command {
        Command::Sim { metric, u, v } => commands::sim(metric, &u, &v, out),
        Command::Bounds { u, v } => commands::bounds(&u, &v, out),
        Command::Bench { pairs, metric } => commands::bench(&pairs, metric, out),
        Command::Compare {
            results,
            a,
            b,
            two_sided,
            format,
        } => commands::compare(&results, &a, &b, two_sided, format, out),
        Command::Selftest { seed, trials } => {
            let summary = selftest::run(seed, trials);
            let written = summary.write(out);
            match written {
                Ok(()) if summary.passed() => Ok(()),
                Ok(()) => Err(commands::Failure::new(EXIT_SELFTEST, "selftest failed")),
                Err(e) => Err(e.into()),
            }
        }
    };
    match outcome {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
