use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "weylbn", version, about = "Exact checks on root systems, Weyl groups and finite Tits systems")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Worker threads for independent cases (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub jobs: Option<u32>,

    /// Include `wall_time_ms` in suite results.
    #[arg(long, global = true)]
    pub timings: bool,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Double cosets of maximal parabolics, with witnesses and the w0 checks.
    Lemma2 {
        /// Largest rank for the classical families (2..=12).
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
        /// Comma-separated families to include (A,B,C,D,E,F,G,BC).
        #[arg(long, value_delimiter = ',')]
        family: Vec<String>,
    },
    /// Check a Tits system.
    Bn(BnArgs),
    /// List the roots of a type, in simple-root coordinates.
    Roots {
        family: String,
        rank: usize,
    },
    /// Reduced words of the element given by a word (1-based letters).
    ReducedWords {
        family: String,
        rank: usize,
        word: String,
        /// Stop after this many words.
        #[arg(long, default_value_t = weylbn::weyl::DEFAULT_WORD_CAP)]
        cap: usize,
    },
    /// Run every suite and emit one aggregated report.
    Report {
        /// Run all suites (currently the only mode).
        #[arg(long, required = true)]
        all: bool,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct BnArgs {
    /// Standard system of SL_n(F_p).
    #[arg(long, num_args = 2, value_names = ["N", "P"])]
    pub sl: Option<Vec<u32>>,
    /// Rank-1 system of SL_n(F_p) from the column-stabilizer construction.
    #[arg(long, num_args = 2, value_names = ["N", "P"])]
    pub sl_rank1: Option<Vec<u32>>,
    /// Rank-1 system of SL_n(F_p) acting on projective space.
    #[arg(long, num_args = 2, value_names = ["N", "P"])]
    pub projective: Option<Vec<u32>>,
    /// Rank-1 system of the affine group of F_p acting on the line.
    #[arg(long, value_name = "P")]
    pub affine: Option<u32>,
    /// A named example (psl3f2-nonstandard, psl3f2-standard).
    #[arg(long, value_name = "NAME")]
    pub example: Option<String>,
}
