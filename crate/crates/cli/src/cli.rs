// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "lce", version, about = "Longest common extension indexes and the algorithms built on them")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output encoding: one JSON object per line, or CSV with a header row.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Replace wall-clock fields with null so output is reproducible.
    #[arg(long, global = true)]
    pub no_timing: bool,

    /// Drop one trailing "\n" or "\r\n" from every input file.
    #[arg(long, global = true)]
    pub strip_newline: bool,

    /// Print a JSON summary of query counts to stderr.
    #[arg(long, global = true)]
    pub stats: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Answer LCE(i, j) queries on a text.
    Query(QueryArgs),
    /// Print the difference cover used for a period.
    Cover(CoverArgs),
    /// Check whether random fingerprint functions are collision-free on a text.
    Verify(VerifyArgs),
    /// Answer LCE queries between a pattern and a text.
    Xquery(XqueryArgs),
    /// Report text positions where a substring within k edits of the pattern ends.
    Match(MatchArgs),
    /// Report the maximal palindrome at every center.
    Palindromes(PalindromeArgs),
    /// Report every square (tandem repeat) as start and length.
    Repeats(RepeatArgs),
    /// Range minimum on a 0/1 file, one LCE query per range.
    Rmq(RmqArgs),
    /// Measure build time, space and query cost across algorithms and periods.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Naive,
    Full,
    Dc,
    Fp,
    FpVerified,
    /// Two-string index (pattern and text kept apart); only for match and palindromes.
    Cross,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::Naive => "naive",
            Algo::Full => "full",
            Algo::Dc => "dc",
            Algo::Fp => "fp",
            Algo::FpVerified => "fp-verified",
            Algo::Cross => "cross",
        }
    }

    pub fn uses_tau(self) -> bool {
        !matches!(self, Algo::Naive | Algo::Full)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InnerAlgo {
    Naive,
    Dc,
    FpVerified,
}

impl InnerAlgo {
    pub fn name(self) -> &'static str {
        match self {
            InnerAlgo::Naive => "naive",
            InnerAlgo::Dc => "dc",
            InnerAlgo::FpVerified => "fp-verified",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModulusArg {
    Mersenne61,
    Small,
}

impl ModulusArg {
    pub fn name(self) -> &'static str {
        match self {
            ModulusArg::Mersenne61 => "mersenne61",
            ModulusArg::Small => "small",
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct IndexArgs {
    #[arg(long, value_enum, default_value_t = Algo::Dc)]
    pub algo: Algo,

    /// Period; defaults to the ceiling of the square root of the indexed length.
    #[arg(long)]
    pub tau: Option<usize>,

    #[arg(long, env = "LCE_SEED", default_value_t = 0)]
    pub seed: u64,

    #[arg(long, value_enum, default_value_t = ModulusArg::Mersenne61)]
    pub modulus: ModulusArg,

    /// Fingerprint functions to try before fp-verified gives up.
    #[arg(long, default_value_t = 16)]
    pub attempts: u32,
}

#[derive(Debug, Clone, Args)]
pub struct CrossArgs {
    /// Single-string index over the pattern used by the cross algorithm.
    #[arg(long, value_enum, default_value_t = InnerAlgo::Dc)]
    pub inner: InnerAlgo,

    /// Period of the inner index; defaults to the outer period, capped by the pattern length.
    #[arg(long)]
    pub inner_tau: Option<usize>,
}

#[derive(Debug, Args)]
pub struct QueryArgs {
    #[command(flatten)]
    pub index: IndexArgs,

    /// 1-based query pair `i,j`; repeat for several queries.
    #[arg(long = "pos", value_parser = parse_pair, required = true)]
    pub pairs: Vec<(usize, usize)>,

    pub file: PathBuf,
}

#[derive(Debug, Args)]
pub struct CoverArgs {
    #[arg(long)]
    pub tau: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub tau: usize,

    #[arg(long, env = "LCE_SEED", default_value_t = 0)]
    pub seed: u64,

    #[arg(long, value_enum, default_value_t = ModulusArg::Mersenne61)]
    pub modulus: ModulusArg,

    /// Fingerprint functions to try before reporting an abort.
    #[arg(long, default_value_t = 1)]
    pub attempts: u32,

    pub file: PathBuf,
}

#[derive(Debug, Args)]
pub struct XqueryArgs {
    /// Sampling period for the text.
    #[arg(long)]
    pub tau: Option<usize>,

    #[arg(long, env = "LCE_SEED", default_value_t = 0)]
    pub seed: u64,

    #[command(flatten)]
    pub cross: CrossArgs,

    #[arg(long)]
    pub pattern: PathBuf,

    /// 1-based pair `i,j`: suffix i of the pattern against suffix j of the text.
    #[arg(long = "pos", value_parser = parse_pair, required = true)]
    pub pairs: Vec<(usize, usize)>,

    pub file: PathBuf,
}

#[derive(Debug, Args)]
pub struct MatchArgs {
    #[command(flatten)]
    pub index: IndexArgs,

    #[command(flatten)]
    pub cross: CrossArgs,

    #[arg(long)]
    pub pattern: PathBuf,

    /// Maximum edit distance.
    #[arg(long, default_value_t = 0)]
    pub k: usize,

    pub file: PathBuf,
}

#[derive(Debug, Args)]
pub struct PalindromeArgs {
    #[command(flatten)]
    pub index: IndexArgs,

    #[command(flatten)]
    pub cross: CrossArgs,

    /// Only report palindromes at least this long.
    #[arg(long, default_value_t = 2)]
    pub min_len: usize,

    pub file: PathBuf,
}

#[derive(Debug, Args)]
pub struct RepeatArgs {
    #[command(flatten)]
    pub index: IndexArgs,

    pub file: PathBuf,
}

#[derive(Debug, Args)]
pub struct RmqArgs {
    #[command(flatten)]
    pub index: IndexArgs,

    /// 1-based inclusive range `l,r`; repeat for several queries.
    #[arg(long = "range", value_parser = parse_pair, required = true)]
    pub ranges: Vec<(usize, usize)>,

    pub file: PathBuf,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum, value_delimiter = ',', default_value = "naive,full,dc,fp,fp-verified")]
    pub algos: Vec<Algo>,

    /// Periods to sweep; defaults to the ceiling of the square root of the text length.
    #[arg(long, value_delimiter = ',')]
    pub tau: Vec<usize>,

    #[arg(long, default_value_t = 10_000)]
    pub queries: usize,

    #[arg(long, env = "LCE_SEED", default_value_t = 0)]
    pub seed: u64,

    #[arg(long, value_enum, default_value_t = ModulusArg::Mersenne61)]
    pub modulus: ModulusArg,

    pub file: PathBuf,
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected `i,j`, got `{s}`"))?;
    let parse = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("`{x}`: {e}"));
    Ok((parse(a)?, parse(b)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs() {
        assert_eq!(parse_pair("5,12"), Ok((5, 12)));
        assert_eq!(parse_pair(" 1 , 2"), Ok((1, 2)));
        assert!(parse_pair("5").is_err());
        assert!(parse_pair("a,1").is_err());
    }

    #[test]
    fn definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
