use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "bajinv",
    version,
    about = "baj − inv statistics, codes and generating-function checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Override the enumeration ceiling for `verify` and `dist`.
    #[arg(long = "max-n", global = true, value_name = "N")]
    pub max_n: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Statistics and codes of one permutation.
    Stats(StatsArgs),
    /// Permutation → v-code and r-code.
    Encode(PermArg),
    /// v-code or r-code → permutation.
    Decode(DecodeArgs),
    /// Check the generating function by enumeration (all k when --k is omitted).
    Verify(TallyArgs),
    /// Print the enumerated baj − inv distribution.
    Dist(TallyArgs),
    /// Factorial-base index of a permutation's r-code.
    Rank(PermArg),
    /// Permutation with the given r-code index.
    Unrank(UnrankArgs),
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    /// Permutation, comma/space separated or a digit string when n ≤ 9.
    #[arg(
        value_name = "PERM",
        conflicts_with = "perm",
        required_unless_present = "perm"
    )]
    pub positional: Option<String>,

    #[arg(long)]
    pub perm: Option<String>,
}

impl StatsArgs {
    pub fn text(&self) -> &str {
        self.perm
            .as_deref()
            .or(self.positional.as_deref())
            .expect("clap enforces one of the two")
    }
}

#[derive(Debug, Args)]
pub struct PermArg {
    #[arg(long)]
    pub perm: String,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("code").required(true).args(["vcode", "rcode"]))]
pub struct DecodeArgs {
    #[arg(long)]
    pub vcode: Option<String>,

    /// r-code digits r_1 … r_{n-1}; requires --k.
    #[arg(long, requires = "k", allow_hyphen_values = true)]
    pub rcode: Option<String>,

    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<i64>,
}

#[derive(Debug, Args)]
pub struct TallyArgs {
    #[arg(long)]
    pub n: usize,

    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<i64>,

    /// Number of blocks the enumeration is split into.
    #[arg(long, default_value_t = 1)]
    pub parts: usize,
}

#[derive(Debug, Args)]
pub struct UnrankArgs {
    #[arg(long)]
    pub n: usize,

    #[arg(long, allow_hyphen_values = true)]
    pub k: i64,

    #[arg(long)]
    pub idx: u128,
}
