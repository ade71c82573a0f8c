use clap::{Args, Parser, Subcommand, ValueEnum};
use horadam_core::{Rational, SeqKind};

#[derive(Debug, Parser)]
#[command(name = "horadam", version, about = "Exact Horadam and Lucas sequence sums and generating functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one term t_n.
    Term(TermArgs),
    /// Closed-form value of sum_{j=0}^{k} t_{rj+s}^n z^j.
    Sum(SumArgs),
    /// Generating function of t_{rj+s}^n as a rational function of z.
    Gf(GfArgs),
    /// First m power-series coefficients of the generating function.
    Series(SeriesArgs),
    /// Check closed forms against direct evaluation over a parameter grid.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    U,
    V,
    W,
}

impl From<Kind> for SeqKind {
    fn from(k: Kind) -> SeqKind {
        match k {
            Kind::U => SeqKind::U,
            Kind::V => SeqKind::V,
            Kind::W => SeqKind::W,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputFormat {
    #[default]
    Plain,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum GridScale {
    #[default]
    Small,
    Full,
}

fn rational(s: &str) -> Result<Rational, String> {
    s.parse::<Rational>().map_err(|e| format!("invalid rational {s:?}: {e}"))
}

/// Sequence family and output options shared by every evaluating subcommand.
#[derive(Debug, Args)]
pub struct Family {
    /// Sequence kind; u and v ignore -a and -b.
    #[arg(long, value_enum, default_value = "w")]
    pub kind: Kind,
    /// w_0 (kind w only)
    #[arg(short = 'a', allow_hyphen_values = true, value_parser = rational)]
    pub a: Option<Rational>,
    /// w_1 (kind w only)
    #[arg(short = 'b', allow_hyphen_values = true, value_parser = rational)]
    pub b: Option<Rational>,
    #[arg(short = 'p', allow_hyphen_values = true, value_parser = rational)]
    pub p: Rational,
    #[arg(short = 'q', allow_hyphen_values = true, value_parser = rational)]
    pub q: Rational,
    #[arg(long, value_enum, default_value = "plain")]
    pub output: OutputFormat,
}

#[derive(Debug, Args)]
pub struct TermArgs {
    #[command(flatten)]
    pub family: Family,
    /// Index (any integer)
    #[arg(long = "n", allow_hyphen_values = true)]
    pub n: i64,
    /// Evaluate through the Binet form instead of the recurrence
    #[arg(long)]
    pub binet: bool,
}

#[derive(Debug, Args)]
pub struct Progression {
    /// Power applied to each term
    #[arg(long = "n", default_value_t = 1)]
    pub n: u32,
    /// Index step
    #[arg(long = "r", default_value_t = 1, allow_hyphen_values = true)]
    pub r: i64,
    /// Index offset
    #[arg(long = "s", default_value_t = 0, allow_hyphen_values = true)]
    pub s: i64,
}

#[derive(Debug, Args)]
pub struct SumArgs {
    #[command(flatten)]
    pub family: Family,
    #[command(flatten)]
    pub progression: Progression,
    /// Upper summation limit (-1 for the empty sum)
    #[arg(long = "k", allow_hyphen_values = true)]
    pub k: i64,
    #[arg(long = "z", default_value = "1", allow_hyphen_values = true, value_parser = rational)]
    pub z: Rational,
}

#[derive(Debug, Args)]
pub struct GfArgs {
    #[command(flatten)]
    pub family: Family,
    #[command(flatten)]
    pub progression: Progression,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[command(flatten)]
    pub family: Family,
    #[command(flatten)]
    pub progression: Progression,
    /// Number of coefficients
    #[arg(long = "m")]
    pub m: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "small")]
    pub scale: GridScale,
    #[arg(long, value_enum, default_value = "plain")]
    pub output: OutputFormat,
}
