use clap::{Args, Parser, Subcommand, ValueEnum};

use regpart::{CountMethod, GfKind, IdentityTag, Stat};

#[derive(Debug, Parser)]
#[command(
    name = "regpart",
    version,
    about = "Counting tables, identity checks and map traces for ℓ-regular partitions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Tsv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate a counting function.
    Count(CountArgs),
    /// Check an identity row by row.
    Verify(VerifyArgs),
    /// Split the ℓ-regular partitions of n into ψ-pairs and fixed points.
    Pairs(PairsArgs),
    /// Apply a map to a partition and show each step.
    Trace(TraceArgs),
    /// Dump generating-function coefficients.
    Series(SeriesArgs),
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long, value_enum)]
    pub stat: StatArg,
    #[arg(long)]
    pub ell: Option<u64>,
    #[arg(long)]
    pub r: Option<u64>,
    /// A single n.
    #[arg(long, conflicts_with = "max_n")]
    pub n: Option<u64>,
    /// Every n from 0 to this bound.
    #[arg(long)]
    pub max_n: Option<u64>,
    #[arg(long, value_enum, default_value_t = MethodArg::Enum)]
    pub method: MethodArg,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub theorem: TheoremArg,
    #[arg(long)]
    pub ell: Option<u64>,
    #[arg(long)]
    pub r: Option<u64>,
    #[arg(long, default_value_t = 40)]
    pub max_n: u64,
}

#[derive(Debug, Args)]
pub struct PairsArgs {
    #[arg(long)]
    pub ell: u64,
    #[arg(long)]
    pub n: u64,
}

#[derive(Debug, Args)]
pub struct TraceArgs {
    #[arg(long, value_enum)]
    pub map: MapArg,
    #[arg(long)]
    pub ell: Option<u64>,
    #[arg(long)]
    pub r: Option<u64>,
    /// Partition literal such as "5,4,3^2,2^2,1".
    #[arg(long)]
    pub partition: String,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(long, value_enum)]
    pub kind: KindArg,
    #[arg(long)]
    pub ell: Option<u64>,
    #[arg(long)]
    pub r: Option<u64>,
    /// Truncation order N.
    #[arg(long, default_value_t = 20)]
    pub max_n: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StatArg {
    B,
    Be,
    Bo,
    D,
    C,
    Qre,
    Qro,
    Delta,
}

impl From<StatArg> for Stat {
    fn from(s: StatArg) -> Stat {
        match s {
            StatArg::B => Stat::B,
            StatArg::Be => Stat::BEven,
            StatArg::Bo => Stat::BOdd,
            StatArg::D => Stat::D,
            StatArg::C => Stat::C,
            StatArg::Qre => Stat::QEven,
            StatArg::Qro => Stat::QOdd,
            StatArg::Delta => Stat::Delta,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Enum,
    Series,
    Formula,
}

impl From<MethodArg> for CountMethod {
    fn from(m: MethodArg) -> CountMethod {
        match m {
            MethodArg::Enum => CountMethod::Enumeration,
            MethodArg::Series => CountMethod::Series,
            MethodArg::Formula => CountMethod::ClosedForm,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TheoremArg {
    T1,
    T2,
    T3,
    Euler,
    Hickerson,
    Parity,
}

impl From<TheoremArg> for IdentityTag {
    fn from(t: TheoremArg) -> IdentityTag {
        match t {
            TheoremArg::T1 => IdentityTag::T1,
            TheoremArg::T2 => IdentityTag::T2,
            TheoremArg::T3 => IdentityTag::T3,
            TheoremArg::Euler => IdentityTag::Euler,
            TheoremArg::Hickerson => IdentityTag::Hickerson,
            TheoremArg::Parity => IdentityTag::ParityCor,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MapArg {
    Psi,
    Sigma,
    SigmaInv,
    Glaisher,
    GlaisherInv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    B,
    SignedB,
    D,
    C,
    Delta,
    Q,
}

impl KindArg {
    pub fn takes_ell(self) -> bool {
        matches!(self, KindArg::B | KindArg::SignedB | KindArg::D | KindArg::C)
    }

    pub fn with_param(self, p: u64) -> GfKind {
        match self {
            KindArg::B => GfKind::B(p),
            KindArg::SignedB => GfKind::SignedB(p),
            KindArg::D => GfKind::D(p),
            KindArg::C => GfKind::C(p),
            KindArg::Delta => GfKind::Delta(p),
            KindArg::Q => GfKind::Q(p),
        }
    }
}
