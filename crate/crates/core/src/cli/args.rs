use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::structures::ParamKey;

use super::CliError;

#[derive(Debug, Parser)]
#[command(name = "codebounds", version, about = "Code-size bounds, exact oracles and Lovász theta")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, env = "CODEBOUNDS_FORMAT", default_value = "text")]
    pub format: Format,

    /// Report wall-clock time on stderr.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Upper bound on a code size by closed form, relation or the fixpoint engine.
    Bound(BoundArgs),
    /// Exact code size by clique search, with a witness code.
    Exact(ExactArgs),
    /// Largest anticode or intersecting family.
    Anticode(AnticodeArgs),
    /// Bounds for a range of lengths, next to exact values where these are feasible.
    Table(TableArgs),
    /// Check relations against exact values on a grid.
    Audit(AuditArgs),
    /// Lovász theta of a code graph or a DIMACS file.
    Theta(ThetaArgs),
    /// Symmetry, anticode and bound checks for one parameter point.
    Verify(VerifyArgs),
    /// Write a code graph as DIMACS.
    Export(ExportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    #[value(name = "code")]
    Code,
    #[value(name = "constant_weight")]
    ConstantWeight,
    #[value(name = "doubly_constant")]
    DoublyConstant,
    #[value(name = "doubly_bounded")]
    DoublyBounded,
}

#[derive(Clone, Debug, Args)]
pub struct ParamArgs {
    #[arg(long, value_enum, default_value = "code")]
    pub family: Family,
    #[arg(long)]
    pub q: Option<u32>,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub d: Option<u32>,
    #[arg(long)]
    pub w: Option<u32>,
    #[arg(long)]
    pub w1: Option<u32>,
    #[arg(long)]
    pub n1: Option<u32>,
    #[arg(long)]
    pub w2: Option<u32>,
    #[arg(long)]
    pub n2: Option<u32>,
}

fn need(v: Option<u32>, flag: &str, family: &str) -> Result<u32, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("--{flag} is required for --family {family}")))
}

impl ParamArgs {
    pub(crate) fn key(&self) -> Result<ParamKey, CliError> {
        let name = self.family.to_possible_value().expect("named").get_name().to_string();
        let key = match self.family {
            Family::Code => ParamKey::code(self.q.unwrap_or(2), need(self.n, "n", &name)?, need(self.d, "d", &name)?)?,
            Family::ConstantWeight => ParamKey::constant_weight(
                need(self.n, "n", &name)?,
                need(self.d, "d", &name)?,
                need(self.w, "w", &name)?,
            )?,
            Family::DoublyConstant | Family::DoublyBounded => ParamKey::doubly(
                need(self.w1, "w1", &name)?,
                need(self.n1, "n1", &name)?,
                need(self.w2, "w2", &name)?,
                need(self.n2, "n2", &name)?,
                need(self.d, "d", &name)?,
                self.family == Family::DoublyBounded,
            )?,
        };
        Ok(key)
    }
}

#[derive(Clone, Copy, Debug, Args)]
pub struct OracleArgs {
    /// Largest graph the exact oracles will search.
    #[arg(long, default_value_t = 1024)]
    pub max_vertices: usize,
    /// Per-search time budget in seconds.
    #[arg(long, default_value_t = 300)]
    pub timeout: u64,
}

#[derive(Clone, Copy, Debug, Args)]
pub struct ModeArgs {
    /// Only audited relations (the default).
    #[arg(long, conflicts_with = "paper_faithful")]
    pub certified: bool,
    /// Every relation as stated, including refuted ones.
    #[arg(long)]
    pub paper_faithful: bool,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// `best`, `all`, a closed form or a relation name.
    #[arg(long, default_value = "best")]
    pub method: String,
    #[command(flatten)]
    pub mode: ModeArgs,
    /// Engine grid: largest total length (defaults to the point's own length).
    #[arg(long)]
    pub n_max: Option<u32>,
    #[arg(long, default_value_t = crate::bounds::DEFAULT_GRID_CAP)]
    pub grid_cap: usize,
}

#[derive(Debug, Args)]
pub struct ExactArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub oracle: OracleArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AnticodeKind {
    /// Words pairwise agreeing in at least `t` positions.
    N,
    /// `w`-sets pairwise meeting in at least `t` elements.
    M,
}

#[derive(Debug, Args)]
pub struct AnticodeArgs {
    #[arg(long, value_enum)]
    pub kind: AnticodeKind,
    #[arg(long, default_value_t = 2)]
    pub q: u32,
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub t: u32,
    #[arg(long)]
    pub w: Option<u32>,
    /// Also establish the value by exhaustive search.
    #[arg(long)]
    pub exhaustive: bool,
    #[command(flatten)]
    pub oracle: OracleArgs,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_enum, default_value = "code")]
    pub family: Family,
    #[arg(long, default_value_t = 2)]
    pub q: u32,
    #[arg(long)]
    pub d: u32,
    #[arg(long)]
    pub w: Option<u32>,
    #[arg(long)]
    pub n_max: u32,
    #[command(flatten)]
    pub mode: ModeArgs,
    /// Leave out the exact column.
    #[arg(long)]
    pub no_exact: bool,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, default_value_t = crate::bounds::DEFAULT_GRID_CAP)]
    pub grid_cap: usize,
    #[command(flatten)]
    pub oracle: OracleArgs,
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    /// A relation name or `all`.
    #[arg(long, default_value = "all")]
    pub relation: String,
    #[arg(long, default_value_t = 8)]
    pub n_max: u32,
    #[arg(long, value_delimiter = ',', default_value = "2")]
    pub q: Vec<u32>,
    #[arg(long, value_delimiter = ',', default_value = "2,3,4")]
    pub d: Vec<u32>,
    #[arg(long, default_value_t = 4)]
    pub w_max: u32,
    /// Check the inequality with its two sides exchanged.
    #[arg(long)]
    pub reversed: bool,
    /// Exit with status 4 when any audited relation fails.
    #[arg(long)]
    pub strict: bool,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[command(flatten)]
    pub oracle: OracleArgs,
}

#[derive(Debug, Args)]
pub struct ThetaArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Read the graph from a DIMACS file instead.
    #[arg(long)]
    pub dimacs: Option<PathBuf>,
    #[arg(long)]
    pub complement: bool,
    /// Report ϑ(G), ϑ(Ḡ) and their product against |V|.
    #[arg(long, conflicts_with = "capacity")]
    pub multiplicativity: bool,
    /// Compare ϑ with exact α on the graph and its complement.
    #[arg(long)]
    pub capacity: bool,
    #[arg(long, default_value_t = 1e-7)]
    pub tolerance: f64,
    #[arg(long, default_value_t = 200_000)]
    pub max_iterations: usize,
    /// Largest graph the SDP solver accepts.
    #[arg(long, default_value_t = 256)]
    pub sdp_max_vertices: usize,
    #[command(flatten)]
    pub oracle: OracleArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Comma-separated codewords to check against the distance and the bound.
    #[arg(long, value_delimiter = ',')]
    pub code: Vec<String>,
    /// Exit with status 4 when any check fails.
    #[arg(long)]
    pub strict: bool,
    #[command(flatten)]
    pub oracle: OracleArgs,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Output path, or `-` for standard output.
    #[arg(long)]
    pub dimacs: PathBuf,
    /// Also write one label per line to `<path>.labels`.
    #[arg(long)]
    pub labels: bool,
    #[arg(long)]
    pub complement: bool,
    #[command(flatten)]
    pub oracle: OracleArgs,
}
