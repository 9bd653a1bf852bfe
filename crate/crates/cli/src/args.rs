use clap::{Args, Parser, Subcommand, ValueEnum};
use deltashift::LieType;

#[derive(Debug, Parser)]
#[command(
    name = "deltashift",
    version,
    about = "Action of miniscule-coweight Delta-operators on level-k affine highest weights"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct TypeArg {
    /// Algebra type: family letter followed by the rank, e.g. A5, D6, E7
    #[arg(long = "type", value_name = "TYPE", value_parser = parse_type)]
    pub lie_type: LieType,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cartan matrix, highest root, marks/comarks, miniscule coweights, |P∨/Q∨|
    Info {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Apply a Weyl word (rightmost letter first) to a weight
    Reflect {
        #[command(flatten)]
        ty: TypeArg,
        /// Comma-separated simple reflection indices; may be empty
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// Comma-separated fundamental-weight coefficients
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Image of a level-k weight under one miniscule coweight
    Delta {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long)]
        level: i64,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long)]
        coweight: usize,
        /// Also evaluate through the canonical Weyl word and compare
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run the permutation, oracle, bijection and coset checks
    Verify {
        #[arg(long = "type", value_name = "TYPE", value_parser = parse_type, required_unless_present = "all", conflicts_with = "all")]
        lie_type: Option<LieType>,
        /// Every supported type of rank at most 8
        #[arg(long)]
        all: bool,
        /// Single level to check; defaults to 1, 2 and 3
        #[arg(long)]
        level: Option<i64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Orbits of the admissible weights under all miniscule coweights
    Orbits {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long)]
        level: i64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Full action table at a level
    Table {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long)]
        level: i64,
        /// Restrict to a single miniscule coweight
        #[arg(long)]
        coweight: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn parse_type(s: &str) -> Result<LieType, String> {
    s.parse().map_err(|e: deltashift::Error| e.to_string())
}

pub fn parse_int_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<T>()
                .map_err(|_| format!("invalid {what} entry {part:?}"))
        })
        .collect()
}
