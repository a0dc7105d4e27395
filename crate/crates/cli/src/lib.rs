//! `flagblow`: command-line front end for the blow-up engine.
//!
//! Every command returns an [`Outcome`] instead of printing, so tests can
//! drive the exact code path the binary uses.

use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use blowup_core::report::{ClassifyReport, TableRow};
use blowup_core::{BlowUp, Error, Family, FlagVariety, ParabolicSubset, RootSystem, TypeSpec};

pub mod selfcheck;
pub mod text;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest rank `table` accepts.
pub const TABLE_MAX_RANK: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
            code: EXIT_USAGE,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "flagblow",
    version,
    about = "Fano blow-ups of flag varieties along Schubert varieties"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verdict, β values, margins and the anticanonical class of Bl_Z(G/P).
    Classify(BlowUpArgs),
    /// Nef and Mori cone generators with their intersection matrix.
    Cones(BlowUpArgs),
    /// β vectors and Fano thresholds over a range of types.
    Table(TableArgs),
    /// Run the built-in invariant suites.
    Check,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// Comma-separated node labels; the empty string is the empty list.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NodeList(pub Vec<usize>);

impl FromStr for NodeList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| format!("bad node label `{t}`"))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(NodeList)
    }
}

#[derive(Debug, Clone, Args)]
pub struct BlowUpArgs {
    /// Cartan type letter (A-G).
    #[arg(long = "type")]
    pub family: String,
    #[arg(long)]
    pub rank: usize,
    /// Nodes in S_P (what P contains), e.g. `1,3`; "" for the Borel.
    #[arg(long, default_value = "")]
    pub parabolic: NodeList,
    /// Codimension of the Schubert centre.
    #[arg(long, allow_negative_numbers = true)]
    pub codim: i64,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
#[command(group(clap::ArgGroup::new("policy").required(true).args(["maximal_parabolics", "full_flag", "all_parabolics"])))]
pub struct TableArgs {
    /// Comma-separated family letters, e.g. `A,B,G`.
    #[arg(long)]
    pub families: String,
    #[arg(long)]
    pub max_rank: usize,
    /// One row per maximal parabolic.
    #[arg(long)]
    pub maximal_parabolics: bool,
    /// One row per type, S_P empty.
    #[arg(long)]
    pub full_flag: bool,
    /// One row per proper parabolic subset.
    #[arg(long)]
    pub all_parabolics: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Policy {
    Maximal,
    FullFlag,
    All,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => dispatch(cli.command),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                Outcome::ok(rendered)
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: rendered,
                    code,
                }
            }
        }
    }
}

pub fn dispatch(command: Command) -> Outcome {
    match command {
        Command::Classify(a) => cmd_classify(&a),
        Command::Cones(a) => cmd_cones(&a),
        Command::Table(a) => {
            let policy = if a.maximal_parabolics {
                Policy::Maximal
            } else if a.full_flag {
                Policy::FullFlag
            } else {
                Policy::All
            };
            cmd_table(&a.families, a.max_rank, policy, a.format)
        }
        Command::Check => cmd_check(),
    }
}

fn build_blowup(a: &BlowUpArgs) -> Result<BlowUp, Error> {
    let family: Family = a.family.parse()?;
    let rs = RootSystem::new(TypeSpec::new(family, a.rank)?)?;
    let par = ParabolicSubset::new(a.parabolic.0.iter().copied(), a.rank)?;
    BlowUp::new(FlagVariety::new(rs, par)?, a.codim)
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types always serialize");
    s.push('\n');
    s
}

pub fn cmd_classify(a: &BlowUpArgs) -> Outcome {
    let report = match build_blowup(a).and_then(|bl| ClassifyReport::build(&bl, false)) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(e),
    };
    Outcome::ok(match a.format {
        Format::Text => text::classify(&report),
        Format::Json => json(&report),
    })
}

pub fn cmd_cones(a: &BlowUpArgs) -> Outcome {
    let report = match build_blowup(a).and_then(|bl| ClassifyReport::build(&bl, true)) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(e),
    };
    let cones = report.cones.as_ref().expect("requested");
    let identity = cones
        .intersection_matrix
        .iter()
        .enumerate()
        .all(|(i, row)| row.iter().enumerate().all(|(j, &x)| x == i64::from(i == j)));
    if !identity {
        return Outcome {
            stdout: String::new(),
            stderr: "error: nef/Mori intersection matrix is not the identity\n".into(),
            code: EXIT_CHECK_FAILED,
        };
    }
    Outcome::ok(match a.format {
        Format::Text => text::cones(&report),
        Format::Json => json(&report),
    })
}

fn parse_families(list: &str) -> Result<Vec<Family>, String> {
    let families = list
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<Family>().map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    if families.is_empty() {
        return Err("--families needs at least one family letter".into());
    }
    Ok(families)
}

/// Rows in a fixed order: family as listed, then rank, then parabolic bitmask.
pub fn table_rows(
    families: &[Family],
    max_rank: usize,
    policy: Policy,
) -> Result<Vec<TableRow>, Error> {
    let mut rows = Vec::new();
    for &family in families {
        for rank in family.ranks_up_to(max_rank) {
            let rs = RootSystem::new(TypeSpec::new(family, rank)?)?;
            let parabolics = match policy {
                Policy::FullFlag => vec![ParabolicSubset::borel()],
                Policy::Maximal => (1..=rank)
                    .map(|node| ParabolicSubset::maximal(rank, node))
                    .collect::<Result<_, _>>()?,
                Policy::All => ParabolicSubset::all_proper(rank),
            };
            for par in parabolics {
                rows.push(TableRow::build(&FlagVariety::new(rs.clone(), par)?));
            }
        }
    }
    Ok(rows)
}

pub fn cmd_table(families: &str, max_rank: usize, policy: Policy, format: Format) -> Outcome {
    let families = match parse_families(families) {
        Ok(f) => f,
        Err(e) => return Outcome::usage(e),
    };
    if max_rank == 0 || max_rank > TABLE_MAX_RANK {
        return Outcome::usage(format!(
            "--max-rank must lie in 1..={TABLE_MAX_RANK}, got {max_rank}"
        ));
    }
    let rows = match table_rows(&families, max_rank, policy) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(e),
    };
    Outcome::ok(match format {
        Format::Text => text::table(&rows),
        Format::Json => json(&rows),
    })
}

pub fn cmd_check() -> Outcome {
    selfcheck::outcome(&selfcheck::run_default())
}

/// Runs the suites over caller-supplied root systems; the negative-control hook.
pub fn run_checks_on(systems: &[RootSystem]) -> Outcome {
    selfcheck::outcome(&selfcheck::run_checks_on(systems))
}
