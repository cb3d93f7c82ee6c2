//! Command-line front end: every check as a subcommand, with text or JSON
//! output.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact checks of counting bounds on maximal subgroups, coideals of Kac
/// algebras and fusion subrings.
///
/// Exit status: 0 when every check holds, 1 when a checked bound fails,
/// 2 on input or usage errors.
#[derive(Debug, Parser)]
#[command(name = "walllat", version)]
pub struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(flatten)]
    pub caps: CapArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct CapArgs {
    /// Largest group order accepted.
    #[arg(long, global = true, env = "WALLLAT_ORDER_CAP", value_parser = clap::value_parser!(u64).range(1..))]
    pub order_cap: Option<u64>,

    /// Largest number of subgroups in an enumerated interval.
    #[arg(long, global = true, env = "WALLLAT_INTERVAL_CAP", value_parser = clap::value_parser!(u64).range(1..))]
    pub interval_cap: Option<u64>,

    /// Largest family size for the subset-rank test.
    #[arg(long, global = true, env = "WALLLAT_RADO_CAP", value_parser = clap::value_parser!(u64).range(1..))]
    pub rado_cap: Option<u64>,

    /// Seed for sampled associativity checks of large tables.
    #[arg(long, global = true, env = "WALLLAT_SEED")]
    pub seed: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count maximal subgroups against the group order.
    Wall {
        /// Group specification file, or `catalog:NAME`.
        group: String,
    },
    /// Count maximal overgroups of a named subgroup against its double cosets.
    RelativeWall {
        group: String,
        /// Name of a `[subgroup NAME]` block in the group file.
        #[arg(long)]
        subgroup: String,
    },
    /// Find independent invariant vectors for a family of maximal subgroups.
    Mod2 {
        group: String,
        /// `all-maximal`, or comma-separated names of subgroup blocks.
        #[arg(long, default_value = "all-maximal")]
        subgroups: String,
    },
    /// Count maximal subgroups of X×Y containing neither factor.
    Tensor { x: String, y: String },
    /// Checks on Kac algebras built from cocycle files.
    Kac {
        #[command(subcommand)]
        command: KacCommand,
    },
    /// Maximal fusion subalgebras.
    Fusion {
        #[command(subcommand)]
        command: FusionCommand,
    },
    /// Checks over the built-in fixture catalog.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
}

#[derive(Debug, Args)]
pub struct KacInput {
    /// Cocycle file, or `catalog:NAME`.
    #[arg(required_unless_present = "input", conflicts_with = "input")]
    pub path: Option<String>,
    #[arg(long)]
    pub input: Option<String>,
    /// Use left coideals instead of right coideals.
    #[arg(long)]
    pub left: bool,
}

impl KacInput {
    pub fn source(&self) -> &str {
        self.path.as_deref().or(self.input.as_deref()).expect("clap requires one input")
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Pentagon {
    Closure,
    ProofDisplay,
    PrintedDisplay,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum XiForm {
    Twisted,
    Printed,
}

#[derive(Debug, Subcommand)]
pub enum KacCommand {
    /// Check normalization, cocycle and pentagon identities.
    Validate {
        #[command(flatten)]
        input: KacInput,
        #[arg(long, value_enum, default_value = "closure")]
        pentagon: Pentagon,
        #[arg(long, value_enum, default_value = "twisted")]
        xi_cocycle: XiForm,
    },
    /// Enumerate the coideal lattice.
    Coideals {
        #[command(flatten)]
        input: KacInput,
    },
    /// Count maximal and minimal coideals against the dimension.
    Wall {
        #[command(flatten)]
        input: KacInput,
    },
    /// Relative count below one coideal (default: the whole algebra).
    Relative {
        #[command(flatten)]
        input: KacInput,
        /// Node index from `kac coideals`.
        #[arg(long)]
        triple: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum FusionCommand {
    /// Group ring of a group specification.
    Group { group: String },
    /// Representation ring from a character table file, or `catalog:NAME`.
    Chartable { path: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Solvable,
    All,
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    /// Run the group checks on every catalog group.
    Sweep {
        #[arg(long, value_enum, default_value = "all")]
        family: Family,
    },
    /// List catalog entries.
    List,
}

/// Where an input comes from.
pub enum Source {
    File(PathBuf),
    Catalog(String),
}

impl Source {
    pub fn parse(s: &str) -> Source {
        match s.strip_prefix("catalog:") {
            Some(name) => Source::Catalog(name.to_string()),
            None => Source::File(PathBuf::from(s)),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match commands::run(&cli) {
        Ok(output) => {
            print!("{}", output.text);
            ExitCode::from(if output.holds { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
