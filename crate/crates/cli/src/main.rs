//! `gpoly`: graph polynomial computations from the command line.

mod commands;
mod input;

use std::fmt;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gpoly_core::verify::Suite;
use gpoly_core::{Error, Invariant, Limits, Route};

#[derive(Parser, Debug)]
#[command(name = "gpoly", version, about = "Graph polynomials and their extended forms")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Global {
    /// Output format (convert defaults to json, everything else to text).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Skip the size guards on exponential enumerations.
    #[arg(long, global = true)]
    force: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_name = "K")]
    jobs: Option<usize>,
}

impl Global {
    pub fn limits(&self) -> Limits {
        Limits {
            force: self.force,
            ..Limits::default()
        }
    }

    pub fn format_or(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum RouteArg {
    Definition,
    Specialization,
    Recurrence,
}

impl From<RouteArg> for Route {
    fn from(r: RouteArg) -> Route {
        match r {
            RouteArg::Definition => Route::Definition,
            RouteArg::Specialization => Route::Specialization,
            RouteArg::Recurrence => Route::Recurrence,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConvertFrom {
    Ubar,
    YbarP,
    U,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConvertTo {
    YbarP,
    YbarM,
    ExtPolychromate,
    Ubar,
    Polychromate,
}

fn parse_invariant(s: &str) -> Result<Invariant, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = Invariant::ALL.iter().map(|i| i.name()).collect();
        format!("expected one of: {}", names.join(", "))
    })
}

/// A suite name, or `all`.
#[derive(Debug, Clone, Copy)]
struct SuiteChoice(Option<Suite>);

fn parse_suite(s: &str) -> Result<SuiteChoice, String> {
    if s == "all" {
        return Ok(SuiteChoice(None));
    }
    s.parse().map(|x| SuiteChoice(Some(x))).map_err(|_| {
        let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
        format!("expected all or one of: {}", names.join(", "))
    })
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute an invariant of every graph in a file.
    Compute {
        #[arg(value_parser = parse_invariant)]
        invariant: Invariant,
        /// Edge-list or graph6 file, `-` for stdin.
        graph: String,
        /// Number of variables kept in symmetric-function outputs.
        #[arg(long, value_name = "N")]
        truncate: Option<usize>,
        #[arg(long, value_enum, default_value = "definition")]
        route: RouteArg,
    },
    /// Compare an invariant of two graphs.
    Compare {
        #[arg(value_parser = parse_invariant)]
        invariant: Invariant,
        first: String,
        second: String,
        #[arg(long, value_name = "N")]
        truncate: Option<usize>,
        #[arg(long, value_enum, default_value = "definition")]
        route: RouteArg,
    },
    /// Run a consistency suite over exhaustively generated small graphs.
    Verify {
        /// recurrence, specializations, equivalence-chain, bases,
        /// paper-examples or all.
        #[arg(value_parser = parse_suite)]
        suite: SuiteChoice,
        #[arg(long, value_name = "N")]
        max_vertices: Option<usize>,
        #[arg(long, value_name = "M")]
        max_edges: Option<usize>,
        /// Seed for the random evaluation points.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Look for graphs with equal U and different extended U.
    Search {
        /// Edge-list or graph6 files.
        files: Vec<String>,
        /// File of graph6 lines.
        #[arg(long = "graphs", value_name = "FILE")]
        graph_files: Vec<String>,
        /// Enumerate all labeled connected simple graphs up to this size.
        #[arg(long, value_name = "MAX_N")]
        enumerate: Option<usize>,
        /// Drop graphs with loops.
        #[arg(long)]
        loopless: bool,
        /// Skip malformed graph6 lines instead of failing.
        #[arg(long)]
        lenient: bool,
    },
    /// Convert between the U, extended U and paired-basis forms.
    Convert {
        #[arg(long, value_enum)]
        from: ConvertFrom,
        #[arg(long, value_enum)]
        to: ConvertTo,
        /// JSON input file, `-` for stdin.
        #[arg(default_value = "-")]
        input: String,
    },
}

/// Why a command stopped, mapped onto the exit codes.
#[derive(Debug)]
pub enum Failure {
    Core(Error),
    In(String, Error),
    Io(String),
    Usage(String),
    /// DIFFER or a failed suite; the report is already on stdout.
    Negative,
}

impl Failure {
    pub fn within(self, source: &str) -> Failure {
        match self {
            Failure::Core(e) => Failure::In(source.to_string(), e),
            other => other,
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Negative => 1,
            Failure::Io(_) | Failure::Usage(_) => 2,
            Failure::Core(e) | Failure::In(_, e) => match e {
                Error::Parse { .. }
                | Error::Malformed(_)
                | Error::EdgeOutOfRange { .. }
                | Error::VertexOutOfRange { .. } => 2,
                Error::GuardExceeded { .. } => 3,
                Error::Precondition(_) | Error::ContractLoop(_) | Error::Unassigned(_) => 4,
            },
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Core(e) => write!(f, "{e}"),
            Failure::In(src, e) => write!(f, "{src}: {e}"),
            Failure::Io(msg) | Failure::Usage(msg) => f.write_str(msg),
            Failure::Negative => Ok(()),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let g = cli.global;
    if let Some(k) = g.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build_global()
            .map_err(|e| Failure::Usage(format!("--jobs: {e}")))?;
    }
    match cli.command {
        Command::Compute {
            invariant,
            graph,
            truncate,
            route,
        } => commands::compute(&g, invariant, &graph, truncate, route.into()),
        Command::Compare {
            invariant,
            first,
            second,
            truncate,
            route,
        } => commands::compare(&g, invariant, &first, &second, truncate, route.into()),
        Command::Verify {
            suite,
            max_vertices,
            max_edges,
            seed,
        } => commands::verify(&g, suite.0, max_vertices, max_edges, seed),
        Command::Search {
            files,
            graph_files,
            enumerate,
            loopless,
            lenient,
        } => commands::search(&g, &files, &graph_files, enumerate, loopless, lenient),
        Command::Convert { from, to, input } => commands::convert(&g, from, to, &input),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !matches!(f, Failure::Negative) {
                eprintln!("error: {f}");
            }
            if f.exit_code() == 3 {
                eprintln!("hint: rerun with --force to skip the size guards");
            }
            ExitCode::from(f.exit_code())
        }
    }
}
