//! `hurwitz`: batch experiments on pure-cycle Hurwitz factorizations.

mod commands;
mod config;
mod error;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use config::Settings;
use error::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "hurwitz",
    version,
    about = "Enumerate, count and connect pure-cycle Hurwitz factorizations"
)]
struct Cli {
    /// key=value file; flags override it
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// largest degree the enumerator accepts
    #[arg(long, global = true)]
    max_degree: Option<usize>,
    /// largest tuple length (cycles plus transpositions) the enumerator accepts
    #[arg(long, global = true)]
    max_tuple_len: Option<usize>,
    /// cap on classes held by an orbit search
    #[arg(long, global = true)]
    max_states: Option<usize>,
    /// allow degree 10 and tuple length 8
    #[arg(long, global = true)]
    extended: bool,
    #[command(subcommand)]
    command: Command,
}

/// `-d` and `-e` for commands that take one problem.
#[derive(Args, Debug, Clone)]
pub struct ProblemArgs {
    #[arg(short = 'd')]
    pub d: usize,
    /// cycle lengths, comma separated
    #[arg(short = 'e', value_delimiter = ',', required = true)]
    pub e: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    pub genus: usize,
    /// number of trailing transpositions
    #[arg(long, default_value_t = 0)]
    pub simple: usize,
    /// keep the given order of e
    #[arg(long)]
    pub no_sort: bool,
}

/// Optional `-d` and `-e` for commands whose subaction may infer them.
#[derive(Args, Debug, Clone)]
pub struct MaybeProblemArgs {
    #[arg(short = 'd')]
    pub d: Option<usize>,
    #[arg(short = 'e', value_delimiter = ',')]
    pub e: Option<Vec<usize>>,
    #[arg(long)]
    pub no_sort: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hurwitz number from the closed formula and/or enumeration
    Number {
        #[command(flatten)]
        problem: ProblemArgs,
        /// print formula and enumeration and fail if they differ
        #[arg(long)]
        check: bool,
    },
    /// Orbits of the braid action on the classes of a problem
    Orbits {
        #[command(flatten)]
        problem: ProblemArgs,
        #[arg(long, value_enum, default_value_t = GeneratorSet::Pure)]
        generators: GeneratorSet,
        /// exit 1 unless there is exactly one orbit
        #[arg(long)]
        expect_single: bool,
        #[arg(long)]
        json: bool,
        /// record a word taking each class to its orbit's base
        #[arg(long)]
        witnesses: bool,
    },
    /// One row per genus-0 problem with r cycles and d up to dmax
    Table {
        #[arg(long)]
        dmax: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Closed-form four-point factorizations
    Fourpoint {
        #[command(flatten)]
        problem: MaybeProblemArgs,
        #[command(subcommand)]
        action: FourpointAction,
    },
    /// Node index sequences of the chain degeneration
    Degenerate {
        #[command(flatten)]
        problem: MaybeProblemArgs,
        /// drop the aspect-degree bound from validity
        #[arg(long, global = true)]
        no_degree_bound: bool,
        #[command(subcommand)]
        action: DegenerateAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum FourpointAction {
    /// every parameter with its factorization
    List {
        #[arg(long)]
        json: bool,
    },
    /// parameters of the constructed factorization equivalent to a tuple
    Classify {
        #[arg(long)]
        sigma: String,
    },
    /// moves from a parameter to the base point
    Path {
        #[arg(long)]
        from: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum DegenerateAction {
    List,
    Connect {
        #[arg(long, value_delimiter = ',', required = true)]
        from: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        to: Vec<usize>,
        /// shortest path by breadth-first search
        #[arg(long)]
        bfs: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum GeneratorSet {
    /// all A_ij
    Pure,
    /// A_{i,i+1} only
    Adjacent,
    /// the braid generators
    Braid,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

fn settings(cli: &Cli) -> Result<Settings, CliError> {
    let file = match &cli.config {
        Some(path) => Settings::load(path)?,
        None => Settings::default(),
    };
    Ok(file.overridden_by(Settings {
        max_degree: cli.max_degree,
        max_tuple_len: cli.max_tuple_len,
        workers: cli.workers,
        max_states: cli.max_states,
        extended: cli.extended,
    }))
}

fn run(cli: Cli) -> Result<(), CliError> {
    let settings = settings(&cli)?;
    match cli.command {
        Command::Number { problem, check } => commands::number(&settings, &problem, check),
        Command::Orbits {
            problem,
            generators,
            expect_single,
            json,
            witnesses,
        } => commands::orbits(
            &settings,
            &problem,
            generators,
            expect_single,
            json,
            witnesses,
        ),
        Command::Table {
            dmax,
            r,
            out,
            format,
        } => commands::table(&settings, dmax, r, out.as_deref(), format),
        Command::Fourpoint { problem, action } => commands::fourpoint(&problem, &action),
        Command::Degenerate {
            problem,
            no_degree_bound,
            action,
        } => commands::degenerate(&problem, !no_degree_bound, &action),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // help and version exit 0, usage errors exit 2
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(()) | Err(CliError::Closed) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
