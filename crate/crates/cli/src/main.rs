use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rootpoly_cli::commands::{self, Output};
use rootpoly_cli::report::{ErrorPayload, Report};
use rootpoly_core::enumeration::DEFAULT_INEQUALITY_LIMIT;
use rootpoly_core::hull::DEFAULT_MAX_DIM;
use rootpoly_core::{Error, Family, RootSystem};

const EXIT_USAGE: u8 = 1;
const EXIT_VERIFY: u8 = 2;
const EXIT_BOUND: u8 = 3;

#[derive(Parser)]
#[command(name = "rootpoly", version)]
#[command(about = "Faces, f-polynomials and half-space descriptions of root polytopes")]
struct Cli {
    /// Print a JSON report instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Roots, highest roots and marks
    Info { r#type: Family },
    /// Census of standard parabolic faces, or one face with --I
    Faces {
        r#type: Family,
        /// Comma-separated index set, e.g. 5,7
        #[arg(long = "I", value_delimiter = ',')]
        indices: Option<Vec<usize>>,
    },
    /// Face counts by dimension, lowest degree first
    Fpoly { r#type: Family },
    /// Minimal half-space representation
    Hrep {
        r#type: Family,
        /// Largest number of inequalities to list explicitly
        #[arg(long, default_value_t = DEFAULT_INEQUALITY_LIMIT)]
        limit: usize,
    },
    /// Check every formula against the convex-hull oracle
    Verify {
        r#type: Family,
        /// Largest rank the oracle accepts
        #[arg(long, default_value_t = DEFAULT_MAX_DIM)]
        max_rank: usize,
    },
    /// Extended Dynkin diagram with facet nodes marked
    Diagram { r#type: Family },
    /// Edge structure of the polytope
    Skeleton { r#type: Family },
    /// Smallest faces containing short roots
    Shortface { r#type: Family },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::RankBound { .. } | Error::LimitExceeded { .. } => EXIT_BOUND,
        Error::Internal(_) => EXIT_VERIFY,
        _ => EXIT_USAGE,
    }
}

struct Failure {
    code: u8,
    message: String,
    kind: String,
}

impl Failure {
    fn from_error(e: Error, kind: &str) -> Self {
        Failure {
            code: exit_code(&e),
            message: e.to_string(),
            kind: kind.to_string(),
        }
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let family = match &cli.command {
        Command::Info { r#type }
        | Command::Faces { r#type, .. }
        | Command::Fpoly { r#type }
        | Command::Hrep { r#type, .. }
        | Command::Verify { r#type, .. }
        | Command::Diagram { r#type }
        | Command::Skeleton { r#type }
        | Command::Shortface { r#type } => *r#type,
    };
    let kind = family.to_string();
    let rs = RootSystem::new(family).map_err(|e| Failure::from_error(e, &kind))?;
    let out = match &cli.command {
        Command::Info { .. } => commands::info(&rs),
        Command::Faces { indices: None, .. } => commands::faces_census(&rs),
        Command::Faces {
            indices: Some(ix), ..
        } => commands::face_detail(&rs, ix),
        Command::Fpoly { .. } => commands::fpoly(&rs),
        Command::Hrep { limit, .. } => commands::hrep(&rs, *limit),
        Command::Verify { max_rank, .. } => {
            let workers = commands::workers_from_env().map_err(|message| Failure {
                code: EXIT_USAGE,
                message,
                kind: kind.clone(),
            })?;
            commands::verify(&rs, *max_rank, workers)
        }
        Command::Diagram { .. } => commands::diagram(&rs),
        Command::Skeleton { .. } => commands::skeleton(&rs),
        Command::Shortface { .. } => commands::shortface(&rs),
    };
    out.map_err(|e| Failure::from_error(e, &kind))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let mut stdout = std::io::stdout().lock();
    match run(&cli) {
        Ok(out) => {
            let body = if cli.json { out.report.to_json() + "\n" } else { out.text };
            let _ = stdout.write_all(body.as_bytes());
            ExitCode::from(out.exit_code as u8)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            if cli.json {
                let payload = ErrorPayload {
                    error: f.message,
                    exit_code: f.code.into(),
                };
                let _ = writeln!(stdout, "{}", Report::new(f.kind, "error", payload).to_json());
            }
            ExitCode::from(f.code)
        }
    }
}
