use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod render;

/// Exact genus-1 invariants of Calabi-Yau 5-folds.
#[derive(Debug, Parser)]
#[command(name = "cy5", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Genus-1 table for O(-1)+O(-1)+O(-1) over P^2, with the closed-form check.
    LocalP2 {
        #[arg(long, default_value_t = 60, value_parser = clap::value_parser!(u32).range(1..))]
        max_degree: u32,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        jobs: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Genus-1 table for a compact 5-fold read from a GW input file.
    Hypersurface {
        #[arg(long)]
        input: PathBuf,
        /// Defaults to the file's maxdeg.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_degree: Option<u32>,
        /// Also print n_{d1 d2}(H|;) for d1, d2 <= D. Needs max degree >= 2D.
        #[arg(long, value_name = "D", value_parser = clap::value_parser!(u32).range(1..))]
        meeting_table: Option<u32>,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        jobs: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Recompute the local P^2 GW input by torus localization at random weights.
    VerifyLocalization {
        #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u32).range(1..))]
        max_degree: u32,
        #[arg(long, default_value_t = 2008)]
        seed: u64,
        /// Number of weight triples.
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        triples: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Compare local P^2 invariants with the closed form S(d) V(d).
    VerifyMartin {
        #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u32).range(1..))]
        max_degree: u32,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        jobs: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Ok = 0,
    Usage = 1,
    Failed = 2,
}

fn emit(out: &OutputArgs, text: &str) -> Result<(), Status> {
    match &out.output {
        Some(path) => std::fs::write(path, text).map_err(|e| {
            eprintln!("error: cannot write {}: {e}", path.display());
            Status::Usage
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|_| Status::Failed)
        }
    }
}

fn run(cli: Cli) -> Status {
    let outcome = match &cli.command {
        Command::LocalP2 {
            max_degree,
            jobs,
            out,
        } => commands::local_p2(*max_degree, *jobs as usize, out.format).map(|r| (r, out)),
        Command::Hypersurface {
            input,
            max_degree,
            meeting_table,
            jobs,
            out,
        } => commands::hypersurface(
            input,
            *max_degree,
            *meeting_table,
            *jobs as usize,
            out.format,
        )
        .map(|r| (r, out)),
        Command::VerifyLocalization {
            max_degree,
            seed,
            triples,
            out,
        } => commands::verify_localization(*max_degree, *seed, *triples as usize, out.format)
            .map(|r| (r, out)),
        Command::VerifyMartin {
            max_degree,
            jobs,
            out,
        } => commands::verify_martin(*max_degree, *jobs as usize, out.format).map(|r| (r, out)),
    };
    match outcome {
        Ok((report, out)) => {
            if let Err(status) = emit(out, &report.text) {
                return status;
            }
            report.status
        }
        Err(status) => status,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let status = if err.use_stderr() {
                Status::Usage
            } else {
                Status::Ok
            };
            let _ = err.print();
            return ExitCode::from(status as u8);
        }
    };
    ExitCode::from(run(cli) as u8)
}
