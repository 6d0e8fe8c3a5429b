use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use tgrs_cli::commands::{self, Format, InvertKind, MethodArg, Output, EXIT_INPUT};

/// Exact tools for arbitrary-twist generalized Reed-Solomon codes.
#[derive(Parser)]
#[command(name = "tgrs", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for subset and candidate checks.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a code is MDS. Exit status 0 if it is, 1 if not.
    Verify {
        spec: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Criterion)]
        method: MethodArg,
        /// List every failing subset instead of stopping at the first.
        #[arg(long)]
        full_report: bool,
    },
    /// Enumerate or sample twist matrices and keep the MDS ones.
    Search {
        config: PathBuf,
        /// Overrides the seed in the config file.
        #[arg(long)]
        seed: Option<u64>,
        /// Include the wall-clock duration in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Invert a structured matrix built from the given points.
    Invert {
        #[arg(value_enum)]
        kind: InvertKind,
        input: PathBuf,
    },
    /// Print w_t for lo <= t <= hi.
    Wseq {
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        lo: i64,
        #[arg(long, allow_hyphen_values = true)]
        hi: i64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT as u8 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Verify { spec, method, full_report } => {
            commands::verify(&spec, method, full_report, cli.jobs, cli.format)
        }
        Command::Search { config, seed, timing } => commands::search(&config, seed, cli.jobs, timing, cli.format),
        Command::Invert { kind, input } => commands::invert(kind, &input, cli.format),
        Command::Wseq { input, lo, hi } => commands::wseq(&input, lo, hi, cli.format),
    };
    match result {
        Ok(Output { stdout, code }) => {
            print!("{stdout}");
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT as u8)
        }
    }
}
