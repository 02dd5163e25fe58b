use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ladder_hilbert_cli::{
    cmd_bench, cmd_hilbert, cmd_pathgf, cmd_verify, render_json, CliError, Format, MethodChoice,
    ProblemInstance, Scope,
};

/// Hilbert series of one-sided ladder determinantal rings.
#[derive(Debug, Parser)]
#[command(name = "ladder-hilbert", version)]
struct Args {
    /// Instance file (JSON with keys a, b, f, u, v and optional starts, ends).
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = MethodChoice::Recursive, global = true)]
    method: MethodChoice,
    /// Also print this many values of the Hilbert function.
    #[arg(long, global = true)]
    series_terms: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Numerator and denominator exponent of the Hilbert series.
    Hilbert,
    /// Turn generating function of the nonintersecting path families.
    Pathgf,
    /// Compare both methods against brute-force enumeration.
    Verify {
        #[arg(long, value_enum, default_value_t = Scope::All)]
        scope: Scope,
        /// Largest second-row length the array oracle may enumerate.
        #[arg(long, default_value_t = 10)]
        size_cap: i64,
    },
    /// Time the direct and recursive methods.
    Bench {
        #[arg(long, default_value_t = 3)]
        repeats: usize,
    },
}

fn run(args: Args) -> Result<String, CliError> {
    let path = args.input.ok_or(CliError::MissingInput)?;
    let instance = ProblemInstance::load(&path)?;
    let pretty = args.format == Format::Pretty;
    Ok(match args.command {
        Command::Hilbert => {
            let r = cmd_hilbert(&instance, args.method, args.series_terms)?;
            if pretty { r.render_pretty() } else { render_json(&r) }
        }
        Command::Pathgf => {
            let r = cmd_pathgf(&instance, args.method)?;
            if pretty { r.render_pretty() } else { render_json(&r) }
        }
        Command::Verify { scope, size_cap } => {
            let r = cmd_verify(&instance, scope, size_cap)?;
            if pretty { r.render_pretty() } else { render_json(&r) }
        }
        Command::Bench { repeats } => {
            let r = cmd_bench(&instance, repeats)?;
            if pretty { r.render_pretty() } else { render_json(&r) }
        }
    })
}

fn main() -> ExitCode {
    match run(Args::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
