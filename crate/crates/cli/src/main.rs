//! `opkernel` command-line tool: reads JSON descriptors, writes JSON reports.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod commands;
mod descriptor;
mod error;
mod report;

use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;

use commands::{Ctx, Demo, Outcome, Output};
use error::{CliError, CliResult, Exit};
use report::Tolerances;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "opkernel", version, about = "Operator-valued positive definite kernels")]
struct Cli {
    /// JSON descriptor file, `-` for stdin.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Report destination (stdout when absent).
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Seed for every randomized procedure.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads for probes; results do not depend on it.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Omit the wall-clock timestamp so reports are byte-for-byte reproducible.
    #[arg(long, global = true)]
    no_timestamp: bool,
    /// Tolerance override `NAME=VALUE`; names: psd, probe, form, relative_form, projection, ridge.
    #[arg(long = "tol", global = true, value_name = "NAME=VALUE")]
    tol: Vec<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate K(x, y), a derivative kernel, or the radial function at t.
    Eval,
    /// Block Gram matrix at the given points.
    Gram,
    /// Derivative block Gram matrix over all orders up to q.
    DerivGram,
    /// Exact strict PD / universality classification of a radial mixture.
    Classify,
    /// Randomized search for strict PD violations.
    Probe,
    /// Quadratic form of a derivative vector measure, by two routes.
    Form,
    /// Minimum-norm (Hermite) interpolation; without --input runs the built-in experiment.
    Interp,
    /// Complete monotonicity or ℓ-times complete monotonicity checks.
    Monotone,
    /// Rebuild one of the two counterexamples.
    Demo {
        #[arg(value_enum)]
        which: Demo,
        /// Shift vector of the shifted Gaussian.
        #[arg(long, value_delimiter = ',', default_value = "1")]
        w: Vec<f64>,
        #[arg(long, default_value_t = 512)]
        grid_n: usize,
        #[arg(long = "box", default_value_t = 4.0)]
        box_half_width: f64,
    },
}

fn read_input(path: Option<&Path>) -> CliResult<Option<String>> {
    let Some(path) = path else { return Ok(None) };
    let mut s = String::new();
    if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut s)?;
    } else {
        s = std::fs::read_to_string(path)
            .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
    }
    Ok(Some(s))
}

fn parse<T: DeserializeOwned>(text: Option<&str>, command: &str) -> CliResult<T> {
    let text = text.ok_or_else(|| CliError::input(format!("{command} requires --input")))?;
    Ok(serde_json::from_str(text)?)
}

fn run(cli: &Cli) -> CliResult<Outcome> {
    let ctx = Ctx {
        seed: cli.seed,
        tol: Tolerances::with_overrides(&cli.tol)?,
        timestamp: !cli.no_timestamp,
        jobs: cli.jobs.max(1),
    };
    let csv = cli.format == Format::Csv;
    if csv && !matches!(cli.command, Command::Gram | Command::DerivGram) {
        return Err(CliError::input("--format csv is only supported by gram and deriv-gram"));
    }
    let text = read_input(cli.input.as_deref())?;
    let text = text.as_deref();
    match &cli.command {
        Command::Eval => commands::eval(&ctx, &parse(text, "eval")?),
        Command::Gram => commands::gram_cmd(&ctx, &parse(text, "gram")?, false, csv),
        Command::DerivGram => commands::gram_cmd(&ctx, &parse(text, "deriv-gram")?, true, csv),
        Command::Classify => commands::classify(&ctx, &parse(text, "classify")?),
        Command::Probe => commands::probe(&ctx, &parse(text, "probe")?),
        Command::Form => commands::quadratic_form(&ctx, &parse(text, "form")?),
        Command::Interp => {
            let input = text.map(serde_json::from_str).transpose()?;
            commands::interp(&ctx, input.as_ref())
        }
        Command::Monotone => commands::monotone(&ctx, &parse(text, "monotone")?),
        Command::Demo {
            which,
            w,
            grid_n,
            box_half_width,
        } => commands::demo(&ctx, *which, w, *grid_n, *box_half_width),
    }
}

fn write_to(path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::input(format!("cannot write {}: {e}", p.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn emit(cli: &Cli, outcome: &Outcome) -> CliResult<()> {
    match &outcome.output {
        Output::Json(v) => write_to(cli.output.as_deref(), &report::to_pretty(v)),
        Output::Csv { csv, sidecar } => {
            write_to(cli.output.as_deref(), csv)?;
            let side = report::to_pretty(sidecar);
            match &cli.output {
                Some(p) => {
                    let mut name = p.as_os_str().to_owned();
                    name.push(".json");
                    write_to(Some(Path::new(&name)), &side)
                }
                None => {
                    eprint!("{side}");
                    Ok(())
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(Exit::Input as u8),
            };
        }
    };
    let result = run(&cli).and_then(|o| emit(&cli, &o).map(|()| o.exit));
    match result {
        Ok(exit) => ExitCode::from(exit as u8),
        Err(e) => {
            eprintln!("opkernel: {e}");
            ExitCode::from(e.exit() as u8)
        }
    }
}
