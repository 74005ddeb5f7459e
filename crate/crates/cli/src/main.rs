//! `homcob`: homology-cobordism invariants from the command line.
//!
//! Inputs are written as on the command line or one per line in a batch file:
//!
//! ```text
//! seifert 2 3 7
//! ranks 1 0 1 0 1 0 1 0
//! graph path/to/plumbing.txt
//! splice path/to/splice.txt
//! ```
//!
//! With `--format json` a single JSON document goes to standard output.
//! Human-readable text always goes to standard error.

mod commands;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use homcob::report::Options;

use crate::commands::{Family, Measure};

#[derive(Debug, Parser)]
#[command(name = "homcob", version, about = "Homology-cobordism invariants of plumbed and Seifert fibered homology spheres")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    /// Bound on the rounding residual of the R-invariant.
    #[arg(long, global = true, default_value_t = homcob::gauge::R_TOLERANCE)]
    tolerance: f64,

    /// File with one input per line; `#` starts a comment.
    #[arg(long, global = true)]
    batch: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// All invariants, verdicts and diagnostics.
    Invariants(InputArgs),
    /// The mubar invariant with its signature and w.w terms.
    Mubar(InputArgs),
    /// The Rochlin invariant, mubar mod 2.
    Rochlin(InputArgs),
    /// The Fintushel-Stern R-invariant of a Seifert sphere.
    R(InputArgs),
    /// The Casson invariant (Brieskorn spheres or rank vectors).
    Casson(InputArgs),
    /// The nu-invariant of a rank vector.
    Nu(InputArgs),
    /// Order-obstruction verdicts.
    Report(InputArgs),
    /// Run a property suite (`all` runs every suite).
    Check { suite: String },
    /// Generate members of a Seifert family.
    #[command(subcommand)]
    Family(Family),
}

#[derive(Debug, clap::Args)]
struct InputArgs {
    /// `seifert a1 .. an`, `ranks r0 .. r7`, `graph <file>` or `splice <file>`.
    #[arg(trailing_var_arg = true, allow_hyphen_values = true)]
    input: Vec<String>,
}

#[derive(Debug, Serialize)]
struct Document<T: Serialize> {
    command: &'static str,
    results: Vec<T>,
}

#[derive(Debug, Serialize)]
struct LineResult {
    input: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    line: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Returns whether everything succeeded.
fn run(cli: Cli) -> Result<bool> {
    if !(cli.tolerance.is_finite() && cli.tolerance > 0.0) {
        bail!("--tolerance must be a positive number, got {}", cli.tolerance);
    }
    let opts = Options { tolerance: cli.tolerance };
    let (name, measure, args) = match cli.command {
        Command::Invariants(a) => ("invariants", Measure::Invariants, a),
        Command::Mubar(a) => ("mubar", Measure::Mubar, a),
        Command::Rochlin(a) => ("rochlin", Measure::Rochlin, a),
        Command::R(a) => ("r", Measure::R, a),
        Command::Casson(a) => ("casson", Measure::Casson, a),
        Command::Nu(a) => ("nu", Measure::Nu, a),
        Command::Report(a) => ("report", Measure::Report, a),
        Command::Check { suite } => {
            if cli.batch.is_some() {
                bail!("--batch does not apply to `check`");
            }
            return check(&suite, cli.format);
        }
        Command::Family(f) => {
            if cli.batch.is_some() {
                bail!("--batch does not apply to `family`");
            }
            let members = commands::family(&f).map_err(anyhow::Error::msg)?;
            render::family(&members);
            if cli.format == Format::Json {
                emit(&Document { command: "family", results: members })?;
            }
            return Ok(true);
        }
    };

    let lines: Vec<(Option<usize>, String)> = match (&cli.batch, args.input.is_empty()) {
        (Some(path), true) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            text.lines()
                .enumerate()
                .filter_map(|(i, l)| {
                    let l = l.split('#').next().unwrap_or("").trim();
                    (!l.is_empty()).then(|| (Some(i + 1), l.to_string()))
                })
                .collect()
        }
        (Some(_), false) => bail!("give either --batch or an inline input, not both"),
        (None, true) => bail!("missing input: expected `seifert ...`, `ranks ...`, `graph <file>` or `splice <file>`"),
        (None, false) => vec![(None, args.input.join(" "))],
    };

    let results: Vec<LineResult> = lines
        .par_iter()
        .map(|(line, text)| {
            let outcome = commands::evaluate(text, measure, &opts);
            let (value, error) = match outcome {
                Ok(v) => (Some(v), None),
                Err(e) => (None, Some(format!("{e:#}"))),
            };
            LineResult { input: text.clone(), line: *line, value, error }
        })
        .collect();

    let ok = results.iter().all(|r| r.error.is_none());
    for r in &results {
        render::line(measure, &r.input, r.line, r.value.as_ref(), r.error.as_deref());
    }
    if cli.format == Format::Json {
        emit(&Document { command: name, results })?;
    }
    Ok(ok)
}

fn check(suite: &str, format: Format) -> Result<bool> {
    let names: Vec<&str> = if suite == "all" { homcob::checks::SUITES.to_vec() } else { vec![suite] };
    let mut summaries = Vec::new();
    for name in names {
        let s = homcob::checks::run_suite(name).map_err(|e| {
            anyhow::anyhow!("{e}; available suites: all, {}", homcob::checks::SUITES.join(", "))
        })?;
        render::check(&s);
        summaries.push(s);
    }
    let ok = summaries.iter().all(|s| s.ok());
    if format == Format::Json {
        emit(&Document { command: "check", results: summaries })?;
    }
    Ok(ok)
}

fn emit<T: Serialize>(doc: &T) -> Result<()> {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, doc)?;
    writeln!(out)?;
    Ok(())
}
