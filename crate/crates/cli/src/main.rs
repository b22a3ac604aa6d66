use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use plab::search::{emit_found, search, Target};
use plab::suite::derive;
use plab::{emit_workspace, parse_workspace, run_preset, Format, Preset, Report, Step};
use plab_core::algebra::SearchLimits;
use plab_core::{Rational, Scalar};

#[derive(Parser)]
#[command(
    name = "plab",
    version,
    about = "Exact checks for averaging pre-Lie structures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Json,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Self {
        match f {
            OutFormat::Text => Format::Text,
            OutFormat::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SearchTarget {
    Averaging,
    Rb,
    RelativeRb,
}

#[derive(Subcommand)]
enum Command {
    /// Run a suite preset over the workspace's `run` steps.
    Check {
        file: PathBuf,
        #[arg(long, default_value = "all", value_parser = clap::builder::PossibleValuesParser::new(Preset::NAMES))]
        suite: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply one construction and write the extended workspace.
    Derive {
        file: PathBuf,
        /// e.g. "induced_leibniz UT2 R as L"
        #[arg(long)]
        op: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Enumerate operators with entries from a finite set.
    Search {
        file: PathBuf,
        #[arg(long, value_enum)]
        target: SearchTarget,
        /// Algebra to search on.
        #[arg(long)]
        on: String,
        /// Rota-Baxter weight.
        #[arg(long, default_value = "0")]
        weight: String,
        /// Averaging operator on the algebra (relative-rb).
        #[arg(long)]
        op: Option<String>,
        /// Representation (relative-rb).
        #[arg(long)]
        rep: Option<String>,
        /// Companion map of the representation (relative-rb).
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long, default_value = "-1,0,1", allow_hyphen_values = true)]
        entries: String,
        /// Largest number of candidates to enumerate.
        #[arg(long, env = "PLAB_BUDGET")]
        budget: Option<u128>,
        #[arg(long, default_value_t = 4)]
        max_dim: usize,
        /// Name prefix for the printed maps.
        #[arg(long, default_value = "found")]
        prefix: String,
    },
    /// Re-emit a JSON report (from a file or stdin).
    Report {
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load(path: &Path) -> Result<plab::Workspace> {
    parse_workspace(&read(path)?).with_context(|| format!("in {}", path.display()))
}

fn parse_entries(text: &str) -> Result<Vec<Rational>> {
    text.split(',')
        .map(|t| {
            Rational::parse_literal(t).with_context(|| format!("`{t}` is not a rational literal"))
        })
        .collect()
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Check {
            file,
            suite,
            format,
            out,
        } => {
            let mut ws = load(&file)?;
            let preset: Preset = suite.parse()?;
            let report = run_preset(&mut ws, preset)?;
            let text = report.emit(format.into());
            match out {
                Some(p) => {
                    fs::write(&p, text).with_context(|| format!("writing {}", p.display()))?
                }
                None => print!("{text}"),
            }
            Ok(report.all_passed())
        }
        Command::Derive { file, op, out } => {
            let mut ws = load(&file)?;
            let step = Step::parse(&op)?;
            let names = derive(&mut ws, &step)?;
            fs::write(&out, emit_workspace(&ws))
                .with_context(|| format!("writing {}", out.display()))?;
            eprintln!("added {}", names.join(", "));
            Ok(true)
        }
        Command::Search {
            file,
            target,
            on,
            weight,
            op,
            rep,
            alpha,
            entries,
            budget,
            max_dim,
            prefix,
        } => {
            let ws = load(&file)?;
            let target = match target {
                SearchTarget::Averaging => Target::Averaging,
                SearchTarget::Rb => Target::RotaBaxter {
                    weight: Rational::parse_literal(&weight)
                        .with_context(|| format!("`{weight}` is not a rational literal"))?,
                },
                SearchTarget::RelativeRb => match (op, rep, alpha) {
                    (Some(op), Some(rep), Some(alpha)) => {
                        Target::RelativeRotaBaxter { op, rep, alpha }
                    }
                    _ => bail!("relative-rb needs --op, --rep and --alpha"),
                },
            };
            let mut limits = SearchLimits {
                max_dim,
                ..SearchLimits::default()
            };
            if let Some(b) = budget {
                limits.budget = b;
            }
            let found = search(&ws, &on, &target, &parse_entries(&entries)?, &limits)?;
            print!("{}", emit_found(&ws, &on, &prefix, &found)?);
            eprintln!("{} found", found.len());
            Ok(true)
        }
        Command::Report { file, format } => {
            let text = match file {
                Some(p) => read(&p)?,
                None => {
                    let mut s = String::new();
                    std::io::stdin().read_to_string(&mut s)?;
                    s
                }
            };
            let report = Report::from_json(&text).context("not a machine report")?;
            print!("{}", report.emit(format.into()));
            Ok(report.all_passed())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
