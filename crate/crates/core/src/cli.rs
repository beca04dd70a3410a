// SPDX-License-Identifier: Apache-2.0

//! `dqs` command-line front end.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 invalid arguments, 3 eigenvalue
//! not in the spectrum.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::analysis::{default_j_max, minimize_expected, CurveOptions, ModelKind, ProbabilityCurve};
use crate::damped::{DampingConfig, RecurrenceAngle};
use crate::error::Error;
use crate::instance::SearchInstance;
use crate::report::{self, Provenance};
use crate::spectrum::{build_diagonal, oracle_mask, spectrum, IsingChain};

pub const EXIT_IO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NOT_EIGENVALUE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "dqs", version, about = "Grover, damped quantum and classical search on Ising chains")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigenvalues and degeneracies of an open Ising chain
    Spectrum(SpectrumArgs),
    /// Success-probability curves, one CSV per model
    Curve(SearchArgs),
    /// Expected-iterations curves and their minima
    Expected(SearchArgs),
    /// Regenerate the table and figure datasets
    #[command(subcommand)]
    Report(ReportCommand),
}

#[derive(Debug, Subcommand)]
pub enum ReportCommand {
    /// Minimum expected iterations for every eigenvalue of the 8- and 12-spin chains
    Tables(ReportArgs),
    /// Plot-ready probability and expected-iteration curves
    Figures(ReportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    Grover,
    Damped,
    ClassicalReplace,
    ClassicalNoreplace,
    ClassicalFullyDamped,
}

impl From<Model> for ModelKind {
    fn from(m: Model) -> Self {
        match m {
            Model::Grover => ModelKind::Grover,
            Model::Damped => ModelKind::Damped,
            Model::ClassicalReplace => ModelKind::ClassicalReplace,
            Model::ClassicalNoreplace => ModelKind::ClassicalNoreplace,
            Model::ClassicalFullyDamped => ModelKind::ClassicalFullyDamped,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AngleArg {
    Doubled,
    Amplitude,
}

impl From<AngleArg> for RecurrenceAngle {
    fn from(a: AngleArg) -> Self {
        match a {
            AngleArg::Doubled => RecurrenceAngle::Doubled,
            AngleArg::Amplitude => RecurrenceAngle::Amplitude,
        }
    }
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[arg(long)]
    pub spins: u32,
    #[arg(long, default_value_t = 1.0)]
    pub epsilon: f64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output file; stdout when absent
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub spins: u32,
    /// Eigenvalue in units of epsilon
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: i64,
    #[arg(long, default_value_t = 1.0)]
    pub epsilon: f64,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "damped")]
    pub model: Vec<Model>,
    /// Iterations to evaluate; defaults to max(1000, ceil(50 sqrt(N/M)))
    #[arg(long)]
    pub max_j: Option<usize>,
    /// Fixed damping for the damped model instead of critical damping
    #[arg(long)]
    pub cos_phi: Option<f64>,
    #[arg(long, value_enum, default_value_t = AngleArg::Doubled)]
    pub recurrence_angle: AngleArg,
    /// `expected` only: json prints summaries, csv prints the E(j) curves
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Output directory; stdout when absent
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[arg(long, default_value = "report")]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value_t = AngleArg::Doubled)]
    pub recurrence_angle: AngleArg,
}

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotEigenvalue { .. } => EXIT_NOT_EIGENVALUE,
            Error::Size { .. } | Error::InvalidArgument(_) | Error::Domain { .. } => EXIT_USAGE,
            _ => EXIT_IO,
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError { code: EXIT_IO, message: e.to_string() }
    }
}

type CliResult = std::result::Result<(), CliError>;

pub fn main() -> ! {
    let cli = Cli::try_parse().unwrap_or_else(|e| e.exit());
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => std::process::exit(0),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {}", e.message);
            std::process::exit(e.code)
        }
    }
}

pub fn run<W: Write>(cli: Cli, out: &mut W) -> CliResult {
    match cli.command {
        Command::Spectrum(args) => cmd_spectrum(&args, out),
        Command::Curve(args) => cmd_curve(&args, out),
        Command::Expected(args) => cmd_expected(&args, out),
        Command::Report(ReportCommand::Tables(args)) => cmd_report_tables(&args, out),
        Command::Report(ReportCommand::Figures(args)) => cmd_report_figures(&args, out),
    }
}

fn chain(spins: u32, epsilon: f64) -> Result<IsingChain, Error> {
    IsingChain::new(spins)?.with_epsilon(epsilon)
}

fn write_file(path: &Path, contents: &str) -> CliResult {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)?;
    }
    fs::write(path, contents)?;
    Ok(())
}

pub fn cmd_spectrum<W: Write>(args: &SpectrumArgs, out: &mut W) -> CliResult {
    let chain = chain(args.spins, args.epsilon)?;
    let spec = spectrum(&build_diagonal(&chain));
    let text = match args.format {
        Format::Csv => report::spectrum_csv(&spec),
        Format::Json => report::spectrum_json(&spec),
    };
    match &args.out {
        Some(path) => write_file(path, &text),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

struct Prepared {
    chain: IsingChain,
    instance: SearchInstance,
    options: CurveOptions,
    j_max: usize,
}

fn prepare(args: &SearchArgs) -> Result<Prepared, Error> {
    let chain = chain(args.spins, args.epsilon)?;
    let mask = oracle_mask(&build_diagonal(&chain), args.lambda)?;
    let instance = SearchInstance::new(chain.dimension() as u64, mask.len() as u64)?;
    let damping = match args.cos_phi {
        Some(c) => DampingConfig::explicit(c)?,
        None => DampingConfig::Critical,
    };
    let j_max = args.max_j.unwrap_or_else(|| default_j_max(&instance));
    if j_max == 0 {
        return Err(Error::InvalidArgument("--max-j must be at least 1".into()));
    }
    Ok(Prepared {
        chain,
        instance,
        options: CurveOptions { damping, angle: args.recurrence_angle.into() },
        j_max,
    })
}

fn models(args: &SearchArgs) -> Vec<ModelKind> {
    let mut kinds: Vec<ModelKind> = args.model.iter().map(|&m| m.into()).collect();
    kinds.dedup();
    kinds
}

pub fn cmd_curve<W: Write>(args: &SearchArgs, out: &mut W) -> CliResult {
    let prep = prepare(args)?;
    for (i, kind) in models(args).into_iter().enumerate() {
        let curve = ProbabilityCurve::generate(&prep.instance, kind, &prep.options, prep.j_max)?;
        let prov = Provenance::new(&prep.chain, args.lambda, &curve);
        let csv = report::curve_csv(&curve);
        match &args.out {
            Some(dir) => {
                let stem = prov.file_stem("curve_");
                write_file(&dir.join(format!("{stem}.csv")), &csv)?;
                write_file(&dir.join(format!("{stem}.meta.json")), &report::to_json_string(&prov))?;
            }
            None => {
                if i > 0 {
                    out.write_all(b"\n")?;
                }
                out.write_all(prov.comment_lines().as_bytes())?;
                out.write_all(csv.as_bytes())?;
            }
        }
    }
    Ok(())
}

pub fn cmd_expected<W: Write>(args: &SearchArgs, out: &mut W) -> CliResult {
    let prep = prepare(args)?;
    let mut summaries = Vec::new();
    for (i, kind) in models(args).into_iter().enumerate() {
        let curve = ProbabilityCurve::generate(&prep.instance, kind, &prep.options, prep.j_max)?;
        let result = minimize_expected(&curve)?;
        let prov = Provenance::new(&prep.chain, args.lambda, &curve);
        let csv = report::expected_csv(&curve, &result);
        let summary = report::summary_value(&prov, &result);
        match &args.out {
            Some(dir) => {
                let stem = prov.file_stem("expected_");
                write_file(&dir.join(format!("{stem}.csv")), &csv)?;
                write_file(&dir.join(format!("{stem}.json")), &report::to_json_string(&summary))?;
            }
            None if args.format == Format::Csv => {
                if i > 0 {
                    out.write_all(b"\n")?;
                }
                out.write_all(prov.comment_lines().as_bytes())?;
                out.write_all(csv.as_bytes())?;
            }
            None => summaries.push(summary),
        }
    }
    if !summaries.is_empty() {
        out.write_all(report::to_json_string(&summaries).as_bytes())?;
    }
    Ok(())
}

pub fn cmd_report_tables<W: Write>(args: &ReportArgs, out: &mut W) -> CliResult {
    let tables = report::tables_report(args.recurrence_angle.into())?;
    write_file(&args.out.join("tables.json"), &report::to_json_string(&tables.document))?;
    write_file(&args.out.join("tables.txt"), &tables.text)?;
    out.write_all(tables.text.as_bytes())?;
    Ok(())
}

pub fn cmd_report_figures<W: Write>(args: &ReportArgs, out: &mut W) -> CliResult {
    let files = report::figures_report(args.recurrence_angle.into())?;
    for f in &files {
        write_file(&args.out.join(&f.name), &f.contents)?;
        writeln!(out, "{}", args.out.join(&f.name).display())?;
    }
    Ok(())
}
