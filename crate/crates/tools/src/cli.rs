//! The `xxz` command line.

use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use xxz_core::model::Param;
use xxz_core::{Engine, Measure, SpinParams};

use crate::format::{to_csv, to_json, write_text};
use crate::svg::{render, PlotMode};
use crate::sweep::{
    evaluate_table_point, run_sweep, AxisSpec, OutputFormat, SweepSpec, SweepTable,
};
use crate::ToolError;

#[derive(Debug, Parser)]
#[command(
    name = "xxz",
    version,
    about = "Steered coherence and quantum Fisher information of the two-qubit XXZ Gibbs state"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate measures at one parameter point.
    Point(PointArgs),
    /// Evaluate measures on a one- or two-axis grid.
    Sweep(SweepArgs),
    /// Run a sweep and render it as SVG: lines for one axis, a heatmap of
    /// the first measure for two.
    Plot(PlotArgs),
}

#[derive(Debug, Args)]
pub struct MeasureArgs {
    /// Measure to evaluate; repeat for several. Default: all.
    #[arg(long = "measure", value_name = "NAME", value_parser = parse_measure)]
    pub measures: Vec<Measure>,

    /// oracle, closed or both.
    #[arg(long, value_name = "ENGINE", value_parser = parse_engine, default_value = "closed")]
    pub engine: Engine,

    /// Fixed parameter value; repeat for several.
    #[arg(long = "fix", value_name = "NAME=VALUE", value_parser = parse_fix)]
    pub fixed: Vec<(Param, f64)>,
}

#[derive(Debug, Args)]
pub struct PointArgs {
    #[command(flatten)]
    pub common: MeasureArgs,

    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,

    #[arg(long, value_name = "FORMAT", value_parser = parse_format, default_value = "csv")]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    #[command(flatten)]
    pub common: MeasureArgs,

    /// Swept parameter; give one or two, outer axis first.
    #[arg(long = "axis", value_name = "NAME=START:STOP:STEP", value_parser = parse_axis)]
    pub axes: Vec<AxisSpec>,

    /// Worker threads. Output does not depend on this.
    #[arg(long, value_name = "N", default_value_t = default_jobs())]
    pub jobs: usize,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub grid: GridArgs,

    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,

    #[arg(long, value_name = "FORMAT", value_parser = parse_format, default_value = "csv")]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    #[command(flatten)]
    pub grid: GridArgs,

    #[arg(long, value_name = "PATH", required = true)]
    pub out: PathBuf,
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn parse_measure(s: &str) -> Result<Measure, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_engine(s: &str) -> Result<Engine, String> {
    [Engine::Oracle, Engine::Closed, Engine::Both]
        .into_iter()
        .find(|e| e.name() == s)
        .ok_or_else(|| "expected one of oracle, closed, both".into())
}

fn parse_format(s: &str) -> Result<OutputFormat, String> {
    match s {
        "csv" => Ok(OutputFormat::Csv),
        "json" => Ok(OutputFormat::Json),
        _ => Err("expected csv or json".into()),
    }
}

fn parse_fix(s: &str) -> Result<(Param, f64), String> {
    let (name, value) = s.split_once('=').ok_or("expected NAME=VALUE")?;
    let param = name.parse::<Param>().map_err(|e| format!("{e}"))?;
    let value = value
        .trim()
        .parse::<f64>()
        .map_err(|_| format!("'{value}' is not a number"))?;
    Ok((param, value))
}

fn parse_axis(s: &str) -> Result<AxisSpec, String> {
    s.parse().map_err(|e: ToolError| e.to_string())
}

impl MeasureArgs {
    fn measures(&self) -> Vec<Measure> {
        if self.measures.is_empty() {
            Measure::ALL.to_vec()
        } else {
            self.measures.clone()
        }
    }
}

impl GridArgs {
    fn spec(&self, out: Option<PathBuf>, format: OutputFormat) -> SweepSpec {
        SweepSpec {
            measures: self.common.measures(),
            engine: self.common.engine,
            fixed: self.common.fixed.clone(),
            axes: self.axes.clone(),
            out,
            format,
            jobs: self.jobs,
        }
    }
}

fn point_params(fixed: &[(Param, f64)]) -> Result<SpinParams, ToolError> {
    let mut v = [None; 4];
    for &(p, x) in fixed {
        if v[p as usize].replace(x).is_some() {
            return Err(ToolError::usage(format!(
                "parameter {p} given more than once"
            )));
        }
    }
    let mut get = |p: Param| {
        v[p as usize]
            .take()
            .ok_or_else(|| ToolError::usage(format!("missing --fix {p}=VALUE")))
    };
    let (j, jz, b, t) = (
        get(Param::J)?,
        get(Param::Jz)?,
        get(Param::B)?,
        get(Param::T)?,
    );
    SpinParams::new(j, jz, b, t).map_err(|e| ToolError::usage(e.to_string()))
}

fn encode(table: &SweepTable, format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => to_csv(table),
        OutputFormat::Json => to_json(table),
    }
}

fn emit(text: &str, out: Option<&PathBuf>, stdout: &mut dyn Write) -> Result<(), ToolError> {
    match out {
        Some(path) => write_text(path, text),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|source| ToolError::Io {
                path: PathBuf::from("<stdout>"),
                source,
            }),
    }
}

/// Executes a parsed command.
pub fn execute(cli: &Cli, stdout: &mut dyn Write) -> Result<(), ToolError> {
    match &cli.command {
        Command::Point(a) => {
            let p = point_params(&a.common.fixed)?;
            let table = evaluate_table_point(&p, &a.common.measures(), a.common.engine)?;
            emit(&encode(&table, a.format), a.out.as_ref(), stdout)
        }
        Command::Sweep(a) => {
            let spec = a.grid.spec(a.out.clone(), a.format);
            let table = run_sweep(&spec)?;
            emit(&encode(&table, spec.format), spec.out.as_ref(), stdout)
        }
        Command::Plot(a) => {
            let spec = a.grid.spec(Some(a.out.clone()), OutputFormat::Csv);
            spec.validate()?;
            let mode = if spec.axes.len() == 2 {
                PlotMode::Heatmap
            } else {
                PlotMode::Lines
            };
            let table = run_sweep(&spec)?;
            write_text(&a.out, &render(&table, mode)?)
        }
    }
}

/// Runs the tool on `args` (including the program name) and returns the
/// process exit code: 0 on success, 1 on runtime failure, 2 on usage
/// errors. Diagnostics are single lines on `stderr`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{}", e.render());
                    0
                }
                ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = write!(stderr, "{}", e.render());
                    2
                }
                _ => {
                    let text = e.to_string();
                    let line = text.lines().next().unwrap_or("usage error");
                    let _ = writeln!(stderr, "{line}");
                    2
                }
            };
        }
    };
    match execute(&cli, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
