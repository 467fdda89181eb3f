use std::collections::BTreeSet;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use rayon::prelude::*;
use xxz_core::model::{Param, T_MIN};
use xxz_core::{evaluate_point, Engine, Measure, SpinParams};

use crate::ToolError;

/// Upper bound on points along one axis.
pub const MAX_AXIS_POINTS: usize = 1_000_000;

// Absorbs round-off in (stop - start) / step for steps like 0.01.
const COUNT_SLACK: f64 = 1e-9;

/// One swept parameter: `start, start + step, ..., <= stop`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AxisSpec {
    pub param: Param,
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl AxisSpec {
    pub fn new(param: Param, start: f64, stop: f64, step: f64) -> Result<Self, ToolError> {
        let bad = |why: &str| Err(ToolError::usage(format!("axis {param}: {why}")));
        if !(start.is_finite() && stop.is_finite() && step.is_finite()) {
            return bad("start, stop and step must be finite");
        }
        if step <= 0.0 {
            return bad("step must be positive");
        }
        if start > stop {
            return bad("start must not exceed stop");
        }
        if param == Param::T && start < T_MIN {
            return bad("temperature must be at least 0.001");
        }
        let axis = Self {
            param,
            start,
            stop,
            step,
        };
        if ((stop - start) / step).floor() >= MAX_AXIS_POINTS as f64 {
            return bad("more than 1000000 points");
        }
        Ok(axis)
    }

    pub fn len(&self) -> usize {
        ((self.stop - self.start) / self.step + COUNT_SLACK).floor() as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn value(&self, i: usize) -> f64 {
        self.start + i as f64 * self.step
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.len()).map(|i| self.value(i))
    }
}

impl FromStr for AxisSpec {
    type Err = ToolError;

    /// `NAME=START:STOP:STEP`.
    fn from_str(s: &str) -> Result<Self, ToolError> {
        let err = || ToolError::usage(format!("invalid axis '{s}', expected NAME=START:STOP:STEP"));
        let (name, range) = s.split_once('=').ok_or_else(err)?;
        let param: Param = name
            .parse()
            .map_err(|e| ToolError::usage(format!("invalid axis '{s}': {e}")))?;
        let parts: Vec<f64> = range
            .split(':')
            .map(|x| x.trim().parse::<f64>())
            .collect::<Result<_, _>>()
            .map_err(|_| err())?;
        match parts[..] {
            [start, stop, step] => AxisSpec::new(param, start, stop, step),
            _ => Err(err()),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        })
    }
}

/// Declarative description of a sweep.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepSpec {
    pub measures: Vec<Measure>,
    pub engine: Engine,
    pub fixed: Vec<(Param, f64)>,
    /// Outer axis first.
    pub axes: Vec<AxisSpec>,
    pub out: Option<PathBuf>,
    pub format: OutputFormat,
    pub jobs: usize,
}

impl SweepSpec {
    /// Checks that measures are given, that there are one or two distinct
    /// axes, and that axes and fixed values together name every parameter
    /// exactly once with in-range values.
    pub fn validate(&self) -> Result<(), ToolError> {
        if self.measures.is_empty() {
            return Err(ToolError::usage("at least one measure is required"));
        }
        if self.jobs == 0 {
            return Err(ToolError::usage("--jobs must be positive"));
        }
        if !(1..=2).contains(&self.axes.len()) {
            return Err(ToolError::usage("a sweep takes one or two --axis options"));
        }
        let mut seen = BTreeSet::new();
        let names = self
            .axes
            .iter()
            .map(|a| a.param)
            .chain(self.fixed.iter().map(|f| f.0));
        for p in names {
            if !seen.insert(p) {
                return Err(ToolError::usage(format!(
                    "parameter {p} given more than once"
                )));
            }
        }
        if let Some(missing) = Param::ALL.iter().find(|p| !seen.contains(p)) {
            return Err(ToolError::usage(format!(
                "parameter {missing} is neither fixed nor swept"
            )));
        }
        // every parameter value used by the grid lies in its extreme corners
        let invalid = |e: xxz_core::Error| ToolError::usage(e.to_string());
        let base = self.base_params()?;
        for axis in &self.axes {
            for x in [axis.start, axis.value(axis.len() - 1)] {
                base.with(axis.param, x).map_err(invalid)?;
            }
        }
        Ok(())
    }

    fn base_params(&self) -> Result<SpinParams, ToolError> {
        let mut v = [0.0, 0.0, 0.0, 1.0];
        for &(p, x) in &self.fixed {
            v[p as usize] = x;
        }
        for a in &self.axes {
            v[a.param as usize] = a.start;
        }
        SpinParams::new(v[0], v[1], v[2], v[3]).map_err(|e| ToolError::usage(e.to_string()))
    }

    pub fn shape(&self) -> Vec<usize> {
        self.axes.iter().map(AxisSpec::len).collect()
    }

    pub fn point_count(&self) -> usize {
        self.shape().iter().product()
    }

    /// Parameters of grid node `index` in axis-major order.
    pub fn node(&self, index: usize) -> Result<SpinParams, ToolError> {
        let mut p = self.base_params()?;
        let mut rest = index;
        let shape = self.shape();
        for (axis, &n) in self.axes.iter().zip(&shape).rev() {
            p = p.with(axis.param, axis.value(rest % n))?;
            rest /= n;
        }
        Ok(p)
    }

    pub fn columns(&self) -> Vec<String> {
        let mut cols: Vec<String> = self.axes.iter().map(|a| a.param.to_string()).collect();
        cols.extend(measure_columns(&self.measures, self.engine));
        cols
    }
}

/// Column names contributed by `measures` under `engine`.
pub fn measure_columns(measures: &[Measure], engine: Engine) -> Vec<String> {
    measures
        .iter()
        .flat_map(|m| match engine {
            Engine::Both => vec![
                format!("{m}_oracle"),
                format!("{m}_closed"),
                format!("{m}_absdiff"),
            ],
            _ => vec![m.to_string()],
        })
        .collect()
}

/// Tabulated sweep results. The leading `shape.len()` columns hold the
/// axis values; rows run in axis-major order with the outer axis slowest.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepTable {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
    pub shape: Vec<usize>,
}

impl SweepTable {
    pub fn axis_count(&self) -> usize {
        self.shape.len()
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let k = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[k]).collect())
    }
}

/// The row a sweep would produce for `p`, with all four parameters as
/// leading columns.
pub fn evaluate_table_point(
    p: &SpinParams,
    measures: &[Measure],
    engine: Engine,
) -> Result<SweepTable, ToolError> {
    let mut row: Vec<f64> = Param::ALL.iter().map(|&q| p.get(q)).collect();
    for v in evaluate_point(p, measures, engine)? {
        row.extend(v.columns());
    }
    let mut columns: Vec<String> = Param::ALL.iter().map(|p| p.to_string()).collect();
    columns.extend(measure_columns(measures, engine));
    Ok(SweepTable {
        columns,
        rows: vec![row],
        shape: vec![1; 4],
    })
}

/// Evaluates every grid node, in parallel over `spec.jobs` threads.
/// Rows are placed by node index, so the table does not depend on the
/// thread count.
pub fn run_sweep(spec: &SweepSpec) -> Result<SweepTable, ToolError> {
    spec.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.jobs)
        .build()
        .map_err(|e| ToolError::usage(format!("cannot start {} worker threads: {e}", spec.jobs)))?;

    let evaluate = |index: usize| -> Result<Vec<f64>, ToolError> {
        let p = spec.node(index)?;
        let mut row: Vec<f64> = spec.axes.iter().map(|a| p.get(a.param)).collect();
        for v in evaluate_point(&p, &spec.measures, spec.engine)? {
            row.extend(v.columns());
        }
        if let Some(bad) = row.iter().find(|x| !x.is_finite()) {
            return Err(ToolError::Render(format!(
                "non-finite value {bad} at {p:?}"
            )));
        }
        Ok(row)
    };
    let results: Vec<Result<Vec<f64>, ToolError>> = pool.install(|| {
        (0..spec.point_count())
            .into_par_iter()
            .map(evaluate)
            .collect()
    });
    let rows = results.into_iter().collect::<Result<Vec<_>, _>>()?;

    Ok(SweepTable {
        columns: spec.columns(),
        rows,
        shape: spec.shape(),
    })
}
