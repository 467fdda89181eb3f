//! Sweep engine, table formats and plotting for `xxz-core`, plus the
//! `xxz` command-line front end.
//!
//! A sweep evaluates the requested measures on every node of a one- or
//! two-axis grid over `(J, Jz, B, T)` and collects the results in a
//! [`SweepTable`]. Tables are written as CSV or JSON with every number in
//! 17 significant digits, so files parse back bit-exactly, and can be
//! rendered as standalone SVG heatmaps or line plots.

pub mod cli;
mod error;
pub mod format;
pub mod svg;
pub mod sweep;

pub use error::ToolError;
pub use sweep::{evaluate_table_point, run_sweep, AxisSpec, OutputFormat, SweepSpec, SweepTable};
