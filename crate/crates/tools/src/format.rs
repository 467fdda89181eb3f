//! CSV and JSON encodings of [`SweepTable`].
//!
//! Numbers are written with 17 significant digits, which round-trips every
//! finite `f64` exactly. Both formats keep the column order of the table.

use std::collections::BTreeSet;
use std::fs;
use std::io::Write;
use std::path::Path;

use serde_json::Value;
use xxz_core::model::Param;

use crate::sweep::SweepTable;
use crate::ToolError;

pub fn format_value(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn to_csv(table: &SweepTable) -> String {
    let mut out = table.columns.join(",");
    out.push('\n');
    for row in &table.rows {
        let cells: Vec<String> = row.iter().map(|&x| format_value(x)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn to_json(table: &SweepTable) -> String {
    let mut out = String::from("{\"columns\":[");
    let names: Vec<String> = table
        .columns
        .iter()
        .map(|c| Value::String(c.clone()).to_string())
        .collect();
    out.push_str(&names.join(","));
    out.push_str("],\"rows\":[");
    let rows: Vec<String> = table
        .rows
        .iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(|&x| format_value(x)).collect();
            format!("[{}]", cells.join(","))
        })
        .collect();
    out.push_str(&rows.join(","));
    out.push_str("]}\n");
    out
}

fn parse_err(what: impl Into<String>) -> ToolError {
    ToolError::Parse(what.into())
}

/// Rebuilds the grid shape from the leading parameter-name columns, taking
/// the number of distinct values in each as that axis's length.
fn infer_shape(columns: &[String], rows: &[Vec<f64>]) -> Result<Vec<usize>, ToolError> {
    let axes = columns
        .iter()
        .take_while(|c| c.parse::<Param>().is_ok())
        .count();
    if axes == 0 {
        return Err(parse_err("table has no leading parameter columns"));
    }
    let shape: Vec<usize> = (0..axes)
        .map(|k| {
            rows.iter()
                .map(|r| r[k].to_bits())
                .collect::<BTreeSet<_>>()
                .len()
        })
        .collect();
    if shape.iter().product::<usize>() != rows.len() {
        return Err(parse_err(format!(
            "{} rows do not form a grid over {axes} axes",
            rows.len()
        )));
    }
    Ok(shape)
}

fn check_width(columns: &[String], rows: &[Vec<f64>]) -> Result<(), ToolError> {
    match rows.iter().position(|r| r.len() != columns.len()) {
        Some(i) => Err(parse_err(format!(
            "row {} has {} cells, header has {}",
            i + 1,
            rows[i].len(),
            columns.len()
        ))),
        None => Ok(()),
    }
}

pub fn parse_csv(text: &str) -> Result<SweepTable, ToolError> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| parse_err("empty CSV"))?;
    let columns: Vec<String> = header.split(',').map(str::to_owned).collect();
    let rows = lines
        .enumerate()
        .map(|(i, line)| {
            line.split(',')
                .map(|cell| {
                    cell.parse::<f64>()
                        .map_err(|_| parse_err(format!("line {}: bad number '{cell}'", i + 2)))
                })
                .collect::<Result<Vec<f64>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    check_width(&columns, &rows)?;
    let shape = infer_shape(&columns, &rows)?;
    Ok(SweepTable {
        columns,
        rows,
        shape,
    })
}

pub fn parse_json(text: &str) -> Result<SweepTable, ToolError> {
    let doc: Value = serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
    let columns = doc["columns"]
        .as_array()
        .ok_or_else(|| parse_err("missing \"columns\" array"))?
        .iter()
        .map(|c| {
            c.as_str()
                .map(str::to_owned)
                .ok_or_else(|| parse_err("non-string column name"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let rows = doc["rows"]
        .as_array()
        .ok_or_else(|| parse_err("missing \"rows\" array"))?
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| parse_err("row is not an array"))?
                .iter()
                .map(|x| x.as_f64().ok_or_else(|| parse_err("non-numeric cell")))
                .collect::<Result<Vec<f64>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    check_width(&columns, &rows)?;
    let shape = infer_shape(&columns, &rows)?;
    Ok(SweepTable {
        columns,
        rows,
        shape,
    })
}

pub fn write_text(path: &Path, text: &str) -> Result<(), ToolError> {
    let io = |source| ToolError::Io {
        path: path.to_owned(),
        source,
    };
    let mut f = fs::File::create(path).map_err(io)?;
    f.write_all(text.as_bytes()).map_err(io)?;
    f.flush().map_err(io)
}

pub fn write_csv(path: &Path, table: &SweepTable) -> Result<(), ToolError> {
    write_text(path, &to_csv(table))
}

pub fn write_json(path: &Path, table: &SweepTable) -> Result<(), ToolError> {
    write_text(path, &to_json(table))
}

pub fn read_table(path: &Path) -> Result<SweepTable, ToolError> {
    let text = fs::read_to_string(path).map_err(|source| ToolError::Io {
        path: path.to_owned(),
        source,
    })?;
    match path.extension().and_then(|e| e.to_str()) {
        Some("json") => parse_json(&text),
        _ => parse_csv(&text),
    }
}
