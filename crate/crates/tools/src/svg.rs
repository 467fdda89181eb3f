//! Standalone SVG rendering of sweep tables.
//!
//! Style is fixed by the constants below. Heatmap cells are `<rect
//! class="cell">` elements and line series are `<polyline class="series">`
//! elements, so the structure can be inspected without parsing geometry.

use std::fmt::Write as _;
use std::path::Path;

use crate::format::write_text;
use crate::sweep::SweepTable;
use crate::ToolError;

pub const WIDTH: f64 = 720.0;
pub const HEIGHT: f64 = 540.0;
pub const MARGIN_LEFT: f64 = 80.0;
pub const MARGIN_RIGHT: f64 = 150.0;
pub const MARGIN_TOP: f64 = 40.0;
pub const MARGIN_BOTTOM: f64 = 70.0;
pub const FONT: &str = "font-family=\"Helvetica, Arial, sans-serif\" font-size=\"13\"";
pub const BAR_WIDTH: f64 = 20.0;
pub const TICKS: usize = 5;

/// Heatmap palette stops, low to high.
pub const PALETTE: [[u8; 3]; 5] = [
    [68, 1, 84],
    [59, 82, 139],
    [33, 145, 140],
    [94, 201, 98],
    [253, 231, 37],
];

/// Line colours, cycled per series.
pub const SERIES_COLOURS: [&str; 5] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlotMode {
    Heatmap,
    Lines,
}

/// Palette colour at `t` in [0, 1].
pub fn colour(t: f64) -> String {
    let t = if t.is_finite() {
        t.clamp(0.0, 1.0)
    } else {
        0.0
    };
    let x = t * (PALETTE.len() - 1) as f64;
    let k = (x.floor() as usize).min(PALETTE.len() - 2);
    let f = x - k as f64;
    let (lo, hi) = (PALETTE[k], PALETTE[k + 1]);
    let mix = |i: usize| (lo[i] as f64 + f * (hi[i] as f64 - lo[i] as f64)).round() as u8;
    format!("#{:02x}{:02x}{:02x}", mix(0), mix(1), mix(2))
}

fn range(values: impl Iterator<Item = f64>) -> (f64, f64) {
    values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
        (lo.min(v), hi.max(v))
    })
}

fn label(x: f64) -> String {
    let s = format!("{x:.4}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

fn plot_box() -> (f64, f64, f64, f64) {
    (
        MARGIN_LEFT,
        MARGIN_TOP,
        WIDTH - MARGIN_LEFT - MARGIN_RIGHT,
        HEIGHT - MARGIN_TOP - MARGIN_BOTTOM,
    )
}

fn header(out: &mut String) {
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">"
    );
    let _ = writeln!(
        out,
        "<rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"#ffffff\"/>"
    );
}

/// Axis lines, ticks and names for the data range `[x0, x1] x [y0, y1]`.
fn axes(out: &mut String, x: (f64, f64), y: (f64, f64), xname: &str, yname: &str) {
    let (left, top, w, h) = plot_box();
    let bottom = top + h;
    let _ = writeln!(out, "<g class=\"axes\" stroke=\"#000000\" fill=\"none\">");
    let _ = writeln!(
        out,
        "<line x1=\"{left}\" y1=\"{bottom}\" x2=\"{}\" y2=\"{bottom}\"/>",
        left + w
    );
    let _ = writeln!(
        out,
        "<line x1=\"{left}\" y1=\"{top}\" x2=\"{left}\" y2=\"{bottom}\"/>"
    );
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, "<g class=\"ticks\" {FONT}>");
    for i in 0..TICKS {
        let f = i as f64 / (TICKS - 1) as f64;
        let px = left + f * w;
        let py = bottom - f * h;
        let _ = writeln!(
            out,
            "<text x=\"{px:.3}\" y=\"{:.3}\" text-anchor=\"middle\">{}</text>",
            bottom + 18.0,
            label(x.0 + f * (x.1 - x.0))
        );
        let _ = writeln!(
            out,
            "<text x=\"{:.3}\" y=\"{py:.3}\" text-anchor=\"end\" dominant-baseline=\"middle\">{}</text>",
            left - 6.0,
            label(y.0 + f * (y.1 - y.0))
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(
        out,
        "<text class=\"xlabel\" x=\"{:.3}\" y=\"{:.3}\" text-anchor=\"middle\" {FONT}>{xname}</text>",
        left + w / 2.0,
        HEIGHT - 20.0
    );
    let _ = writeln!(
        out,
        "<text class=\"ylabel\" x=\"20\" y=\"{:.3}\" text-anchor=\"middle\" transform=\"rotate(-90 20 {:.3})\" {FONT}>{yname}</text>",
        top + h / 2.0,
        top + h / 2.0
    );
}

/// Heatmap of the first measure column of a two-axis table. The outer
/// axis runs along x, the inner axis along y.
pub fn heatmap(table: &SweepTable) -> Result<String, ToolError> {
    if table.axis_count() != 2 {
        return Err(ToolError::Render(format!(
            "heatmap needs a 2-axis table, got {} axes",
            table.axis_count()
        )));
    }
    if table.columns.len() < 3 {
        return Err(ToolError::Render("table has no measure column".into()));
    }
    let (nx, ny) = (table.shape[0], table.shape[1]);
    let name = &table.columns[2];
    let (xr, yr) = (
        range(table.rows.iter().map(|r| r[0])),
        range(table.rows.iter().map(|r| r[1])),
    );
    let (lo, hi) = range(table.rows.iter().map(|r| r[2]));
    let span = hi - lo;
    let t = |v: f64| if span > 0.0 { (v - lo) / span } else { 0.0 };

    let (left, top, w, h) = plot_box();
    let (cw, ch) = (w / nx as f64, h / ny as f64);
    let mut out = String::new();
    header(&mut out);
    let _ = writeln!(out, "<g class=\"cells\" shape-rendering=\"crispEdges\">");
    for (k, row) in table.rows.iter().enumerate() {
        let (i, j) = (k / ny, k % ny);
        let _ = writeln!(
            out,
            "<rect class=\"cell\" x=\"{:.3}\" y=\"{:.3}\" width=\"{cw:.3}\" height=\"{ch:.3}\" fill=\"{}\"/>",
            left + i as f64 * cw,
            top + h - (j + 1) as f64 * ch,
            colour(t(row[2]))
        );
    }
    let _ = writeln!(out, "</g>");
    axes(&mut out, xr, yr, &table.columns[0], &table.columns[1]);

    // colour bar
    let bx = left + w + 30.0;
    let _ = writeln!(
        out,
        "<defs><linearGradient id=\"bar\" x1=\"0\" y1=\"1\" x2=\"0\" y2=\"0\">"
    );
    for (i, _) in PALETTE.iter().enumerate() {
        let f = i as f64 / (PALETTE.len() - 1) as f64;
        let _ = writeln!(
            out,
            "<stop offset=\"{f:.3}\" stop-color=\"{}\"/>",
            colour(f)
        );
    }
    let _ = writeln!(out, "</linearGradient></defs>");
    let _ = writeln!(
        out,
        "<rect class=\"colourbar\" x=\"{bx:.3}\" y=\"{top:.3}\" width=\"{BAR_WIDTH}\" height=\"{h:.3}\" fill=\"url(#bar)\" stroke=\"#000000\"/>"
    );
    let _ = writeln!(out, "<g class=\"colourbar-labels\" {FONT}>");
    for i in 0..TICKS {
        let f = i as f64 / (TICKS - 1) as f64;
        let _ = writeln!(
            out,
            "<text x=\"{:.3}\" y=\"{:.3}\" dominant-baseline=\"middle\">{}</text>",
            bx + BAR_WIDTH + 6.0,
            top + h - f * h,
            label(lo + f * span)
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(
        out,
        "<text class=\"title\" x=\"{:.3}\" y=\"24\" text-anchor=\"middle\" {FONT}>{name}</text>",
        left + w / 2.0
    );
    out.push_str("</svg>\n");
    Ok(out)
}

/// One polyline per measure column of a one-axis table.
pub fn lines(table: &SweepTable) -> Result<String, ToolError> {
    if table.axis_count() != 1 {
        return Err(ToolError::Render(format!(
            "line plot needs a 1-axis table, got {} axes",
            table.axis_count()
        )));
    }
    if table.columns.len() < 2 {
        return Err(ToolError::Render("table has no measure column".into()));
    }
    let xr = range(table.rows.iter().map(|r| r[0]));
    let mut yr = range(table.rows.iter().flat_map(|r| r[1..].iter().copied()));
    if yr.1 <= yr.0 {
        yr = (yr.0 - 0.5, yr.1 + 0.5);
    }
    let (left, top, w, h) = plot_box();
    let px = |x: f64| {
        if xr.1 > xr.0 {
            left + (x - xr.0) / (xr.1 - xr.0) * w
        } else {
            left + w / 2.0
        }
    };
    let py = |y: f64| top + h - (y - yr.0) / (yr.1 - yr.0) * h;

    let mut out = String::new();
    header(&mut out);
    axes(&mut out, xr, yr, &table.columns[0], "");
    for (s, name) in table.columns[1..].iter().enumerate() {
        let c = SERIES_COLOURS[s % SERIES_COLOURS.len()];
        let points: Vec<String> = table
            .rows
            .iter()
            .map(|r| format!("{:.3},{:.3}", px(r[0]), py(r[s + 1])))
            .collect();
        let _ = writeln!(
            out,
            "<polyline class=\"series\" data-name=\"{name}\" fill=\"none\" stroke=\"{c}\" stroke-width=\"1.5\" points=\"{}\"/>",
            points.join(" ")
        );
    }
    let _ = writeln!(out, "<g class=\"legend\" {FONT}>");
    for (s, name) in table.columns[1..].iter().enumerate() {
        let c = SERIES_COLOURS[s % SERIES_COLOURS.len()];
        let y = top + 10.0 + 20.0 * s as f64;
        let x = left + w + 20.0;
        let _ = writeln!(
            out,
            "<line x1=\"{x:.3}\" y1=\"{y:.3}\" x2=\"{:.3}\" y2=\"{y:.3}\" stroke=\"{c}\" stroke-width=\"2\"/>",
            x + 24.0
        );
        let _ = writeln!(
            out,
            "<text x=\"{:.3}\" y=\"{y:.3}\" dominant-baseline=\"middle\">{name}</text>",
            x + 30.0
        );
    }
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    Ok(out)
}

pub fn render(table: &SweepTable, mode: PlotMode) -> Result<String, ToolError> {
    match mode {
        PlotMode::Heatmap => heatmap(table),
        PlotMode::Lines => lines(table),
    }
}

pub fn render_svg(table: &SweepTable, mode: PlotMode, path: &Path) -> Result<(), ToolError> {
    write_text(path, &render(table, mode)?)
}

/// The `(x, y)` vertices of every series polyline in `svg`, keyed by the
/// series name.
pub fn polyline_points(svg: &str) -> Vec<(String, Vec<(f64, f64)>)> {
    svg.lines()
        .filter(|l| l.starts_with("<polyline class=\"series\""))
        .filter_map(|l| {
            let name = l
                .split("data-name=\"")
                .nth(1)?
                .split('"')
                .next()?
                .to_owned();
            let pts = l.split("points=\"").nth(1)?.split('"').next()?;
            let pts = pts
                .split(' ')
                .filter_map(|p| {
                    let (x, y) = p.split_once(',')?;
                    Some((x.parse().ok()?, y.parse().ok()?))
                })
                .collect();
            Some((name, pts))
        })
        .collect()
}
