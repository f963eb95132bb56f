//! Data for the bounds-versus-`p` figure: `E_N(σ(p))`, `20·|n(p)|` and the
//! constant entanglement-cost floor `−log₂ 0.99`, plus a plain SVG rendering.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use ebitgap_core::experiments::{sweep, SweepRange};
use ebitgap_core::measures::ec_lower_bound_from_overlap;
use ebitgap_core::tol::BETA_CERTIFIED;

use crate::format::{sci, FIGURE_HEADER};
use crate::CliError;

pub const FIGURE_P_MAX: f64 = 0.05;
pub const FIGURE_POINTS: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FigureRow {
    pub p: f64,
    pub e_n_ebits: f64,
    pub twenty_abs_n: f64,
    pub ec_bound_ebits: f64,
}

pub fn figure_rows(witness_tol: f64) -> Result<Vec<FigureRow>, CliError> {
    let floor = ec_lower_bound_from_overlap(BETA_CERTIFIED)?;
    let records = sweep(
        &SweepRange::linear(0.0, FIGURE_P_MAX, FIGURE_POINTS),
        witness_tol,
    )?;
    Ok(records
        .into_iter()
        .map(|r| FigureRow {
            p: r.p,
            e_n_ebits: r.log_negativity,
            twenty_abs_n: 20.0 * (-r.witness_n).max(0.0),
            ec_bound_ebits: floor,
        })
        .collect())
}

pub fn write_figure_csv<W: Write>(out: &mut W, rows: &[FigureRow]) -> io::Result<()> {
    writeln!(out, "{FIGURE_HEADER}")?;
    for r in rows {
        writeln!(
            out,
            "{},{},{},{}",
            sci(r.p),
            sci(r.e_n_ebits),
            sci(r.twenty_abs_n),
            sci(r.ec_bound_ebits)
        )?;
    }
    Ok(())
}

pub fn render_svg(rows: &[FigureRow]) -> String {
    const W: f64 = 640.0;
    const H: f64 = 400.0;
    const M: f64 = 50.0;
    let x_max = rows.iter().map(|r| r.p).fold(0.0, f64::max).max(f64::MIN_POSITIVE);
    let y_max = rows
        .iter()
        .flat_map(|r| [r.e_n_ebits, r.twenty_abs_n, r.ec_bound_ebits])
        .fold(0.0, f64::max)
        * 1.05;
    let y_max = y_max.max(f64::MIN_POSITIVE);
    let sx = |x: f64| M + x / x_max * (W - 2.0 * M);
    let sy = |y: f64| H - M - y / y_max * (H - 2.0 * M);
    let polyline = |f: &dyn Fn(&FigureRow) -> f64, colour: &str, dash: &str| {
        let mut pts = String::new();
        for r in rows {
            let _ = write!(pts, "{:.2},{:.2} ", sx(r.p), sy(f(r)));
        }
        format!(
            "<polyline fill=\"none\" stroke=\"{colour}\" stroke-width=\"1.5\"{dash} points=\"{}\"/>\n",
            pts.trim_end()
        )
    };

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{W}\" height=\"{H}\" viewBox=\"0 0 {W} {H}\">"
    );
    let _ = writeln!(svg, "<rect width=\"{W}\" height=\"{H}\" fill=\"white\"/>");
    let _ = writeln!(
        svg,
        "<line x1=\"{M}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>",
        H - M,
        W - M,
        H - M
    );
    let _ = writeln!(
        svg,
        "<line x1=\"{M}\" y1=\"{M}\" x2=\"{M}\" y2=\"{}\" stroke=\"black\"/>",
        H - M
    );
    let _ = writeln!(
        svg,
        "<text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">p (0 to {x_max})</text>",
        W / 2.0,
        H - 15.0
    );
    let _ = writeln!(
        svg,
        "<text x=\"15\" y=\"{}\" font-size=\"12\" transform=\"rotate(-90 15 {})\" text-anchor=\"middle\">ebits (0 to {:.4})</text>",
        H / 2.0,
        H / 2.0,
        y_max
    );
    svg.push_str(&polyline(&|r| r.e_n_ebits, "#1f77b4", ""));
    svg.push_str(&polyline(&|r| r.ec_bound_ebits, "#d62728", " stroke-dasharray=\"6 4\""));
    svg.push_str(&polyline(&|r| r.twenty_abs_n, "#2ca02c", ""));
    let legend = [
        ("#1f77b4", "E_N(sigma(p))"),
        ("#d62728", "-log2 0.99"),
        ("#2ca02c", "20|n(p)|"),
    ];
    for (i, (colour, label)) in legend.iter().enumerate() {
        let y = M + 15.0 * i as f64;
        let _ = writeln!(
            svg,
            "<text x=\"{}\" y=\"{y}\" font-size=\"12\" fill=\"{colour}\">{label}</text>",
            M + 10.0
        );
    }
    svg.push_str("</svg>\n");
    svg
}

/// Writes the figure CSV to `out_path` and the SVG next to it.
/// Returns the SVG path.
pub fn figure1(out_path: &Path, witness_tol: f64) -> Result<PathBuf, CliError> {
    let rows = figure_rows(witness_tol)?;
    let mut csv = Vec::new();
    write_figure_csv(&mut csv, &rows)?;
    fs::write(out_path, csv)?;
    let svg_path = out_path.with_extension("svg");
    fs::write(&svg_path, render_svg(&rows))?;
    Ok(svg_path)
}
