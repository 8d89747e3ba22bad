//! Deterministic emitters: CSV with 17-significant-digit floats, JSON via
//! serde, and a minimal self-contained SVG polyline chart. CSV is the
//! source of truth; SVG is a convenience view.

use std::io::Write;

use litho_core::DepositionCurve;

use crate::error::CliError;

/// 17 significant digits: enough to round-trip any f64 exactly.
pub fn fmt_f64(value: f64) -> String {
    format!("{value:.16e}")
}

pub fn write_curve_csv<W: Write + ?Sized>(out: &mut W, curve: &DepositionCurve) -> Result<(), CliError> {
    writeln!(out, "phi,value")?;
    for (phi, value) in curve.points() {
        writeln!(out, "{},{}", fmt_f64(phi), fmt_f64(value))?;
    }
    Ok(())
}

pub fn write_curve_json<W: Write + ?Sized>(out: &mut W, curve: &DepositionCurve) -> Result<(), CliError> {
    #[derive(serde::Serialize)]
    struct CurveDto<'a> {
        phi: &'a [f64],
        value: &'a [f64],
    }
    let dto = CurveDto { phi: curve.phi(), value: curve.values() };
    serde_json::to_writer_pretty(&mut *out, &dto)
        .map_err(|e| CliError::Io(format!("cannot encode curve: {e}")))?;
    writeln!(out)?;
    Ok(())
}

pub fn write_complex_csv<W: Write + ?Sized>(
    out: &mut W,
    phi: &[f64],
    re: &[f64],
    im: &[f64],
) -> Result<(), CliError> {
    writeln!(out, "phi,re,im")?;
    for i in 0..phi.len() {
        writeln!(out, "{},{},{}", fmt_f64(phi[i]), fmt_f64(re[i]), fmt_f64(im[i]))?;
    }
    Ok(())
}

pub fn write_complex_json<W: Write + ?Sized>(
    out: &mut W,
    phi: &[f64],
    re: &[f64],
    im: &[f64],
) -> Result<(), CliError> {
    #[derive(serde::Serialize)]
    struct ComplexCurveDto<'a> {
        phi: &'a [f64],
        re: &'a [f64],
        im: &'a [f64],
    }
    serde_json::to_writer_pretty(&mut *out, &ComplexCurveDto { phi, re, im })
        .map_err(|e| CliError::Io(format!("cannot encode curve: {e}")))?;
    writeln!(out)?;
    Ok(())
}

const SVG_WIDTH: f64 = 800.0;
const SVG_HEIGHT: f64 = 480.0;
const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 20.0;
const MARGIN_TOP: f64 = 20.0;
const MARGIN_BOTTOM: f64 = 45.0;

/// One polyline per (label, curve) pair on a shared frame.
pub fn write_svg<W: Write + ?Sized>(
    out: &mut W,
    title: &str,
    curves: &[(&str, &DepositionCurve)],
) -> Result<(), CliError> {
    let palette = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b"];
    let x_min = curves
        .iter()
        .flat_map(|(_, c)| c.phi().first().copied())
        .fold(f64::INFINITY, f64::min);
    let x_max = curves
        .iter()
        .flat_map(|(_, c)| c.phi().last().copied())
        .fold(f64::NEG_INFINITY, f64::max);
    let y_max = curves
        .iter()
        .flat_map(|(_, c)| c.values().iter().copied())
        .fold(0.0_f64, f64::max)
        .max(1e-300);

    let plot_w = SVG_WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = SVG_HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let x_of = |phi: f64| MARGIN_LEFT + (phi - x_min) / (x_max - x_min) * plot_w;
    let y_of = |v: f64| MARGIN_TOP + (1.0 - v / y_max) * plot_h;

    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {SVG_WIDTH} {SVG_HEIGHT}\" font-family=\"monospace\" font-size=\"12\">"
    )?;
    writeln!(out, "<title>{title}</title>")?;
    writeln!(
        out,
        "<rect x=\"{MARGIN_LEFT}\" y=\"{MARGIN_TOP}\" width=\"{plot_w}\" height=\"{plot_h}\" fill=\"none\" stroke=\"#333\"/>"
    )?;
    // axis labels: min/max on both axes
    writeln!(
        out,
        "<text x=\"{:.2}\" y=\"{:.2}\">{}</text>",
        MARGIN_LEFT,
        SVG_HEIGHT - 25.0,
        format_args!("phi = {:.4}", x_min)
    )?;
    writeln!(
        out,
        "<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"end\">{}</text>",
        SVG_WIDTH - MARGIN_RIGHT,
        SVG_HEIGHT - 25.0,
        format_args!("{:.4}", x_max)
    )?;
    writeln!(
        out,
        "<text x=\"{:.2}\" y=\"{:.2}\">{}</text>",
        5.0,
        MARGIN_TOP + 12.0,
        format_args!("{y_max:.4}")
    )?;
    writeln!(out, "<text x=\"5\" y=\"{:.2}\">0</text>", SVG_HEIGHT - MARGIN_BOTTOM)?;

    for (index, (label, curve)) in curves.iter().enumerate() {
        let color = palette[index % palette.len()];
        let points: Vec<String> = curve
            .points()
            .map(|(phi, v)| format!("{:.2},{:.2}", x_of(phi), y_of(v)))
            .collect();
        writeln!(
            out,
            "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\" points=\"{}\"/>",
            points.join(" ")
        )?;
        writeln!(
            out,
            "<text x=\"{:.2}\" y=\"{:.2}\" fill=\"{color}\">{label}</text>",
            MARGIN_LEFT + 8.0,
            MARGIN_TOP + 16.0 + 14.0 * index as f64
        )?;
    }
    writeln!(out, "</svg>")?;
    Ok(())
}
