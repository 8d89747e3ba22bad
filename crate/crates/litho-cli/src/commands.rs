//! Command implementations.

use std::f64::consts::FRAC_PI_4;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use litho_core::deposition::{
    deposition_general, deposition_mes, deposition_resonant, effective_resolution,
    matrix_element_general,
};
use litho_core::pattern::{exposure_curve, fit_target, fringe_halfperiod, pattern_error, sinphi_recipe};
use litho_core::verify::{cross_cases, cross_discrepancy, diagonal_cases, diagonal_discrepancy, ORACLE_TOLERANCE};
use litho_core::{DepositionCurve, NmesSpec, ResolutionScheme, SchemeKind};

use crate::config::{CommandConfig, OutputFormat, RunConfig};
use crate::error::CliError;
use crate::output::{
    fmt_f64, write_complex_csv, write_complex_json, write_curve_csv, write_curve_json, write_svg,
};
use crate::recipe_io::{read_json, RecipeDto, TargetDto};

pub fn execute(config: &RunConfig) -> Result<(), CliError> {
    match &config.command {
        CommandConfig::Deposition { photons, split, gamma, theta } => {
            let spec = NmesSpec::new(*photons, *split, *gamma, *theta)?;
            let grid = config.grid.points()?;
            let curve = DepositionCurve::sample(&grid, |p| deposition_general(&spec, p))?;
            emit_curve(config, &curve, "deposition rate")
        }
        CommandConfig::Resonant { photons, resonance } => {
            // validate once so a precondition error precedes any output
            deposition_resonant(*photons, *resonance, 0.0)?;
            let grid = config.grid.points()?;
            let curve =
                DepositionCurve::sample(&grid, |p| deposition_resonant(*photons, *resonance, p))?;
            emit_curve(config, &curve, "resonant deposition rate")
        }
        CommandConfig::MatrixElement { photons, split, split_prime, gamma, theta, theta_prime } => {
            let grid = config.grid.points()?;
            let mut re = Vec::with_capacity(grid.len());
            let mut im = Vec::with_capacity(grid.len());
            for &phi in &grid {
                let v = matrix_element_general(
                    *photons,
                    *split,
                    *split_prime,
                    *gamma,
                    *theta,
                    *theta_prime,
                    phi,
                )?;
                re.push(v.re);
                im.push(v.im);
            }
            with_output(config.output.as_deref(), |out| match config.format {
                OutputFormat::Csv => write_complex_csv(out, &grid, &re, &im),
                OutputFormat::Json => write_complex_json(out, &grid, &re, &im),
                OutputFormat::Svg => unreachable!("rejected during config validation"),
            })
        }
        CommandConfig::Resolution { photons, resonance, lambda } => {
            run_resolution(config, *photons, *resonance, *lambda)
        }
        CommandConfig::Pattern { input } => {
            let recipe = read_json::<RecipeDto>(input)?.into_recipe()?;
            let grid = config.grid.points()?;
            let curve = exposure_curve(&recipe, &grid)?;
            emit_curve(config, &curve, "exposure pattern")
        }
        CommandConfig::Fit { input, gamma, time } => {
            let target = read_json::<TargetDto>(input)?.into();
            let recipe = fit_target(&target, *gamma, *time)?;
            with_output(config.output.as_deref(), |out| {
                serde_json::to_writer_pretty(&mut *out, &RecipeDto::from(&recipe))
                    .map_err(|e| CliError::Io(format!("cannot encode recipe: {e}")))?;
                writeln!(out)?;
                Ok(())
            })
        }
        CommandConfig::Figure1 => run_figure1(config),
        CommandConfig::Verify { max_photons } => run_verify(config, *max_photons),
    }
}

fn emit_curve(config: &RunConfig, curve: &DepositionCurve, title: &str) -> Result<(), CliError> {
    with_output(config.output.as_deref(), |out| match config.format {
        OutputFormat::Csv => write_curve_csv(out, curve),
        OutputFormat::Json => write_curve_json(out, curve),
        OutputFormat::Svg => write_svg(out, title, &[(title, curve)]),
    })
}

fn with_output<F>(path: Option<&Path>, write: F) -> Result<(), CliError>
where
    F: FnOnce(&mut dyn Write) -> Result<(), CliError>,
{
    match path {
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            write(&mut lock)
        }
        Some(path) => {
            let mut file = fs::File::create(path)
                .map_err(|e| CliError::Io(format!("cannot create {}: {e}", path.display())))?;
            write(&mut file)
        }
    }
}

// ---------------------------------------------------------------------------
// resolution

struct ResolutionRow {
    scheme: &'static str,
    resolution: f64,
    /// Raw phi-space fringe half-period, measured on the configured grid.
    /// The classical row has no deposition curve in this toolkit, so its
    /// cell stays empty; the formula column is the authoritative figure.
    halfperiod_phi: Option<f64>,
}

fn run_resolution(
    config: &RunConfig,
    photons: u32,
    resonance: Option<u32>,
    lambda: f64,
) -> Result<(), CliError> {
    let grid = config.grid.points()?;
    let mut rows = Vec::new();

    let classical = ResolutionScheme::new(SchemeKind::Classical, lambda)?;
    rows.push(ResolutionRow {
        scheme: "classical",
        resolution: effective_resolution(&classical),
        halfperiod_phi: None,
    });

    let mes = ResolutionScheme::new(SchemeKind::Mes { photons }, lambda)?;
    let mes_curve = DepositionCurve::sample(&grid, |p| deposition_mes(photons, p))?;
    rows.push(ResolutionRow {
        scheme: "mes",
        resolution: effective_resolution(&mes),
        halfperiod_phi: Some(fringe_halfperiod(&mes_curve)?),
    });

    if let Some(k) = resonance {
        let resonant = ResolutionScheme::new(SchemeKind::Resonant { photons, resonance: k }, lambda)?;
        let resonant_curve =
            DepositionCurve::sample(&grid, |p| deposition_resonant(photons, k, p))?;
        rows.push(ResolutionRow {
            scheme: "resonant",
            resolution: effective_resolution(&resonant),
            halfperiod_phi: Some(fringe_halfperiod(&resonant_curve)?),
        });
    }

    with_output(config.output.as_deref(), |out| match config.format {
        OutputFormat::Csv => {
            writeln!(out, "scheme,resolution,fringe_halfperiod_phi")?;
            for row in &rows {
                let hp = row.halfperiod_phi.map(fmt_f64).unwrap_or_default();
                writeln!(out, "{},{},{hp}", row.scheme, fmt_f64(row.resolution))?;
            }
            Ok(())
        }
        OutputFormat::Json => {
            #[derive(serde::Serialize)]
            struct RowDto<'a> {
                scheme: &'a str,
                resolution: f64,
                fringe_halfperiod_phi: Option<f64>,
            }
            let dto: Vec<RowDto> = rows
                .iter()
                .map(|r| RowDto {
                    scheme: r.scheme,
                    resolution: r.resolution,
                    fringe_halfperiod_phi: r.halfperiod_phi,
                })
                .collect();
            serde_json::to_writer_pretty(&mut *out, &dto)
                .map_err(|e| CliError::Io(format!("cannot encode table: {e}")))?;
            writeln!(out)?;
            Ok(())
        }
        OutputFormat::Svg => unreachable!("rejected during config validation"),
    })
}

// ---------------------------------------------------------------------------
// figure1

const FIGURE1_N_MAX: [u32; 3] = [2, 6, 12];

fn run_figure1(config: &RunConfig) -> Result<(), CliError> {
    let dir = config.output.clone().unwrap_or_else(|| PathBuf::from("figure1"));
    fs::create_dir_all(&dir)
        .map_err(|e| CliError::Io(format!("cannot create {}: {e}", dir.display())))?;
    let grid = config.grid.points()?;
    let target_curve = DepositionCurve::sample(&grid, |p| Ok(p.sin().abs()))?;
    let target_values = target_curve.values().to_vec();

    let extension = match config.format {
        OutputFormat::Csv => "csv",
        OutputFormat::Json => "json",
        OutputFormat::Svg => "svg",
    };

    let mut summary = Vec::new();
    let mut curves = Vec::new();
    for n_max in FIGURE1_N_MAX {
        let recipe = sinphi_recipe(n_max, FRAC_PI_4, 1.0)?;
        let curve = exposure_curve(&recipe, &grid)?;
        let deviation = pattern_error(&curve, &target_values, true)?;
        summary.push((n_max, deviation));
        curves.push((n_max, curve));
    }

    for (n_max, curve) in &curves {
        let path = dir.join(format!("nmax{n_max:02}.{extension}"));
        let title = format!("|sin phi| fit, n_max = {n_max}");
        with_output(Some(&path), |out| match config.format {
            OutputFormat::Csv => write_curve_csv(out, curve),
            OutputFormat::Json => write_curve_json(out, curve),
            OutputFormat::Svg => write_svg(out, &title, &[(&title, curve), ("|sin phi|", &target_curve)]),
        })?;
    }
    let target_path = dir.join(format!("target.{extension}"));
    with_output(Some(&target_path), |out| match config.format {
        OutputFormat::Csv => write_curve_csv(out, &target_curve),
        OutputFormat::Json => write_curve_json(out, &target_curve),
        OutputFormat::Svg => write_svg(out, "|sin phi| target", &[("|sin phi|", &target_curve)]),
    })?;

    with_output(Some(&dir.join("summary.csv")), |out| {
        writeln!(out, "n_max,rms,sup")?;
        for (n_max, dev) in &summary {
            writeln!(out, "{n_max},{},{}", fmt_f64(dev.rms), fmt_f64(dev.sup))?;
        }
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// verify

fn thread_pool() -> Result<rayon::ThreadPool, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(raw) = std::env::var("LITHO_SIM_THREADS") {
        let threads: usize = raw.parse().map_err(|_| {
            CliError::Parse(format!("LITHO_SIM_THREADS must be a positive integer, got '{raw}'"))
        })?;
        if threads == 0 {
            return Err(CliError::Parse(
                "LITHO_SIM_THREADS must be a positive integer, got '0'".to_string(),
            ));
        }
        builder = builder.num_threads(threads);
    }
    builder
        .build()
        .map_err(|e| CliError::Parse(format!("cannot build thread pool: {e}")))
}

fn run_verify(config: &RunConfig, max_photons: u32) -> Result<(), CliError> {
    let pool = thread_pool()?;
    let diagonal = diagonal_cases(max_photons, 64);
    let cross = cross_cases(max_photons.min(8), 16);

    let diagonal_max: f64 = pool.install(|| {
        diagonal
            .par_iter()
            .map(|case| diagonal_discrepancy(case).map_err(CliError::from))
            .try_reduce(|| 0.0, |a, b| Ok(a.max(b)))
    })?;
    let cross_max: f64 = pool.install(|| {
        cross
            .par_iter()
            .map(|case| cross_discrepancy(case).map_err(CliError::from))
            .try_reduce(|| 0.0, |a, b| Ok(a.max(b)))
    })?;

    let passed = diagonal_max <= ORACLE_TOLERANCE && cross_max <= ORACLE_TOLERANCE;
    with_output(config.output.as_deref(), |out| {
        writeln!(
            out,
            "diagonal sweep (N <= {max_photons}): {} cases, max |closed form - oracle| = {}",
            diagonal.len(),
            fmt_f64(diagonal_max)
        )?;
        writeln!(
            out,
            "cross sweep    (N <= {}): {} cases, max |closed form - oracle| = {}",
            max_photons.min(8),
            cross.len(),
            fmt_f64(cross_max)
        )?;
        writeln!(out, "tolerance: {}", fmt_f64(ORACLE_TOLERANCE))?;
        writeln!(out, "verification {}", if passed { "PASSED" } else { "FAILED" })?;
        Ok(())
    })?;
    if passed {
        Ok(())
    } else {
        Err(CliError::Verification(format!(
            "oracle mismatch: diagonal max {}, cross max {}, tolerance {}",
            fmt_f64(diagonal_max),
            fmt_f64(cross_max),
            fmt_f64(ORACLE_TOLERANCE)
        )))
    }
}
