//! Run configuration: CLI flags merged over an optional JSON config file,
//! with per-command parameter vocabularies (unknown keys rejected) and
//! defaults filled last.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_4, TAU};
use std::path::PathBuf;

use serde::Deserialize;

use crate::cli::{Cli, CommandArgs, FormatArg, GridOutputArgs};
use crate::error::CliError;

pub const DEFAULT_GAMMA: f64 = FRAC_PI_4;
pub const DEFAULT_TIME: f64 = 1.0;
pub const DEFAULT_LAMBDA: f64 = 1.0;
pub const DEFAULT_SAMPLES: usize = 512;
pub const DEFAULT_VERIFY_MAX_PHOTONS: u32 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
    Svg,
}

impl OutputFormat {
    fn parse(name: &str) -> Result<Self, CliError> {
        match name {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            "svg" => Ok(OutputFormat::Svg),
            other => Err(CliError::Parse(format!(
                "unknown output format '{other}' (expected csv, json, or svg)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub phi_min: f64,
    pub phi_max: f64,
    pub samples: usize,
}

impl Grid {
    pub fn points(&self) -> Result<Vec<f64>, CliError> {
        litho_core::deposition::phi_grid(self.phi_min, self.phi_max, self.samples)
            .map_err(|e| CliError::Parse(format!("invalid grid: {e}")))
    }
}

/// Fully resolved command with typed parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum CommandConfig {
    Deposition { photons: u32, split: u32, gamma: f64, theta: f64 },
    MatrixElement {
        photons: u32,
        split: u32,
        split_prime: u32,
        gamma: f64,
        theta: f64,
        theta_prime: f64,
    },
    Resonant { photons: u32, resonance: u32 },
    Resolution { photons: u32, resonance: Option<u32>, lambda: f64 },
    Pattern { input: PathBuf },
    Fit { input: PathBuf, gamma: f64, time: f64 },
    Figure1,
    Verify { max_photons: u32 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: CommandConfig,
    pub grid: Grid,
    pub format: OutputFormat,
    pub output: Option<PathBuf>,
}

// ---------------------------------------------------------------------------
// JSON config file: the same shape as the flags.

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
struct ConfigFile {
    command: Option<String>,
    #[serde(default)]
    parameters: BTreeMap<String, serde_json::Value>,
    grid: Option<ConfigGrid>,
    output: Option<ConfigOutput>,
    input: Option<PathBuf>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
struct ConfigGrid {
    phi_min: Option<f64>,
    phi_max: Option<f64>,
    samples: Option<serde_json::Value>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigOutput {
    format: Option<String>,
    path: Option<PathBuf>,
}

fn load_config_file(path: &PathBuf) -> Result<ConfigFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read config file {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Parse(format!("malformed config file {}: {e}", path.display())))
}

// ---------------------------------------------------------------------------
// Parameter map handling.

struct Params {
    values: BTreeMap<String, f64>,
    command: &'static str,
}

impl Params {
    /// Validates the raw JSON map against a command's vocabulary.
    fn from_config(
        raw: &BTreeMap<String, serde_json::Value>,
        command: &'static str,
        allowed: &[&str],
    ) -> Result<Self, CliError> {
        let mut values = BTreeMap::new();
        for (key, value) in raw {
            if !allowed.contains(&key.as_str()) {
                return Err(CliError::Parse(format!(
                    "unknown parameter '{key}' for command '{command}'"
                )));
            }
            let number = value.as_f64().ok_or_else(|| {
                CliError::Parse(format!("parameter '{key}' must be a number, got {value}"))
            })?;
            values.insert(key.clone(), number);
        }
        Ok(Self { values, command })
    }

    fn real(&self, key: &str) -> Option<f64> {
        self.values.get(key).copied()
    }

    fn integer(&self, key: &str) -> Result<Option<u32>, CliError> {
        match self.values.get(key) {
            None => Ok(None),
            Some(&v) => {
                if !v.is_finite() || v.fract() != 0.0 || v < 0.0 || v > u32::MAX as f64 {
                    return Err(CliError::Parse(format!(
                        "parameter '{key}' for command '{}' must be a nonnegative integer, got {v}",
                        self.command
                    )));
                }
                Ok(Some(v as u32))
            }
        }
    }
}

fn require<T>(value: Option<T>, key: &str, command: &str) -> Result<T, CliError> {
    value.ok_or_else(|| {
        CliError::Parse(format!("missing required parameter '{key}' for command '{command}'"))
    })
}

// ---------------------------------------------------------------------------
// Merge: flags override config-file values; defaults fill last.

pub fn resolve(cli: Cli) -> Result<RunConfig, CliError> {
    let file = match &cli.config {
        Some(path) => load_config_file(path)?,
        None => ConfigFile::default(),
    };

    // the CLI subcommand, when given, overrides the config file's command
    let command_name: String = match (&cli.command, &file.command) {
        (Some(args), _) => args.name().to_string(),
        (None, Some(name)) => name.clone(),
        (None, None) => {
            return Err(CliError::Parse(
                "no command given (pass a subcommand or a config file with a \"command\" key)"
                    .to_string(),
            ))
        }
    };

    let command = build_command(&command_name, &cli, &file)?;

    let cli_grid_output = cli.command.as_ref().map(|c| c.grid_output());
    let file_grid = file.grid.unwrap_or_default();
    let file_output = file.output.unwrap_or_default();

    let samples = match cli_grid_output.and_then(|g| g.samples) {
        Some(s) => s,
        None => match &file_grid.samples {
            None => DEFAULT_SAMPLES,
            Some(v) => {
                let n = v.as_f64().filter(|x| x.fract() == 0.0 && *x >= 0.0).ok_or_else(
                    || CliError::Parse(format!("grid samples must be a nonnegative integer, got {v}")),
                )?;
                n as usize
            }
        },
    };
    let grid = Grid {
        phi_min: cli_grid_output
            .and_then(|g| g.phi_min)
            .or(file_grid.phi_min)
            .unwrap_or(0.0),
        phi_max: cli_grid_output
            .and_then(|g| g.phi_max)
            .or(file_grid.phi_max)
            .unwrap_or(TAU),
        samples,
    };
    if grid.samples < 2 {
        return Err(CliError::Parse(format!(
            "grid needs at least 2 samples, got {}",
            grid.samples
        )));
    }
    if grid.phi_min.is_nan() || grid.phi_max.is_nan() || grid.phi_min >= grid.phi_max {
        return Err(CliError::Parse(format!(
            "grid requires phi-min < phi-max, got [{}, {}]",
            grid.phi_min, grid.phi_max
        )));
    }

    let format = match cli_grid_output.and_then(|g| g.format) {
        Some(FormatArg::Csv) => OutputFormat::Csv,
        Some(FormatArg::Json) => OutputFormat::Json,
        Some(FormatArg::Svg) => OutputFormat::Svg,
        None => match &file_output.format {
            Some(name) => OutputFormat::parse(name)?,
            // fit emits a recipe, which is inherently JSON
            None if matches!(command, CommandConfig::Fit { .. }) => OutputFormat::Json,
            None => OutputFormat::Csv,
        },
    };
    validate_format(&command, format)?;

    let output = cli_grid_output
        .and_then(|g| g.output.clone())
        .or(file_output.path);

    Ok(RunConfig { command, grid, format, output })
}

fn validate_format(command: &CommandConfig, format: OutputFormat) -> Result<(), CliError> {
    let svg_ok = matches!(
        command,
        CommandConfig::Deposition { .. }
            | CommandConfig::Resonant { .. }
            | CommandConfig::Pattern { .. }
            | CommandConfig::Figure1
    );
    if format == OutputFormat::Svg && !svg_ok {
        return Err(CliError::Parse(
            "svg output is only available for curve commands (deposition, resonant, pattern, figure1)"
                .to_string(),
        ));
    }
    if matches!(command, CommandConfig::Fit { .. }) && format != OutputFormat::Json {
        return Err(CliError::Parse("fit emits a recipe, which is always json".to_string()));
    }
    Ok(())
}

fn build_command(
    name: &str,
    cli: &Cli,
    file: &ConfigFile,
) -> Result<CommandConfig, CliError> {
    // flags belonging to a *different* subcommand than the effective one are
    // impossible by construction (clap scopes them), so only the matching
    // variant is consulted
    let args = cli.command.as_ref().filter(|c| c.name() == name);

    match name {
        "deposition" => {
            let p = Params::from_config(&file.parameters, "deposition", &["n", "m", "gamma", "theta"])?;
            let (n, m, gamma, theta) = match args {
                Some(CommandArgs::Deposition(a)) => (a.n, a.m, a.gamma, a.theta),
                _ => (None, None, None, None),
            };
            Ok(CommandConfig::Deposition {
                photons: require(n.or(p.integer("n")?), "n", "deposition")?,
                split: m.or(p.integer("m")?).unwrap_or(0),
                gamma: gamma.or(p.real("gamma")).unwrap_or(DEFAULT_GAMMA),
                theta: theta.or(p.real("theta")).unwrap_or(0.0),
            })
        }
        "matrix-element" => {
            let p = Params::from_config(
                &file.parameters,
                "matrix-element",
                &["n", "m", "m-prime", "gamma", "theta", "theta-prime"],
            )?;
            let (n, m, mp, gamma, theta, theta_prime) = match args {
                Some(CommandArgs::MatrixElement(a)) => {
                    (a.n, a.m, a.m_prime, a.gamma, a.theta, a.theta_prime)
                }
                _ => (None, None, None, None, None, None),
            };
            Ok(CommandConfig::MatrixElement {
                photons: require(n.or(p.integer("n")?), "n", "matrix-element")?,
                split: require(m.or(p.integer("m")?), "m", "matrix-element")?,
                split_prime: require(mp.or(p.integer("m-prime")?), "m-prime", "matrix-element")?,
                gamma: gamma.or(p.real("gamma")).unwrap_or(DEFAULT_GAMMA),
                theta: theta.or(p.real("theta")).unwrap_or(0.0),
                theta_prime: theta_prime.or(p.real("theta-prime")).unwrap_or(0.0),
            })
        }
        "resonant" => {
            let p = Params::from_config(&file.parameters, "resonant", &["n", "k"])?;
            let (n, k) = match args {
                Some(CommandArgs::Resonant(a)) => (a.n, a.k),
                _ => (None, None),
            };
            Ok(CommandConfig::Resonant {
                photons: require(n.or(p.integer("n")?), "n", "resonant")?,
                resonance: require(k.or(p.integer("k")?), "k", "resonant")?,
            })
        }
        "resolution" => {
            let p = Params::from_config(&file.parameters, "resolution", &["n", "k", "lambda"])?;
            let (n, k, lambda) = match args {
                Some(CommandArgs::Resolution(a)) => (a.n, a.k, a.lambda),
                _ => (None, None, None),
            };
            Ok(CommandConfig::Resolution {
                photons: require(n.or(p.integer("n")?), "n", "resolution")?,
                resonance: k.or(p.integer("k")?),
                lambda: lambda.or(p.real("lambda")).unwrap_or(DEFAULT_LAMBDA),
            })
        }
        "pattern" => {
            Params::from_config(&file.parameters, "pattern", &[])?;
            let input = match args {
                Some(CommandArgs::Pattern(a)) => a.input.clone(),
                _ => None,
            };
            Ok(CommandConfig::Pattern {
                input: require(input.or(file.input.clone()), "input", "pattern")?,
            })
        }
        "fit" => {
            let p = Params::from_config(&file.parameters, "fit", &["gamma", "t"])?;
            let (input, gamma, time) = match args {
                Some(CommandArgs::Fit(a)) => (a.input.clone(), a.gamma, a.t),
                _ => (None, None, None),
            };
            Ok(CommandConfig::Fit {
                input: require(input.or(file.input.clone()), "input", "fit")?,
                gamma: gamma.or(p.real("gamma")).unwrap_or(DEFAULT_GAMMA),
                time: time.or(p.real("t")).unwrap_or(DEFAULT_TIME),
            })
        }
        "figure1" => {
            Params::from_config(&file.parameters, "figure1", &[])?;
            Ok(CommandConfig::Figure1)
        }
        "verify" => {
            let p = Params::from_config(&file.parameters, "verify", &["n-max"])?;
            let n_max = match args {
                Some(CommandArgs::Verify(a)) => a.n_max,
                _ => None,
            };
            Ok(CommandConfig::Verify {
                max_photons: n_max
                    .or(p.integer("n-max")?)
                    .unwrap_or(DEFAULT_VERIFY_MAX_PHOTONS),
            })
        }
        other => Err(CliError::Parse(format!("unknown command '{other}'"))),
    }
}

impl Default for Grid {
    fn default() -> Self {
        Self { phi_min: 0.0, phi_max: TAU, samples: DEFAULT_SAMPLES }
    }
}

impl CommandArgs {
    pub fn name(&self) -> &'static str {
        match self {
            CommandArgs::Deposition(_) => "deposition",
            CommandArgs::MatrixElement(_) => "matrix-element",
            CommandArgs::Resonant(_) => "resonant",
            CommandArgs::Resolution(_) => "resolution",
            CommandArgs::Pattern(_) => "pattern",
            CommandArgs::Fit(_) => "fit",
            CommandArgs::Figure1(_) => "figure1",
            CommandArgs::Verify(_) => "verify",
        }
    }

    pub fn grid_output(&self) -> &GridOutputArgs {
        match self {
            CommandArgs::Deposition(a) => &a.grid_output,
            CommandArgs::MatrixElement(a) => &a.grid_output,
            CommandArgs::Resonant(a) => &a.grid_output,
            CommandArgs::Resolution(a) => &a.grid_output,
            CommandArgs::Pattern(a) => &a.grid_output,
            CommandArgs::Fit(a) => &a.grid_output,
            CommandArgs::Figure1(a) => &a.grid_output,
            CommandArgs::Verify(a) => &a.grid_output,
        }
    }
}
