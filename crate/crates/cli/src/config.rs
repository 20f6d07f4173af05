// Copyright 2026 qresonance Contributors
// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use qresonance::resonance::{DEFAULT_STEPS, FIGURE_X_MAX, FIGURE_X_MIN};
use qresonance::Bloch64;

use crate::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "qresonance",
    version,
    about = "Noise-enhancement search on the two-Pauli qubit channel"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: CommandArgs,
}

#[derive(Debug, Subcommand)]
pub enum CommandArgs {
    /// Sweep one input state over the flipping rate and emit CSV plus a summary.
    Sweep {
        /// Bloch vector `a1,a2,a3`.
        #[arg(long, allow_hyphen_values = true)]
        state: String,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Scan a grid of input states for capacity and fidelity enhancement.
    Scan {
        #[arg(long, default_value_t = 11)]
        grid_resolution: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run the internal consistency checks.
    Validate {
        #[arg(long, default_value_t = 9)]
        grid_resolution: usize,
        /// Add the incomplete channel {sqrt(0.5) I} as a negative control.
        #[arg(long)]
        inject_broken_channel: bool,
    },
    /// Reproduce the four reference sweeps as fig1a.csv .. fig1d.csv.
    Figure1 {
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Flipping-rate range `min,max`.
    #[arg(long, default_value = "0,0.7")]
    pub x_range: String,
    #[arg(long, default_value_t = DEFAULT_STEPS)]
    pub steps: usize,
    /// Output file (directory for figure1). CSV goes to stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Significant digits in CSV output.
    #[arg(long, default_value_t = 12)]
    pub precision: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Sweep,
    Scan,
    Validate,
    Figure1,
}

/// Validated run parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub state: Option<Bloch64>,
    pub x_min: f64,
    pub x_max: f64,
    pub steps: usize,
    pub grid_resolution: usize,
    pub output_path: Option<PathBuf>,
    pub precision: usize,
    pub inject_broken_channel: bool,
}

fn parse_list(flag: &str, raw: &str, n: usize) -> Result<Vec<f64>, CliError> {
    let values = raw
        .split(',')
        .map(|s| s.trim().parse::<f64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::Usage(format!("--{flag} {raw:?}: {e}")))?;
    if values.len() != n || values.iter().any(|v| !v.is_finite()) {
        return Err(CliError::Usage(format!(
            "--{flag} expects {n} comma-separated finite numbers, got {raw:?}"
        )));
    }
    Ok(values)
}

pub fn parse_state(raw: &str) -> Result<Bloch64, CliError> {
    let v = parse_list("state", raw, 3)?;
    Bloch64::new(v[0], v[1], v[2]).map_err(|e| CliError::Usage(format!("--state {raw}: {e}")))
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        let mut cfg = RunConfig {
            command: Command::Validate,
            state: None,
            x_min: FIGURE_X_MIN,
            x_max: FIGURE_X_MAX,
            steps: DEFAULT_STEPS,
            grid_resolution: 11,
            output_path: None,
            precision: 12,
            inject_broken_channel: false,
        };
        let common = match cli.command {
            CommandArgs::Sweep { state, common } => {
                cfg.command = Command::Sweep;
                cfg.state = Some(parse_state(&state)?);
                Some(common)
            }
            CommandArgs::Scan {
                grid_resolution,
                common,
            } => {
                cfg.command = Command::Scan;
                cfg.grid_resolution = grid_resolution;
                Some(common)
            }
            CommandArgs::Validate {
                grid_resolution,
                inject_broken_channel,
            } => {
                cfg.grid_resolution = grid_resolution;
                cfg.inject_broken_channel = inject_broken_channel;
                None
            }
            CommandArgs::Figure1 { common } => {
                cfg.command = Command::Figure1;
                Some(common)
            }
        };
        if let Some(c) = common {
            let r = parse_list("x-range", &c.x_range, 2)?;
            cfg.x_min = r[0];
            cfg.x_max = r[1];
            cfg.steps = c.steps;
            cfg.output_path = c.out;
            cfg.precision = c.precision;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<(), CliError> {
        if !(0.0 <= self.x_min && self.x_min < self.x_max && self.x_max <= 1.0) {
            return Err(CliError::Usage(format!(
                "--x-range {},{}: need 0 <= min < max <= 1",
                self.x_min, self.x_max
            )));
        }
        if self.steps < 3 {
            return Err(CliError::Usage(format!("--steps {}: need at least 3", self.steps)));
        }
        if self.grid_resolution < 2 {
            return Err(CliError::Usage(format!(
                "--grid-resolution {}: need at least 2",
                self.grid_resolution
            )));
        }
        if !(1..=17).contains(&self.precision) {
            return Err(CliError::Usage(format!("--precision {}: need 1..=17", self.precision)));
        }
        Ok(())
    }
}
