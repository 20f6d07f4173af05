// Copyright 2026 qresonance Contributors
// SPDX-License-Identifier: Apache-2.0

//! `qresonance` command-line interface.
//!
//! Exit codes: 0 success, 1 bad arguments, 2 I/O failure, 3 validation failure.

mod commands;
mod config;
mod format;

use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use thiserror::Error;

use config::{Cli, Command, RunConfig};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Core(#[from] qresonance::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("validation failed: {0}")]
    ValidationFailed(String),
}

impl CliError {
    fn io(path: impl AsRef<Path>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.as_ref().display().to_string(),
            source,
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Core(_) => 1,
            CliError::Io { .. } => 2,
            CliError::ValidationFailed(_) => 3,
        }
    }
}

fn run(cfg: &RunConfig) -> Result<(), CliError> {
    match cfg.command {
        Command::Sweep => commands::cmd_sweep(cfg),
        Command::Scan => commands::cmd_scan(cfg),
        Command::Validate => commands::cmd_validate(cfg),
        Command::Figure1 => commands::cmd_figure1(cfg),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = RunConfig::from_cli(cli).and_then(|cfg| run(&cfg));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
