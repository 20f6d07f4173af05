// Copyright 2026 qresonance Contributors
// SPDX-License-Identifier: Apache-2.0

use std::fmt::Write as _;
use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::Path;

use qresonance::resonance::{analyze, state_scan_over, AnalysisConfig, EnhancementReport, FIGURE1_STATES};
use qresonance::validation::{run_validation, ValidationOptions};
use qresonance::{sweep, Bloch64, Curve64, Quantity};

use crate::config::RunConfig;
use crate::format::{format_float, write_scan_csv, write_sweep_csv};
use crate::CliError;

fn create(path: &Path) -> Result<BufWriter<File>, CliError> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| CliError::io(path, e))
}

fn describe_state(a: &Bloch64) -> String {
    let [a1, a2, a3] = a.components();
    format!(
        "({}, {}, {})",
        format_float(a1, 6),
        format_float(a2, 6),
        format_float(a3, 6)
    )
}

fn enhancement_lines(out: &mut String, report: &EnhancementReport<f64>) {
    let name = report.quantity.name();
    let symbol = match report.quantity {
        Quantity::Capacity => "dC/dN",
        Quantity::Fidelity => "dF/dN",
    };
    if report.segments.is_empty() {
        let _ = writeln!(out, "{name} enhancement: none");
        return;
    }
    let _ = writeln!(
        out,
        "{name} enhancement: present ({} segment(s))",
        report.segments.len()
    );
    for s in &report.segments {
        let _ = writeln!(
            out,
            "  x in [{}, {}], max {symbol} {}",
            format_float(s.x_start, 6),
            format_float(s.x_end, 6),
            format_float(s.max_slope, 6)
        );
    }
}

/// Human-readable summary of one analysed curve.
pub fn summarize(curve: &Curve64) -> String {
    let analysis = analyze(curve, AnalysisConfig::default());
    let mut out = String::new();
    let _ = writeln!(
        out,
        "state {}, x in [{}, {}], {} samples",
        describe_state(&curve.state),
        format_float(curve.x_min, 6),
        format_float(curve.x_max, 6),
        curve.len()
    );
    match analysis.capacity.noise_peak_x {
        Some(x) => {
            let _ = writeln!(out, "noise peak: x = {}", format_float(x, 6));
        }
        None => {
            let _ = writeln!(out, "noise peak: none (maximum at a sweep boundary)");
        }
    }
    enhancement_lines(&mut out, &analysis.capacity);
    enhancement_lines(&mut out, &analysis.fidelity);
    let intervals = &analysis.capacity.multivalued_noise_intervals;
    if intervals.is_empty() {
        let _ = writeln!(out, "multivalued capacity: none");
    } else {
        let s: Vec<String> = intervals
            .iter()
            .map(|(lo, hi)| format!("[{}, {}]", format_float(*lo, 6), format_float(*hi, 6)))
            .collect();
        let _ = writeln!(out, "multivalued capacity: N in {}", s.join(" "));
    }
    out
}

pub fn cmd_sweep(cfg: &RunConfig) -> Result<(), CliError> {
    let state = cfg
        .state
        .as_ref()
        .ok_or_else(|| CliError::Usage("sweep needs --state".into()))?;
    let curve = sweep(state, cfg.x_min, cfg.x_max, cfg.steps)?;
    let summary = summarize(&curve);
    match &cfg.output_path {
        Some(path) => {
            let mut w = create(path)?;
            write_sweep_csv(&mut w, &curve, cfg.precision).map_err(|e| CliError::io(path, e))?;
            print!("{summary}");
            println!("wrote {} rows to {}", curve.len(), path.display());
        }
        None => {
            let stdout = io::stdout();
            write_sweep_csv(&mut stdout.lock(), &curve, cfg.precision).map_err(|e| CliError::io("<stdout>", e))?;
            eprint!("{summary}");
        }
    }
    Ok(())
}

pub fn cmd_scan(cfg: &RunConfig) -> Result<(), CliError> {
    let report = state_scan_over::<f64>(cfg.grid_resolution, cfg.x_min, cfg.x_max, cfg.steps)?;
    let summary = format!(
        "scanned {} states (grid resolution {}, x in [{}, {}], {} steps)\ncapacity enhancement: {} states\nfidelity enhancement: {} states\n",
        report.states(),
        cfg.grid_resolution,
        format_float(cfg.x_min, 6),
        format_float(cfg.x_max, 6),
        cfg.steps,
        report.capacity_count(),
        report.fidelity_count()
    );
    match &cfg.output_path {
        Some(path) => {
            let mut w = create(path)?;
            write_scan_csv(&mut w, &report.entries, cfg.precision).map_err(|e| CliError::io(path, e))?;
            print!("{summary}");
        }
        None => {
            let stdout = io::stdout();
            write_scan_csv(&mut stdout.lock(), &report.entries, cfg.precision)
                .map_err(|e| CliError::io("<stdout>", e))?;
            eprint!("{summary}");
        }
    }
    Ok(())
}

pub fn cmd_figure1(cfg: &RunConfig) -> Result<(), CliError> {
    let dir = cfg.output_path.clone().unwrap_or_else(|| ".".into());
    fs::create_dir_all(&dir).map_err(|e| CliError::io(&dir, e))?;
    let mut report = String::new();
    for (label, [a1, a2, a3]) in FIGURE1_STATES {
        let state = Bloch64::new(a1, a2, a3)?;
        let curve = sweep(&state, cfg.x_min, cfg.x_max, cfg.steps)?;
        let path = dir.join(format!("fig1{label}.csv"));
        let mut w = create(&path)?;
        write_sweep_csv(&mut w, &curve, cfg.precision).map_err(|e| CliError::io(&path, e))?;
        let _ = writeln!(report, "== fig1{label} -> {}", path.display());
        report.push_str(&summarize(&curve));
    }
    print!("{report}");
    Ok(())
}

pub fn cmd_validate(cfg: &RunConfig) -> Result<(), CliError> {
    let opts = ValidationOptions {
        grid_resolution: cfg.grid_resolution,
        inject_broken_channel: cfg.inject_broken_channel,
        ..Default::default()
    };
    let report = run_validation(&opts)?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for c in &report.checks {
        writeln!(
            out,
            "[{}] {}: max deviation {:e} (tolerance {:e}); {}",
            if c.passed { "PASS" } else { "FAIL" },
            c.name,
            c.deviation,
            c.tolerance,
            c.detail
        )
        .map_err(|e| CliError::io("<stdout>", e))?;
    }
    if report.passed() {
        Ok(())
    } else {
        let names: Vec<&str> = report.failures().map(|c| c.name).collect();
        Err(CliError::ValidationFailed(names.join(", ")))
    }
}
