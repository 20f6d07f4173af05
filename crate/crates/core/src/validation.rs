// Copyright 2026 qresonance Contributors
// SPDX-License-Identifier: Apache-2.0

//! Self-checks over the channel machinery: completeness, exchange-matrix
//! structure, closed-form versus generic agreement, the dilation oracle and
//! the pure-state collapse of the coherent information.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::channel::{
    apply_channel, bloch_to_density, completeness_residual, density_to_bloch, entangled_fidelity, exchange_matrix,
    output_entropy, KrausChannel, MAX_KRAUS,
};
use crate::dilation::environment_output;
use crate::error::Result;
use crate::linalg::{hermitian_eigenvalues, ComplexMatrix};
use crate::resonance::bloch_grid;
use crate::sampling::{random_bloch, random_channel, random_pure_bloch};
use crate::two_pauli::{
    analytic_exchange_matrix, analytic_fidelity, analytic_output_bloch, analytic_output_entropy, make_two_pauli,
    two_pauli_metrics, TwoPauliParams,
};

#[derive(Clone, Debug)]
pub struct ValidationOptions {
    /// Points per axis of the Bloch grid used for the closed-form comparison.
    pub grid_resolution: usize,
    /// Number of x-values in `[0, 1]`.
    pub x_points: usize,
    pub random_pairs: usize,
    pub pure_states: usize,
    pub seed: u64,
    /// Adds the deliberately incomplete channel `{sqrt(0.5) I}` to the
    /// completeness check.
    pub inject_broken_channel: bool,
}

impl Default for ValidationOptions {
    fn default() -> Self {
        Self {
            grid_resolution: 9,
            x_points: 101,
            random_pairs: 100,
            pure_states: 50,
            seed: 1999,
            inject_broken_channel: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckResult {
    pub name: &'static str,
    /// Largest observed deviation.
    pub deviation: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &'static str, deviation: f64, tolerance: f64, detail: String) -> Self {
        Self {
            name,
            deviation,
            tolerance,
            passed: deviation <= tolerance,
            detail,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ValidationReport {
    pub checks: Vec<CheckResult>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn x_grid(points: usize) -> Vec<f64> {
    (0..points)
        .map(|i| {
            if i + 1 == points {
                1.0
            } else {
                i as f64 / (points - 1) as f64
            }
        })
        .collect()
}

fn check_completeness(opts: &ValidationOptions) -> CheckResult {
    let mut worst = x_grid(opts.x_points)
        .into_iter()
        .map(|x| completeness_residual(&make_two_pauli(TwoPauliParams::new(x).expect("grid in [0, 1]"))))
        .fold(0.0, f64::max);
    let mut detail = format!("two-Pauli over {} x-values", opts.x_points);
    if opts.inject_broken_channel {
        let broken = KrausChannel::new(
            "broken",
            vec![ComplexMatrix::identity(2).expect("2x2").scale_real(0.5f64.sqrt())],
        )
        .expect("one 2x2 operator");
        let r = completeness_residual(&broken);
        worst = worst.max(r);
        detail = format!("{detail}; injected channel '{}' residual {r:e}", broken.label());
    }
    CheckResult::new("completeness", worst, 1e-12, detail)
}

fn check_exchange_structure(opts: &ValidationOptions, rng: &mut ChaCha8Rng) -> Result<CheckResult> {
    let mut worst = 0.0f64;
    let mut min_eigenvalue = f64::INFINITY;
    for _ in 0..opts.random_pairs {
        let k = rng.gen_range(1..=MAX_KRAUS);
        let ch = random_channel::<f64, _>(rng, k);
        let rho = bloch_to_density(&random_bloch(rng));
        let w = exchange_matrix(&ch, &rho)?;
        let herm = w.matrix().hermitian_residual();
        let tr = (w.matrix().trace().re - 1.0).abs();
        min_eigenvalue = min_eigenvalue.min(w.eigenvalues()?[0]);
        let out_tr = (apply_channel(&ch, &rho)?.matrix().trace().re - 1.0).abs();
        let f = entangled_fidelity(&ch, &rho)?;
        let f_out = (f - 1.0).max(-f).max(0.0);
        worst = worst.max(herm).max(tr).max(out_tr).max(f_out);
    }
    let mut check = CheckResult::new(
        "exchange matrix structure",
        worst,
        1e-12,
        format!(
            "Hermitian, unit trace, trace-preserving, F in [0,1] on {} random pairs; min eigenvalue {min_eigenvalue:e}",
            opts.random_pairs
        ),
    );
    check.passed &= min_eigenvalue >= -crate::channel::NEGATIVE_EIGENVALUE_TOL;
    Ok(check)
}

fn check_analytic_vs_generic(opts: &ValidationOptions) -> Result<CheckResult> {
    let grid = bloch_grid::<f64>(opts.grid_resolution)?;
    let xs = x_grid(opts.x_points);
    let per_state = grid
        .par_iter()
        .map(|a| -> Result<f64> {
            let rho = bloch_to_density(a);
            let mut worst = 0.0f64;
            for &x in &xs {
                let p = TwoPauliParams::new(x)?;
                let ch = make_two_pauli(p);
                let w = exchange_matrix(&ch, &rho)?;
                worst = worst.max(w.matrix().max_abs_diff(analytic_exchange_matrix(a, p).matrix())?);
                let out = apply_channel(&ch, &rho)?;
                let b = density_to_bloch(&out).components();
                for (g, e) in b.iter().zip(analytic_output_bloch(a, p).components()) {
                    worst = worst.max((g - e).abs());
                }
                worst = worst.max((output_entropy(&ch, &rho)? - analytic_output_entropy(a, p)).abs());
                worst = worst.max((entangled_fidelity(&ch, &rho)? - analytic_fidelity(a, p)).abs());
            }
            Ok(worst)
        })
        .collect::<Result<Vec<_>>>()?;
    let worst = per_state.into_iter().fold(0.0, f64::max);
    Ok(CheckResult::new(
        "analytic vs generic",
        worst,
        1e-12,
        format!("{} grid states x {} x-values", grid.len(), xs.len()),
    ))
}

fn check_dilation(opts: &ValidationOptions, rng: &mut ChaCha8Rng) -> Result<CheckResult> {
    let mut worst = 0.0f64;
    for _ in 0..opts.random_pairs {
        let k = rng.gen_range(1..=MAX_KRAUS);
        let ch = random_channel::<f64, _>(rng, k);
        let rho = bloch_to_density(&random_bloch(rng));
        let env = hermitian_eigenvalues(&environment_output(&ch, &rho), 1e-10)?;
        let w = exchange_matrix(&ch, &rho)?.eigenvalues()?;
        for (a, b) in env.iter().zip(&w) {
            worst = worst.max((a - b).abs());
        }
    }
    Ok(CheckResult::new(
        "dilation oracle",
        worst,
        1e-10,
        format!("{} random (channel, state) pairs", opts.random_pairs),
    ))
}

fn check_pure_collapse(opts: &ValidationOptions, rng: &mut ChaCha8Rng) -> Result<CheckResult> {
    let xs = x_grid(opts.x_points);
    let mut worst = 0.0f64;
    for _ in 0..opts.pure_states {
        let a = random_pure_bloch::<f64, _>(rng);
        for &x in &xs {
            worst = worst.max(two_pauli_metrics(&a, TwoPauliParams::new(x)?)?.coherent_info.abs());
        }
    }
    Ok(CheckResult::new(
        "pure-state collapse",
        worst,
        1e-9,
        format!("|C| over {} pure states", opts.pure_states),
    ))
}

/// Runs every check; deterministic for a given seed.
pub fn run_validation(opts: &ValidationOptions) -> Result<ValidationReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let checks = vec![
        check_completeness(opts),
        check_exchange_structure(opts, &mut rng)?,
        check_analytic_vs_generic(opts)?,
        check_dilation(opts, &mut rng)?,
        check_pure_collapse(opts, &mut rng)?,
    ];
    Ok(ValidationReport { checks })
}
