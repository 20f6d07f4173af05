// Copyright 2026 qresonance Contributors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

/// Errors raised by the linear algebra, channel and analysis layers.
///
/// Numeric payloads are carried as `f64` regardless of the scalar type used
/// for the computation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("unsupported matrix dimension {dim} (expected 1..={max})")]
    UnsupportedDimension { dim: usize, max: usize },

    #[error("entry buffer of length {len} does not describe a {dim}x{dim} matrix")]
    BadShape { dim: usize, len: usize },

    #[error("non-finite matrix entry")]
    NonFinite,

    #[error("matrix is not Hermitian (residual {residual:e} > {tol:e})")]
    NotHermitian { residual: f64, tol: f64 },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("unphysical Bloch vector (|a|^2 = {norm_sq})")]
    UnphysicalBloch { norm_sq: f64 },

    #[error("not a density matrix: {0}")]
    InvalidDensity(&'static str),

    #[error("not positive semidefinite (eigenvalue {eigenvalue:e})")]
    NotPositiveSemidefinite { eigenvalue: f64 },

    #[error("Kraus operators violate completeness (residual {residual:e})")]
    Incomplete { residual: f64 },

    #[error("a Kraus channel needs 1..={max} operators, got {count}")]
    KrausCount { count: usize, max: usize },

    #[error("Kraus operators must be 2x2, got {dim}x{dim}")]
    KrausDimension { dim: usize },

    #[error("fidelity has imaginary residue {imag:e}")]
    ComplexFidelity { imag: f64 },

    #[error("{name} = {value} outside [0, 1]")]
    OutOfUnitInterval { name: &'static str, value: f64 },

    #[error("invalid sweep range [{x_min}, {x_max}] (need 0 <= min < max <= 1)")]
    InvalidRange { x_min: f64, x_max: f64 },

    #[error("need at least {min} points, got {got}")]
    TooFewPoints { got: usize, min: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
