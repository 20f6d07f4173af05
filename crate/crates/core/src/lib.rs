// Copyright 2026 qresonance Contributors
// SPDX-License-Identifier: Apache-2.0

//! Noisy single-qubit channels described by Kraus operators, their entropy
//! exchange, coherent information and entangled fidelity, and a search for
//! noise enhancement along parametric sweeps of the two-Pauli channel.
//!
//! Everything numeric is generic over [`Real`] (`f32` or `f64`). The
//! `*64`/`*32` aliases below fix the scalar for the common cases.

pub mod channel;
pub mod dilation;
pub mod error;
pub mod linalg;
pub mod resonance;
pub mod sampling;
pub mod scalar;
pub mod two_pauli;
pub mod validation;

pub use channel::{
    apply_channel, bloch_to_density, channel_metrics, coherent_information, completeness_residual, density_to_bloch,
    entangled_fidelity, entropy_exchange, exchange_matrix, quantum_mutual_information, von_neumann_entropy,
    BlochVector, ChannelMetrics, ExchangeMatrix, KrausChannel, QubitDensityMatrix,
};
pub use dilation::environment_output;
pub use error::{Error, Result};
pub use linalg::{hermitian_eigenvalues, ComplexMatrix};
pub use resonance::{
    analyze, detect_enhancement, detect_multivalued, estimate_slopes, state_scan, sweep, EnhancementReport, Quantity,
    ScanReport, SlopeSample, SweepCurve,
};
pub use scalar::Real;
pub use two_pauli::{make_two_pauli, two_pauli_metrics, TwoPauliParams};

pub type Complex64 = num_complex::Complex<f64>;
pub type Complex32 = num_complex::Complex<f32>;

pub type ComplexMatrix64 = ComplexMatrix<f64>;
pub type ComplexMatrix32 = ComplexMatrix<f32>;
pub type Bloch64 = BlochVector<f64>;
pub type Bloch32 = BlochVector<f32>;
pub type Density64 = QubitDensityMatrix<f64>;
pub type Density32 = QubitDensityMatrix<f32>;
pub type Channel64 = KrausChannel<f64>;
pub type Channel32 = KrausChannel<f32>;
pub type Metrics64 = ChannelMetrics<f64>;
pub type Metrics32 = ChannelMetrics<f32>;
pub type Curve64 = SweepCurve<f64>;
pub type Curve32 = SweepCurve<f32>;
