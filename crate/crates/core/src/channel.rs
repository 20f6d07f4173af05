// Copyright 2026 qresonance Contributors
// SPDX-License-Identifier: Apache-2.0

//! Qubit states, Kraus channels and the information measures built on them:
//! von Neumann entropy, entropy exchange, coherent information, quantum
//! mutual information and entangled fidelity.
//!
//! All entropies are in bits. The eigenvalue convention is shared by every
//! entropy: `0 log2 0 = 0`, eigenvalues in `[-1e-10, 0)` are rounding noise
//! and clamped to zero, anything more negative is rejected.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, ComplexMatrix, DEFAULT_HERMITIAN_TOL};
use crate::scalar::{entropy_term, Real};

/// Slack on `|a|^2 <= 1` accepted for physical Bloch vectors.
pub const BLOCH_NORM_TOL: f64 = 1e-12;
/// Hermiticity and trace slack for qubit density matrices.
pub const DENSITY_TOL: f64 = 1e-12;
/// Most negative eigenvalue treated as rounding noise.
pub const NEGATIVE_EIGENVALUE_TOL: f64 = 1e-10;
/// Accepted completeness residual for a Kraus set.
pub const COMPLETENESS_TOL: f64 = 1e-10;
/// Largest imaginary part tolerated in the fidelity sum.
pub const FIDELITY_IMAG_TOL: f64 = 1e-12;
/// Maximum number of Kraus operators.
pub const MAX_KRAUS: usize = 6;

/// Real Bloch vector `(a1, a2, a3)` with `|a| <= 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlochVector<T> {
    a: [T; 3],
}

impl<T: Real> BlochVector<T> {
    pub fn new(a1: T, a2: T, a3: T) -> Result<Self> {
        let v = Self { a: [a1, a2, a3] };
        let norm_sq = v.norm_sq();
        if !norm_sq.is_finite() || norm_sq > T::one() + T::tol(BLOCH_NORM_TOL) {
            return Err(Error::UnphysicalBloch {
                norm_sq: norm_sq.as_f64(),
            });
        }
        Ok(v)
    }

    pub fn origin() -> Self {
        Self { a: [T::zero(); 3] }
    }

    /// Skips the norm check; only for vectors produced by contractive maps.
    pub(crate) fn from_components_unchecked(a: [T; 3]) -> Self {
        Self { a }
    }

    pub fn components(&self) -> [T; 3] {
        self.a
    }

    pub fn a1(&self) -> T {
        self.a[0]
    }

    pub fn a2(&self) -> T {
        self.a[1]
    }

    pub fn a3(&self) -> T {
        self.a[2]
    }

    pub fn norm_sq(&self) -> T {
        self.a.iter().fold(T::zero(), |s, &v| s + v * v)
    }

    pub fn norm(&self) -> T {
        self.norm_sq().sqrt()
    }

    /// `a1^2 + a2^2`, the transverse part that drives the fidelity.
    pub fn transverse_sq(&self) -> T {
        self.a[0] * self.a[0] + self.a[1] * self.a[1]
    }

    pub fn is_pure(&self, tol: T) -> bool {
        (self.norm_sq() - T::one()).abs() <= tol
    }
}

/// Qubit density matrix: Hermitian, unit trace, positive semidefinite.
#[derive(Clone, Debug, PartialEq)]
pub struct QubitDensityMatrix<T> {
    mat: ComplexMatrix<T>,
}

impl<T: Real> QubitDensityMatrix<T> {
    pub fn new(mat: ComplexMatrix<T>) -> Result<Self> {
        if mat.dim() != 2 {
            return Err(Error::InvalidDensity("qubit density matrices are 2x2"));
        }
        let tol = T::tol(DENSITY_TOL);
        if mat.hermitian_residual() > tol {
            return Err(Error::InvalidDensity("not Hermitian"));
        }
        if (mat.trace() - Complex::new(T::one(), T::zero())).norm() > tol {
            return Err(Error::InvalidDensity("trace differs from one"));
        }
        let ev = hermitian_eigenvalues(&mat, tol)?;
        if ev[0] < -T::tol(NEGATIVE_EIGENVALUE_TOL) {
            return Err(Error::NotPositiveSemidefinite {
                eigenvalue: ev[0].as_f64(),
            });
        }
        Ok(Self { mat })
    }

    pub(crate) fn from_matrix_unchecked(mat: ComplexMatrix<T>) -> Self {
        Self { mat }
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.mat
    }

    pub fn into_matrix(self) -> ComplexMatrix<T> {
        self.mat
    }
}

/// Ordered Kraus operators `A_i` of a qubit channel.
///
/// Construction checks shape only so that incomplete sets can still be
/// inspected with [`completeness_residual`]; every operation that applies the
/// channel checks completeness first.
#[derive(Clone, Debug, PartialEq)]
pub struct KrausChannel<T> {
    operators: Vec<ComplexMatrix<T>>,
    label: String,
}

impl<T: Real> KrausChannel<T> {
    pub fn new(label: impl Into<String>, operators: Vec<ComplexMatrix<T>>) -> Result<Self> {
        if operators.is_empty() || operators.len() > MAX_KRAUS {
            return Err(Error::KrausCount {
                count: operators.len(),
                max: MAX_KRAUS,
            });
        }
        if let Some(op) = operators.iter().find(|op| op.dim() != 2) {
            return Err(Error::KrausDimension { dim: op.dim() });
        }
        Ok(Self {
            operators,
            label: label.into(),
        })
    }

    /// The single-operator channel `{I}`.
    pub fn identity() -> Self {
        Self {
            operators: vec![ComplexMatrix::identity(2).expect("2 is a valid dimension")],
            label: "identity".to_owned(),
        }
    }

    pub fn operators(&self) -> &[ComplexMatrix<T>] {
        &self.operators
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Number of Kraus operators `k`.
    pub fn arity(&self) -> usize {
        self.operators.len()
    }

    /// Same operators in a different order; `order` must be a permutation.
    pub fn permuted(&self, order: &[usize]) -> Result<Self> {
        let mut seen = [false; MAX_KRAUS];
        if order.len() != self.arity()
            || order
                .iter()
                .any(|&i| i >= self.arity() || std::mem::replace(&mut seen[i], true))
        {
            return Err(Error::KrausCount {
                count: order.len(),
                max: self.arity(),
            });
        }
        let operators = order.iter().map(|&i| self.operators[i].clone()).collect();
        Ok(Self {
            operators,
            label: self.label.clone(),
        })
    }

    pub fn is_complete(&self) -> bool {
        completeness_residual(self) <= T::tol(COMPLETENESS_TOL)
    }

    pub fn ensure_complete(&self) -> Result<()> {
        let residual = completeness_residual(self);
        if residual > T::tol(COMPLETENESS_TOL) {
            Err(Error::Incomplete {
                residual: residual.as_f64(),
            })
        } else {
            Ok(())
        }
    }
}

/// Exchange matrix `W_ij = Tr(A_i rho A_j^†)`, a `k x k` density matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct ExchangeMatrix<T> {
    mat: ComplexMatrix<T>,
}

impl<T: Real> ExchangeMatrix<T> {
    pub fn new(mat: ComplexMatrix<T>) -> Self {
        Self { mat }
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.mat
    }

    pub fn eigenvalues(&self) -> Result<Vec<T>> {
        hermitian_eigenvalues(&self.mat, T::tol(DEFAULT_HERMITIAN_TOL))
    }

    /// `-Tr(W log2 W)`.
    pub fn entropy(&self) -> Result<T> {
        spectral_entropy(&self.eigenvalues()?)
    }
}

/// One evaluation of a channel on a state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChannelMetrics<T> {
    /// Channel-family parameter, when the channel came from a swept family.
    pub x: Option<T>,
    /// Entropy exchange `N`, bits.
    pub noise: T,
    /// `H(rho_out)`, bits.
    pub output_entropy: T,
    /// `C = H(rho_out) - N`, bits.
    pub coherent_info: T,
    /// `H(rho_in) + H(rho_out) - N`, bits.
    pub mutual_info: T,
    /// Entangled fidelity.
    pub fidelity: T,
    pub output_bloch: BlochVector<T>,
}

/// Entropy in bits of a spectrum, clamping rounding-level negative values.
pub fn spectral_entropy<T: Real>(eigenvalues: &[T]) -> Result<T> {
    let floor = -T::tol(NEGATIVE_EIGENVALUE_TOL);
    let mut h = T::zero();
    for &ev in eigenvalues {
        if ev < floor {
            return Err(Error::NotPositiveSemidefinite {
                eigenvalue: ev.as_f64(),
            });
        }
        h = h + entropy_term(ev);
    }
    Ok(h)
}

/// `rho = (I + a . sigma) / 2`.
pub fn bloch_to_density<T: Real>(a: &BlochVector<T>) -> QubitDensityMatrix<T> {
    let half = T::lit(0.5);
    let [a1, a2, a3] = a.components();
    let mat = ComplexMatrix::qubit(
        Complex::new(half * (T::one() + a3), T::zero()),
        Complex::new(half * a1, -half * a2),
        Complex::new(half * a1, half * a2),
        Complex::new(half * (T::one() - a3), T::zero()),
    );
    QubitDensityMatrix::from_matrix_unchecked(mat)
}

/// `a_i = Tr(rho sigma_i)`.
pub fn density_to_bloch<T: Real>(rho: &QubitDensityMatrix<T>) -> BlochVector<T> {
    let m = rho.matrix();
    let pauli = [
        ComplexMatrix::pauli_x(),
        ComplexMatrix::pauli_y(),
        ComplexMatrix::pauli_z(),
    ];
    let mut a = [T::zero(); 3];
    for (ai, s) in a.iter_mut().zip(&pauli) {
        *ai = m.matmul(s).expect("2x2 operands").trace().re;
    }
    BlochVector::from_components_unchecked(a)
}

/// Von Neumann entropy of a qubit state, in bits.
pub fn von_neumann_entropy<T: Real>(rho: &QubitDensityMatrix<T>) -> Result<T> {
    let ev = hermitian_eigenvalues(rho.matrix(), T::tol(DEFAULT_HERMITIAN_TOL))?;
    spectral_entropy(&ev)
}

/// `max |sum_i A_i^† A_i - I|`.
pub fn completeness_residual<T: Real>(ch: &KrausChannel<T>) -> T {
    let mut sum = ComplexMatrix::zeros(2).expect("2 is a valid dimension");
    for a in ch.operators() {
        sum = sum
            .add(&a.adjoint().matmul(a).expect("2x2 operands"))
            .expect("2x2 operands");
    }
    sum.sub(&ComplexMatrix::identity(2).expect("2 is a valid dimension"))
        .expect("2x2 operands")
        .max_norm()
}

/// `N(rho) = sum_i A_i rho A_i^†`.
pub fn apply_channel<T: Real>(ch: &KrausChannel<T>, rho: &QubitDensityMatrix<T>) -> Result<QubitDensityMatrix<T>> {
    ch.ensure_complete()?;
    let mut out = ComplexMatrix::zeros(2)?;
    for a in ch.operators() {
        out = out.add(&a.matmul(rho.matrix())?.matmul(&a.adjoint())?)?;
    }
    Ok(QubitDensityMatrix::from_matrix_unchecked(out))
}

/// `W_ij = Tr(A_i rho A_j^†)`.
pub fn exchange_matrix<T: Real>(ch: &KrausChannel<T>, rho: &QubitDensityMatrix<T>) -> Result<ExchangeMatrix<T>> {
    let ops = ch.operators();
    let k = ops.len();
    let left: Vec<ComplexMatrix<T>> = ops.iter().map(|a| a.matmul(rho.matrix())).collect::<Result<_>>()?;
    let mut data = Vec::with_capacity(k * k);
    for ai_rho in &left {
        for aj in ops {
            data.push(ai_rho.matmul(&aj.adjoint())?.trace());
        }
    }
    Ok(ExchangeMatrix::new(ComplexMatrix::from_vec(k, data)?))
}

/// Entropy exchange `N = -Tr(W log2 W)`.
pub fn entropy_exchange<T: Real>(ch: &KrausChannel<T>, rho: &QubitDensityMatrix<T>) -> Result<T> {
    exchange_matrix(ch, rho)?.entropy()
}

/// Entropy of the trace-normalized channel output.
pub fn output_entropy<T: Real>(ch: &KrausChannel<T>, rho: &QubitDensityMatrix<T>) -> Result<T> {
    let out = apply_channel(ch, rho)?.into_matrix();
    let tr = out.trace().re;
    von_neumann_entropy(&QubitDensityMatrix::from_matrix_unchecked(
        out.scale_real(T::one() / tr),
    ))
}

/// `C = H(N(rho) / Tr N(rho)) - N`.
pub fn coherent_information<T: Real>(ch: &KrausChannel<T>, rho: &QubitDensityMatrix<T>) -> Result<T> {
    Ok(output_entropy(ch, rho)? - entropy_exchange(ch, rho)?)
}

/// `H(rho) + H(N(rho)) - N`.
pub fn quantum_mutual_information<T: Real>(ch: &KrausChannel<T>, rho: &QubitDensityMatrix<T>) -> Result<T> {
    Ok(von_neumann_entropy(rho)? + output_entropy(ch, rho)? - entropy_exchange(ch, rho)?)
}

/// `F = sum_mu Tr(rho A_mu) Tr(rho A_mu^†)`.
pub fn entangled_fidelity<T: Real>(ch: &KrausChannel<T>, rho: &QubitDensityMatrix<T>) -> Result<T> {
    let mut f = Complex::new(T::zero(), T::zero());
    for a in ch.operators() {
        let t = rho.matrix().matmul(a)?.trace();
        let t_dag = rho.matrix().matmul(&a.adjoint())?.trace();
        f = f + t * t_dag;
    }
    if f.im.abs() > T::tol(FIDELITY_IMAG_TOL) {
        return Err(Error::ComplexFidelity { imag: f.im.as_f64() });
    }
    Ok(f.re)
}

/// Every measure of `ch` on `rho`, computed through the generic Kraus path.
pub fn channel_metrics<T: Real>(
    ch: &KrausChannel<T>,
    rho: &QubitDensityMatrix<T>,
    x: Option<T>,
) -> Result<ChannelMetrics<T>> {
    let noise = entropy_exchange(ch, rho)?;
    let out = apply_channel(ch, rho)?;
    let output_entropy = output_entropy(ch, rho)?;
    Ok(ChannelMetrics {
        x,
        noise,
        output_entropy,
        coherent_info: output_entropy - noise,
        mutual_info: von_neumann_entropy(rho)? + output_entropy - noise,
        fidelity: entangled_fidelity(ch, rho)?,
        output_bloch: density_to_bloch(&out),
    })
}
