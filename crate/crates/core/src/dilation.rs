// Copyright 2026 qresonance Contributors
// SPDX-License-Identifier: Apache-2.0

//! Explicit purification and dilation of a Kraus channel.
//!
//! The input is purified against a two-level reference `R`,
//! `|psi> = sum_r sqrt(mu_r) |r>_R |e_r>_S`, from the eigen-decomposition of
//! `rho`. The environment starts in `|0_E>`; the interaction restricted to
//! that input is the isometry `V|phi> = sum_e A_e|phi> (x) |e>`. The result is
//! a pure state on `R (x) S (x) E` whose reduced states are obtained by
//! explicit partial traces. This path never forms `Tr(A_i rho A_j^†)`, so its
//! spectra serve as an oracle for the exchange matrix.

use num_complex::Complex;

use crate::channel::{KrausChannel, QubitDensityMatrix, DENSITY_TOL};
use crate::linalg::{hermitian_eigen, ComplexMatrix};
use crate::scalar::Real;

/// Pure joint state of reference, system and environment after the
/// interaction, indexed `(r * 2 + s) * k + e`.
#[derive(Clone, Debug)]
pub struct JointState<T> {
    k: usize,
    amplitudes: Vec<Complex<T>>,
}

impl<T: Real> JointState<T> {
    pub fn environment_dim(&self) -> usize {
        self.k
    }

    fn amp(&self, r: usize, s: usize, e: usize) -> Complex<T> {
        self.amplitudes[(r * 2 + s) * self.k + e]
    }

    pub fn norm_sq(&self) -> T {
        self.amplitudes.iter().fold(T::zero(), |acc, z| acc + z.norm_sqr())
    }

    /// `Tr_{R,S}`: the environment after the interaction (`k x k`).
    pub fn environment(&self) -> ComplexMatrix<T> {
        let k = self.k;
        let mut out = Vec::with_capacity(k * k);
        for e in 0..k {
            for f in 0..k {
                let mut acc = Complex::new(T::zero(), T::zero());
                for r in 0..2 {
                    for s in 0..2 {
                        acc = acc + self.amp(r, s, e) * self.amp(r, s, f).conj();
                    }
                }
                out.push(acc);
            }
        }
        ComplexMatrix::from_vec(k, out).expect("k is a valid Kraus arity")
    }

    /// `Tr_{R,E}`: the channel output.
    pub fn system(&self) -> ComplexMatrix<T> {
        let mut out = Vec::with_capacity(4);
        for s in 0..2 {
            for t in 0..2 {
                let mut acc = Complex::new(T::zero(), T::zero());
                for r in 0..2 {
                    for e in 0..self.k {
                        acc = acc + self.amp(r, s, e) * self.amp(r, t, e).conj();
                    }
                }
                out.push(acc);
            }
        }
        ComplexMatrix::from_vec(2, out).expect("2x2")
    }

    /// `Tr_E`: joint reference-system state (`4 x 4`); its spectrum equals the
    /// environment's because the global state is pure.
    pub fn reference_system(&self) -> ComplexMatrix<T> {
        let mut out = Vec::with_capacity(16);
        for (r, s) in (0..2).flat_map(|r| (0..2).map(move |s| (r, s))) {
            for (q, t) in (0..2).flat_map(|q| (0..2).map(move |t| (q, t))) {
                let mut acc = Complex::new(T::zero(), T::zero());
                for e in 0..self.k {
                    acc = acc + self.amp(r, s, e) * self.amp(q, t, e).conj();
                }
                out.push(acc);
            }
        }
        ComplexMatrix::from_vec(4, out).expect("4x4")
    }
}

/// Purifies `rho` and applies the isometric dilation of `ch` to the system.
pub fn joint_state<T: Real>(ch: &KrausChannel<T>, rho: &QubitDensityMatrix<T>) -> JointState<T> {
    let k = ch.arity();
    let zero = Complex::new(T::zero(), T::zero());
    let eig = hermitian_eigen(rho.matrix(), T::tol(DENSITY_TOL)).expect("density matrices are Hermitian");
    let mut amplitudes = vec![zero; 4 * k];
    for r in 0..2 {
        let weight = eig.values[r].max(T::zero()).sqrt();
        let phi = eig.vector(r);
        for (e, a) in ch.operators().iter().enumerate() {
            for s in 0..2 {
                let out = a.get(s, 0) * phi[0] + a.get(s, 1) * phi[1];
                amplitudes[(r * 2 + s) * k + e] = out * weight;
            }
        }
    }
    JointState { k, amplitudes }
}

/// Reduced state of the environment after the interaction (`k x k`).
pub fn environment_output<T: Real>(ch: &KrausChannel<T>, rho: &QubitDensityMatrix<T>) -> ComplexMatrix<T> {
    joint_state(ch, rho).environment()
}
