// Copyright 2026 qresonance Contributors
// SPDX-License-Identifier: Apache-2.0

//! Random states and channels for property checks.

use num_complex::Complex;
use rand::Rng;

use crate::channel::{BlochVector, KrausChannel, MAX_KRAUS};
use crate::linalg::{hermitian_eigen, ComplexMatrix};
use crate::scalar::Real;

/// Uniform point in the Bloch ball.
pub fn random_bloch<T: Real, R: Rng + ?Sized>(rng: &mut R) -> BlochVector<T> {
    loop {
        let a: [f64; 3] = [
            rng.gen_range(-1.0..=1.0),
            rng.gen_range(-1.0..=1.0),
            rng.gen_range(-1.0..=1.0),
        ];
        if a.iter().map(|v| v * v).sum::<f64>() <= 1.0 {
            return BlochVector::new(T::lit(a[0]), T::lit(a[1]), T::lit(a[2])).expect("inside the ball");
        }
    }
}

/// Uniform point on the Bloch sphere (a pure state).
pub fn random_pure_bloch<T: Real, R: Rng + ?Sized>(rng: &mut R) -> BlochVector<T> {
    let z: f64 = rng.gen_range(-1.0..=1.0);
    let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let r = (1.0 - z * z).sqrt();
    BlochVector::new(T::lit(r * phi.cos()), T::lit(r * phi.sin()), T::lit(z)).expect("on the sphere")
}

/// Random complete set of `k` Kraus operators, `A_i = G_i S^{-1/2}` with
/// `S = sum_i G_i^† G_i` with uniformly drawn complex entries in `G_i`.
pub fn random_channel<T: Real, R: Rng + ?Sized>(rng: &mut R, k: usize) -> KrausChannel<T> {
    assert!((1..=MAX_KRAUS).contains(&k), "arity out of range");
    loop {
        let gs: Vec<ComplexMatrix<T>> = (0..k)
            .map(|_| {
                let data = (0..4)
                    .map(|_| Complex::new(T::lit(rng.gen_range(-1.0..1.0)), T::lit(rng.gen_range(-1.0..1.0))))
                    .collect();
                ComplexMatrix::from_vec(2, data).expect("2x2")
            })
            .collect();
        let mut s = ComplexMatrix::zeros(2).expect("2x2");
        for g in &gs {
            s = s.add(&g.adjoint().matmul(g).expect("2x2")).expect("2x2");
        }
        let eig = hermitian_eigen(&s, T::tol(1e-10)).expect("Gram matrix is Hermitian");
        if eig.values[0] < T::lit(1e-3) {
            continue;
        }
        let inv_sqrt: Vec<T> = eig.values.iter().map(|&v| T::one() / v.sqrt()).collect();
        let u = &eig.vectors;
        let d = ComplexMatrix::from_diagonal(&inv_sqrt).expect("2x2");
        let s_inv_sqrt = u.matmul(&d).and_then(|m| m.matmul(&u.adjoint())).expect("2x2");
        let ops = gs.iter().map(|g| g.matmul(&s_inv_sqrt).expect("2x2")).collect();
        return KrausChannel::new(format!("random-{k}"), ops).expect("valid arity");
    }
}
