// Copyright 2026 qresonance Contributors
// SPDX-License-Identifier: Apache-2.0

//! The two-Pauli channel: with probability `x` the qubit is left alone,
//! otherwise `sigma_1` or `sigma_2` is applied with equal probability.
//!
//! Each quantity is available in closed form here and through the generic
//! Kraus path in [`crate::channel`]; the two are cross-checked in tests.

use num_complex::Complex;

use crate::channel::{spectral_entropy, BlochVector, ChannelMetrics, ExchangeMatrix, KrausChannel};
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::scalar::{entropy_term, Real};

/// Flipping-rate parameter `x` in `[0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct TwoPauliParams<T> {
    x: T,
}

impl<T: Real> TwoPauliParams<T> {
    pub fn new(x: T) -> Result<Self> {
        if !(x >= T::zero() && x <= T::one()) {
            return Err(Error::OutOfUnitInterval {
                name: "x",
                value: x.as_f64(),
            });
        }
        Ok(Self { x })
    }

    pub fn x(&self) -> T {
        self.x
    }
}

fn half<T: Real>() -> T {
    T::lit(0.5)
}

/// Kraus set `[sqrt(x) I, sqrt((1-x)/2) sigma_1, -i sqrt((1-x)/2) sigma_2]`.
///
/// The order and the `-i` phase on the third operator fix the layout and
/// phases of the exchange matrix; neither may change.
pub fn make_two_pauli<T: Real>(p: TwoPauliParams<T>) -> KrausChannel<T> {
    let x = p.x();
    let s = ((T::one() - x) * half()).sqrt();
    let ops = vec![
        ComplexMatrix::identity(2).expect("2x2").scale_real(x.sqrt()),
        ComplexMatrix::pauli_x().scale_real(s),
        ComplexMatrix::pauli_y().scale(Complex::new(T::zero(), -s)),
    ];
    KrausChannel::new(format!("two-pauli(x={x})"), ops).expect("three 2x2 operators")
}

/// `b = (a1 x, a2 x, a3 (2x - 1))`.
pub fn analytic_output_bloch<T: Real>(a: &BlochVector<T>, p: TwoPauliParams<T>) -> BlochVector<T> {
    let x = p.x();
    let two = T::lit(2.0);
    BlochVector::from_components_unchecked([a.a1() * x, a.a2() * x, a.a3() * (two * x - T::one())])
}

/// Closed-form exchange matrix of the two-Pauli channel.
pub fn analytic_exchange_matrix<T: Real>(a: &BlochVector<T>, p: TwoPauliParams<T>) -> ExchangeMatrix<T> {
    let x = p.x();
    let zero = T::zero();
    let r = |v: T| Complex::new(v, zero);
    let g = (x * (T::one() - x) * half()).sqrt();
    let d = (T::one() - x) * half();
    let w12 = r(a.a1() * g);
    let w13 = Complex::new(zero, a.a2() * g);
    let w23 = r(a.a3() * d);
    let mat = ComplexMatrix::from_rows(&[
        [r(x), w12, w13],
        [w12.conj(), r(d), w23],
        [w13.conj(), w23.conj(), r(d)],
    ])
    .expect("3x3");
    ExchangeMatrix::new(mat)
}

/// Output Bloch radius `sqrt((a1^2 + a2^2) x^2 + a3^2 (1 - 2x)^2)`.
fn output_radius<T: Real>(a: &BlochVector<T>, x: T) -> T {
    let z = T::one() - T::lit(2.0) * x;
    (a.transverse_sq() * x * x + a.a3() * a.a3() * z * z)
        .sqrt()
        .min(T::one())
}

/// Binary entropy of the eigenvalues `(1 +- r) / 2` of a qubit with Bloch radius `r`.
pub fn radius_entropy<T: Real>(r: T) -> T {
    let r = r.min(T::one());
    entropy_term((T::one() + r) * half()) + entropy_term((T::one() - r) * half())
}

/// Output entropy `-theta_1 log2 theta_1 - theta_2 log2 theta_2`.
pub fn analytic_output_entropy<T: Real>(a: &BlochVector<T>, p: TwoPauliParams<T>) -> T {
    radius_entropy(output_radius(a, p.x()))
}

/// `F = (a1^2 + a2^2)(1 - x)/2 + x`.
pub fn analytic_fidelity<T: Real>(a: &BlochVector<T>, p: TwoPauliParams<T>) -> T {
    let x = p.x();
    a.transverse_sq() * (T::one() - x) * half() + x
}

/// All metrics for one `(a, x)` point; noise comes from the spectrum of the
/// closed-form exchange matrix.
pub fn two_pauli_metrics<T: Real>(a: &BlochVector<T>, p: TwoPauliParams<T>) -> Result<ChannelMetrics<T>> {
    let noise = spectral_entropy(&analytic_exchange_matrix(a, p).eigenvalues()?)?;
    let output_entropy = analytic_output_entropy(a, p);
    Ok(ChannelMetrics {
        x: Some(p.x()),
        noise,
        output_entropy,
        coherent_info: output_entropy - noise,
        mutual_info: radius_entropy(a.norm()) + output_entropy - noise,
        fidelity: analytic_fidelity(a, p),
        output_bloch: analytic_output_bloch(a, p),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::{
        apply_channel, bloch_to_density, channel_metrics, density_to_bloch, exchange_matrix, von_neumann_entropy,
    };
    use crate::linalg::hermitian_eigenvalues;
    use crate::sampling::{random_bloch, random_pure_bloch};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    type B = BlochVector<f64>;

    fn p(x: f64) -> TwoPauliParams<f64> {
        TwoPauliParams::new(x).unwrap()
    }

    fn h2(q: f64) -> f64 {
        entropy_term(q) + entropy_term(1.0 - q)
    }

    #[test]
    fn parameter_domain() {
        assert!(TwoPauliParams::new(-0.01).is_err());
        assert!(TwoPauliParams::new(1.01).is_err());
        assert!(TwoPauliParams::new(f64::NAN).is_err());
        assert!(TwoPauliParams::new(0.0).is_ok() && TwoPauliParams::new(1.0).is_ok());
    }

    #[test]
    fn kraus_operators() {
        let zero = ComplexMatrix::<f64>::zeros(2).unwrap();
        let id = make_two_pauli(p(1.0));
        assert_eq!(id.operators()[0], ComplexMatrix::identity(2).unwrap());
        assert_eq!(id.operators()[1], zero);
        assert_eq!(id.operators()[2].max_norm(), 0.0);

        let flip = make_two_pauli(p(0.0));
        let s = 0.5f64.sqrt();
        assert_eq!(flip.operators()[0], zero);
        assert_eq!(flip.operators()[1], ComplexMatrix::pauli_x().scale_real(s));
        assert_eq!(
            flip.operators()[2],
            ComplexMatrix::pauli_y().scale(Complex::new(0.0, -s))
        );

        let mid = make_two_pauli(p(0.5));
        assert!(
            mid.operators()[0]
                .max_abs_diff(&ComplexMatrix::identity(2).unwrap().scale_real(s))
                .unwrap()
                < 1e-16
        );
        assert!(
            mid.operators()[1]
                .max_abs_diff(&ComplexMatrix::pauli_x().scale_real(0.5))
                .unwrap()
                < 1e-16
        );
        let a3 = ComplexMatrix::pauli_y().scale(Complex::new(0.0, -0.5));
        assert!(mid.operators()[2].max_abs_diff(&a3).unwrap() < 1e-16);
        for x in [0.0, 0.13, 0.5, 0.999, 1.0] {
            assert!(crate::channel::completeness_residual(&make_two_pauli(p(x))) <= 1e-15);
        }
    }

    #[test]
    fn output_bloch_examples() {
        let a = B::new(0.1, 0.2, 0.9).unwrap();
        assert_eq!(analytic_output_bloch(&a, p(1.0)), a);
        let b = analytic_output_bloch(&a, p(0.5)).components();
        assert_eq!(b, [0.05, 0.1, 0.0]);
        let up = B::new(0.0, 0.0, 1.0).unwrap();
        assert_eq!(analytic_output_bloch(&up, p(0.0)).components(), [0.0, 0.0, -1.0]);
    }

    #[test]
    fn exchange_matrix_examples() {
        for x in [0.0, 0.4, 1.0] {
            let w = analytic_exchange_matrix(&B::origin(), p(x));
            let want = ComplexMatrix::from_diagonal(&[x, (1.0 - x) / 2.0, (1.0 - x) / 2.0]).unwrap();
            assert_eq!(w.matrix(), &want);
        }
        let up = B::new(0.0, 0.0, 1.0).unwrap();
        for x in [0.1, 0.35, 0.8] {
            let ev = analytic_exchange_matrix(&up, p(x)).eigenvalues().unwrap();
            let mut want = [0.0, x, 1.0 - x];
            want.sort_by(|a, b| a.partial_cmp(b).unwrap());
            for (g, w) in ev.iter().zip(want) {
                assert!((g - w).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn analytic_matches_generic_on_random_points() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..100 {
            let a = random_bloch::<f64, _>(&mut rng);
            let x: f64 = rng.gen_range(0.0..=1.0);
            let ch = make_two_pauli(p(x));
            let rho = bloch_to_density(&a);
            let generic = exchange_matrix(&ch, &rho).unwrap();
            let closed = analytic_exchange_matrix(&a, p(x));
            assert!(generic.matrix().max_abs_diff(closed.matrix()).unwrap() < 1e-14);

            let out = apply_channel(&ch, &rho).unwrap();
            assert!((von_neumann_entropy(&out).unwrap() - analytic_output_entropy(&a, p(x))).abs() < 1e-12);
            let b = density_to_bloch(&out).components();
            for (g, w) in b.iter().zip(analytic_output_bloch(&a, p(x)).components()) {
                assert!((g - w).abs() < 1e-14);
            }
            let gm = channel_metrics(&ch, &rho, Some(x)).unwrap();
            let am = two_pauli_metrics(&a, p(x)).unwrap();
            assert!((gm.fidelity - am.fidelity).abs() < 1e-14);
            assert!((gm.noise - am.noise).abs() < 1e-12);
            assert!((gm.mutual_info - am.mutual_info).abs() < 1e-12);
        }
    }

    #[test]
    fn output_entropy_examples() {
        for x in [0.0, 0.3, 1.0] {
            assert!((analytic_output_entropy(&B::origin(), p(x)) - 1.0).abs() < 1e-15);
        }
        let up = B::new(0.0, 0.0, 1.0).unwrap();
        assert!((analytic_output_entropy(&up, p(0.5)) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn fidelity_examples() {
        let a = B::new(0.3, 0.4, 0.2).unwrap();
        assert_eq!(analytic_fidelity(&a, p(1.0)), 1.0);
        assert_eq!(analytic_fidelity(&B::new(0.0, 0.0, 1.0).unwrap(), p(0.0)), 0.0);
        assert!((analytic_fidelity(&a, p(0.5)) - 0.5625).abs() < 1e-15);
    }

    #[test]
    fn metrics_examples() {
        let m = two_pauli_metrics(&B::origin(), p(0.5)).unwrap();
        assert!((m.noise - 1.5).abs() < 1e-14);
        assert!((m.output_entropy - 1.0).abs() < 1e-14);
        assert!((m.coherent_info + 0.5).abs() < 1e-14);
        assert!((m.fidelity - 0.5).abs() < 1e-15);

        let up = B::new(0.0, 0.0, 1.0).unwrap();
        let m = two_pauli_metrics(&up, p(0.3)).unwrap();
        assert!((m.noise - h2(0.3)).abs() < 1e-12);
        assert!((m.output_entropy - h2(0.3)).abs() < 1e-12);
        assert!(m.coherent_info.abs() < 1e-12);
        assert!((m.fidelity - 0.3).abs() < 1e-15);

        let a = B::new(0.2, -0.5, 0.4).unwrap();
        let m = two_pauli_metrics(&a, p(1.0)).unwrap();
        assert!(m.noise.abs() < 1e-14);
        assert_eq!(m.fidelity, 1.0);
        assert_eq!(m.output_bloch, a);
        assert!((m.coherent_info - radius_entropy(a.norm())).abs() < 1e-14);
    }

    #[test]
    fn fidelity_is_increasing_in_x() {
        let a = B::new(0.3, 0.4, 0.2).unwrap();
        let mut last = f64::NEG_INFINITY;
        for i in 0..=100 {
            let f = analytic_fidelity(&a, p(i as f64 / 100.0));
            assert!(f > last);
            last = f;
        }
        // a1^2 + a2^2 = 2 is outside the ball, so the increase is always strict.
        let edge = B::new(1.0, 0.0, 0.0).unwrap();
        assert!(analytic_fidelity(&edge, p(0.6)) > analytic_fidelity(&edge, p(0.5)));
    }

    #[test]
    fn pure_states_have_equal_noise_and_output_entropy() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let a = random_pure_bloch::<f64, _>(&mut rng);
            for i in 0..=100 {
                let m = two_pauli_metrics(&a, p(i as f64 / 100.0)).unwrap();
                assert!((m.noise - m.output_entropy).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn generic_path_in_f32() {
        let a = BlochVector::<f32>::new(0.3, 0.4, 0.2).unwrap();
        let pp = TwoPauliParams::new(0.5f32).unwrap();
        let m = two_pauli_metrics(&a, pp).unwrap();
        let gm = channel_metrics(&make_two_pauli(pp), &bloch_to_density(&a), Some(0.5)).unwrap();
        assert!((m.fidelity - 0.5625).abs() < 1e-6);
        assert!((m.noise - gm.noise).abs() < 1e-5);
        let ev = hermitian_eigenvalues(analytic_exchange_matrix(&a, pp).matrix(), 1e-6).unwrap();
        assert!((ev.iter().sum::<f32>() - 1.0).abs() < 1e-6);
    }
}
