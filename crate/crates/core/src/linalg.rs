// Copyright 2026 qresonance Contributors
// SPDX-License-Identifier: Apache-2.0

//! Small dense complex matrices and a cyclic Jacobi eigensolver for
//! Hermitian input.
//!
//! Dimensions are limited to [`MAX_DIM`]; every matrix handled by the crate
//! (qubit states, Kraus operators, exchange matrices of up to six operators)
//! fits.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Largest supported matrix dimension.
pub const MAX_DIM: usize = 6;

/// Default Hermiticity tolerance for [`hermitian_eigenvalues`].
pub const DEFAULT_HERMITIAN_TOL: f64 = 1e-10;

/// Jacobi stops once the off-diagonal Frobenius norm falls below this.
pub const JACOBI_OFF_DIAGONAL_TOL: f64 = 1e-14;

/// Iteration cap, counted in full cyclic sweeps.
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Square complex matrix stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix<T> {
    dim: usize,
    data: Vec<Complex<T>>,
}

fn check_dim(dim: usize) -> Result<()> {
    if dim == 0 || dim > MAX_DIM {
        Err(Error::UnsupportedDimension { dim, max: MAX_DIM })
    } else {
        Ok(())
    }
}

impl<T: Real> ComplexMatrix<T> {
    /// Builds a matrix from `dim * dim` row-major entries.
    pub fn from_vec(dim: usize, data: Vec<Complex<T>>) -> Result<Self> {
        check_dim(dim)?;
        if data.len() != dim * dim {
            return Err(Error::BadShape { dim, len: data.len() });
        }
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { dim, data })
    }

    /// Builds a matrix from nested rows.
    pub fn from_rows<R: AsRef<[Complex<T>]>>(rows: &[R]) -> Result<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for r in rows {
            let r = r.as_ref();
            if r.len() != dim {
                return Err(Error::BadShape {
                    dim,
                    len: r.len() * dim,
                });
            }
            data.extend_from_slice(r);
        }
        Self::from_vec(dim, data)
    }

    pub fn zeros(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(Self {
            dim,
            data: vec![Complex::new(T::zero(), T::zero()); dim * dim],
        })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        for i in 0..dim {
            m.data[i * dim + i] = Complex::new(T::one(), T::zero());
        }
        Ok(m)
    }

    /// Real diagonal matrix.
    pub fn from_diagonal(diag: &[T]) -> Result<Self> {
        let mut m = Self::zeros(diag.len())?;
        for (i, &d) in diag.iter().enumerate() {
            if !d.is_finite() {
                return Err(Error::NonFinite);
            }
            m.data[i * m.dim + i] = Complex::new(d, T::zero());
        }
        Ok(m)
    }

    /// 2x2 matrix from row-major entries.
    pub fn qubit(m00: Complex<T>, m01: Complex<T>, m10: Complex<T>, m11: Complex<T>) -> Self {
        Self {
            dim: 2,
            data: vec![m00, m01, m10, m11],
        }
    }

    pub fn pauli_x() -> Self {
        let (o, l) = (c(T::zero(), T::zero()), c(T::one(), T::zero()));
        Self::qubit(o, l, l, o)
    }

    pub fn pauli_y() -> Self {
        let o = c(T::zero(), T::zero());
        Self::qubit(o, c(T::zero(), -T::one()), c(T::zero(), T::one()), o)
    }

    pub fn pauli_z() -> Self {
        let o = c(T::zero(), T::zero());
        Self::qubit(c(T::one(), T::zero()), o, o, c(-T::one(), T::zero()))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex<T> {
        self.data[row * self.dim + col]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Complex<T>] {
        &self.data
    }

    fn same_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            })
        } else {
            Ok(())
        }
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        let n = self.dim;
        let mut out = vec![Complex::new(T::zero(), T::zero()); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a.re == T::zero() && a.im == T::zero() {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] = out[i * n + j] + a * other.data[k * n + j];
                }
            }
        }
        Ok(Self { dim: n, data: out })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Self { dim: self.dim, data })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(Self { dim: self.dim, data })
    }

    pub fn scale(&self, factor: Complex<T>) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn scale_real(&self, factor: T) -> Self {
        self.scale(Complex::new(factor, T::zero()))
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(self.data[j * n + i].conj());
            }
        }
        Self { dim: n, data }
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.dim).fold(Complex::new(T::zero(), T::zero()), |acc, i| acc + self.get(i, i))
    }

    /// Largest entry modulus.
    pub fn max_norm(&self) -> T {
        self.data.iter().fold(T::zero(), |m, z| m.max(z.norm()))
    }

    pub fn frobenius_norm(&self) -> T {
        self.data.iter().fold(T::zero(), |acc, z| acc + z.norm_sqr()).sqrt()
    }

    /// `max |a_ij - b_ij|`.
    pub fn max_abs_diff(&self, other: &Self) -> Result<T> {
        self.same_dim(other)?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .fold(T::zero(), |m, (a, b)| m.max((a - b).norm())))
    }

    /// `max |M_ij - conj(M_ji)|`; zero for exactly Hermitian input.
    pub fn hermitian_residual(&self) -> T {
        let n = self.dim;
        let mut r = T::zero();
        for i in 0..n {
            for j in i..n {
                r = r.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        r
    }

    pub fn is_hermitian(&self, tol: T) -> bool {
        self.hermitian_residual() <= tol
    }

    /// Square root of the sum of squared off-diagonal moduli.
    pub fn off_diagonal_norm(&self) -> T {
        let n = self.dim;
        let mut s = T::zero();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s = s + self.get(i, j).norm_sqr();
                }
            }
        }
        s.sqrt()
    }
}

#[inline]
pub(crate) fn c<T: Real>(re: T, im: T) -> Complex<T> {
    Complex::new(re, im)
}

/// Matrix product; errors on dimension mismatch.
pub fn mat_mul<T: Real>(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
    a.matmul(b)
}

pub fn adjoint<T: Real>(a: &ComplexMatrix<T>) -> ComplexMatrix<T> {
    a.adjoint()
}

pub fn trace<T: Real>(a: &ComplexMatrix<T>) -> Complex<T> {
    a.trace()
}

/// Eigen-decomposition of a Hermitian matrix.
#[derive(Clone, Debug)]
pub struct HermitianEigen<T> {
    /// Ascending.
    pub values: Vec<T>,
    /// Column `k` is the unit eigenvector for `values[k]`.
    pub vectors: ComplexMatrix<T>,
    /// Number of cyclic sweeps performed.
    pub sweeps: usize,
}

impl<T: Real> HermitianEigen<T> {
    pub fn vector(&self, k: usize) -> Vec<Complex<T>> {
        (0..self.vectors.dim()).map(|i| self.vectors.get(i, k)).collect()
    }
}

/// Eigenvalues of a Hermitian matrix in ascending order.
pub fn hermitian_eigenvalues<T: Real>(a: &ComplexMatrix<T>, tol: T) -> Result<Vec<T>> {
    hermitian_eigen(a, tol).map(|e| e.values)
}

/// Cyclic complex Jacobi diagonalization.
///
/// `tol` bounds the accepted Hermiticity residual; the input is symmetrized
/// before iterating so residual rounding does not leak into the spectrum.
pub fn hermitian_eigen<T: Real>(a: &ComplexMatrix<T>, tol: T) -> Result<HermitianEigen<T>> {
    let residual = a.hermitian_residual();
    if residual > tol {
        return Err(Error::NotHermitian {
            residual: residual.as_f64(),
            tol: tol.as_f64(),
        });
    }
    let n = a.dim();
    let half = T::lit(0.5);
    let mut m = a.data.clone();
    for i in 0..n {
        m[i * n + i] = c(m[i * n + i].re, T::zero());
        for j in i + 1..n {
            let z = (m[i * n + j] + m[j * n + i].conj()) * half;
            m[i * n + j] = z;
            m[j * n + i] = z.conj();
        }
    }
    let mut v = ComplexMatrix::identity(n)?.data;

    let threshold = T::lit(JACOBI_OFF_DIAGONAL_TOL).max(T::epsilon() * a.frobenius_norm());
    let off_norm = |m: &[Complex<T>]| {
        let mut s = T::zero();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s = s + m[i * n + j].norm_sqr();
                }
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    while off_norm(&m) >= threshold {
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off_norm(&m).as_f64(),
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut m, &mut v, n, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<T> = (0..n).map(|i| m[i * n + i].re).collect();
    order.sort_by(|&i, &j| diag[i].partial_cmp(&diag[j]).expect("finite eigenvalues"));
    let values = order.iter().map(|&i| diag[i]).collect();
    let mut vecs = Vec::with_capacity(n * n);
    for row in 0..n {
        for &col in &order {
            vecs.push(v[row * n + col]);
        }
    }
    Ok(HermitianEigen {
        values,
        vectors: ComplexMatrix { dim: n, data: vecs },
        sweeps,
    })
}

/// Annihilates `m[p][q]` with the unitary `J = diag(1, conj(e)) * R(theta)`
/// acting on the `(p, q)` plane, `m <- J^† m J`, `v <- v J`.
fn rotate<T: Real>(m: &mut [Complex<T>], v: &mut [Complex<T>], n: usize, p: usize, q: usize) {
    let apq = m[p * n + q];
    let mag = apq.norm();
    if mag == T::zero() {
        return;
    }
    let phase = apq / mag;
    let app = m[p * n + p].re;
    let aqq = m[q * n + q].re;
    let theta = (aqq - app) / (T::lit(2.0) * mag);
    let t = if theta >= T::zero() {
        T::one() / (theta + (theta * theta + T::one()).sqrt())
    } else {
        -T::one() / (-theta + (theta * theta + T::one()).sqrt())
    };
    let cs = T::one() / (t * t + T::one()).sqrt();
    let sn = t * cs;

    let j_pp = c(cs, T::zero());
    let j_pq = c(sn, T::zero());
    let j_qp = phase.conj() * (-sn);
    let j_qq = phase.conj() * cs;

    for k in 0..n {
        let (akp, akq) = (m[k * n + p], m[k * n + q]);
        m[k * n + p] = akp * j_pp + akq * j_qp;
        m[k * n + q] = akp * j_pq + akq * j_qq;
        let (vkp, vkq) = (v[k * n + p], v[k * n + q]);
        v[k * n + p] = vkp * j_pp + vkq * j_qp;
        v[k * n + q] = vkp * j_pq + vkq * j_qq;
    }
    for k in 0..n {
        let (apk, aqk) = (m[p * n + k], m[q * n + k]);
        m[p * n + k] = j_pp.conj() * apk + j_qp.conj() * aqk;
        m[q * n + k] = j_pq.conj() * apk + j_qq.conj() * aqk;
    }
    m[p * n + q] = c(T::zero(), T::zero());
    m[q * n + p] = c(T::zero(), T::zero());
    m[p * n + p] = c(m[p * n + p].re, T::zero());
    m[q * n + q] = c(m[q * n + q].re, T::zero());
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type M = ComplexMatrix<f64>;

    fn z(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn pauli_products() {
        let (x, y, zz) = (M::pauli_x(), M::pauli_y(), M::pauli_z());
        let id = M::identity(2).unwrap();
        assert_eq!(mat_mul(&id, &x).unwrap(), x);
        assert_eq!(mat_mul(&x, &x).unwrap(), id);
        assert_eq!(mat_mul(&x, &y).unwrap(), zz.scale(z(0.0, 1.0)));
    }

    #[test]
    fn mismatched_dimensions() {
        let a = M::identity(2).unwrap();
        let b = M::identity(3).unwrap();
        assert_eq!(a.matmul(&b), Err(Error::DimensionMismatch { left: 2, right: 3 }));
        assert!(M::zeros(7).is_err());
        assert!(M::zeros(0).is_err());
        assert!(M::from_vec(2, vec![z(0.0, 0.0); 3]).is_err());
        assert_eq!(M::from_vec(1, vec![z(f64::NAN, 0.0)]), Err(Error::NonFinite));
    }

    #[test]
    fn adjoint_cases() {
        assert_eq!(adjoint(&M::pauli_y()), M::pauli_y());
        let ii = M::identity(2).unwrap().scale(z(0.0, 1.0));
        assert_eq!(adjoint(&ii), M::identity(2).unwrap().scale(z(0.0, -1.0)));
        // A3 = -i s sigma_y  =>  A3^† = +i s sigma_y
        let s = (0.3_f64 / 2.0).sqrt();
        let a3 = M::pauli_y().scale(z(0.0, -s));
        assert!(adjoint(&a3).max_abs_diff(&M::pauli_y().scale(z(0.0, s))).unwrap() < 1e-16);
    }

    #[test]
    fn traces() {
        assert_eq!(trace(&M::identity(2).unwrap()), z(2.0, 0.0));
        assert_eq!(trace(&M::pauli_z()), z(0.0, 0.0));
        let rho = M::from_rows(&[[z(0.95, 0.0), z(0.05, -0.1)], [z(0.05, 0.1), z(0.05, 0.0)]]).unwrap();
        assert!((trace(&rho) - z(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn known_spectra() {
        let tol = DEFAULT_HERMITIAN_TOL;
        assert_eq!(
            hermitian_eigenvalues(&M::identity(2).unwrap(), tol).unwrap(),
            vec![1.0, 1.0]
        );
        let ev = hermitian_eigenvalues(&M::pauli_x(), tol).unwrap();
        assert!((ev[0] + 1.0).abs() < 1e-15 && (ev[1] - 1.0).abs() < 1e-15);
        let ev = hermitian_eigenvalues(&M::pauli_y(), tol).unwrap();
        assert!((ev[0] + 1.0).abs() < 1e-15 && (ev[1] - 1.0).abs() < 1e-15);
        let w = M::from_diagonal(&[0.5, 0.25, 0.25]).unwrap();
        assert_eq!(hermitian_eigenvalues(&w, tol).unwrap(), vec![0.25, 0.25, 0.5]);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = M::from_rows(&[[z(0.0, 0.0), z(1.0, 0.0)], [z(0.0, 0.0), z(0.0, 0.0)]]).unwrap();
        assert!(matches!(
            hermitian_eigenvalues(&m, 1e-10),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn eigenvectors_diagonalize() {
        let m = M::from_rows(&[
            [z(2.0, 0.0), z(0.5, -0.3), z(0.0, 0.2)],
            [z(0.5, 0.3), z(-1.0, 0.0), z(0.7, 0.0)],
            [z(0.0, -0.2), z(0.7, 0.0), z(0.1, 0.0)],
        ])
        .unwrap();
        let e = hermitian_eigen(&m, 1e-10).unwrap();
        let d = e.vectors.adjoint().matmul(&m).unwrap().matmul(&e.vectors).unwrap();
        let expected = M::from_diagonal(&e.values).unwrap();
        assert!(d.max_abs_diff(&expected).unwrap() < 1e-13);
        let g = e.vectors.adjoint().matmul(&e.vectors).unwrap();
        assert!(g.max_abs_diff(&M::identity(3).unwrap()).unwrap() < 1e-14);
    }

    #[test]
    fn degenerate_and_zero_matrices() {
        let zero = M::zeros(4).unwrap();
        assert_eq!(hermitian_eigenvalues(&zero, 1e-10).unwrap(), vec![0.0; 4]);
        // rank one projector onto (1, i, 1, 0)/sqrt(3)
        let v = [z(1.0, 0.0), z(0.0, 1.0), z(1.0, 0.0), z(0.0, 0.0)];
        let mut data = Vec::new();
        for a in &v {
            for b in &v {
                data.push(a * b.conj() / 3.0);
            }
        }
        let p = M::from_vec(4, data).unwrap();
        let ev = hermitian_eigenvalues(&p, 1e-10).unwrap();
        for (got, want) in ev.iter().zip([0.0, 0.0, 0.0, 1.0]) {
            assert!((got - want).abs() < 1e-14, "{ev:?}");
        }
    }

    #[test]
    fn f32_solver() {
        let w = ComplexMatrix::<f32>::from_rows(&[
            [Complex::new(0.5f32, 0.0), Complex::new(0.1, 0.0)],
            [Complex::new(0.1, 0.0), Complex::new(0.5, 0.0)],
        ])
        .unwrap();
        let ev = hermitian_eigenvalues(&w, 1e-6).unwrap();
        assert!((ev[0] - 0.4).abs() < 1e-6 && (ev[1] - 0.6).abs() < 1e-6);
    }

    fn hermitian(dim: usize, vals: &[f64]) -> M {
        let mut data = vec![z(0.0, 0.0); dim * dim];
        let mut it = vals.iter().copied();
        for i in 0..dim {
            data[i * dim + i] = z(it.next().unwrap(), 0.0);
            for j in i + 1..dim {
                let w = z(it.next().unwrap(), it.next().unwrap());
                data[i * dim + j] = w;
                data[j * dim + i] = w.conj();
            }
        }
        M::from_vec(dim, data).unwrap()
    }

    /// exp(-i t (n . sigma) / 2) embedded on the (p, q) plane.
    fn plane_rotation(dim: usize, p: usize, q: usize, t: f64, n: [f64; 3]) -> M {
        let norm = (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt().max(1e-12);
        let (nx, ny, nz) = (n[0] / norm, n[1] / norm, n[2] / norm);
        let (co, si) = ((t / 2.0).cos(), (t / 2.0).sin());
        let mut u = M::identity(dim).unwrap().data;
        u[p * dim + p] = z(co, -si * nz);
        u[p * dim + q] = z(-si * ny, -si * nx);
        u[q * dim + p] = z(si * ny, -si * nx);
        u[q * dim + q] = z(co, si * nz);
        M::from_vec(dim, u).unwrap()
    }

    fn arb_hermitian() -> impl Strategy<Value = M> {
        (1usize..=MAX_DIM)
            .prop_flat_map(|d| prop::collection::vec(-1.0..1.0f64, d * d).prop_map(move |v| hermitian(d, &v)))
    }

    proptest! {
        #[test]
        fn eigenvalue_sum_is_trace(m in arb_hermitian()) {
            let ev = hermitian_eigenvalues(&m, 1e-10).unwrap();
            let s: f64 = ev.iter().sum();
            prop_assert!((s - m.trace().re).abs() < 1e-12);
            prop_assert!(ev.windows(2).all(|w| w[0] <= w[1]));
        }

        #[test]
        fn spectrum_is_unitarily_invariant(
            m in arb_hermitian(),
            t in -3.0..3.0f64,
            n in prop::array::uniform3(-1.0..1.0f64),
            pq in (0usize..MAX_DIM, 0usize..MAX_DIM),
        ) {
            let d = m.dim();
            prop_assume!(d >= 2);
            let (p, q) = (pq.0 % d, pq.1 % d);
            prop_assume!(p != q);
            let u = plane_rotation(d, p, q, t, n)
                .matmul(&plane_rotation(d, 0, d - 1, 0.7 * t + 0.3, [n[2], n[0], n[1]]))
                .unwrap();
            let conj = u.matmul(&m).unwrap().matmul(&u.adjoint()).unwrap();
            let a = hermitian_eigenvalues(&m, 1e-10).unwrap();
            let b = hermitian_eigenvalues(&conj, 1e-10).unwrap();
            for (x, y) in a.iter().zip(&b) {
                prop_assert!((x - y).abs() < 1e-10);
            }
        }

        #[test]
        fn diagonal_input_is_returned_sorted(diag in prop::collection::vec(-5.0..5.0f64, 1..=MAX_DIM)) {
            let ev = hermitian_eigenvalues(&M::from_diagonal(&diag).unwrap(), 1e-10).unwrap();
            let mut sorted = diag.clone();
            sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
            for (x, y) in ev.iter().zip(&sorted) {
                prop_assert!((x - y).abs() <= 1e-14);
            }
        }
    }
}
