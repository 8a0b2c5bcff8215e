use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

/// Comparison tolerance for max-abs entrywise checks.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Tolerance(f64);

impl Tolerance {
    pub const DEFAULT_EPS: f64 = 1e-9;

    pub fn new(eps: f64) -> Result<Self> {
        if eps > 0.0 && eps.is_finite() {
            Ok(Tolerance(eps))
        } else {
            Err(Error::InvalidTolerance(eps))
        }
    }

    #[inline]
    pub fn eps(self) -> f64 {
        self.0
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance(Self::DEFAULT_EPS)
    }
}

/// Dense `N x N` complex matrix, row-major.
///
/// For `N = 4` the basis order is `|↑↑⟩, |↑↓⟩, |↓↑⟩, |↓↓⟩` with qubit A as
/// the left tensor factor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SquareMatrix<const N: usize> {
    entries: [[C64; N]; N],
}

pub type ComplexMatrix2 = SquareMatrix<2>;
pub type ComplexMatrix4 = SquareMatrix<4>;

impl<const N: usize> SquareMatrix<N> {
    pub const DIM: usize = N;

    pub fn zeros() -> Self {
        SquareMatrix { entries: [[ZERO; N]; N] }
    }

    pub fn identity() -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            m.entries[i][i] = ONE;
        }
        m
    }

    pub fn from_rows(entries: [[C64; N]; N]) -> Self {
        SquareMatrix { entries }
    }

    pub fn from_real_rows(rows: [[f64; N]; N]) -> Self {
        Self::from_fn(|i, j| C64::new(rows[i][j], 0.0))
    }

    pub fn from_diagonal(diag: [C64; N]) -> Self {
        let mut m = Self::zeros();
        for (i, d) in diag.into_iter().enumerate() {
            m.entries[i][i] = d;
        }
        m
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            for j in 0..N {
                m.entries[i][j] = f(i, j);
            }
        }
        m
    }

    pub fn rows(&self) -> &[[C64; N]; N] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = &C64> {
        self.entries.iter().flatten()
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        Self::from_fn(|i, j| (0..N).map(|k| self.entries[i][k] * rhs.entries[k][j]).sum())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(|i, j| self.entries[j][i].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.entries[j][i])
    }

    pub fn trace(&self) -> C64 {
        (0..N).map(|i| self.entries[i][i]).sum()
    }

    pub fn scale(&self, s: C64) -> Self {
        Self::from_fn(|i, j| self.entries[i][j] * s)
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.scale(C64::new(s, 0.0))
    }

    /// Hilbert–Schmidt inner product `Tr(self† · rhs)`.
    pub fn hs_inner(&self, rhs: &Self) -> C64 {
        self.iter().zip(rhs.iter()).map(|(a, b)| a.conj() * b).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        self.iter().zip(rhs.iter()).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, rhs: &Self, tol: Tolerance) -> bool {
        self.max_abs_diff(rhs) <= tol.eps()
    }

    /// Max-abs deviation from Hermiticity, `‖A − A†‖_max`.
    pub fn hermiticity_error(&self) -> f64 {
        self.max_abs_diff(&self.adjoint())
    }

    pub fn is_hermitian(&self, tol: Tolerance) -> bool {
        self.hermiticity_error() <= tol.eps()
    }

    /// `‖A·A† − I‖_max`.
    pub fn unitarity_error(&self) -> f64 {
        self.matmul(&self.adjoint()).max_abs_diff(&Self::identity())
    }

    pub fn is_unitary(&self, tol: Tolerance) -> bool {
        self.unitarity_error() <= tol.eps()
    }

    pub fn is_finite(&self) -> bool {
        self.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        self.matmul(rhs) - rhs.matmul(self)
    }

    pub fn anticommutator(&self, rhs: &Self) -> Self {
        self.matmul(rhs) + rhs.matmul(self)
    }

    /// `O · self · O†`.
    pub fn conjugate_by(&self, op: &Self) -> Self {
        op.matmul(self).matmul(&op.adjoint())
    }
}

impl<const N: usize> Default for SquareMatrix<N> {
    fn default() -> Self {
        Self::zeros()
    }
}

impl<const N: usize> Index<(usize, usize)> for SquareMatrix<N> {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.entries[i][j]
    }
}

impl<const N: usize> IndexMut<(usize, usize)> for SquareMatrix<N> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.entries[i][j]
    }
}

impl<const N: usize> Add for SquareMatrix<N> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| self.entries[i][j] + rhs.entries[i][j])
    }
}

impl<const N: usize> Sub for SquareMatrix<N> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| self.entries[i][j] - rhs.entries[i][j])
    }
}

impl<const N: usize> Neg for SquareMatrix<N> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::from_fn(|i, j| -self.entries[i][j])
    }
}

impl<const N: usize> Mul for SquareMatrix<N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.matmul(&rhs)
    }
}

impl<const N: usize> Mul<C64> for SquareMatrix<N> {
    type Output = Self;
    fn mul(self, rhs: C64) -> Self {
        self.scale(rhs)
    }
}

impl<const N: usize> Mul<f64> for SquareMatrix<N> {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        self.scale_real(rhs)
    }
}

impl<const N: usize> std::iter::Sum for SquareMatrix<N> {
    fn sum<It: Iterator<Item = Self>>(iter: It) -> Self {
        iter.fold(Self::zeros(), |acc, m| acc + m)
    }
}

/// Two-qubit state amplitudes in the same basis order as [`ComplexMatrix4`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateVector4 {
    amps: [C64; 4],
}

impl StateVector4 {
    pub fn new(amps: [C64; 4]) -> Self {
        StateVector4 { amps }
    }

    pub fn from_real(amps: [f64; 4]) -> Self {
        StateVector4 { amps: amps.map(|a| C64::new(a, 0.0)) }
    }

    /// Basis ket with a one at `index` (0 = |↑↑⟩, 3 = |↓↓⟩).
    pub fn basis(index: usize) -> Self {
        let mut amps = [ZERO; 4];
        amps[index] = ONE;
        StateVector4 { amps }
    }

    pub fn amplitudes(&self) -> &[C64; 4] {
        &self.amps
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> C64 {
        self.amps.iter().zip(&other.amps).map(|(a, b)| a.conj() * b).sum()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn is_normalized(&self, tol: Tolerance) -> bool {
        (self.norm_sqr() - 1.0).abs() <= tol.eps()
    }

    pub fn normalized(&self) -> Self {
        self.scale(C64::new(1.0 / self.norm_sqr().sqrt(), 0.0))
    }

    /// `|self⟩⟨other|`.
    pub fn outer(&self, other: &Self) -> ComplexMatrix4 {
        ComplexMatrix4::from_fn(|i, j| self.amps[i] * other.amps[j].conj())
    }

    pub fn projector(&self) -> ComplexMatrix4 {
        self.outer(self)
    }

    pub fn scale(&self, s: C64) -> Self {
        StateVector4 { amps: self.amps.map(|a| a * s) }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.amps.iter().zip(&other.amps).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }
}

impl Add for StateVector4 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        StateVector4 { amps: std::array::from_fn(|i| self.amps[i] + rhs.amps[i]) }
    }
}

impl Sub for StateVector4 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        StateVector4 { amps: std::array::from_fn(|i| self.amps[i] - rhs.amps[i]) }
    }
}

impl Mul<StateVector4> for ComplexMatrix4 {
    type Output = StateVector4;
    fn mul(self, v: StateVector4) -> StateVector4 {
        StateVector4 {
            amps: std::array::from_fn(|i| (0..4).map(|k| self[(i, k)] * v.amps[k]).sum()),
        }
    }
}
