use super::matrix::{ComplexMatrix4, Tolerance, C64, ZERO};
use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 64;

/// Eigen-decomposition `a = V · diag(values) · V†` of a Hermitian 4×4 matrix.
#[derive(Debug, Clone, Copy)]
pub struct HermitianEigen {
    /// Ascending.
    pub values: [f64; 4],
    /// Column `k` is the eigenvector for `values[k]`.
    pub vectors: ComplexMatrix4,
}

impl HermitianEigen {
    pub fn reconstruct(&self) -> ComplexMatrix4 {
        let d = ComplexMatrix4::from_diagonal(self.values.map(|v| C64::new(v, 0.0)));
        self.vectors.matmul(&d).matmul(&self.vectors.adjoint())
    }
}

pub fn hermitian_eigenvalues(a: &ComplexMatrix4, tol: Tolerance) -> Result<[f64; 4]> {
    hermitian_eigen(a, tol).map(|e| e.values)
}

/// Cyclic complex Jacobi. Each rotation first rotates the phase of the
/// pivot `a[p][q]` onto the real axis, then applies a real Givens rotation
/// that zeroes it.
pub fn hermitian_eigen(a: &ComplexMatrix4, tol: Tolerance) -> Result<HermitianEigen> {
    let max_deviation = a.hermiticity_error();
    if max_deviation > tol.eps() {
        return Err(Error::NotHermitian { max_deviation });
    }
    // Symmetrize so the diagonal is exactly real.
    let mut m = (*a + a.adjoint()).scale_real(0.5);
    let mut v = ComplexMatrix4::identity();
    let scale = m.frobenius_norm().max(f64::MIN_POSITIVE);

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&m) <= 1e-15 * scale {
            break;
        }
        for p in 0..3 {
            for q in (p + 1)..4 {
                let z = m[(p, q)];
                let r = z.norm();
                if r <= 1e-300 {
                    continue;
                }
                let phase = z / r;
                let (app, aqq) = (m[(p, p)].re, m[(q, q)].re);
                let theta = 0.5 * (2.0 * r).atan2(aqq - app);
                let (s, c) = theta.sin_cos();
                // G = D · R with D = diag(.., e^{-iφ} at q, ..) and R the real rotation.
                let mut g = ComplexMatrix4::identity();
                g[(p, p)] = C64::new(c, 0.0);
                g[(p, q)] = C64::new(s, 0.0);
                g[(q, p)] = -phase.conj() * s;
                g[(q, q)] = phase.conj() * c;
                m = g.adjoint().matmul(&m).matmul(&g);
                m[(p, q)] = ZERO;
                m[(q, p)] = ZERO;
                v = v.matmul(&g);
            }
        }
    }

    let mut order = [0usize, 1, 2, 3];
    order.sort_by(|&i, &j| m[(i, i)].re.total_cmp(&m[(j, j)].re));
    let values = order.map(|k| m[(k, k)].re);
    let vectors = ComplexMatrix4::from_fn(|i, j| v[(i, order[j])]);
    Ok(HermitianEigen { values, vectors })
}

fn off_diagonal_norm(m: &ComplexMatrix4) -> f64 {
    let mut acc = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                acc += m[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}
