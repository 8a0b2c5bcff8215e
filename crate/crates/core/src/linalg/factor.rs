use super::kron;
use super::matrix::{ComplexMatrix2, ComplexMatrix4, Tolerance, C64};

/// Splits `a` into `X ⊗ Y` if such a factorization exists within `tol`.
///
/// Viewing `a` as four 2×2 blocks `B_ij = X[i][j]·Y`, the block with the
/// largest norm is taken as the `Y` direction and every `X[i][j]` is its
/// Frobenius projection onto it. The result is returned in canonical gauge:
/// the first entry of `X` (row-major) with magnitude above `tol` is exactly 1.
///
/// The zero matrix has no unique factorization and yields `None`.
pub fn kron_factor(
    a: &ComplexMatrix4,
    tol: Tolerance,
) -> Option<(ComplexMatrix2, ComplexMatrix2)> {
    let block = |i: usize, j: usize| ComplexMatrix2::from_fn(|k, l| a[(2 * i + k, 2 * j + l)]);
    let blocks = [[block(0, 0), block(0, 1)], [block(1, 0), block(1, 1)]];

    let (bi, bj) = (0..2)
        .flat_map(|i| (0..2).map(move |j| (i, j)))
        .max_by(|&(i, j), &(k, l)| {
            blocks[i][j].frobenius_norm().total_cmp(&blocks[k][l].frobenius_norm())
        })?;
    let pivot = blocks[bi][bj];
    let pivot_norm_sqr = pivot.frobenius_norm().powi(2);
    if pivot.max_abs() <= tol.eps() {
        return None;
    }

    let x = ComplexMatrix2::from_fn(|i, j| pivot.hs_inner(&blocks[i][j]) / pivot_norm_sqr);
    let lead = x.iter().copied().find(|z| z.norm() > tol.eps())?;
    let x = x.scale(C64::new(1.0, 0.0) / lead);
    let y = pivot.scale(lead);

    if kron(&x, &y).max_abs_diff(a) <= tol.eps() {
        Some((x, y))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{sigma1, sigma2, sigma3, I, ONE, ZERO};

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn gamma5_factors_as_sigma1_identity() {
        let g5 = kron(&sigma1(), &ComplexMatrix2::identity());
        let (x, y) = kron_factor(&g5, tol()).unwrap();
        assert!(x.max_abs_diff(&sigma1()) < 1e-12);
        assert!(y.max_abs_diff(&ComplexMatrix2::identity()) < 1e-12);
    }

    #[test]
    fn gauge_moves_phase_into_right_factor() {
        // σ2 ⊗ σ3: the first nonzero entry of σ2 is −i, so X = iσ2 and Y = −iσ3.
        let m = kron(&sigma2(), &sigma3());
        let (x, y) = kron_factor(&m, tol()).unwrap();
        assert_eq!(x[(0, 1)], ONE);
        assert!(x.max_abs_diff(&sigma2().scale(I)) < 1e-12);
        assert!(y.max_abs_diff(&sigma3().scale(-I)) < 1e-12);
    }

    #[test]
    fn cnot_is_not_a_product() {
        let cnot = ComplexMatrix4::from_real_rows([
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
        ]);
        assert!(kron_factor(&cnot, tol()).is_none());
    }

    #[test]
    fn zero_matrix_is_absent() {
        assert!(kron_factor(&ComplexMatrix4::zeros(), tol()).is_none());
    }

    #[test]
    fn off_diagonal_pivot_block() {
        let x = ComplexMatrix2::from_rows([[ZERO, ONE], [ZERO, ZERO]]);
        let y = ComplexMatrix2::from_rows([[C64::new(0.5, 1.0), ONE], [-I, C64::new(3.0, 0.0)]]);
        let (fx, fy) = kron_factor(&kron(&x, &y), tol()).unwrap();
        assert!(fx.max_abs_diff(&x) < 1e-12);
        assert!(fy.max_abs_diff(&y) < 1e-12);
    }
}
