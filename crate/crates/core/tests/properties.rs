use nalgebra::Matrix4;
use num_complex::Complex64 as C64;
use proptest::prelude::*;

use dirac_qubits::dirac::{decompose, reconstruct};
use dirac_qubits::linalg::{
    hermitian_eigen, kron, kron_factor, partial_trace, ComplexMatrix2, ComplexMatrix4, Qubit,
    Tolerance,
};

fn entry() -> impl Strategy<Value = C64> {
    (-2.0f64..2.0, -2.0f64..2.0).prop_map(|(re, im)| C64::new(re, im))
}

fn mat2() -> impl Strategy<Value = ComplexMatrix2> {
    prop::array::uniform4(entry()).prop_map(|e| ComplexMatrix2::from_rows([[e[0], e[1]], [e[2], e[3]]]))
}

fn mat4() -> impl Strategy<Value = ComplexMatrix4> {
    prop::array::uniform16(entry()).prop_map(|e| ComplexMatrix4::from_fn(|i, j| e[4 * i + j]))
}

fn hermitian4() -> impl Strategy<Value = ComplexMatrix4> {
    mat4().prop_map(|m| (m + m.adjoint()).scale_real(0.5))
}

fn tol() -> Tolerance {
    Tolerance::default()
}

proptest! {
    #[test]
    fn kron_is_bilinear(a in mat2(), b in mat2(), c in mat2(), s in entry()) {
        let lhs = kron(&(a + c.scale(s)), &b);
        let rhs = kron(&a, &b) + kron(&c, &b).scale(s);
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-12);
    }

    #[test]
    fn kron_mixed_product(a in mat2(), b in mat2(), c in mat2(), d in mat2()) {
        let lhs = kron(&a, &b).matmul(&kron(&c, &d));
        let rhs = kron(&a.matmul(&c), &b.matmul(&d));
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-11);
    }

    #[test]
    fn partial_trace_of_product(a in mat2(), b in mat2()) {
        let ab = kron(&a, &b);
        prop_assert!(partial_trace(&ab, Qubit::B).max_abs_diff(&a.scale(b.trace())) < 1e-12);
        prop_assert!(partial_trace(&ab, Qubit::A).max_abs_diff(&b.scale(a.trace())) < 1e-12);
    }

    #[test]
    fn decompose_round_trip(m in mat4()) {
        prop_assert!(reconstruct(&decompose(&m)).max_abs_diff(&m) < 1e-12);
    }

    #[test]
    fn hermitian_decomposition_is_real(h in hermitian4()) {
        prop_assert!(decompose(&h).max_imag() < 1e-12);
    }

    #[test]
    fn kron_factor_recovers_products(a in mat2(), b in mat2()) {
        prop_assume!(a.frobenius_norm() > 0.1 && b.frobenius_norm() > 0.1);
        let ab = kron(&a, &b);
        let (x, y) = kron_factor(&ab, tol()).expect("a product factors");
        prop_assert!(kron(&x, &y).max_abs_diff(&ab) < 1e-9);
    }

    #[test]
    fn eigen_reconstructs(h in hermitian4()) {
        let e = hermitian_eigen(&h, tol()).unwrap();
        prop_assert!(e.reconstruct().max_abs_diff(&h) < 1e-10);
        prop_assert!(e.vectors.unitarity_error() < 1e-10);
        prop_assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
    }

    /// Eigenvalues of H = X + iY match those of the real symmetric 8×8
    /// embedding [[X, −Y], [Y, X]], each appearing twice there.
    #[test]
    fn eigenvalues_match_nalgebra(h in hermitian4()) {
        let ours = hermitian_eigen(&h, tol()).unwrap().values;
        let mut big = nalgebra::DMatrix::<f64>::zeros(8, 8);
        for i in 0..4 {
            for j in 0..4 {
                let z = h[(i, j)];
                big[(i, j)] = z.re;
                big[(i + 4, j + 4)] = z.re;
                big[(i, j + 4)] = -z.im;
                big[(i + 4, j)] = z.im;
            }
        }
        let mut theirs: Vec<f64> = big.symmetric_eigen().eigenvalues.iter().copied().collect();
        theirs.sort_by(f64::total_cmp);
        for (k, v) in ours.iter().enumerate() {
            prop_assert!((v - theirs[2 * k]).abs() < 1e-9 && (v - theirs[2 * k + 1]).abs() < 1e-9);
        }
    }
}

#[test]
fn real_symmetric_eigen_matches_nalgebra() {
    let rows = [[2.0, -1.0, 0.5, 0.0], [-1.0, 3.0, 0.25, 1.0], [0.5, 0.25, -1.0, 2.0], [0.0, 1.0, 2.0, 0.5]];
    let ours = hermitian_eigen(&ComplexMatrix4::from_real_rows(rows), tol()).unwrap().values;
    let m = Matrix4::from_fn(|i, j| rows[i][j]);
    let mut theirs: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
    theirs.sort_by(f64::total_cmp);
    for (a, b) in ours.iter().zip(&theirs) {
        assert!((a - b).abs() < 1e-12, "{ours:?} vs {theirs:?}");
    }
}
