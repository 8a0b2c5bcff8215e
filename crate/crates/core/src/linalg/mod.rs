//! Fixed-size complex linear algebra for one- and two-qubit operators.

mod eigen;
mod factor;
mod matrix;

pub use eigen::{hermitian_eigen, hermitian_eigenvalues, HermitianEigen};
pub use factor::kron_factor;
pub use matrix::{
    ComplexMatrix2, ComplexMatrix4, SquareMatrix, StateVector4, Tolerance, C64, I, ONE, ZERO,
};

/// Selects one of the two qubits; A is the left tensor factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Qubit {
    A,
    B,
}

/// Pauli matrix by index: 0 is the identity, 1..=3 are σ1, σ2, σ3.
pub fn pauli(index: usize) -> ComplexMatrix2 {
    match index {
        0 => ComplexMatrix2::identity(),
        1 => sigma1(),
        2 => sigma2(),
        3 => sigma3(),
        _ => panic!("pauli index {index} out of range 0..=3"),
    }
}

pub fn sigma1() -> ComplexMatrix2 {
    ComplexMatrix2::from_rows([[ZERO, ONE], [ONE, ZERO]])
}

pub fn sigma2() -> ComplexMatrix2 {
    ComplexMatrix2::from_rows([[ZERO, -I], [I, ZERO]])
}

pub fn sigma3() -> ComplexMatrix2 {
    ComplexMatrix2::from_rows([[ONE, ZERO], [ZERO, -ONE]])
}

/// Kronecker product `a ⊗ b`: `(a⊗b)[2i+k][2j+l] = a[i][j]·b[k][l]`.
pub fn kron(a: &ComplexMatrix2, b: &ComplexMatrix2) -> ComplexMatrix4 {
    ComplexMatrix4::from_fn(|r, c| a[(r / 2, c / 2)] * b[(r % 2, c % 2)])
}

pub fn matmul(a: &ComplexMatrix4, b: &ComplexMatrix4) -> ComplexMatrix4 {
    a.matmul(b)
}

pub fn adjoint(a: &ComplexMatrix4) -> ComplexMatrix4 {
    a.adjoint()
}

pub fn trace(a: &ComplexMatrix4) -> C64 {
    a.trace()
}

pub fn approx_equal(a: &ComplexMatrix4, b: &ComplexMatrix4, tol: Tolerance) -> bool {
    a.approx_eq(b, tol)
}

/// `σa ⊗ σb` with index 0 standing for the identity.
pub fn pauli_tensor(a: usize, b: usize) -> ComplexMatrix4 {
    kron(&pauli(a), &pauli(b))
}

/// Coefficients `c[a][b] = Tr((σa⊗σb) · m) / 4`, so that
/// `m = Σ c[a][b] σa⊗σb`.
pub fn pauli_coefficients(m: &ComplexMatrix4) -> [[C64; 4]; 4] {
    std::array::from_fn(|a| std::array::from_fn(|b| pauli_tensor(a, b).hs_inner(m) * 0.25))
}

pub fn from_pauli_coefficients(c: &[[C64; 4]; 4]) -> ComplexMatrix4 {
    (0..4)
        .flat_map(|a| (0..4).map(move |b| (a, b)))
        .map(|(a, b)| pauli_tensor(a, b).scale(c[a][b]))
        .sum()
}

/// Traces out qubit `over`, leaving the reduced operator on the other one.
pub fn partial_trace(a: &ComplexMatrix4, over: Qubit) -> ComplexMatrix2 {
    match over {
        Qubit::B => ComplexMatrix2::from_fn(|i, j| (0..2).map(|k| a[(2 * i + k, 2 * j + k)]).sum()),
        Qubit::A => ComplexMatrix2::from_fn(|k, l| (0..2).map(|i| a[(2 * i + k, 2 * i + l)]).sum()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_identity() {
        let id = ComplexMatrix2::identity();
        assert_eq!(kron(&id, &id), ComplexMatrix4::identity());
    }

    #[test]
    fn kron_sigma1_sigma1_is_antidiagonal() {
        let m = kron(&sigma1(), &sigma1());
        let expected = ComplexMatrix4::from_real_rows([
            [0.0, 0.0, 0.0, 1.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [1.0, 0.0, 0.0, 0.0],
        ]);
        assert_eq!(m, expected);
    }

    #[test]
    fn kron_sigma2_sigma1_by_hand() {
        // σ2⊗σ1 expanded entry by entry.
        let z = ZERO;
        let expected =
            ComplexMatrix4::from_rows([[z, z, z, -I], [z, z, -I, z], [z, I, z, z], [I, z, z, z]]);
        assert_eq!(kron(&sigma2(), &sigma1()), expected);
    }

    #[test]
    fn pauli_algebra() {
        let id = ComplexMatrix2::identity();
        for k in 1..=3 {
            assert_eq!(pauli(k).matmul(&pauli(k)), id);
            assert_eq!(pauli(k).trace(), ZERO);
        }
        // σ1σ2 = iσ3
        assert_eq!(sigma1().matmul(&sigma2()), sigma3().scale(I));
    }

    #[test]
    fn partial_trace_of_product() {
        let a = ComplexMatrix2::from_rows([[ONE, I], [-I, C64::new(2.0, 0.0)]]);
        let b = ComplexMatrix2::from_rows([[C64::new(0.25, 0.0), ONE], [ONE, C64::new(0.5, 0.0)]]);
        let ab = kron(&a, &b);
        assert!(partial_trace(&ab, Qubit::B).max_abs_diff(&a.scale(b.trace())) < 1e-15);
        assert!(partial_trace(&ab, Qubit::A).max_abs_diff(&b.scale(a.trace())) < 1e-15);
        assert_eq!(partial_trace(&ab, Qubit::B).trace(), ab.trace());
    }

    #[test]
    fn pauli_expansion_round_trip() {
        let m = ComplexMatrix4::from_fn(|i, j| C64::new((i * 3 + j) as f64, i as f64 - j as f64 * 0.5));
        let c = pauli_coefficients(&m);
        assert!(from_pauli_coefficients(&c).max_abs_diff(&m) < 1e-13);
        assert_eq!(pauli_coefficients(&ComplexMatrix4::identity())[0][0], ONE);
    }

    #[test]
    fn approx_equal_cases() {
        let tol = Tolerance::default();
        let g4 = -kron(&sigma3(), &ComplexMatrix2::identity());
        let diag = ComplexMatrix4::from_real_rows([
            [-1.0, 0.0, 0.0, 0.0],
            [0.0, -1.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ]);
        assert!(approx_equal(&g4, &diag, tol));
        assert!(!approx_equal(&ComplexMatrix4::identity(), &kron(&sigma1(), &ComplexMatrix2::identity()), tol));
    }
}
