//! One- and two-qubit density matrices in the Bloch/correlation
//! parameterization
//!
//! ```text
//! Π(A,B) = ¼ (I⊗I + s_i(A) σ_i⊗I + s_j(B) I⊗σ_j + C_ij σ_i⊗σ_j)
//! ```
//!
//! The identity part carries the unit trace; only the remaining fifteen
//! terms are traceless.

use serde::{Deserialize, Serialize};

use crate::bell::{bell_state, BellLabel};
use crate::dirac::{DiracCoefficients, DiracLabel};
use crate::error::{Error, Result};
use crate::linalg::{
    hermitian_eigenvalues, kron, partial_trace, pauli, pauli_tensor, ComplexMatrix2,
    ComplexMatrix4, Qubit, Tolerance, C64,
};

/// Slack on `|s| ≤ 1`.
pub const BLOCH_SLACK: f64 = 1e-9;
/// Smallest eigenvalue still accepted as positive semi-definite.
pub const PSD_FLOOR: f64 = -1e-8;

/// Real 3-vector `(s1, s2, s3)` of spin expectation values.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BlochVector(pub [f64; 3]);

impl BlochVector {
    pub const ZERO: BlochVector = BlochVector([0.0; 3]);

    pub fn new(s1: f64, s2: f64, s3: f64) -> Self {
        BlochVector([s1, s2, s3])
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn is_pure(&self, tol: Tolerance) -> bool {
        (self.norm() - 1.0).abs() <= tol.eps()
    }

    fn ensure_in_ball(&self) -> Result<()> {
        let norm = self.norm();
        if norm.is_finite() && norm <= 1.0 + BLOCH_SLACK {
            Ok(())
        } else {
            Err(Error::BlochOutOfBall { norm })
        }
    }
}

/// `{s(A), s(B), C}` of the general two-qubit density matrix.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct DensityParams {
    #[serde(rename = "sA")]
    pub s_a: BlochVector,
    #[serde(rename = "sB")]
    pub s_b: BlochVector,
    #[serde(rename = "C")]
    pub c: [[f64; 3]; 3],
}

impl DensityParams {
    pub fn new(s_a: BlochVector, s_b: BlochVector, c: [[f64; 3]; 3]) -> Self {
        DensityParams { s_a, s_b, c }
    }

    /// Vanishing Bloch vectors with diagonal correlations.
    pub fn diagonal(c11: f64, c22: f64, c33: f64) -> Self {
        DensityParams {
            s_a: BlochVector::ZERO,
            s_b: BlochVector::ZERO,
            c: [[c11, 0.0, 0.0], [0.0, c22, 0.0], [0.0, 0.0, c33]],
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let vec = |a: &BlochVector, b: &BlochVector| {
            a.0.iter().zip(b.0.iter()).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
        };
        let corr = self
            .c
            .iter()
            .flatten()
            .zip(other.c.iter().flatten())
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max);
        vec(&self.s_a, &other.s_a).max(vec(&self.s_b, &other.s_b)).max(corr)
    }
}

/// A two-qubit density matrix; `validated` records that positivity was checked.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix {
    m: ComplexMatrix4,
    validated: bool,
}

impl DensityMatrix {
    pub fn matrix(&self) -> &ComplexMatrix4 {
        &self.m
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    pub fn into_matrix(self) -> ComplexMatrix4 {
        self.m
    }
}

/// `ρ = ½(I + s·σ)`.
pub fn one_qubit_density(s: BlochVector) -> Result<ComplexMatrix2> {
    s.ensure_in_ball()?;
    Ok(bloch_operator(&s))
}

fn bloch_operator(s: &BlochVector) -> ComplexMatrix2 {
    let m = (1..=3).fold(ComplexMatrix2::identity(), |acc, k| acc + pauli(k).scale_real(s.0[k - 1]));
    m.scale_real(0.5)
}

/// One-qubit state lifted into two-qubit space, `½(ρ⊗I)` for A or `½(I⊗ρ)` for B.
pub fn embed(s: BlochVector, which: Qubit) -> Result<ComplexMatrix4> {
    let rho = one_qubit_density(s)?;
    let id = ComplexMatrix2::identity();
    let lifted = match which {
        Qubit::A => kron(&rho, &id),
        Qubit::B => kron(&id, &rho),
    };
    Ok(lifted.scale_real(0.5))
}

/// Dirac expansion of [`embed`]: for A, `¼(I + s1 γ5 + s2 iγ4γ5 − s3 γ4)`;
/// for B, `¼(I + s·Σ)`.
pub fn embed_dirac_coeffs(s: BlochVector, which: Qubit) -> Result<DiracCoefficients> {
    s.ensure_in_ball()?;
    let [s1, s2, s3] = s.0;
    let pairs = match which {
        Qubit::A => [
            (DiracLabel::Unit, 0.25),
            (DiracLabel::Gamma5, s1 / 4.0),
            (DiracLabel::IG4G5, s2 / 4.0),
            (DiracLabel::Gamma4, -s3 / 4.0),
        ],
        Qubit::B => [
            (DiracLabel::Unit, 0.25),
            (DiracLabel::Sigma1, s1 / 4.0),
            (DiracLabel::Sigma2, s2 / 4.0),
            (DiracLabel::Sigma3, s3 / 4.0),
        ],
    };
    Ok(DiracCoefficients::from_real_pairs(pairs))
}

/// `ρ(A) ⊗ ρ(B)`.
pub fn product_density(s_a: BlochVector, s_b: BlochVector) -> Result<ComplexMatrix4> {
    Ok(kron(&one_qubit_density(s_a)?, &one_qubit_density(s_b)?))
}

/// Parameters of [`product_density`]: correlations `C_ij = s_i(A) s_j(B)`.
pub fn product_params(s_a: BlochVector, s_b: BlochVector) -> DensityParams {
    DensityParams {
        s_a,
        s_b,
        c: std::array::from_fn(|i| std::array::from_fn(|j| s_a.0[i] * s_b.0[j])),
    }
}

fn params_matrix(p: &DensityParams) -> ComplexMatrix4 {
    let mut m = ComplexMatrix4::identity();
    for i in 1..=3 {
        m = m + pauli_tensor(i, 0).scale_real(p.s_a.0[i - 1]);
        m = m + pauli_tensor(0, i).scale_real(p.s_b.0[i - 1]);
        for j in 1..=3 {
            m = m + pauli_tensor(i, j).scale_real(p.c[i - 1][j - 1]);
        }
    }
    m.scale_real(0.25)
}

/// Builds the general density matrix. With `validate`, rejects matrices
/// with an eigenvalue below [`PSD_FLOOR`].
pub fn density_from_params(p: &DensityParams, validate: bool) -> Result<DensityMatrix> {
    let m = params_matrix(p);
    if validate {
        let ev = hermitian_eigenvalues(&m, Tolerance::default())?;
        if ev[0] < PSD_FLOOR {
            return Err(Error::NotPositive { eigenvalue: ev[0] });
        }
    }
    Ok(DensityMatrix { m, validated: validate })
}

fn ensure_unit_trace(d: &ComplexMatrix4) -> Result<()> {
    let t = d.trace();
    if (t - C64::new(1.0, 0.0)).norm() <= Tolerance::DEFAULT_EPS {
        Ok(())
    } else {
        Err(Error::BadTrace { re: t.re, im: t.im })
    }
}

/// Inverts the parameterization: `s_i(A) = Tr(d·σ_i⊗I)`, `s_j(B) = Tr(d·I⊗σ_j)`,
/// `C_ij = Tr(d·σ_i⊗σ_j)`. Positivity is not required.
pub fn params_of(d: &ComplexMatrix4) -> Result<DensityParams> {
    ensure_unit_trace(d)?;
    let expect = |a: usize, b: usize| pauli_tensor(a, b).hs_inner(d).re;
    Ok(DensityParams {
        s_a: BlochVector(std::array::from_fn(|i| expect(i + 1, 0))),
        s_b: BlochVector(std::array::from_fn(|j| expect(0, j + 1))),
        c: std::array::from_fn(|i| std::array::from_fn(|j| expect(i + 1, j + 1))),
    })
}

/// `C_ij − s_i(A) s_j(B)`: the part of the correlations not explained by
/// the product of the marginals.
pub fn correlation_residual(p: &DensityParams) -> [[f64; 3]; 3] {
    std::array::from_fn(|i| std::array::from_fn(|j| p.c[i][j] - p.s_a.0[i] * p.s_b.0[j]))
}

/// Dirac-basis coefficients read off the parameters directly, with the
/// A-qubit terms folded in as `C_24 = −s3(A)` and `C_34 = s2(A)`.
pub fn density_dirac_coeffs(p: &DensityParams) -> DiracCoefficients {
    use DiracLabel::*;
    let [s1a, s2a, s3a] = p.s_a.0;
    let c = &p.c;
    DiracCoefficients::from_real_pairs(
        [
            (Unit, 1.0),
            (Gamma5, s1a),
            (Gamma1, c[1][0]),
            (Gamma2, c[1][1]),
            (Gamma3, c[1][2]),
            (Gamma4, -s3a),
            (IG1G5, c[2][0]),
            (IG2G5, c[2][1]),
            (IG3G5, c[2][2]),
            (IG4G5, s2a),
            (Sigma1, p.s_b.0[0]),
            (Sigma2, p.s_b.0[1]),
            (Sigma3, p.s_b.0[2]),
            (IG1G4, c[0][0]),
            (IG2G4, c[0][1]),
            (IG3G4, c[0][2]),
        ]
        .map(|(l, v)| (l, v / 4.0)),
    )
}

pub fn bell_projector(label: BellLabel) -> DensityMatrix {
    DensityMatrix { m: bell_state(label).projector(), validated: true }
}

/// `Tr(d²)`.
pub fn purity(d: &ComplexMatrix4) -> f64 {
    d.matmul(d).trace().re
}

fn purity2(d: &ComplexMatrix2) -> f64 {
    d.matmul(d).trace().re
}

/// Structural fingerprint of Bell-type entanglement: no local Bloch
/// vectors and purely diagonal, nonzero correlations. This is a heuristic
/// for pure states, not an entanglement test for mixed states.
pub fn entanglement_signature(p: &DensityParams, tol: Tolerance) -> bool {
    let eps = tol.eps();
    let no_local = p.s_a.0.iter().chain(p.s_b.0.iter()).all(|x| x.abs() <= eps);
    let off_diag_zero = (0..3)
        .flat_map(|i| (0..3).map(move |j| (i, j)))
        .filter(|(i, j)| i != j)
        .all(|(i, j)| p.c[i][j].abs() <= eps);
    let some_diag = (0..3).any(|i| p.c[i][i].abs() > eps);
    no_local && off_diag_zero && some_diag
}

/// Purities `(Tr ρA², Tr ρB²)` of the two marginals: `(½, ½)` for
/// maximally mixed marginals, `(1, 1)` for pure ones.
pub fn marginal_mixedness(d: &ComplexMatrix4) -> Result<(f64, f64)> {
    ensure_unit_trace(d)?;
    Ok((
        purity2(&partial_trace(d, Qubit::B)),
        purity2(&partial_trace(d, Qubit::A)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirac::decompose;
    use crate::linalg::{ONE, ZERO};

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn one_qubit_cases() {
        let id = ComplexMatrix2::identity();
        assert_eq!(one_qubit_density(BlochVector::ZERO).unwrap(), id.scale_real(0.5));
        assert_eq!(
            one_qubit_density(BlochVector::new(0.0, 0.0, 1.0)).unwrap(),
            ComplexMatrix2::from_real_rows([[1.0, 0.0], [0.0, 0.0]])
        );
        let x = one_qubit_density(BlochVector::new(1.0, 0.0, 0.0)).unwrap();
        assert_eq!(x, ComplexMatrix2::from_real_rows([[0.5, 0.5], [0.5, 0.5]]));
        assert!((purity2(&x) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn out_of_ball_is_rejected() {
        let s = BlochVector::new(1.0, 1.0, 0.0);
        assert!(matches!(one_qubit_density(s), Err(Error::BlochOutOfBall { .. })));
        assert!(embed(s, Qubit::A).is_err());
        assert!(embed_dirac_coeffs(s, Qubit::B).is_err());
        assert!(product_density(BlochVector::ZERO, s).is_err());
        // Slack absorbs round-off on the sphere.
        assert!(one_qubit_density(BlochVector::new(1.0 + 5e-10, 0.0, 0.0)).is_ok());
    }

    #[test]
    fn embedding_cases() {
        let up = embed(BlochVector::new(0.0, 0.0, 1.0), Qubit::A).unwrap();
        assert_eq!(up, ComplexMatrix4::from_real_rows([
            [0.5, 0.0, 0.0, 0.0],
            [0.0, 0.5, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0],
        ]));
        assert!((purity(&up) - 0.5).abs() < 1e-15);
        assert!(up.matmul(&up).max_abs_diff(&up.scale_real(0.5)) < 1e-15);
        let mixed = embed(BlochVector::ZERO, Qubit::A).unwrap();
        assert_eq!(mixed, ComplexMatrix4::identity().scale_real(0.25));
    }

    #[test]
    fn embed_coefficients() {
        let c = embed_dirac_coeffs(BlochVector::new(1.0, 0.0, 0.0), Qubit::A).unwrap();
        assert_eq!(c[DiracLabel::Gamma5], C64::new(0.25, 0.0));
        let c = embed_dirac_coeffs(BlochVector::new(0.0, 0.0, 1.0), Qubit::A).unwrap();
        assert_eq!(c[DiracLabel::Gamma4], C64::new(-0.25, 0.0));
        let c = embed_dirac_coeffs(BlochVector::new(0.0, 1.0, 0.0), Qubit::B).unwrap();
        assert_eq!(c[DiracLabel::Sigma2], C64::new(0.25, 0.0));
    }

    #[test]
    fn product_cases() {
        let up = BlochVector::new(0.0, 0.0, 1.0);
        assert_eq!(
            product_density(up, up).unwrap(),
            ComplexMatrix4::from_diagonal([ONE, ZERO, ZERO, ZERO])
        );
        assert_eq!(
            product_density(BlochVector::ZERO, BlochVector::ZERO).unwrap(),
            ComplexMatrix4::identity().scale_real(0.25)
        );
    }

    #[test]
    fn singlet_from_params() {
        let d = density_from_params(&DensityParams::diagonal(-1.0, -1.0, -1.0), true).unwrap();
        assert!(d.is_validated());
        let singlet = bell_state(BellLabel::PsiMinus).projector();
        assert!(d.matrix().max_abs_diff(&singlet) < 1e-15);
    }

    #[test]
    fn maximally_mixed_from_params() {
        let d = density_from_params(&DensityParams::default(), false).unwrap();
        assert_eq!(*d.matrix(), ComplexMatrix4::identity().scale_real(0.25));
        assert!(!d.is_validated());
    }

    #[test]
    fn overcorrelated_params_are_not_positive() {
        let p = DensityParams::diagonal(2.0, 0.0, 0.0);
        match density_from_params(&p, true) {
            Err(Error::NotPositive { eigenvalue }) => assert!((eigenvalue + 0.25).abs() < 1e-12),
            other => panic!("expected NotPositive, got {other:?}"),
        }
        assert!(density_from_params(&p, false).is_ok());
    }

    #[test]
    fn params_of_cases() {
        let p = params_of(&ComplexMatrix4::identity().scale_real(0.25)).unwrap();
        assert_eq!(p, DensityParams::default());
        let phi = params_of(bell_projector(BellLabel::PhiPlus).matrix()).unwrap();
        assert!(phi.max_abs_diff(&DensityParams::diagonal(1.0, -1.0, 1.0)) < 1e-15);
        assert!(matches!(params_of(&ComplexMatrix4::identity()), Err(Error::BadTrace { .. })));
    }

    #[test]
    fn residual_cases() {
        let a = BlochVector::new(0.3, -0.2, 0.5);
        let b = BlochVector::new(-0.1, 0.4, 0.6);
        let prod = params_of(&product_density(a, b).unwrap()).unwrap();
        for row in correlation_residual(&prod) {
            for x in row {
                assert!(x.abs() < 1e-15);
            }
        }
        assert_eq!(
            correlation_residual(&DensityParams::diagonal(-1.0, -1.0, -1.0)),
            [[-1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, -1.0]]
        );
        let up = BlochVector::new(0.0, 0.0, 1.0);
        let r = correlation_residual(&DensityParams::new(up, up, [[0.0; 3]; 3]));
        assert_eq!(r, [[0.0, 0.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, -1.0]]);
    }

    #[test]
    fn dirac_coefficient_cases() {
        let p = DensityParams::new(BlochVector::new(0.0, 0.0, 1.0), BlochVector::ZERO, [[0.0; 3]; 3]);
        assert_eq!(density_dirac_coeffs(&p)[DiracLabel::Gamma4], C64::new(-0.25, 0.0));
        let mut p = DensityParams::default();
        p.c[1][1] = 1.0;
        assert_eq!(density_dirac_coeffs(&p)[DiracLabel::Gamma2], C64::new(0.25, 0.0));
    }

    #[test]
    fn bell_projector_coefficients() {
        let c = decompose(bell_projector(BellLabel::PsiMinus).matrix());
        let want = DiracCoefficients::from_real_pairs([
            (DiracLabel::Unit, 0.25),
            (DiracLabel::IG1G4, -0.25),
            (DiracLabel::Gamma2, -0.25),
            (DiracLabel::IG3G5, -0.25),
        ]);
        assert!(c.max_abs_diff(&want) < 1e-15);
        let sum: ComplexMatrix4 = BellLabel::ALL.iter().map(|&b| *bell_projector(b).matrix()).sum();
        assert!(sum.max_abs_diff(&ComplexMatrix4::identity()) < 1e-15);
    }

    #[test]
    fn purity_cases() {
        assert!((purity(&ComplexMatrix4::identity().scale_real(0.25)) - 0.25).abs() < 1e-15);
        for b in BellLabel::ALL {
            assert!((purity(bell_projector(b).matrix()) - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn signature_cases() {
        assert!(entanglement_signature(&DensityParams::diagonal(-1.0, -1.0, -1.0), tol()));
        assert!(entanglement_signature(&DensityParams::diagonal(1.0, -1.0, 1.0), tol()));
        let up = BlochVector::new(0.0, 0.0, 1.0);
        assert!(!entanglement_signature(&product_params(up, up), tol()));
        assert!(!entanglement_signature(&DensityParams::default(), tol()));
    }

    #[test]
    fn marginal_cases() {
        for b in BellLabel::ALL {
            let (pa, pb) = marginal_mixedness(bell_projector(b).matrix()).unwrap();
            assert!((pa - 0.5).abs() < 1e-15 && (pb - 0.5).abs() < 1e-15);
        }
        let upup = ComplexMatrix4::from_diagonal([ONE, ZERO, ZERO, ZERO]);
        assert_eq!(marginal_mixedness(&upup).unwrap(), (1.0, 1.0));
        assert!(marginal_mixedness(&ComplexMatrix4::zeros()).is_err());
    }

    #[test]
    fn params_json_shape() {
        let p = DensityParams::diagonal(-1.0, -1.0, -1.0);
        let v = serde_json::to_value(p).unwrap();
        assert_eq!(v["sA"], serde_json::json!([0.0, 0.0, 0.0]));
        assert_eq!(v["C"][2][2], serde_json::json!(-1.0));
        let back: DensityParams = serde_json::from_value(v).unwrap();
        assert_eq!(back, p);
    }
}
