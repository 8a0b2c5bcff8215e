//! Logic gates written in the Dirac basis, and the even/odd density
//! matrices and unitaries of the Arvind–Mukunda entanglement test.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bell::{bell_state, symmetry_operator_in, BellLabel, SymmetryLabel};
use crate::density::{bell_projector, marginal_mixedness};
use crate::dirac::{DiracBasis, DiracCoefficients, DiracLabel};
use crate::error::{Error, Result};
use crate::linalg::{
    kron, sigma1, sigma3, ComplexMatrix2, ComplexMatrix4, StateVector4, Tolerance, C64, I, ONE,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GateLabel {
    Not1,
    Hadamard1,
    Cnot,
    Not2,
    Swap,
}

impl GateLabel {
    pub const ALL: [GateLabel; 5] = [
        GateLabel::Not1,
        GateLabel::Hadamard1,
        GateLabel::Cnot,
        GateLabel::Not2,
        GateLabel::Swap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GateLabel::Not1 => "NOT1",
            GateLabel::Hadamard1 => "HADAMARD1",
            GateLabel::Cnot => "CNOT",
            GateLabel::Not2 => "NOT2",
            GateLabel::Swap => "SWAP",
        }
    }

    pub fn is_two_qubit(self) -> bool {
        matches!(self, GateLabel::Cnot | GateLabel::Not2 | GateLabel::Swap)
    }
}

impl fmt::Display for GateLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GateLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.trim().to_ascii_uppercase();
        GateLabel::ALL
            .into_iter()
            .find(|g| g.name() == wanted)
            .ok_or_else(|| Error::UnknownGate(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GateMatrix {
    One(ComplexMatrix2),
    Two(ComplexMatrix4),
}

impl GateMatrix {
    pub fn unitarity_error(&self) -> f64 {
        match self {
            GateMatrix::One(m) => m.unitarity_error(),
            GateMatrix::Two(m) => m.unitarity_error(),
        }
    }
}

pub fn gate(label: GateLabel) -> GateMatrix {
    match label {
        GateLabel::Not1 => GateMatrix::One(sigma1()),
        GateLabel::Hadamard1 => {
            GateMatrix::One((sigma1() + sigma3()).scale_real(std::f64::consts::FRAC_1_SQRT_2))
        }
        GateLabel::Cnot => GateMatrix::Two(ComplexMatrix4::from_real_rows([
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
        ])),
        GateLabel::Not2 => GateMatrix::Two(ComplexMatrix4::from_real_rows([
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
        ])),
        GateLabel::Swap => GateMatrix::Two(ComplexMatrix4::from_real_rows([
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ])),
    }
}

pub fn two_qubit_gate(label: GateLabel) -> Result<ComplexMatrix4> {
    match gate(label) {
        GateMatrix::Two(m) => Ok(m),
        GateMatrix::One(_) => Err(Error::UnsupportedLabel(label.name().to_string())),
    }
}

/// Dirac coefficients of the two-qubit gates:
///
/// * `CNOT = ½(I − iγ1γ2 + γ5 − iγ3γ4) = ½(I + Σ3 + γ5 − iγ3γ4)`
/// * `NOT2 = γ5`
/// * `SWAP = ½(I + iγ1γ4 + γ2 + iγ3γ5)`
pub fn gate_dirac_form(label: GateLabel) -> Result<DiracCoefficients> {
    use DiracLabel::*;
    let pairs: &[(DiracLabel, f64)] = match label {
        GateLabel::Cnot => &[(Unit, 0.5), (Sigma3, 0.5), (Gamma5, 0.5), (IG3G4, -0.5)],
        GateLabel::Not2 => &[(Gamma5, 1.0)],
        GateLabel::Swap => &[(Unit, 0.5), (IG1G4, 0.5), (Gamma2, 0.5), (IG3G5, 0.5)],
        other => return Err(Error::UnsupportedLabel(other.name().to_string())),
    };
    Ok(DiracCoefficients::from_real_pairs(pairs.iter().copied()))
}

/// The gate rebuilt literally from products of gamma matrices, term by
/// term as written in [`gate_dirac_form`]'s doc.
pub fn gate_gamma_products(basis: &DiracBasis, label: GateLabel) -> Result<ComplexMatrix4> {
    let g = |mu: usize| *basis.gamma(mu);
    let id = ComplexMatrix4::identity();
    let half = 0.5;
    Ok(match label {
        GateLabel::Cnot => {
            (id - g(1).matmul(&g(2)).scale(I) + g(5) - g(3).matmul(&g(4)).scale(I)).scale_real(half)
        }
        GateLabel::Not2 => g(5),
        GateLabel::Swap => {
            (id + g(1).matmul(&g(4)).scale(I) + g(2) + g(3).matmul(&g(5)).scale(I)).scale_real(half)
        }
        other => return Err(Error::UnsupportedLabel(other.name().to_string())),
    })
}

/// `i·P·T`, which equals the two-qubit NOT.
pub fn i_parity_time(basis: &DiracBasis) -> ComplexMatrix4 {
    let p = symmetry_operator_in(basis, SymmetryLabel::P);
    let t = symmetry_operator_in(basis, SymmetryLabel::T);
    p.matmul(&t).scale(I)
}

/// SWAP as a signed sum of Bell projectors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SwapBellDecomposition {
    /// Weights on `|Ψ+⟩⟨Ψ+|, |Ψ−⟩⟨Ψ−|, |Φ+⟩⟨Φ+|, |Φ−⟩⟨Φ−|`.
    pub signs: [f64; 4],
    /// `‖Σ signs·Π − SWAP‖_max`.
    pub error: f64,
}

impl SwapBellDecomposition {
    pub fn display_terms(&self) -> String {
        self.signs
            .iter()
            .enumerate()
            .map(|(k, s)| format!("{}Π{}", if *s >= 0.0 { '+' } else { '−' }, k + 1))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Reads each sign off `⟨b|SWAP|b⟩` and checks that the signed projector
/// sum reproduces the full SWAP matrix.
pub fn swap_bell_decomposition() -> SwapBellDecomposition {
    let swap = two_qubit_gate(GateLabel::Swap).expect("SWAP is two-qubit");
    let signs = BellLabel::ALL.map(|b| {
        let v = bell_state(b);
        v.inner(&(swap * v)).re.signum()
    });
    let sum: ComplexMatrix4 = BellLabel::ALL
        .iter()
        .zip(signs)
        .map(|(&b, s)| bell_projector(b).matrix().scale_real(s))
        .sum();
    SwapBellDecomposition { signs, error: sum.max_abs_diff(&swap) }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

/// The explicit even/odd matrices:
/// even `½[[1,±1],[±1,1]] ⊕ 0` on `|↑↑⟩,|↑↓⟩`; odd the same on `|↑↓⟩,|↓↑⟩`.
pub fn even_odd_template(kind: Parity, sign: Sign) -> ComplexMatrix4 {
    let (a, b) = match kind {
        Parity::Even => (0, 1),
        Parity::Odd => (1, 2),
    };
    let mut m = ComplexMatrix4::zeros();
    m[(a, a)] = C64::new(0.5, 0.0);
    m[(b, b)] = C64::new(0.5, 0.0);
    m[(a, b)] = C64::new(0.5 * sign.value(), 0.0);
    m[(b, a)] = C64::new(0.5 * sign.value(), 0.0);
    m
}

/// Dirac form of the templates, with `−iγ2γ3 = Σ1`:
///
/// * even: `¼(I − γ4 ± Σ1 ± iγ1γ5)`, i.e. `¼(I − γ4 ∓ iγ2γ3 ± iγ1γ5)`
/// * odd: `¼(I − iγ3γ5 ± iγ1γ4 ± γ2)`
pub fn even_odd_dirac_form(kind: Parity, sign: Sign) -> DiracCoefficients {
    use DiracLabel::*;
    let s = sign.value() * 0.25;
    match kind {
        Parity::Even => DiracCoefficients::from_real_pairs([
            (Unit, 0.25),
            (Gamma4, -0.25),
            (Sigma1, s),
            (IG1G5, s),
        ]),
        Parity::Odd => DiracCoefficients::from_real_pairs([
            (Unit, 0.25),
            (IG3G5, -0.25),
            (IG1G4, s),
            (Gamma2, s),
        ]),
    }
}

/// `(|Ψ+⟩ + |Ψ−⟩ ± |Φ+⟩ ± |Φ−⟩) / 2`, whose projector is the even template.
pub fn even_state(sign: Sign) -> StateVector4 {
    let s = C64::new(sign.value(), 0.0);
    (bell_state(BellLabel::PsiPlus)
        + bell_state(BellLabel::PsiMinus)
        + bell_state(BellLabel::PhiPlus).scale(s)
        + bell_state(BellLabel::PhiMinus).scale(s))
    .normalized()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum EvenOddKind {
    EvenPlus,
    EvenMinus,
    OddPlus,
    OddMinus,
    Neither,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EvenOddVerdict {
    pub kind: EvenOddKind,
    pub c_invariant: bool,
    pub p_invariant: bool,
    /// Both marginals are pure.
    pub separable_marginal: bool,
}

pub fn classify_even_odd(d: &ComplexMatrix4, tol: Tolerance) -> Result<EvenOddVerdict> {
    classify_even_odd_in(DiracBasis::standard(), d, tol)
}

pub fn classify_even_odd_in(
    basis: &DiracBasis,
    d: &ComplexMatrix4,
    tol: Tolerance,
) -> Result<EvenOddVerdict> {
    let herm = d.hermiticity_error();
    if herm > tol.eps() {
        return Err(Error::BadDensity(format!("not Hermitian (deviation {herm:e})")));
    }
    let tr = d.trace();
    if (tr - ONE).norm() > tol.eps() {
        return Err(Error::BadDensity(format!("trace is {} + {}i, expected 1", tr.re, tr.im)));
    }

    let templates = [
        (EvenOddKind::EvenPlus, Parity::Even, Sign::Plus),
        (EvenOddKind::EvenMinus, Parity::Even, Sign::Minus),
        (EvenOddKind::OddPlus, Parity::Odd, Sign::Plus),
        (EvenOddKind::OddMinus, Parity::Odd, Sign::Minus),
    ];
    let kind = templates
        .iter()
        .find(|(_, p, s)| even_odd_template(*p, *s).approx_eq(d, tol))
        .map_or(EvenOddKind::Neither, |(k, _, _)| *k);

    let invariant = |s: SymmetryLabel| {
        let op = symmetry_operator_in(basis, s);
        d.conjugate_by(&op).approx_eq(d, tol)
    };
    let (pa, pb) = marginal_mixedness(d)?;
    Ok(EvenOddVerdict {
        kind,
        c_invariant: invariant(SymmetryLabel::C),
        p_invariant: invariant(SymmetryLabel::P),
        separable_marginal: (pa - 1.0).abs() <= tol.eps() && (pb - 1.0).abs() <= tol.eps(),
    })
}

/// The eight even-function unitaries `U[0,4] = I = −U[4,0]` and
/// `U[2,2] ∈ {±γ4, ±iγ1γ2, ±iγ3γ5}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AMUnitaryLabel {
    U04,
    U40,
    U22G4Plus,
    U22G4Minus,
    U22IG1G2Plus,
    U22IG1G2Minus,
    U22IG3G5Plus,
    U22IG3G5Minus,
}

impl AMUnitaryLabel {
    pub const ALL: [AMUnitaryLabel; 8] = [
        AMUnitaryLabel::U04,
        AMUnitaryLabel::U40,
        AMUnitaryLabel::U22G4Plus,
        AMUnitaryLabel::U22G4Minus,
        AMUnitaryLabel::U22IG1G2Plus,
        AMUnitaryLabel::U22IG1G2Minus,
        AMUnitaryLabel::U22IG3G5Plus,
        AMUnitaryLabel::U22IG3G5Minus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AMUnitaryLabel::U04 => "U04",
            AMUnitaryLabel::U40 => "U40",
            AMUnitaryLabel::U22G4Plus => "U22_G4_PLUS",
            AMUnitaryLabel::U22G4Minus => "U22_G4_MINUS",
            AMUnitaryLabel::U22IG1G2Plus => "U22_IG1G2_PLUS",
            AMUnitaryLabel::U22IG1G2Minus => "U22_IG1G2_MINUS",
            AMUnitaryLabel::U22IG3G5Plus => "U22_IG3G5_PLUS",
            AMUnitaryLabel::U22IG3G5Minus => "U22_IG3G5_MINUS",
        }
    }

    /// Tensor factors `(X, Y)` with the unitary proportional to `X ⊗ Y`.
    pub fn expected_factors(self) -> (ComplexMatrix2, ComplexMatrix2) {
        let id = ComplexMatrix2::identity();
        match self {
            AMUnitaryLabel::U04 | AMUnitaryLabel::U40 => (id, id),
            AMUnitaryLabel::U22G4Plus | AMUnitaryLabel::U22G4Minus => (sigma3(), id),
            AMUnitaryLabel::U22IG1G2Plus | AMUnitaryLabel::U22IG1G2Minus => (id, sigma3()),
            AMUnitaryLabel::U22IG3G5Plus | AMUnitaryLabel::U22IG3G5Minus => (sigma3(), sigma3()),
        }
    }
}

pub fn am_unitary(label: AMUnitaryLabel) -> ComplexMatrix4 {
    am_unitary_in(DiracBasis::standard(), label)
}

pub fn am_unitary_in(basis: &DiracBasis, label: AMUnitaryLabel) -> ComplexMatrix4 {
    let g = |mu: usize| *basis.gamma(mu);
    let id = ComplexMatrix4::identity();
    match label {
        AMUnitaryLabel::U04 => id,
        AMUnitaryLabel::U40 => -id,
        AMUnitaryLabel::U22G4Plus => g(4),
        AMUnitaryLabel::U22G4Minus => -g(4),
        AMUnitaryLabel::U22IG1G2Plus => g(1).matmul(&g(2)).scale(I),
        AMUnitaryLabel::U22IG1G2Minus => -g(1).matmul(&g(2)).scale(I),
        AMUnitaryLabel::U22IG3G5Plus => g(3).matmul(&g(5)).scale(I),
        AMUnitaryLabel::U22IG3G5Minus => -g(3).matmul(&g(5)).scale(I),
    }
}

/// Whether `a = λ·b` for some nonzero scalar `λ`, within `tol`.
pub fn proportional<const N: usize>(
    a: &crate::linalg::SquareMatrix<N>,
    b: &crate::linalg::SquareMatrix<N>,
    tol: Tolerance,
) -> bool {
    let bb = b.hs_inner(b);
    if bb.norm() <= tol.eps() {
        return false;
    }
    let lambda = b.hs_inner(a) / bb;
    lambda.norm() > tol.eps() && b.scale(lambda).approx_eq(a, tol)
}

/// Product of the expected factors, used as a closed-form cross-check.
pub fn am_expected_product(label: AMUnitaryLabel) -> ComplexMatrix4 {
    let (x, y) = label.expected_factors();
    kron(&x, &y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirac::{dirac_matrix, reconstruct};
    use crate::linalg::kron_factor;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn explicit_gates() {
        let GateMatrix::Two(not2) = gate(GateLabel::Not2) else { panic!() };
        assert_eq!(not2, kron(&sigma1(), &ComplexMatrix2::identity()));
        let GateMatrix::One(h) = gate(GateLabel::Hadamard1) else { panic!() };
        assert!(h.matmul(&h).max_abs_diff(&ComplexMatrix2::identity()) < 1e-15);
        for g in GateLabel::ALL {
            assert!(gate(g).unitarity_error() < 1e-15, "{g}");
        }
    }

    #[test]
    fn dirac_forms_reconstruct_gates() {
        let basis = DiracBasis::standard();
        for g in [GateLabel::Cnot, GateLabel::Not2, GateLabel::Swap] {
            let m = two_qubit_gate(g).unwrap();
            assert!(reconstruct(&gate_dirac_form(g).unwrap()).max_abs_diff(&m) < 1e-15, "{g}");
            assert!(gate_gamma_products(basis, g).unwrap().max_abs_diff(&m) < 1e-15, "{g}");
        }
        assert!(matches!(gate_dirac_form(GateLabel::Not1), Err(Error::UnsupportedLabel(_))));
        assert!(two_qubit_gate(GateLabel::Hadamard1).is_err());
    }

    #[test]
    fn gate_labels_parse() {
        assert_eq!("swap".parse::<GateLabel>().unwrap(), GateLabel::Swap);
        assert!(matches!("TOFFOLI".parse::<GateLabel>(), Err(Error::UnknownGate(_))));
    }

    #[test]
    fn not2_is_i_pt() {
        let m = i_parity_time(DiracBasis::standard());
        assert!(m.max_abs_diff(&dirac_matrix(DiracLabel::Gamma5)) < 1e-15);
    }

    #[test]
    fn swap_bell_sum() {
        let d = swap_bell_decomposition();
        assert_eq!(d.signs, [1.0, -1.0, 1.0, 1.0]);
        assert!(d.error < 1e-15);
        assert_eq!(d.display_terms(), "+Π1 −Π2 +Π3 +Π4");
    }

    #[test]
    fn swap_exchange_symmetry() {
        let swap = two_qubit_gate(GateLabel::Swap).unwrap();
        let singlet = bell_state(BellLabel::PsiMinus);
        assert!((swap * singlet).max_abs_diff(&singlet.scale(-ONE)) < 1e-15);
        let up_up = StateVector4::basis(0);
        assert!((swap * up_up).max_abs_diff(&up_up) < 1e-15);
    }

    #[test]
    fn templates() {
        assert_eq!(
            even_odd_template(Parity::Odd, Sign::Plus),
            ComplexMatrix4::from_real_rows([
                [0.0, 0.0, 0.0, 0.0],
                [0.0, 0.5, 0.5, 0.0],
                [0.0, 0.5, 0.5, 0.0],
                [0.0, 0.0, 0.0, 0.0],
            ])
        );
        assert_eq!(
            even_odd_template(Parity::Even, Sign::Plus),
            ComplexMatrix4::from_real_rows([
                [0.5, 0.5, 0.0, 0.0],
                [0.5, 0.5, 0.0, 0.0],
                [0.0, 0.0, 0.0, 0.0],
                [0.0, 0.0, 0.0, 0.0],
            ])
        );
        for kind in [Parity::Even, Parity::Odd] {
            for sign in [Sign::Plus, Sign::Minus] {
                let t = even_odd_template(kind, sign);
                assert!(reconstruct(&even_odd_dirac_form(kind, sign)).max_abs_diff(&t) < 1e-15);
            }
        }
        assert!(even_odd_template(Parity::Odd, Sign::Plus)
            .max_abs_diff(bell_projector(BellLabel::PsiPlus).matrix())
            < 1e-15);
        assert!(even_odd_template(Parity::Odd, Sign::Minus)
            .max_abs_diff(bell_projector(BellLabel::PsiMinus).matrix())
            < 1e-15);
    }

    #[test]
    fn even_state_projector() {
        for sign in [Sign::Plus, Sign::Minus] {
            let p = even_state(sign).projector();
            assert!(p.max_abs_diff(&even_odd_template(Parity::Even, sign)) < 1e-15);
        }
    }

    #[test]
    fn classify_templates() {
        let v = classify_even_odd(&even_odd_template(Parity::Odd, Sign::Plus), tol()).unwrap();
        assert_eq!(
            v,
            EvenOddVerdict {
                kind: EvenOddKind::OddPlus,
                c_invariant: true,
                p_invariant: false,
                separable_marginal: false
            }
        );
        let v = classify_even_odd(&even_odd_template(Parity::Even, Sign::Minus), tol()).unwrap();
        assert_eq!(
            v,
            EvenOddVerdict {
                kind: EvenOddKind::EvenMinus,
                c_invariant: false,
                p_invariant: true,
                separable_marginal: true
            }
        );
        let v = classify_even_odd(&ComplexMatrix4::identity().scale_real(0.25), tol()).unwrap();
        assert_eq!(
            v,
            EvenOddVerdict {
                kind: EvenOddKind::Neither,
                c_invariant: true,
                p_invariant: true,
                separable_marginal: false
            }
        );
    }

    #[test]
    fn classify_rejects_bad_input() {
        assert!(matches!(
            classify_even_odd(&ComplexMatrix4::identity(), tol()),
            Err(Error::BadDensity(_))
        ));
        let mut m = ComplexMatrix4::identity().scale_real(0.25);
        m[(0, 1)] = I;
        assert!(matches!(classify_even_odd(&m, tol()), Err(Error::BadDensity(_))));
    }

    #[test]
    fn am_unitaries() {
        assert_eq!(am_unitary(AMUnitaryLabel::U04), ComplexMatrix4::identity());
        assert_eq!(am_unitary(AMUnitaryLabel::U40), -ComplexMatrix4::identity());
        assert!(am_unitary(AMUnitaryLabel::U22IG3G5Plus)
            .max_abs_diff(&kron(&sigma3(), &sigma3()))
            < 1e-15);
        let p = crate::bell::symmetry_operator(SymmetryLabel::P);
        for label in AMUnitaryLabel::ALL {
            let u = am_unitary(label);
            assert!(u.is_unitary(tol()));
            assert!(u.conjugate_by(&p).approx_eq(&u, tol()), "{}", label.name());
            let (x, y) = kron_factor(&u, tol()).expect("separable");
            let (ex, ey) = label.expected_factors();
            assert!(proportional(&x, &ex, tol()) && proportional(&y, &ey, tol()), "{}", label.name());
        }
        let (x, y) = kron_factor(&am_unitary(AMUnitaryLabel::U22G4Plus), tol()).unwrap();
        assert!(x.approx_eq(&sigma3(), tol()));
        assert!(y.approx_eq(&-ComplexMatrix2::identity(), tol()));
    }
}
