//! The sixteen-element Dirac operator basis for two qubits.
//!
//! Every element is stored as an explicit tensor product of Pauli matrices
//! (qubit A on the left):
//!
//! | label     | product form | tensor form |
//! |-----------|--------------|-------------|
//! | `UNIT`    | `I`          | `I ⊗ I`     |
//! | `GAMMA_1` | `γ1`         | `σ2 ⊗ σ1`   |
//! | `GAMMA_2` | `γ2`         | `σ2 ⊗ σ2`   |
//! | `GAMMA_3` | `γ3`         | `σ2 ⊗ σ3`   |
//! | `GAMMA_4` | `γ4`         | `−σ3 ⊗ I`   |
//! | `SIGMA_1` | `−iγ2γ3`     | `I ⊗ σ1`    |
//! | `SIGMA_2` | `−iγ3γ1`     | `I ⊗ σ2`    |
//! | `SIGMA_3` | `−iγ1γ2`     | `I ⊗ σ3`    |
//! | `IG1G4`   | `iγ1γ4`      | `σ1 ⊗ σ1`   |
//! | `IG2G4`   | `iγ2γ4`      | `σ1 ⊗ σ2`   |
//! | `IG3G4`   | `iγ3γ4`      | `σ1 ⊗ σ3`   |
//! | `IG1G5`   | `iγ1γ5`      | `σ3 ⊗ σ1`   |
//! | `IG2G5`   | `iγ2γ5`      | `σ3 ⊗ σ2`   |
//! | `IG3G5`   | `iγ3γ5`      | `σ3 ⊗ σ3`   |
//! | `IG4G5`   | `iγ4γ5`      | `σ2 ⊗ I`    |
//! | `GAMMA_5` | `γ1γ2γ3γ4`   | `σ1 ⊗ I`    |
//!
//! The tensor form is the definition; the product form is checked against
//! it by [`DiracBasis::product_form_errors`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Index, IndexMut};
use std::str::FromStr;
use std::sync::OnceLock;

use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{kron, pauli, ComplexMatrix4, Tolerance, C64, I, ZERO};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DiracLabel {
    Unit,
    Gamma1,
    Gamma2,
    Gamma3,
    Gamma4,
    Sigma1,
    Sigma2,
    Sigma3,
    IG1G4,
    IG2G4,
    IG3G4,
    IG1G5,
    IG2G5,
    IG3G5,
    IG4G5,
    Gamma5,
}

impl DiracLabel {
    pub const ALL: [DiracLabel; 16] = [
        DiracLabel::Unit,
        DiracLabel::Gamma1,
        DiracLabel::Gamma2,
        DiracLabel::Gamma3,
        DiracLabel::Gamma4,
        DiracLabel::Sigma1,
        DiracLabel::Sigma2,
        DiracLabel::Sigma3,
        DiracLabel::IG1G4,
        DiracLabel::IG2G4,
        DiracLabel::IG3G4,
        DiracLabel::IG1G5,
        DiracLabel::IG2G5,
        DiracLabel::IG3G5,
        DiracLabel::IG4G5,
        DiracLabel::Gamma5,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(index: usize) -> Option<Self> {
        Self::ALL.get(index).copied()
    }

    /// `γ1..γ5` by their conventional index.
    pub fn gamma(mu: usize) -> Option<Self> {
        match mu {
            1 => Some(DiracLabel::Gamma1),
            2 => Some(DiracLabel::Gamma2),
            3 => Some(DiracLabel::Gamma3),
            4 => Some(DiracLabel::Gamma4),
            5 => Some(DiracLabel::Gamma5),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            DiracLabel::Unit => "UNIT",
            DiracLabel::Gamma1 => "GAMMA_1",
            DiracLabel::Gamma2 => "GAMMA_2",
            DiracLabel::Gamma3 => "GAMMA_3",
            DiracLabel::Gamma4 => "GAMMA_4",
            DiracLabel::Sigma1 => "SIGMA_1",
            DiracLabel::Sigma2 => "SIGMA_2",
            DiracLabel::Sigma3 => "SIGMA_3",
            DiracLabel::IG1G4 => "IG1G4",
            DiracLabel::IG2G4 => "IG2G4",
            DiracLabel::IG3G4 => "IG3G4",
            DiracLabel::IG1G5 => "IG1G5",
            DiracLabel::IG2G5 => "IG2G5",
            DiracLabel::IG3G5 => "IG3G5",
            DiracLabel::IG4G5 => "IG4G5",
            DiracLabel::Gamma5 => "GAMMA_5",
        }
    }

    /// `(sign, a, b)` such that the basis element is `sign · σa ⊗ σb`
    /// (index 0 is the identity).
    pub fn tensor_form(self) -> (f64, usize, usize) {
        match self {
            DiracLabel::Unit => (1.0, 0, 0),
            DiracLabel::Gamma1 => (1.0, 2, 1),
            DiracLabel::Gamma2 => (1.0, 2, 2),
            DiracLabel::Gamma3 => (1.0, 2, 3),
            DiracLabel::Gamma4 => (-1.0, 3, 0),
            DiracLabel::Sigma1 => (1.0, 0, 1),
            DiracLabel::Sigma2 => (1.0, 0, 2),
            DiracLabel::Sigma3 => (1.0, 0, 3),
            DiracLabel::IG1G4 => (1.0, 1, 1),
            DiracLabel::IG2G4 => (1.0, 1, 2),
            DiracLabel::IG3G4 => (1.0, 1, 3),
            DiracLabel::IG1G5 => (1.0, 3, 1),
            DiracLabel::IG2G5 => (1.0, 3, 2),
            DiracLabel::IG3G5 => (1.0, 3, 3),
            DiracLabel::IG4G5 => (1.0, 2, 0),
            DiracLabel::Gamma5 => (1.0, 1, 0),
        }
    }

    pub fn rank(self) -> TensorRank {
        use DiracLabel::*;
        match self {
            Unit => TensorRank::Scalar,
            Gamma1 | Gamma2 | Gamma3 | Gamma4 => TensorRank::FourVector,
            Sigma1 | Sigma2 | Sigma3 | IG1G4 | IG2G4 | IG3G4 => TensorRank::AntisymTensor,
            IG1G5 | IG2G5 | IG3G5 | IG4G5 => TensorRank::PseudoVector,
            Gamma5 => TensorRank::PseudoScalar,
        }
    }
}

impl fmt::Display for DiracLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DiracLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.trim().to_ascii_uppercase();
        DiracLabel::ALL
            .into_iter()
            .find(|l| l.name() == wanted)
            .ok_or_else(|| Error::UnknownLabel(s.to_string()))
    }
}

/// Lorentz character of a basis element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TensorRank {
    Scalar,
    FourVector,
    AntisymTensor,
    PseudoVector,
    PseudoScalar,
}

impl TensorRank {
    pub const ALL: [TensorRank; 5] = [
        TensorRank::Scalar,
        TensorRank::FourVector,
        TensorRank::AntisymTensor,
        TensorRank::PseudoVector,
        TensorRank::PseudoScalar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TensorRank::Scalar => "scalar",
            TensorRank::FourVector => "four_vector",
            TensorRank::AntisymTensor => "antisym_tensor",
            TensorRank::PseudoVector => "pseudo_vector",
            TensorRank::PseudoScalar => "pseudo_scalar",
        }
    }
}

pub fn rank_of(label: DiracLabel) -> TensorRank {
    label.rank()
}

/// The sixteen basis matrices, indexed by [`DiracLabel`].
///
/// [`DiracBasis::standard`] is the only basis used for physics; other
/// instances exist so that verification code can be run against a
/// deliberately altered basis.
#[derive(Debug, Clone, PartialEq)]
pub struct DiracBasis {
    mats: [ComplexMatrix4; 16],
}

impl DiracBasis {
    pub fn standard() -> &'static DiracBasis {
        static BASIS: OnceLock<DiracBasis> = OnceLock::new();
        BASIS.get_or_init(|| DiracBasis {
            mats: DiracLabel::ALL.map(|label| {
                let (sign, a, b) = label.tensor_form();
                kron(&pauli(a), &pauli(b)).scale_real(sign)
            }),
        })
    }

    /// Copy of `self` with one element replaced.
    pub fn with_matrix(&self, label: DiracLabel, m: ComplexMatrix4) -> DiracBasis {
        let mut out = self.clone();
        out.mats[label.index()] = m;
        out
    }

    pub fn matrix(&self, label: DiracLabel) -> &ComplexMatrix4 {
        &self.mats[label.index()]
    }

    /// `γμ` for `mu` in `1..=5`.
    pub fn gamma(&self, mu: usize) -> &ComplexMatrix4 {
        let label = DiracLabel::gamma(mu).unwrap_or_else(|| panic!("no gamma matrix γ{mu}"));
        self.matrix(label)
    }

    pub fn iter(&self) -> impl Iterator<Item = (DiracLabel, &ComplexMatrix4)> {
        DiracLabel::ALL.into_iter().zip(self.mats.iter())
    }

    /// Coefficients `c_A = Tr(Γ_A · m) / 4`.
    pub fn decompose(&self, m: &ComplexMatrix4) -> DiracCoefficients {
        // Γ_A is Hermitian, so Tr(Γ_A m) = ⟨Γ_A, m⟩_HS.
        DiracCoefficients {
            coeffs: self.mats.map(|g| g.hs_inner(m) * 0.25),
        }
    }

    pub fn reconstruct(&self, c: &DiracCoefficients) -> ComplexMatrix4 {
        self.mats.iter().zip(c.coeffs.iter()).map(|(g, &a)| g.scale(a)).sum()
    }

    /// The element rebuilt from products of `γ1..γ4` of this basis.
    pub fn product_form(&self, label: DiracLabel) -> ComplexMatrix4 {
        use DiracLabel::*;
        let g = |mu: usize| *self.gamma(mu);
        let prod = |a: usize, b: usize, phase: C64| g(a).matmul(&g(b)).scale(phase);
        match label {
            Unit => ComplexMatrix4::identity(),
            Gamma1 | Gamma2 | Gamma3 | Gamma4 => *self.matrix(label),
            Sigma1 => prod(2, 3, -I),
            Sigma2 => prod(3, 1, -I),
            Sigma3 => prod(1, 2, -I),
            IG1G4 => prod(1, 4, I),
            IG2G4 => prod(2, 4, I),
            IG3G4 => prod(3, 4, I),
            IG1G5 => prod(1, 5, I),
            IG2G5 => prod(2, 5, I),
            IG3G5 => prod(3, 5, I),
            IG4G5 => prod(4, 5, I),
            Gamma5 => g(1).matmul(&g(2)).matmul(&g(3)).matmul(&g(4)),
        }
    }

    /// Per-label `‖stored − product form‖_max`.
    pub fn product_form_errors(&self) -> [(DiracLabel, f64); 16] {
        DiracLabel::ALL.map(|l| (l, self.matrix(l).max_abs_diff(&self.product_form(l))))
    }

    pub fn verify_clifford(&self, tol: Tolerance) -> CliffordReport {
        let id = ComplexMatrix4::identity();
        let mut report = CliffordReport::default();
        let mut record = |relation: CliffordRelation, err: f64| {
            report.max_error = report.max_error.max(err);
            if err > tol.eps() {
                report.violations.push(CliffordViolation { relation, error: err });
            }
        };
        for mu in 1..=4 {
            for nu in 1..=4 {
                let expected = if mu == nu { id.scale_real(2.0) } else { ComplexMatrix4::zeros() };
                let err = self.gamma(mu).anticommutator(self.gamma(nu)).max_abs_diff(&expected);
                record(CliffordRelation::Anticommutator(mu, nu), err);
            }
        }
        for mu in 1..=4 {
            let err = self.gamma(5).anticommutator(self.gamma(mu)).max_abs();
            record(CliffordRelation::Gamma5Anticommutes(mu), err);
        }
        let err = self.gamma(5).max_abs_diff(&self.product_form(DiracLabel::Gamma5));
        record(CliffordRelation::Gamma5Product, err);
        report
    }
}

pub fn dirac_matrix(label: DiracLabel) -> ComplexMatrix4 {
    *DiracBasis::standard().matrix(label)
}

pub fn decompose(m: &ComplexMatrix4) -> DiracCoefficients {
    DiracBasis::standard().decompose(m)
}

pub fn reconstruct(c: &DiracCoefficients) -> ComplexMatrix4 {
    DiracBasis::standard().reconstruct(c)
}

pub fn verify_clifford(tol: Tolerance) -> CliffordReport {
    DiracBasis::standard().verify_clifford(tol)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CliffordRelation {
    /// `{γμ, γν} = 2δμν`
    Anticommutator(usize, usize),
    /// `{γ5, γμ} = 0`
    Gamma5Anticommutes(usize),
    /// `γ5 = γ1γ2γ3γ4`
    Gamma5Product,
}

impl fmt::Display for CliffordRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliffordRelation::Anticommutator(m, n) => write!(f, "{{γ{m},γ{n}}}"),
            CliffordRelation::Gamma5Anticommutes(m) => write!(f, "{{γ5,γ{m}}}"),
            CliffordRelation::Gamma5Product => f.write_str("γ5=γ1γ2γ3γ4"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CliffordViolation {
    pub relation: CliffordRelation,
    pub error: f64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct CliffordReport {
    pub violations: Vec<CliffordViolation>,
    pub max_error: f64,
}

impl CliffordReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn contains_pair(&self, mu: usize, nu: usize) -> bool {
        self.violations
            .iter()
            .any(|v| v.relation == CliffordRelation::Anticommutator(mu, nu))
    }
}

/// Expansion weights of an operator over the sixteen basis elements.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiracCoefficients {
    coeffs: [C64; 16],
}

impl DiracCoefficients {
    pub fn zeros() -> Self {
        DiracCoefficients { coeffs: [ZERO; 16] }
    }

    pub fn from_array(coeffs: [C64; 16]) -> Self {
        DiracCoefficients { coeffs }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (DiracLabel, C64)>) -> Self {
        let mut c = Self::zeros();
        for (l, v) in pairs {
            c[l] += v;
        }
        c
    }

    pub fn from_real_pairs(pairs: impl IntoIterator<Item = (DiracLabel, f64)>) -> Self {
        Self::from_pairs(pairs.into_iter().map(|(l, v)| (l, C64::new(v, 0.0))))
    }

    pub fn as_array(&self) -> &[C64; 16] {
        &self.coeffs
    }

    pub fn iter(&self) -> impl Iterator<Item = (DiracLabel, C64)> + '_ {
        DiracLabel::ALL.into_iter().zip(self.coeffs.iter().copied())
    }

    /// Labels with `|c| > eps`.
    pub fn support(&self, tol: Tolerance) -> Vec<(DiracLabel, C64)> {
        self.iter().filter(|(_, c)| c.norm() > tol.eps()).collect()
    }

    pub fn max_imag(&self) -> f64 {
        self.coeffs.iter().map(|c| c.im.abs()).fold(0.0, f64::max)
    }

    pub fn is_real(&self, tol: Tolerance) -> bool {
        self.max_imag() <= tol.eps()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.coeffs
            .iter()
            .zip(other.coeffs.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

impl Default for DiracCoefficients {
    fn default() -> Self {
        Self::zeros()
    }
}

impl Index<DiracLabel> for DiracCoefficients {
    type Output = C64;
    fn index(&self, l: DiracLabel) -> &C64 {
        &self.coeffs[l.index()]
    }
}

impl IndexMut<DiracLabel> for DiracCoefficients {
    fn index_mut(&mut self, l: DiracLabel) -> &mut C64 {
        &mut self.coeffs[l.index()]
    }
}

impl Serialize for DiracCoefficients {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(16))?;
        for (label, c) in self.iter() {
            map.serialize_entry(label.name(), &[c.re, c.im])?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for DiracCoefficients {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = BTreeMap::<String, [f64; 2]>::deserialize(deserializer)?;
        let mut c = DiracCoefficients::zeros();
        for (name, [re, im]) in raw {
            let label = name.parse::<DiracLabel>().map_err(D::Error::custom)?;
            c[label] = C64::new(re, im);
        }
        Ok(c)
    }
}
