//! Bell and singlet–triplet bases, the T/C/P operators, and how Dirac
//! matrices and symmetries act on Bell states.
//!
//! T, C and P are plain unitary matrices here:
//!
//! * `T = γ5γ4 = iσ2 ⊗ I`
//! * `C = −iγ2 = −iσ2 ⊗ σ2`
//! * `P = iγ4 = −iσ3 ⊗ I`
//!
//! Physical time reversal is antiunitary (it includes complex conjugation);
//! no conjugation is applied here. Composite labels are literal matrix
//! products in the order written, e.g. `TC = T·C`, which evaluates to `+Σ2`.
//! Signs of every action are computed from the matrices, never tabulated.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::dirac::{DiracBasis, DiracLabel};
use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix4, StateVector4, Tolerance, C64, I, ONE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BellLabel {
    PsiPlus,
    PsiMinus,
    PhiPlus,
    PhiMinus,
}

impl BellLabel {
    pub const ALL: [BellLabel; 4] = [
        BellLabel::PsiPlus,
        BellLabel::PsiMinus,
        BellLabel::PhiPlus,
        BellLabel::PhiMinus,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            BellLabel::PsiPlus => "PSI_PLUS",
            BellLabel::PsiMinus => "PSI_MINUS",
            BellLabel::PhiPlus => "PHI_PLUS",
            BellLabel::PhiMinus => "PHI_MINUS",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            BellLabel::PsiPlus => "Ψ+",
            BellLabel::PsiMinus => "Ψ−",
            BellLabel::PhiPlus => "Φ+",
            BellLabel::PhiMinus => "Φ−",
        }
    }
}

impl fmt::Display for BellLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BellLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.trim().to_ascii_uppercase();
        BellLabel::ALL
            .into_iter()
            .find(|l| l.name() == wanted)
            .ok_or_else(|| Error::UnknownLabel(s.to_string()))
    }
}

impl Serialize for BellLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Total-spin basis: singlet and the three triplet projections.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpinLabel {
    Singlet,
    TPlus,
    TZero,
    TMinus,
}

impl SpinLabel {
    pub const ALL: [SpinLabel; 4] = [
        SpinLabel::Singlet,
        SpinLabel::TPlus,
        SpinLabel::TZero,
        SpinLabel::TMinus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SpinLabel::Singlet => "SINGLET",
            SpinLabel::TPlus => "T_PLUS",
            SpinLabel::TZero => "T_ZERO",
            SpinLabel::TMinus => "T_MINUS",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymmetryLabel {
    T,
    C,
    P,
    TC,
    CP,
    PT,
    TCP,
}

impl SymmetryLabel {
    pub const ALL: [SymmetryLabel; 7] = [
        SymmetryLabel::T,
        SymmetryLabel::C,
        SymmetryLabel::P,
        SymmetryLabel::TC,
        SymmetryLabel::CP,
        SymmetryLabel::PT,
        SymmetryLabel::TCP,
    ];

    /// Row order of the symmetry-action listing.
    pub const TABLE_ORDER: [SymmetryLabel; 7] = [
        SymmetryLabel::C,
        SymmetryLabel::P,
        SymmetryLabel::T,
        SymmetryLabel::CP,
        SymmetryLabel::PT,
        SymmetryLabel::TC,
        SymmetryLabel::TCP,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SymmetryLabel::T => "T",
            SymmetryLabel::C => "C",
            SymmetryLabel::P => "P",
            SymmetryLabel::TC => "TC",
            SymmetryLabel::CP => "CP",
            SymmetryLabel::PT => "PT",
            SymmetryLabel::TCP => "TCP",
        }
    }
}

impl fmt::Display for SymmetryLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn bell_state(label: BellLabel) -> StateVector4 {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    match label {
        BellLabel::PsiPlus => StateVector4::from_real([0.0, h, h, 0.0]),
        BellLabel::PsiMinus => StateVector4::from_real([0.0, h, -h, 0.0]),
        BellLabel::PhiPlus => StateVector4::from_real([h, 0.0, 0.0, h]),
        BellLabel::PhiMinus => StateVector4::from_real([h, 0.0, 0.0, -h]),
    }
}

pub fn spin_state(label: SpinLabel) -> StateVector4 {
    let h = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let phi_p = bell_state(BellLabel::PhiPlus);
    let phi_m = bell_state(BellLabel::PhiMinus);
    match label {
        SpinLabel::Singlet => bell_state(BellLabel::PsiMinus),
        SpinLabel::TPlus => (phi_p + phi_m).scale(h),
        SpinLabel::TZero => bell_state(BellLabel::PsiPlus),
        SpinLabel::TMinus => (phi_p - phi_m).scale(h),
    }
}

/// `|a⟩⟨b|` for Bell states.
pub fn bell_outer(ket: BellLabel, bra: BellLabel) -> ComplexMatrix4 {
    bell_state(ket).outer(&bell_state(bra))
}

/// Matrix elements `⟨a|m|b⟩` in the Bell basis, rows and columns in
/// [`BellLabel::ALL`] order.
pub fn bell_matrix_elements(m: &ComplexMatrix4) -> [[C64; 4]; 4] {
    BellLabel::ALL.map(|a| {
        let bra = bell_state(a);
        BellLabel::ALL.map(|b| bra.inner(&(*m * bell_state(b))))
    })
}

pub fn symmetry_operator(label: SymmetryLabel) -> ComplexMatrix4 {
    symmetry_operator_in(DiracBasis::standard(), label)
}

/// Builds the operator from the gamma matrices of `basis`.
pub fn symmetry_operator_in(basis: &DiracBasis, label: SymmetryLabel) -> ComplexMatrix4 {
    let t = basis.gamma(5).matmul(basis.gamma(4));
    let c = basis.gamma(2).scale(-I);
    let p = basis.gamma(4).scale(I);
    match label {
        SymmetryLabel::T => t,
        SymmetryLabel::C => c,
        SymmetryLabel::P => p,
        SymmetryLabel::TC => t.matmul(&c),
        SymmetryLabel::CP => c.matmul(&p),
        SymmetryLabel::PT => p.matmul(&t),
        SymmetryLabel::TCP => t.matmul(&c).matmul(&p),
    }
}

/// Closed form of each symmetry operator in terms of single basis elements:
/// `T = γ5γ4`, `C = −iγ2`, `P = iγ4`, `TC = Σ2`, `CP = γ2γ4`, `PT = −iγ5`,
/// `TCP = γ2γ5`.
pub fn symmetry_dirac_form(basis: &DiracBasis, label: SymmetryLabel) -> ComplexMatrix4 {
    let g = |mu: usize| *basis.gamma(mu);
    match label {
        SymmetryLabel::T => g(5).matmul(&g(4)),
        SymmetryLabel::C => g(2).scale(-I),
        SymmetryLabel::P => g(4).scale(I),
        SymmetryLabel::TC => *basis.matrix(DiracLabel::Sigma2),
        SymmetryLabel::CP => g(2).matmul(&g(4)),
        SymmetryLabel::PT => g(5).scale(-I),
        SymmetryLabel::TCP => g(2).matmul(&g(5)),
    }
}

/// Result of applying an operator to a Bell state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PhaseAction {
    /// `op|source⟩ = phase · |target⟩`
    Pure { target: BellLabel, phase: C64 },
    /// More than one (or no) Bell component survives.
    Mixes,
}

impl PhaseAction {
    pub fn target(&self) -> Option<BellLabel> {
        match self {
            PhaseAction::Pure { target, .. } => Some(*target),
            PhaseAction::Mixes => None,
        }
    }

    pub fn phase(&self) -> Option<C64> {
        match self {
            PhaseAction::Pure { phase, .. } => Some(*phase),
            PhaseAction::Mixes => None,
        }
    }
}

pub fn apply_to_bell(op: &ComplexMatrix4, state: BellLabel, tol: Tolerance) -> PhaseAction {
    let image = *op * bell_state(state);
    let mut hit = None;
    for b in BellLabel::ALL {
        let amp = bell_state(b).inner(&image);
        if amp.norm() > tol.eps() {
            if hit.is_some() {
                return PhaseAction::Mixes;
            }
            hit = Some((b, amp));
        }
    }
    match hit {
        Some((target, phase)) => PhaseAction::Pure { target, phase },
        None => PhaseAction::Mixes,
    }
}

/// Row order of the Dirac-matrix action listing: unit first, then
/// γ1..γ5, Σ1..Σ3, iγjγ4, iγjγ5, iγ4γ5.
pub const TABLE_DIRAC_ORDER: [DiracLabel; 16] = [
    DiracLabel::Unit,
    DiracLabel::Gamma1,
    DiracLabel::Gamma2,
    DiracLabel::Gamma3,
    DiracLabel::Gamma4,
    DiracLabel::Gamma5,
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
];

/// One operator's action on each Bell state, in [`BellLabel::ALL`] order.
#[derive(Debug, Clone, PartialEq)]
pub struct ActionRow {
    pub operator: String,
    pub actions: [PhaseAction; 4],
}

impl ActionRow {
    fn compute(operator: String, op: &ComplexMatrix4, tol: Tolerance) -> Self {
        ActionRow {
            operator,
            actions: BellLabel::ALL.map(|b| apply_to_bell(op, b, tol)),
        }
    }

    pub fn is_pure(&self) -> bool {
        self.actions.iter().all(|a| matches!(a, PhaseAction::Pure { .. }))
    }

    pub fn preserves_labels(&self) -> bool {
        BellLabel::ALL
            .iter()
            .zip(&self.actions)
            .all(|(b, a)| a.target() == Some(*b))
    }

    /// Largest `||phase| − 1|` across the row; infinite if any entry mixes.
    pub fn phase_modulus_error(&self) -> f64 {
        self.actions
            .iter()
            .map(|a| a.phase().map_or(f64::INFINITY, |p| (p.norm() - 1.0).abs()))
            .fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SymmetryTable {
    pub dirac_rows: Vec<ActionRow>,
    pub symmetry_rows: Vec<ActionRow>,
}

/// Flat record form used for export.
#[derive(Debug, Clone, Serialize)]
pub struct ActionRecord {
    pub operator: String,
    pub source: BellLabel,
    pub target: Option<BellLabel>,
    pub phase: Option<[f64; 2]>,
}

impl SymmetryTable {
    pub fn rows(&self) -> impl Iterator<Item = &ActionRow> {
        self.dirac_rows.iter().chain(self.symmetry_rows.iter())
    }

    pub fn symmetry_row(&self, label: SymmetryLabel) -> &ActionRow {
        self.symmetry_rows
            .iter()
            .find(|r| r.operator == label.name())
            .expect("every symmetry label has a row")
    }

    pub fn dirac_row(&self, label: DiracLabel) -> &ActionRow {
        self.dirac_rows
            .iter()
            .find(|r| r.operator == label.name())
            .expect("every Dirac label has a row")
    }

    pub fn records(&self) -> Vec<ActionRecord> {
        self.rows()
            .flat_map(|row| {
                BellLabel::ALL.iter().zip(row.actions.iter()).map(|(src, act)| ActionRecord {
                    operator: row.operator.clone(),
                    source: *src,
                    target: act.target(),
                    phase: act.phase().map(|p| [p.re, p.im]),
                })
            })
            .collect()
    }
}

pub fn derive_symmetry_table(tol: Tolerance) -> SymmetryTable {
    derive_symmetry_table_in(DiracBasis::standard(), tol)
}

pub fn derive_symmetry_table_in(basis: &DiracBasis, tol: Tolerance) -> SymmetryTable {
    SymmetryTable {
        dirac_rows: TABLE_DIRAC_ORDER
            .iter()
            .map(|&l| ActionRow::compute(l.name().to_string(), basis.matrix(l), tol))
            .collect(),
        symmetry_rows: SymmetryLabel::TABLE_ORDER
            .iter()
            .map(|&s| ActionRow::compute(s.name().to_string(), &symmetry_operator_in(basis, s), tol))
            .collect(),
    }
}

/// `γ1..γ4` assembled from Bell-state outer products.
pub fn gamma_from_bell_outer(label: DiracLabel) -> Result<ComplexMatrix4> {
    use BellLabel::*;
    let terms: [(BellLabel, BellLabel, C64); 4] = match label {
        DiracLabel::Gamma1 => [
            (PsiPlus, PsiMinus, I),
            (PsiMinus, PsiPlus, -I),
            (PhiPlus, PhiMinus, I),
            (PhiMinus, PhiPlus, -I),
        ],
        DiracLabel::Gamma2 => [
            (PsiPlus, PsiPlus, ONE),
            (PsiMinus, PsiMinus, -ONE),
            (PhiPlus, PhiPlus, -ONE),
            (PhiMinus, PhiMinus, ONE),
        ],
        DiracLabel::Gamma3 => [
            (PsiPlus, PhiPlus, I),
            (PsiMinus, PhiMinus, -I),
            (PhiPlus, PsiPlus, -I),
            (PhiMinus, PsiMinus, I),
        ],
        DiracLabel::Gamma4 => [
            (PsiPlus, PsiMinus, -ONE),
            (PsiMinus, PsiPlus, -ONE),
            (PhiPlus, PhiMinus, -ONE),
            (PhiMinus, PhiPlus, -ONE),
        ],
        other => return Err(Error::UnsupportedLabel(other.name().to_string())),
    };
    Ok(terms.iter().map(|&(k, b, c)| bell_outer(k, b).scale(c)).sum())
}

/// `γ2 = |t0⟩⟨t0| − |s⟩⟨s| − |t+⟩⟨t−| − |t−⟩⟨t+|`.
///
/// γ2 flips `|↑↑⟩ → −|↓↓⟩`, so the two projection states of the triplet
/// only enter through cross terms; the diagonal form
/// `−|t+⟩⟨t+| − |t−⟩⟨t−|` is a different matrix.
pub fn gamma2_spin_form() -> ComplexMatrix4 {
    let st = spin_state;
    st(SpinLabel::TZero).projector()
        - st(SpinLabel::Singlet).projector()
        - st(SpinLabel::TPlus).outer(&st(SpinLabel::TMinus))
        - st(SpinLabel::TMinus).outer(&st(SpinLabel::TPlus))
}
