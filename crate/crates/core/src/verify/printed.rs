//! Hand transcription of the printed Bell-state action tables.
//!
//! The typeset source renders `∓` as a bare `m`; it is read back as `∓`
//! here. Actions are listed for sources `Ψ+, Ψ−, Φ+, Φ−` in that order.

use crate::bell::{symmetry_operator_in, BellLabel, SymmetryLabel};
use crate::dirac::{DiracBasis, DiracLabel};
use crate::linalg::{ComplexMatrix4, C64, I, ONE};

use BellLabel::{PhiMinus as FM, PhiPlus as FP, PsiMinus as SM, PsiPlus as SP};

const P1: C64 = ONE;
const M1: C64 = C64::new(-1.0, 0.0);
const PI: C64 = I;
const MI: C64 = C64::new(0.0, -1.0);

pub(crate) struct PrintedRow {
    pub name: &'static str,
    pub operator: ComplexMatrix4,
    pub actions: [(BellLabel, C64); 4],
}

fn row(name: &'static str, operator: ComplexMatrix4, actions: [(BellLabel, C64); 4]) -> PrintedRow {
    PrintedRow { name, operator, actions }
}

/// Dirac-matrix actions. Rows printed as `−iγjγ4` are the negatives of the
/// stored `iγjγ4` elements.
pub(crate) fn dirac_rows(basis: &DiracBasis) -> Vec<PrintedRow> {
    use DiracLabel::*;
    let m = |l: DiracLabel| *basis.matrix(l);
    vec![
        row("γ1", m(Gamma1), [(SM, MI), (SP, PI), (FM, MI), (FP, PI)]),
        row("γ2", m(Gamma2), [(SP, P1), (SM, M1), (FP, M1), (FM, P1)]),
        row("γ3", m(Gamma3), [(FP, MI), (FM, PI), (SP, PI), (SM, MI)]),
        row("γ4", m(Gamma4), [(SM, M1), (SP, M1), (FM, M1), (FP, M1)]),
        row("γ5", m(Gamma5), [(FP, P1), (FM, M1), (SP, P1), (SM, M1)]),
        row("Σ1", m(Sigma1), [(FP, P1), (FM, P1), (SP, P1), (SM, P1)]),
        row("Σ2", m(Sigma2), [(FM, MI), (FP, MI), (SM, PI), (SP, PI)]),
        row("Σ3", m(Sigma3), [(SM, M1), (SP, M1), (FM, P1), (FP, P1)]),
        row("-iγ1γ4", -m(IG1G4), [(SP, M1), (SM, P1), (FP, M1), (FM, P1)]),
        row("-iγ2γ4", -m(IG2G4), [(SM, MI), (SP, PI), (FM, PI), (FP, MI)]),
        row("-iγ3γ4", -m(IG3G4), [(FM, M1), (FP, P1), (SM, P1), (SP, M1)]),
        row("iγ1γ5", m(IG1G5), [(FM, P1), (FP, P1), (SM, P1), (SP, P1)]),
        row("iγ2γ5", m(IG2G5), [(FP, MI), (FM, MI), (SP, PI), (SM, PI)]),
        row("iγ3γ5", m(IG3G5), [(SP, M1), (SM, M1), (FP, P1), (FM, P1)]),
        row("iγ4γ5", m(IG4G5), [(FM, MI), (FP, PI), (SM, MI), (SP, PI)]),
    ]
}

/// Symmetry actions. The `TC` row is attached to `−Σ2`, the closed form
/// printed alongside it; the literal product `T·C` equals `+Σ2` and so
/// acts with the opposite sign. The `CPT` row is the product `C·P·T`
/// (which is `−TCP`).
pub(crate) fn symmetry_rows(basis: &DiracBasis) -> Vec<PrintedRow> {
    let op = |s: SymmetryLabel| symmetry_operator_in(basis, s);
    let c = op(SymmetryLabel::C);
    let p = op(SymmetryLabel::P);
    let t = op(SymmetryLabel::T);
    vec![
        row("C", c, [(SP, MI), (SM, PI), (FP, PI), (FM, MI)]),
        row("P", p, [(SM, MI), (SP, MI), (FM, MI), (FP, MI)]),
        row("T", t, [(FM, P1), (FP, M1), (SM, P1), (SP, M1)]),
        row("CP", op(SymmetryLabel::CP), [(SM, P1), (SP, M1), (FM, M1), (FP, P1)]),
        row("PT", op(SymmetryLabel::PT), [(FP, MI), (FM, PI), (SP, MI), (SM, PI)]),
        row("TC (as -Σ2)", -*basis.matrix(DiracLabel::Sigma2), [(FM, PI), (FP, PI), (SM, MI), (SP, MI)]),
        row("CPT", c.matmul(&p).matmul(&t), [(FP, P1), (FM, P1), (SP, M1), (SM, M1)]),
    ]
}
