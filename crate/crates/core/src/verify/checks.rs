use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{max_diff, printed, Suite};
use crate::bell::{
    apply_to_bell, bell_outer, bell_state, derive_symmetry_table_in, gamma_from_bell_outer,
    spin_state, symmetry_dirac_form, symmetry_operator_in, BellLabel, PhaseAction, SpinLabel,
    SymmetryLabel,
};
use crate::density::{
    bell_projector, correlation_residual, density_dirac_coeffs, density_from_params,
    embed, embed_dirac_coeffs, entanglement_signature, marginal_mixedness, one_qubit_density,
    params_of, product_density, product_params, purity, BlochVector, DensityParams,
};
use crate::dirac::{DiracCoefficients, DiracLabel, TensorRank};
use crate::error::Error;
use crate::gates::{
    am_unitary_in, classify_even_odd_in, even_odd_dirac_form, even_odd_template, even_state,
    gate, gate_dirac_form, gate_gamma_products, i_parity_time, proportional,
    swap_bell_decomposition, two_qubit_gate, AMUnitaryLabel, EvenOddKind, GateLabel, GateMatrix,
    Parity, Sign,
};
use crate::linalg::{
    hermitian_eigen, hermitian_eigenvalues, kron, kron_factor, partial_trace, pauli_tensor,
    sigma1, sigma2, sigma3, ComplexMatrix2, ComplexMatrix4, Qubit, C64, I,
};
use crate::sampling;

const SEED: u64 = 0x5eed_d1ac;

const EXACT: f64 = 1e-12;
const TIGHT: f64 = 1e-10;
const LOOSE: f64 = 1e-9;

pub(super) fn run_all(s: &mut Suite) {
    basis_checks(s);
    symmetry_checks(s);
    bell_checks(s);
    density_checks(s);
    gate_checks(s);
    even_odd_checks(s);
    round_trip_checks(s);
}

/// Max of `errors` plus the names whose error exceeds `limit`.
fn worst<N: ToString>(errors: impl IntoIterator<Item = (N, f64)>, limit: f64) -> (f64, String) {
    let mut max = 0.0f64;
    let mut bad = Vec::new();
    for (name, e) in errors {
        if e.is_nan() || e > limit {
            bad.push(name.to_string());
        }
        max = if e.is_nan() { f64::INFINITY } else { max.max(e) };
    }
    let detail = if bad.is_empty() { String::new() } else { format!("violations: {}", bad.join(", ")) };
    (max, detail)
}

fn join_detail(base: &str, extra: String) -> String {
    if extra.is_empty() {
        base.to_string()
    } else {
        format!("{base}; {extra}")
    }
}

fn basis_checks(s: &mut Suite) {
    let basis = s.basis;
    let id = ComplexMatrix4::identity();

    let err = max_diff(basis.matrix(DiracLabel::Unit), &id);
    s.numeric("eq2.unit_is_identity", EXACT, err, "UNIT = I⊗I");

    let lim = s.threshold(EXACT);
    let (err, bad) = worst(basis.iter().map(|(l, m)| (l, m.hermiticity_error())), lim);
    s.numeric("eq2.hermitian", EXACT, err, join_detail("all 16 elements Hermitian", bad));

    let (err, bad) = worst(basis.iter().map(|(l, m)| (l, max_diff(&m.matmul(m), &id))), lim);
    s.numeric("eq2.squares_to_identity", EXACT, err, join_detail("Γ² = I for all 16", bad));

    let (err, bad) = worst(
        basis.iter().filter(|(l, _)| *l != DiracLabel::Unit).map(|(l, m)| (l, m.trace().norm())),
        lim,
    );
    s.numeric("eq2.traceless", EXACT, err, join_detail("Tr Γ = 0 except UNIT", bad));

    let (err, bad) = worst(basis.product_form_errors(), lim);
    s.numeric(
        "eq2.product_forms",
        EXACT,
        err,
        join_detail("Σk = −iγiγj, iγjγ4, iγjγ5, iγ4γ5, γ5 = γ1γ2γ3γ4 match tensor forms", bad),
    );

    let report = basis.verify_clifford(s.tol);
    let anti: Vec<_> = report
        .violations
        .iter()
        .filter(|v| matches!(v.relation, crate::dirac::CliffordRelation::Anticommutator(..)))
        .map(|v| v.relation.to_string())
        .collect();
    let mut anti_err = 0.0f64;
    for mu in 1..=4 {
        for nu in 1..=4 {
            let want = if mu == nu { id.scale_real(2.0) } else { ComplexMatrix4::zeros() };
            anti_err = anti_err.max(max_diff(&basis.gamma(mu).anticommutator(basis.gamma(nu)), &want));
        }
    }
    let detail = if anti.is_empty() {
        "γμγν + γνγμ = 2δμν for all 16 ordered pairs".to_string()
    } else {
        format!("violated pairs: {}", anti.join(", "))
    };
    s.combined("sec2.clifford_anticommutators", anti.is_empty(), EXACT, anti_err, detail);

    let g5: Vec<_> = report
        .violations
        .iter()
        .filter(|v| !matches!(v.relation, crate::dirac::CliffordRelation::Anticommutator(..)))
        .map(|v| v.relation.to_string())
        .collect();
    let g5_err = (1..=4)
        .map(|mu| basis.gamma(5).anticommutator(basis.gamma(mu)).max_abs())
        .fold(max_diff(basis.gamma(5), &basis.product_form(DiracLabel::Gamma5)), f64::max);
    let detail = if g5.is_empty() {
        "γ5 anticommutes with γ1..γ4 and equals γ1γ2γ3γ4".to_string()
    } else {
        format!("violated: {}", g5.join(", "))
    };
    s.combined("sec2.gamma5_relations", g5.is_empty(), EXACT, g5_err, detail);

    let lim = s.threshold(TIGHT);
    let pairs = basis.iter().flat_map(|(la, a)| {
        basis.iter().map(move |(lb, b)| {
            let want = if la == lb { 4.0 } else { 0.0 };
            (format!("({la},{lb})"), (a.matmul(b).trace() - C64::new(want, 0.0)).norm())
        })
    });
    let (err, bad) = worst(pairs, lim);
    s.numeric("sec2.hs_orthogonality", TIGHT, err, join_detail("Tr(ΓAΓB) = 4δAB, 256 pairs", bad));

    let counts = TensorRank::ALL.map(|r| DiracLabel::ALL.iter().filter(|l| l.rank() == r).count());
    s.structural(
        "sec2.rank_classes",
        counts == [1, 4, 6, 4, 1],
        format!("scalar/vector/tensor/pseudovector/pseudoscalar counts {counts:?}"),
    );

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut recon = 0.0f64;
    let mut imag = 0.0f64;
    for _ in 0..100 {
        let h = sampling::random_hermitian4(&mut rng);
        let c = basis.decompose(&h);
        recon = recon.max(max_diff(&basis.reconstruct(&c), &h));
        imag = imag.max(c.max_imag());
    }
    s.numeric(
        "sec2.completeness",
        LOOSE,
        recon.max(imag),
        format!("100 random Hermitian: reconstruction {recon:.3e}, max |Im c| {imag:.3e}"),
    );
}

fn symmetry_checks(s: &mut Suite) {
    let basis = s.basis;
    let id2 = ComplexMatrix2::identity();
    let op = |l| symmetry_operator_in(basis, l);

    let tensor = [
        ("T", op(SymmetryLabel::T), kron(&sigma2(), &id2).scale(I)),
        ("C", op(SymmetryLabel::C), kron(&sigma2(), &sigma2()).scale(-I)),
        ("P", op(SymmetryLabel::P), kron(&sigma3(), &id2).scale(-I)),
    ];
    let lim = s.threshold(EXACT);
    let (err, bad) = worst(tensor.iter().map(|(n, a, b)| (*n, max_diff(a, b))), lim);
    s.numeric(
        "eq3a.symmetry_tensor_forms",
        EXACT,
        err,
        join_detail("T = γ5γ4 = iσ2⊗I, C = −iγ2 = −iσ2⊗σ2, P = iγ4 = −iσ3⊗I", bad),
    );

    let (err, bad) = worst(
        [SymmetryLabel::TC, SymmetryLabel::CP, SymmetryLabel::PT, SymmetryLabel::TCP]
            .map(|l| (l, max_diff(&op(l), &symmetry_dirac_form(basis, l)))),
        lim,
    );
    s.numeric(
        "eq3b.symmetry_products",
        EXACT,
        err,
        join_detail(
            "T·C = +Σ2 (printed as −Σ2), C·P = γ2γ4, P·T = −iγ5, T·C·P = γ2γ5",
            bad,
        ),
    );

    let lim = s.threshold(TIGHT);
    let (err, bad) = worst(SymmetryLabel::ALL.map(|l| (l, op(l).unitarity_error())), lim);
    s.numeric("sym.unitary", TIGHT, err, join_detail("O·O† = I for T, C, P, TC, CP, PT, TCP", bad));
}

fn bell_checks(s: &mut Suite) {
    let basis = s.basis;
    let tol = s.tol;
    let id = ComplexMatrix4::identity();
    let table = derive_symmetry_table_in(basis, tol);

    let closure = |rows: &[crate::bell::ActionRow]| {
        let pure = rows.iter().all(|r| r.is_pure());
        let err = rows.iter().map(|r| r.phase_modulus_error()).fold(0.0, f64::max);
        let mixing: Vec<_> = rows.iter().filter(|r| !r.is_pure()).map(|r| r.operator.clone()).collect();
        (pure, err, mixing)
    };
    let (pure, err, mixing) = closure(&table.dirac_rows);
    let detail = if pure {
        "64 Dirac actions are single Bell states with |phase| = 1".to_string()
    } else {
        format!("mixing rows: {}", mixing.join(", "))
    };
    s.combined("table1.closure", pure, LOOSE, err, detail);

    let (pure, err, mixing) = closure(&table.symmetry_rows);
    let detail = if pure {
        "28 symmetry actions are single Bell states with |phase| = 1".to_string()
    } else {
        format!("mixing rows: {}", mixing.join(", "))
    };
    s.combined("eq18.closure", pure, LOOSE, err, detail);

    let c_keeps = table.symmetry_row(SymmetryLabel::C).preserves_labels();
    let others: Vec<_> = [
        SymmetryLabel::T,
        SymmetryLabel::P,
        SymmetryLabel::TC,
        SymmetryLabel::PT,
        SymmetryLabel::TCP,
    ]
    .into_iter()
    .filter(|&l| {
        let row = table.symmetry_row(l);
        BellLabel::ALL.iter().zip(&row.actions).all(|(b, a)| a.target() == Some(*b))
    })
    .map(|l| l.name())
    .collect();
    s.structural(
        "eq18.c_only_preserves_labels",
        c_keeps && others.is_empty(),
        if c_keeps && others.is_empty() {
            "C maps each Bell state to itself; T, P, TC, PT, TCP each move at least one".to_string()
        } else {
            format!("C preserves labels: {c_keeps}; also preserving: {others:?}")
        },
    );

    for (name, rows) in [
        ("table1.transcription", printed::dirac_rows(basis)),
        ("eq18.transcription", printed::symmetry_rows(basis)),
    ] {
        let mut err = 0.0f64;
        let mut bad = Vec::new();
        for row in &rows {
            for (src, (want_target, want_phase)) in BellLabel::ALL.iter().zip(row.actions) {
                match apply_to_bell(&row.operator, *src, tol) {
                    PhaseAction::Pure { target, phase } if target == want_target => {
                        let e = (phase - want_phase).norm();
                        err = err.max(e);
                        if e > s.threshold(LOOSE) {
                            bad.push(format!("{} {}", row.name, src.symbol()));
                        }
                    }
                    _ => bad.push(format!("{} {}", row.name, src.symbol())),
                }
            }
        }
        let detail = if bad.is_empty() {
            format!("{} printed rows reproduced", rows.len())
        } else {
            format!("transcription mismatches: {}", bad.join(", "))
        };
        s.combined(name, bad.is_empty(), LOOSE, err, detail);
    }

    let gram = ComplexMatrix4::from_fn(|i, j| bell_state(BellLabel::ALL[i]).inner(&bell_state(BellLabel::ALL[j])));
    s.numeric("eq13.bell_orthonormal", EXACT, max_diff(&gram, &id), "⟨a|b⟩ = δab");

    let sum: ComplexMatrix4 = BellLabel::ALL.iter().map(|&b| bell_outer(b, b)).sum();
    s.numeric("sec4.bell_completeness", EXACT, max_diff(&sum, &id), "Σ|b⟩⟨b| = I");

    let r2 = 2f64.sqrt();
    let bell_op = (bell_outer(BellLabel::PhiPlus, BellLabel::PhiPlus)
        - bell_outer(BellLabel::PsiMinus, BellLabel::PsiMinus))
    .scale_real(2.0 * r2);
    let pauli_form = (pauli_tensor(1, 1) + pauli_tensor(3, 3)).scale_real(r2);
    let sq_bell = (bell_outer(BellLabel::PhiPlus, BellLabel::PhiPlus)
        + bell_outer(BellLabel::PsiMinus, BellLabel::PsiMinus))
    .scale_real(8.0);
    let sq_pauli = (id - pauli_tensor(2, 2)).scale_real(4.0);
    let mut err = max_diff(&bell_op, &pauli_form)
        .max(max_diff(&bell_op.matmul(&bell_op), &sq_bell))
        .max(max_diff(&sq_bell, &sq_pauli));
    match hermitian_eigenvalues(&bell_op, tol) {
        Ok(ev) => {
            for (got, want) in ev.iter().zip([-2.0 * r2, 0.0, 0.0, 2.0 * r2]) {
                err = err.max((got - want).abs());
            }
        }
        Err(_) => err = f64::INFINITY,
    }
    s.numeric("sec4.bell_operator", TIGHT, err, "B = 2√2(|Φ+⟩⟨Φ+| − |Ψ−⟩⟨Ψ−|) = √2(σ1⊗σ1 + σ3⊗σ3), B² = 4(I − σ2⊗σ2), spectrum ±2√2, 0, 0");

    let lim = s.threshold(TIGHT);
    let (err, bad) = worst(
        (1..=4).map(|mu| {
            let l = DiracLabel::gamma(mu).expect("γ1..γ4");
            let built = gamma_from_bell_outer(l).expect("γ1..γ4 supported");
            (l, max_diff(&built, basis.matrix(l)))
        }),
        lim,
    );
    s.numeric("eq16.gamma_bell_outer", TIGHT, err, join_detail("γ1..γ4 as Bell outer products", bad));

    let g2 = basis.matrix(DiracLabel::Gamma2);
    let err = BellLabel::ALL
        .iter()
        .zip([1.0, -1.0, -1.0, 1.0])
        .map(|(&b, lambda)| {
            let v = bell_state(b);
            (*g2 * v).max_abs_diff(&v.scale(C64::new(lambda, 0.0)))
        })
        .fold(0.0, f64::max);
    s.numeric("sec4.gamma2_bell_eigen", TIGHT, err, "γ2 eigenvalues (+1,−1,−1,+1) on (Ψ+,Ψ−,Φ+,Φ−)");

    let gram = ComplexMatrix4::from_fn(|i, j| spin_state(SpinLabel::ALL[i]).inner(&spin_state(SpinLabel::ALL[j])));
    let err = max_diff(&gram, &id)
        .max(spin_state(SpinLabel::TPlus).max_abs_diff(&crate::linalg::StateVector4::basis(0)))
        .max(spin_state(SpinLabel::TMinus).max_abs_diff(&crate::linalg::StateVector4::basis(3)));
    s.numeric("eq19.spin_orthonormal", EXACT, err, "singlet/triplet orthonormal; t+ = |↑↑⟩, t− = |↓↓⟩");

    let form = crate::bell::gamma2_spin_form();
    let st = spin_state;
    let (tp, tm, t0, sg) = (
        st(SpinLabel::TPlus),
        st(SpinLabel::TMinus),
        st(SpinLabel::TZero),
        st(SpinLabel::Singlet),
    );
    let elems = [
        (t0.inner(&(*g2 * t0)), 1.0),
        (sg.inner(&(*g2 * sg)), -1.0),
        (tm.inner(&(*g2 * tp)), -1.0),
        (tp.inner(&(*g2 * tm)), -1.0),
        (tp.inner(&(*g2 * tp)), 0.0),
        (tm.inner(&(*g2 * tm)), 0.0),
    ];
    let elem_err = elems.iter().map(|(got, want)| (got - C64::new(*want, 0.0)).norm()).fold(0.0, f64::max);
    s.numeric(
        "eq20.gamma2_spin_form",
        TIGHT,
        max_diff(&form, g2).max(elem_err),
        "γ2 = |t0⟩⟨t0| − |s⟩⟨s| − |t+⟩⟨t−| − |t−⟩⟨t+| (printed diagonal t± terms do not reproduce γ2)",
    );
}

fn eig2(m: &ComplexMatrix2) -> (f64, f64) {
    let (a, d, b) = (m[(0, 0)].re, m[(1, 1)].re, m[(0, 1)]);
    let mid = 0.5 * (a + d);
    let rad = (0.25 * (a - d).powi(2) + b.norm_sqr()).sqrt();
    (mid - rad, mid + rad)
}

fn density_checks(s: &mut Suite) {
    let basis = s.basis;
    let tol = s.tol;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);

    let mut err = 0.0f64;
    for _ in 0..100 {
        let v = sampling::random_bloch(&mut rng);
        let rho = one_qubit_density(v).expect("inside ball");
        let (lo, hi) = eig2(&rho);
        let n = v.norm();
        err = err
            .max(rho.hermiticity_error())
            .max((rho.trace() - C64::new(1.0, 0.0)).norm())
            .max((lo - 0.5 * (1.0 - n)).abs())
            .max((hi - 0.5 * (1.0 + n)).abs());
    }
    let rejects = matches!(
        one_qubit_density(BlochVector::new(1.0, 1.0, 0.0)),
        Err(Error::BlochOutOfBall { .. })
    );
    s.combined("eq4.one_qubit_density", rejects, TIGHT, err, "ρ = ½(I + s·σ): Hermitian, unit trace, eigenvalues (1±|s|)/2; |s| > 1 rejected");

    let mut err = 0.0f64;
    for _ in 0..20 {
        let v = sampling::random_pure_bloch(&mut rng);
        for q in [Qubit::A, Qubit::B] {
            let pi = embed(v, q).expect("pure vector");
            err = err
                .max(max_diff(&pi.matmul(&pi), &pi.scale_real(0.5)))
                .max((pi.trace() - C64::new(1.0, 0.0)).norm())
                .max((purity(&pi) - 0.5).abs());
        }
    }
    s.numeric("eq5.pure_embedding_square", TIGHT, err, "Π(A)² = ½Π(A) for 20 pure Bloch vectors (A and B)");

    let mut err = 0.0f64;
    for _ in 0..100 {
        let (a, b) = (sampling::random_bloch(&mut rng), sampling::random_bloch(&mut rng));
        let prod = product_density(a, b).expect("inside ball");
        let direct = kron(&one_qubit_density(a).unwrap(), &one_qubit_density(b).unwrap());
        err = err.max(max_diff(&prod, &direct));
        match params_of(&prod) {
            Ok(p) => err = err.max(p.max_abs_diff(&product_params(a, b))),
            Err(_) => err = f64::INFINITY,
        }
    }
    s.numeric("eq6.product_params", TIGHT, err, "ρA⊗ρB has C_ij = s_i(A)s_j(B)");

    let params: Vec<DensityParams> = (0..100).map(|_| sampling::random_params(&mut rng)).collect();

    let mut err = 0.0f64;
    for p in &params {
        let d = density_from_params(p, false).unwrap().into_matrix();
        let ra = one_qubit_density(p.s_a).unwrap();
        let rb = one_qubit_density(p.s_b).unwrap();
        err = err
            .max(partial_trace(&d, Qubit::B).max_abs_diff(&ra))
            .max(partial_trace(&d, Qubit::A).max_abs_diff(&rb));
    }
    s.numeric("eq8.marginals", LOOSE, err, "Tr_B Π = ρ(A), Tr_A Π = ρ(B) for 100 random states");

    let mut err = 0.0f64;
    for p in &params {
        let d = density_from_params(p, false).unwrap().into_matrix();
        let res = correlation_residual(p);
        let mut rebuilt = product_density(p.s_a, p.s_b).unwrap();
        for (i, row) in res.iter().enumerate() {
            for (j, r) in row.iter().enumerate() {
                rebuilt = rebuilt + pauli_tensor(i + 1, j + 1).scale_real(0.25 * r);
            }
        }
        err = err.max(max_diff(&d, &rebuilt));
    }
    s.numeric("eq9.residual_decomposition", TIGHT, err, "Π = Π_d + ¼(C_ij − s_i(A)s_j(B)) σi⊗σj");

    let mut err = 0.0f64;
    for p in &params {
        let d = density_from_params(p, false).unwrap().into_matrix();
        err = err.max(density_dirac_coeffs(p).max_abs_diff(&basis.decompose(&d)));
    }
    s.numeric("eq10.dirac_coefficients", TIGHT, err, "coefficients read from (s(A), s(B), C) equal Hilbert–Schmidt projections");

    let mut err = 0.0f64;
    for _ in 0..100 {
        let v = sampling::random_bloch(&mut rng);
        for q in [Qubit::A, Qubit::B] {
            let m = embed(v, q).unwrap();
            let c = embed_dirac_coeffs(v, q).unwrap();
            err = err.max(c.max_abs_diff(&basis.decompose(&m))).max(max_diff(&basis.reconstruct(&c), &m));
        }
    }
    s.numeric("eq11.embedding_coefficients", TIGHT, err, "Π(A) = ¼(I + s1γ5 + s2 iγ4γ5 − s3γ4), Π(B) = ¼(I + s·Σ)");

    let mut err = 0.0f64;
    for _ in 0..100 {
        let (a, b) = (sampling::random_bloch(&mut rng), sampling::random_bloch(&mut rng));
        let got = basis.decompose(&product_density(a, b).unwrap());
        use DiracLabel::*;
        let [a1, a2, a3] = a.0;
        let mut want = DiracCoefficients::from_real_pairs([
            (Unit, 0.25),
            (Gamma5, a1 / 4.0),
            (IG4G5, a2 / 4.0),
            (Gamma4, -a3 / 4.0),
            (Sigma1, b.0[0] / 4.0),
            (Sigma2, b.0[1] / 4.0),
            (Sigma3, b.0[2] / 4.0),
        ]);
        for j in 0..3 {
            want[[IG1G4, IG2G4, IG3G4][j]] += C64::new(a1 * b.0[j] / 4.0, 0.0);
            want[[Gamma1, Gamma2, Gamma3][j]] += C64::new(a2 * b.0[j] / 4.0, 0.0);
            want[[IG1G5, IG2G5, IG3G5][j]] += C64::new(a3 * b.0[j] / 4.0, 0.0);
        }
        err = err.max(got.max_abs_diff(&want));
    }
    s.numeric("eq12.product_coefficients", TIGHT, err, "ρA⊗ρB: iγjγ4 ← s1(A)sj(B), γj ← s2(A)sj(B), iγjγ5 ← s3(A)sj(B)");

    let patterns = [
        (BellLabel::PsiPlus, [1.0, 1.0, -1.0]),
        (BellLabel::PsiMinus, [-1.0, -1.0, -1.0]),
        (BellLabel::PhiPlus, [1.0, -1.0, 1.0]),
        (BellLabel::PhiMinus, [-1.0, 1.0, 1.0]),
    ];
    let lim = s.threshold(TIGHT);
    let (err, bad) = worst(
        patterns.iter().map(|(b, signs)| {
            let want = DiracCoefficients::from_real_pairs([
                (DiracLabel::Unit, 0.25),
                (DiracLabel::IG1G4, signs[0] / 4.0),
                (DiracLabel::Gamma2, signs[1] / 4.0),
                (DiracLabel::IG3G5, signs[2] / 4.0),
            ]);
            (b.symbol(), basis.decompose(bell_projector(*b).matrix()).max_abs_diff(&want))
        }),
        lim,
    );
    s.numeric(
        "eq14_15.bell_projector_coefficients",
        TIGHT,
        err,
        join_detail("(iγ1γ4, γ2, iγ3γ5) signs Ψ+ (+,+,−), Ψ− (−,−,−), Φ+ (+,−,+), Φ− (−,+,+)", bad),
    );

    let mut err = 0.0f64;
    for a in BellLabel::ALL {
        let pa = *bell_projector(a).matrix();
        err = err.max(max_diff(&pa.matmul(&pa), &pa)).max((pa.trace() - C64::new(1.0, 0.0)).norm());
        for b in BellLabel::ALL {
            let want = if a == b { 1.0 } else { 0.0 };
            err = err.max((pa.matmul(bell_projector(b).matrix()).trace() - C64::new(want, 0.0)).norm());
        }
    }
    s.numeric("eq14_15.bell_projector_algebra", TIGHT, err, "idempotent, unit trace, Tr(ΠiΠj) = δij");

    let mut err = 0.0f64;
    let half = ComplexMatrix2::identity().scale_real(0.5);
    for b in BellLabel::ALL {
        let d = *bell_projector(b).matrix();
        let (pa, pb) = marginal_mixedness(&d).expect("unit trace");
        err = err
            .max((pa - 0.5).abs())
            .max((pb - 0.5).abs())
            .max(partial_trace(&d, Qubit::A).max_abs_diff(&half))
            .max(partial_trace(&d, Qubit::B).max_abs_diff(&half));
    }
    s.numeric("eq17.bell_marginals", TIGHT, err, "Bell marginals are I/2 with purity 1/2");

    let bell_ok = BellLabel::ALL
        .iter()
        .all(|&b| params_of(bell_projector(b).matrix()).is_ok_and(|p| entanglement_signature(&p, tol)));
    let product_ok = (0..50).all(|_| {
        let (a, b) = (sampling::random_bloch(&mut rng), sampling::random_bloch(&mut rng));
        !entanglement_signature(&product_params(a, b), tol)
    });
    s.structural(
        "sec4.entanglement_signature",
        bell_ok && product_ok,
        format!("Bell projectors flagged: {bell_ok}; random products unflagged: {product_ok}"),
    );

    let singlet_ok = density_from_params(&DensityParams::diagonal(-1.0, -1.0, -1.0), true).is_ok();
    let (neg_ok, neg_err) = match density_from_params(&DensityParams::diagonal(2.0, 0.0, 0.0), true) {
        Err(Error::NotPositive { eigenvalue }) => (true, (eigenvalue + 0.25).abs()),
        _ => (false, f64::INFINITY),
    };
    s.combined(
        "sec3.positivity",
        singlet_ok && neg_ok,
        LOOSE,
        neg_err,
        "singlet parameters accepted; C = diag(2,0,0) rejected with eigenvalue −1/4",
    );
}

fn gate_checks(s: &mut Suite) {
    let basis = s.basis;
    let id = ComplexMatrix4::identity();
    let id2 = ComplexMatrix2::identity();

    let (GateMatrix::One(not1), GateMatrix::One(h)) = (gate(GateLabel::Not1), gate(GateLabel::Hadamard1)) else {
        unreachable!("one-qubit labels")
    };
    let err = not1
        .max_abs_diff(&sigma1())
        .max(h.unitarity_error())
        .max(h.matmul(&h).max_abs_diff(&id2))
        .max(h.max_abs_diff(&(sigma1() + sigma3()).scale_real(std::f64::consts::FRAC_1_SQRT_2)));
    s.numeric("eq21.one_qubit_gates", EXACT, err, "NOT = σ1, H = (σ1+σ3)/√2, H² = I");

    for (name, g, text) in [
        ("eq22.cnot_dirac_form", GateLabel::Cnot, "CNOT = ½(I − iγ1γ2 + γ5 − iγ3γ4)"),
        ("eq23.not_dirac_form", GateLabel::Not2, "NOT = γ5"),
        ("eq24.swap_dirac_form", GateLabel::Swap, "SWAP = ½(I + iγ1γ4 + γ2 + iγ3γ5)"),
    ] {
        let m = two_qubit_gate(g).expect("two-qubit gate");
        let coeffs = gate_dirac_form(g).expect("two-qubit gate");
        let literal = gate_gamma_products(basis, g).expect("two-qubit gate");
        let err = max_diff(&basis.reconstruct(&coeffs), &m)
            .max(max_diff(&literal, &m))
            .max(basis.decompose(&m).max_abs_diff(&coeffs));
        s.numeric(name, TIGHT, err, text);
    }

    let not2 = two_qubit_gate(GateLabel::Not2).unwrap();
    let ipt = i_parity_time(basis);
    let err = max_diff(&ipt, &not2).max(max_diff(&ipt, basis.gamma(5)));
    s.numeric("eq23.not_is_i_parity_time", TIGHT, err, "NOT = γ5 = i·P·T");

    let cnot = two_qubit_gate(GateLabel::Cnot).unwrap();
    let c5 = basis.decompose(&cnot)[DiracLabel::Gamma5];
    let err = (c5 - C64::new(0.5, 0.0)).norm().max(max_diff(&ipt, basis.gamma(5)));
    s.numeric("eq22.cnot_contains_pt", TIGHT, err, "γ5 = iPT enters CNOT with weight 1/2");

    let d = swap_bell_decomposition();
    let signs_ok = d.signs == [1.0, -1.0, 1.0, 1.0];
    s.combined(
        "eq25.swap_bell_sum",
        signs_ok,
        TIGHT,
        d.error,
        format!("SWAP = {}", d.display_terms()),
    );

    let mut err = 0.0f64;
    for g in GateLabel::ALL {
        err = err.max(gate(g).unitarity_error());
    }
    for g in [GateLabel::Cnot, GateLabel::Not2, GateLabel::Swap] {
        let m = two_qubit_gate(g).unwrap();
        err = err.max(max_diff(&m.matmul(&m), &id));
    }
    s.numeric("gates.unitary_involutions", TIGHT, err, "all gates unitary; CNOT² = NOT² = SWAP² = I");
}

fn even_odd_checks(s: &mut Suite) {
    let basis = s.basis;
    let tol = s.tol;
    let signs = [Sign::Plus, Sign::Minus];

    for (name, kind, text) in [
        ("eq26.even_dirac_form", Parity::Even, "Π_even = ¼(I − γ4 ∓ iγ2γ3 ± iγ1γ5)"),
        ("eq27.odd_dirac_form", Parity::Odd, "Π_odd = ¼(I − iγ3γ5 ± iγ1γ4 ± γ2)"),
    ] {
        let err = signs
            .iter()
            .map(|&sg| {
                let t = even_odd_template(kind, sg);
                let c = even_odd_dirac_form(kind, sg);
                max_diff(&basis.reconstruct(&c), &t).max(basis.decompose(&t).max_abs_diff(&c))
            })
            .fold(0.0, f64::max);
        s.numeric(name, TIGHT, err, text);
    }

    let err = max_diff(&even_odd_template(Parity::Odd, Sign::Plus), bell_projector(BellLabel::PsiPlus).matrix())
        .max(max_diff(&even_odd_template(Parity::Odd, Sign::Minus), bell_projector(BellLabel::PsiMinus).matrix()));
    s.numeric("sec5.odd_is_bell_projector", TIGHT, err, "Π_odd(+) = Π1, Π_odd(−) = Π2");

    let mut err = 0.0f64;
    for kind in [Parity::Even, Parity::Odd] {
        for &sg in &signs {
            let t = even_odd_template(kind, sg);
            err = err.max(max_diff(&t.matmul(&t), &t)).max((t.trace() - C64::new(1.0, 0.0)).norm());
        }
    }
    s.numeric("sec5.templates_pure", TIGHT, err, "even and odd templates are rank-one projectors");

    let err = signs
        .iter()
        .map(|&sg| max_diff(&even_state(sg).projector(), &even_odd_template(Parity::Even, sg)))
        .fold(0.0, f64::max);
    s.numeric("sec5.even_state", TIGHT, err, "Π_even = |Ψ⟩⟨Ψ|, |Ψ⟩ = (Ψ+ + Ψ− ± Φ+ ± Φ−)/2");

    let mut ok = true;
    let mut notes = Vec::new();
    for (kind, sg, want_kind) in [
        (Parity::Odd, Sign::Plus, EvenOddKind::OddPlus),
        (Parity::Odd, Sign::Minus, EvenOddKind::OddMinus),
        (Parity::Even, Sign::Plus, EvenOddKind::EvenPlus),
        (Parity::Even, Sign::Minus, EvenOddKind::EvenMinus),
    ] {
        let t = even_odd_template(kind, sg);
        let odd = kind == Parity::Odd;
        let good = match classify_even_odd_in(basis, &t, tol) {
            Ok(v) => {
                v.kind == want_kind
                    && v.c_invariant == odd
                    && v.p_invariant == !odd
                    && v.separable_marginal == !odd
            }
            Err(_) => false,
        };
        let purities_ok = marginal_mixedness(&t).is_ok_and(|(a, b)| {
            let want = if odd { 0.5 } else { 1.0 };
            (a - want).abs() <= tol.eps() && (b - want).abs() <= tol.eps()
        });
        if !(good && purities_ok) {
            ok = false;
            notes.push(format!("{want_kind:?}"));
        }
    }
    s.structural(
        "sec5.even_odd_invariance",
        ok,
        if ok {
            "odd: C-invariant, marginal purity 1/2; even: P-invariant, marginal purity 1".to_string()
        } else {
            format!("unexpected verdicts: {}", notes.join(", "))
        },
    );

    let p = symmetry_operator_in(basis, SymmetryLabel::P);
    let lim = s.threshold(TIGHT);
    let (err, bad) = worst(
        AMUnitaryLabel::ALL.map(|l| {
            let u = am_unitary_in(basis, l);
            (l.name(), max_diff(&u.conjugate_by(&p), &u).max(u.unitarity_error()))
        }),
        lim,
    );
    s.numeric("eq28.am_p_invariance", TIGHT, err, join_detail("eight even-function unitaries are unitary and P-invariant", bad));

    let mut bad = Vec::new();
    for l in AMUnitaryLabel::ALL {
        let u = am_unitary_in(basis, l);
        let (ex, ey) = l.expected_factors();
        let ok = kron_factor(&u, tol)
            .is_some_and(|(x, y)| proportional(&x, &ex, tol) && proportional(&y, &ey, tol));
        if !ok {
            bad.push(l.name());
        }
    }
    s.structural(
        "eq29.am_separable",
        bad.is_empty(),
        if bad.is_empty() {
            "factor as I⊗I, σ3⊗I, I⊗σ3, σ3⊗σ3 up to scalars".to_string()
        } else {
            format!("not factorable as expected: {}", bad.join(", "))
        },
    );
}

fn round_trip_checks(s: &mut Suite) {
    let basis = s.basis;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 2);

    let err = (0..1000)
        .map(|_| {
            let m = sampling::random_matrix4(&mut rng);
            max_diff(&basis.reconstruct(&basis.decompose(&m)), &m)
        })
        .fold(0.0, f64::max);
    s.numeric("roundtrip.decompose_reconstruct", LOOSE, err, "1000 random 4×4 matrices");

    let err = (0..100)
        .map(|_| {
            let d = sampling::random_unit_trace_hermitian(&mut rng);
            match params_of(&d).and_then(|p| density_from_params(&p, false)) {
                Ok(back) => max_diff(back.matrix(), &d),
                Err(_) => f64::INFINITY,
            }
        })
        .fold(0.0, f64::max);
    s.numeric("roundtrip.params", LOOSE, err, "params_of → density_from_params on 100 random Hermitian unit-trace matrices");

    let err = (0..100)
        .map(|_| {
            let h = sampling::random_hermitian4(&mut rng);
            match hermitian_eigen(&h, s.tol) {
                Ok(e) => {
                    let sum: f64 = e.values.iter().sum();
                    max_diff(&e.reconstruct(), &h).max((sum - h.trace().re).abs())
                }
                Err(_) => f64::INFINITY,
            }
        })
        .fold(0.0, f64::max);
    s.numeric("linalg.hermitian_eigen", 1e-8, err, "V·diag(λ)·V† reproduces 100 random Hermitian matrices");
}
