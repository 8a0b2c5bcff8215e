use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use dirac_qubits::bell::{bell_outer, bell_matrix_elements, derive_symmetry_table, BellLabel, PhaseAction};
use dirac_qubits::density::{
    correlation_residual, density_dirac_coeffs, density_from_params, entanglement_signature,
    marginal_mixedness, purity, BlochVector, DensityParams,
};
use dirac_qubits::dirac::{DiracBasis, DiracCoefficients, DiracLabel};
use dirac_qubits::gates::{
    classify_even_odd, gate, gate_dirac_form, swap_bell_decomposition, GateLabel, GateMatrix,
};
use dirac_qubits::io::{fmt_complex, fmt_real, read_matrix, MatrixDoc};
use dirac_qubits::linalg::{
    from_pauli_coefficients, hermitian_eigenvalues, partial_trace, pauli_coefficients,
    ComplexMatrix4, Qubit, SquareMatrix, Tolerance, C64,
};
use dirac_qubits::verify::{corrupt_basis, run_verification, run_verification_with, Corruption};
use dirac_qubits::{Error, Result};

macro_rules! outln {
    ($out:expr) => {
        $out.push('\n')
    };
    ($out:expr, $($arg:tt)*) => {{
        use std::fmt::Write as _;
        let _ = writeln!($out, $($arg)*);
    }};
}

#[derive(Parser)]
#[command(name = "dirac-qubits", version, about = "Two-qubit operators in the Dirac gamma-matrix basis")]
struct Cli {
    /// Numerical tolerance (must be > 0).
    #[arg(long, global = true, default_value = "1e-9", value_parser = parse_tol)]
    tol: Tolerance,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BasisKind {
    Dirac,
    Pauli,
    Bell,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CorruptMode {
    Perturb,
    Negate,
}

#[derive(Subcommand)]
enum Command {
    /// Run every identity check and print a report.
    Verify {
        /// Damage one basis element before verifying (test hook).
        #[arg(long, hide = true)]
        corrupt: Option<String>,
        #[arg(long, hide = true, value_enum, default_value_t = CorruptMode::Perturb)]
        corrupt_mode: CorruptMode,
    },
    /// Expand a 4×4 matrix file in the Dirac, Pauli-product or Bell basis.
    Decompose {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = BasisKind::Dirac)]
        basis: BasisKind,
    },
    /// Analyse the density matrix built from Bloch vectors and correlations.
    Density {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_vec3, default_value = "0,0,0")]
        sa: [f64; 3],
        #[arg(long, allow_hyphen_values = true, value_parser = parse_vec3, default_value = "0,0,0")]
        sb: [f64; 3],
        /// Correlation matrix C, nine row-major reals.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_mat3, default_value = "0,0,0,0,0,0,0,0,0")]
        c: [[f64; 3]; 3],
    },
    /// Print the action of the Dirac and symmetry operators on Bell states.
    Table,
    /// Print a gate matrix and its Dirac form.
    Gate { label: String },
    /// Classify a density matrix file as even, odd or neither.
    Classify { path: PathBuf },
}

fn parse_tol(s: &str) -> std::result::Result<Tolerance, String> {
    let eps: f64 = s.parse().map_err(|e| format!("{e}"))?;
    Tolerance::new(eps).map_err(|e| e.to_string())
}

fn parse_reals(s: &str, n: usize) -> std::result::Result<Vec<f64>, String> {
    let vals = s
        .split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    if vals.len() != n {
        return Err(format!("expected {n} comma-separated reals, got {}", vals.len()));
    }
    if vals.iter().any(|v| !v.is_finite()) {
        return Err("values must be finite".into());
    }
    Ok(vals)
}

fn parse_vec3(s: &str) -> std::result::Result<[f64; 3], String> {
    let v = parse_reals(s, 3)?;
    Ok([v[0], v[1], v[2]])
}

fn parse_mat3(s: &str) -> std::result::Result<[[f64; 3]; 3], String> {
    let v = parse_reals(s, 9)?;
    Ok(std::array::from_fn(|i| std::array::from_fn(|j| v[3 * i + j])))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(&mut out, &cli);
    // A closed pipe (e.g. `| head`) is not an error.
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(out: &mut String, cli: &Cli) -> Result<u8> {
    let (tol, fmt) = (cli.tol, cli.format);
    match &cli.command {
        Command::Verify { corrupt, corrupt_mode } => cmd_verify(out, tol, fmt, corrupt.as_deref(), *corrupt_mode),
        Command::Decompose { path, basis } => cmd_decompose(out, fmt, path, *basis),
        Command::Density { sa, sb, c } => {
            let p = DensityParams::new(BlochVector(*sa), BlochVector(*sb), *c);
            cmd_density(out, tol, fmt, &p)
        }
        Command::Table => cmd_table(out, tol, fmt),
        Command::Gate { label } => cmd_gate(out, fmt, &label.parse()?),
        Command::Classify { path } => cmd_classify(out, tol, fmt, path),
    }
}

fn print_json(out: &mut String, v: &impl serde::Serialize) -> Result<()> {
    outln!(out, "{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn cmd_verify(out: &mut String, tol: Tolerance, fmt: Format, corrupt: Option<&str>, mode: CorruptMode) -> Result<u8> {
    let report = match corrupt {
        Some(label) => {
            let label: DiracLabel = label.parse()?;
            let how = match mode {
                CorruptMode::Perturb => Corruption::Perturb,
                CorruptMode::Negate => Corruption::Negate,
            };
            run_verification_with(&corrupt_basis(label, how), tol)
        }
        None => run_verification(tol),
    };
    match fmt {
        Format::Json => print_json(out, &report)?,
        Format::Text => {
            let width = report.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
            for c in &report.checks {
                let status = if c.passed() { "PASS" } else { "FAIL" };
                outln!(
                    out,
                    "{status}  {:width$}  max_error={:<18}  {}",
                    c.name,
                    fmt_real(c.max_error),
                    c.detail
                );
            }
            let failed = report.failures().count();
            outln!(out, "{} of {} checks passed", report.checks.len() - failed, report.checks.len());
        }
    }
    Ok(report.exit_code() as u8)
}

fn matrix_lines<const N: usize>(m: &SquareMatrix<N>) -> Vec<String> {
    let cells: Vec<Vec<String>> = m.rows().iter().map(|r| r.iter().map(|z| fmt_complex(*z)).collect()).collect();
    let width = cells.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
    cells
        .iter()
        .map(|row| {
            let padded: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            format!("[ {} ]", padded.join("  "))
        })
        .collect()
}

fn print_matrix<const N: usize>(out: &mut String, title: &str, m: &SquareMatrix<N>) {
    outln!(out, "{title}:");
    for line in matrix_lines(m) {
        outln!(out, "  {line}");
    }
}

fn complex_json(z: C64) -> Value {
    json!([z.re, z.im])
}

fn coeffs_json(c: &DiracCoefficients) -> Value {
    Value::Object(c.iter().map(|(l, z)| (l.name().to_string(), complex_json(z))).collect())
}

const PAULI_NAMES: [&str; 4] = ["I", "X", "Y", "Z"];

fn cmd_decompose(out: &mut String, fmt: Format, path: &Path, basis: BasisKind) -> Result<u8> {
    let m: ComplexMatrix4 = read_matrix(path)?;
    let (name, coeffs, rebuilt): (&str, Vec<(String, C64)>, ComplexMatrix4) = match basis {
        BasisKind::Dirac => {
            let b = DiracBasis::standard();
            let c = b.decompose(&m);
            let list = c.iter().map(|(l, z)| (l.name().to_string(), z)).collect();
            ("dirac", list, b.reconstruct(&c))
        }
        BasisKind::Pauli => {
            let c = pauli_coefficients(&m);
            let list = (0..4)
                .flat_map(|a| (0..4).map(move |b| (a, b)))
                .map(|(a, b)| (format!("{}{}", PAULI_NAMES[a], PAULI_NAMES[b]), c[a][b]))
                .collect();
            ("pauli", list, from_pauli_coefficients(&c))
        }
        BasisKind::Bell => {
            let c = bell_matrix_elements(&m);
            let mut list = Vec::new();
            let mut sum = ComplexMatrix4::zeros();
            for (i, a) in BellLabel::ALL.iter().enumerate() {
                for (j, b) in BellLabel::ALL.iter().enumerate() {
                    list.push((format!("{},{}", a.name(), b.name()), c[i][j]));
                    sum = sum + bell_outer(*a, *b).scale(c[i][j]);
                }
            }
            ("bell", list, sum)
        }
    };
    let err = rebuilt.max_abs_diff(&m);
    match fmt {
        Format::Json => {
            let map: Map<String, Value> = coeffs.iter().map(|(k, z)| (k.clone(), complex_json(*z))).collect();
            print_json(out, &json!({
                "basis": name,
                "coefficients": map,
                "reconstruction_error": err,
            }))?;
        }
        Format::Text => {
            let width = coeffs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            outln!(out, "basis: {name}");
            for (k, z) in &coeffs {
                outln!(out, "  {k:width$}  {}", fmt_complex(*z));
            }
            outln!(out, "reconstruction error: {}", fmt_real(err));
        }
    }
    Ok(0)
}

fn cmd_density(out: &mut String, tol: Tolerance, fmt: Format, p: &DensityParams) -> Result<u8> {
    let warning = match density_from_params(p, true) {
        Ok(_) => None,
        Err(e @ Error::NotPositive { .. }) => Some(e.to_string()),
        Err(e) => return Err(e),
    };
    let m = density_from_params(p, false)?.into_matrix();
    let eigenvalues = hermitian_eigenvalues(&m, tol)?;
    let (rho_a, rho_b) = (partial_trace(&m, Qubit::B), partial_trace(&m, Qubit::A));
    let (pur_a, pur_b) = marginal_mixedness(&m)?;
    let total = purity(&m);
    let residual = correlation_residual(p);
    let coeffs = density_dirac_coeffs(p);
    let signature = entanglement_signature(p, tol);
    let psd = warning.is_none();

    match fmt {
        Format::Json => print_json(out, &json!({
            "matrix": MatrixDoc::from(&m),
            "positive_semidefinite": psd,
            "warning": warning,
            "eigenvalues": eigenvalues,
            "marginal_a": MatrixDoc::from(&rho_a),
            "marginal_b": MatrixDoc::from(&rho_b),
            "purity": total,
            "marginal_purities": [pur_a, pur_b],
            "correlation_residual": residual,
            "dirac_coefficients": coeffs_json(&coeffs),
            "entanglement_signature": signature,
        }))?,
        Format::Text => {
            if let Some(w) = &warning {
                eprintln!("warning: {w}");
            }
            print_matrix(out, "density matrix", &m);
            let ev: Vec<String> = eigenvalues.iter().map(|x| fmt_real(*x)).collect();
            outln!(out, "positive semi-definite: {psd}");
            outln!(out, "eigenvalues: {}", ev.join(", "));
            print_matrix(out, "marginal A", &rho_a);
            print_matrix(out, "marginal B", &rho_b);
            outln!(out, "purity: {}", fmt_real(total));
            outln!(out, "marginal purities: {}, {}", fmt_real(pur_a), fmt_real(pur_b));
            outln!(out, "correlation residual:");
            for row in residual {
                let r: Vec<String> = row.iter().map(|x| fmt_real(*x)).collect();
                outln!(out, "  [ {} ]", r.join("  "));
            }
            outln!(out, "dirac coefficients:");
            for (l, z) in coeffs.support(tol) {
                outln!(out, "  {:8}  {}", l.name(), fmt_complex(z));
            }
            outln!(out, "entanglement signature: {signature}");
        }
    }
    Ok(0)
}

fn fmt_phase(p: C64, tol: Tolerance) -> String {
    let near = |re: f64, im: f64| (p - C64::new(re, im)).norm() <= tol.eps().max(1e-12);
    if near(1.0, 0.0) {
        "+".into()
    } else if near(-1.0, 0.0) {
        "−".into()
    } else if near(0.0, 1.0) {
        "+i".into()
    } else if near(0.0, -1.0) {
        "−i".into()
    } else {
        format!("({})", fmt_complex(p))
    }
}

fn cmd_table(out: &mut String, tol: Tolerance, fmt: Format) -> Result<u8> {
    let table = derive_symmetry_table(tol);
    match fmt {
        Format::Json => print_json(out, &table.records())?,
        Format::Text => {
            let width = table.rows().map(|r| r.operator.len()).max().unwrap_or(0);
            for (title, rows) in [("Dirac matrices", &table.dirac_rows), ("Symmetry operators", &table.symmetry_rows)] {
                outln!(out, "{title}:");
                for row in rows {
                    let cells: Vec<String> = BellLabel::ALL
                        .iter()
                        .zip(&row.actions)
                        .map(|(src, act)| match act {
                            PhaseAction::Pure { target, phase } => {
                                format!("{} → {}{}", src.symbol(), fmt_phase(*phase, tol), target.symbol())
                            }
                            PhaseAction::Mixes => format!("{} → mixes", src.symbol()),
                        })
                        .collect();
                    outln!(out, "{:>width$}: {}", row.operator, cells.join(", "));
                }
            }
        }
    }
    Ok(0)
}

fn cmd_gate(out: &mut String, fmt: Format, label: &GateLabel) -> Result<u8> {
    let label = *label;
    let m = gate(label);
    let coeffs = if label.is_two_qubit() { Some(gate_dirac_form(label)?) } else { None };
    let note = match label {
        GateLabel::Not2 => Some("γ5 = i·P·T".to_string()),
        GateLabel::Swap => Some(swap_bell_decomposition().display_terms()),
        _ => None,
    };
    match fmt {
        Format::Json => {
            let matrix = match &m {
                GateMatrix::One(m2) => serde_json::to_value(MatrixDoc::from(m2))?,
                GateMatrix::Two(m4) => serde_json::to_value(MatrixDoc::from(m4))?,
            };
            print_json(out, &json!({
                "gate": label.name(),
                "matrix": matrix,
                "dirac_coefficients": coeffs.as_ref().map(coeffs_json),
                "note": note,
            }))?;
        }
        Format::Text => {
            match &m {
                GateMatrix::One(m2) => print_matrix(out, label.name(), m2),
                GateMatrix::Two(m4) => print_matrix(out, label.name(), m4),
            }
            if let Some(c) = &coeffs {
                let terms: Vec<String> = c
                    .support(Tolerance::default())
                    .iter()
                    .map(|(l, z)| format!("({})·{}", fmt_complex(*z), l.name()))
                    .collect();
                outln!(out, "dirac form: {}", terms.join(" + "));
            }
            if let Some(n) = &note {
                outln!(out, "{n}");
            }
        }
    }
    Ok(0)
}

fn cmd_classify(out: &mut String, tol: Tolerance, fmt: Format, path: &Path) -> Result<u8> {
    let m: ComplexMatrix4 = read_matrix(path)?;
    let v = classify_even_odd(&m, tol)?;
    match fmt {
        Format::Json => print_json(out, &v)?,
        Format::Text => {
            outln!(out, "kind: {}", serde_json::to_value(v.kind)?.as_str().unwrap_or("?"));
            outln!(out, "C-invariant: {}", v.c_invariant);
            outln!(out, "P-invariant: {}", v.p_invariant);
            outln!(out, "separable marginals: {}", v.separable_marginal);
        }
    }
    Ok(0)
}
