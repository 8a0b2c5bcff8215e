use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

use dirac_qubits::bell::bell_state;
use dirac_qubits::bell::BellLabel;
use dirac_qubits::gates::{even_odd_template, two_qubit_gate, GateLabel, Parity, Sign};
use dirac_qubits::io::write_matrix;
use dirac_qubits::linalg::ComplexMatrix4;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dirac-qubits")).args(args).output().expect("spawn")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

fn write(dir: &Path, name: &str, m: &ComplexMatrix4) -> String {
    let p = dir.join(name);
    write_matrix(&p, m).unwrap();
    p.to_str().unwrap().to_string()
}

fn coeff(v: &Value, key: &str) -> (f64, f64) {
    let c = &v["coefficients"][key];
    (c[0].as_f64().unwrap(), c[1].as_f64().unwrap())
}

#[test]
fn verify_passes_and_is_deterministic() {
    let a = run(&["verify"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    let b = run(&["verify"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("eq22.cnot_dirac_form"));
}

#[test]
fn verify_json_records() {
    let o = run(&["verify", "--format", "json"]);
    let v = json(&o);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.len() > 40);
    for c in checks {
        assert!(c["name"].is_string() && c["detail"].is_string() && c["max_error"].is_number());
        assert_eq!(c["status"], "pass");
    }
}

#[test]
fn tiny_tolerance_fails() {
    let o = run(&["--tol", "1e-20", "verify"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn nonpositive_tolerance_rejected() {
    for bad in ["0", "-1e-9", "nan"] {
        let o = run(&["verify", "--tol", bad]);
        assert!(!o.status.success(), "{bad}");
    }
}

#[test]
fn corruption_names_failing_check() {
    let o = run(&["verify", "--corrupt", "GAMMA_3"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("FAIL  sec2.clifford_anticommutators")), "{text}");
    let o = run(&["verify", "--corrupt", "GAMMA_3", "--corrupt-mode", "negate"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!run(&["verify", "--corrupt", "GAMMA_9"]).status.success());
}

#[test]
fn decompose_cnot_dirac() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "cnot.json", &two_qubit_gate(GateLabel::Cnot).unwrap());
    let v = json(&run(&["decompose", &path, "--basis", "dirac", "--format", "json"]));
    assert_eq!(v["coefficients"].as_object().unwrap().len(), 16);
    for (k, want) in [("UNIT", 0.5), ("SIGMA_3", 0.5), ("GAMMA_5", 0.5), ("IG3G4", -0.5), ("GAMMA_1", 0.0)] {
        let (re, im) = coeff(&v, k);
        assert!((re - want).abs() < 1e-12 && im.abs() < 1e-12, "{k}");
    }
    assert!(v["reconstruction_error"].as_f64().unwrap() < 1e-12);
}

#[test]
fn decompose_identity_every_basis() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "id.json", &ComplexMatrix4::identity());
    for (basis, unit) in [("dirac", "UNIT"), ("pauli", "II")] {
        let v = json(&run(&["decompose", &path, "--basis", basis, "--format", "json"]));
        for (k, c) in v["coefficients"].as_object().unwrap() {
            let want = if k == unit { 1.0 } else { 0.0 };
            assert!((c[0].as_f64().unwrap() - want).abs() < 1e-12, "{basis} {k}");
        }
    }
    let v = json(&run(&["decompose", &path, "--basis", "bell", "--format", "json"]));
    for (k, c) in v["coefficients"].as_object().unwrap() {
        let (a, b) = k.split_once(',').unwrap();
        let want = if a == b { 1.0 } else { 0.0 };
        assert!((c[0].as_f64().unwrap() - want).abs() < 1e-12, "{k}");
    }
}

#[test]
fn decompose_singlet_in_bell_basis() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "s.json", &bell_state(BellLabel::PsiMinus).projector());
    let v = json(&run(&["decompose", &path, "--basis", "bell", "--format", "json"]));
    for (k, c) in v["coefficients"].as_object().unwrap() {
        let want = if k == "PSI_MINUS,PSI_MINUS" { 1.0 } else { 0.0 };
        assert!((c[0].as_f64().unwrap() - want).abs() < 1e-12, "{k}");
    }
}

#[test]
fn decompose_errors() {
    let o = run(&["decompose", "/nonexistent/m.json"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("not found"));
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    std::fs::write(&p, "{\"rows\": [[1, 2]]}").unwrap();
    let o = run(&["decompose", p.to_str().unwrap()]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("parse error"));
}

#[test]
fn density_singlet() {
    let v = json(&run(&["density", "--c", "-1,0,0,0,-1,0,0,0,-1", "--format", "json"]));
    assert_eq!(v["entanglement_signature"], true);
    assert_eq!(v["positive_semidefinite"], true);
    for p in v["marginal_purities"].as_array().unwrap() {
        assert!((p.as_f64().unwrap() - 0.5).abs() < 1e-12);
    }
}

#[test]
fn density_product() {
    let v = json(&run(&["density", "--sa", "0,0,1", "--sb", "0,0,1", "--c", "0,0,0,0,0,0,0,0,1", "--format", "json"]));
    assert_eq!(v["entanglement_signature"], false);
    for p in v["marginal_purities"].as_array().unwrap() {
        assert!((p.as_f64().unwrap() - 1.0).abs() < 1e-12);
    }
}

#[test]
fn density_not_positive_is_a_warning() {
    let o = run(&["density", "--c", "2,0,0,0,0,0,0,0,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("-2.5e-1"));
    let v = json(&run(&["density", "--c", "2,0,0,0,0,0,0,0,0", "--format", "json"]));
    assert_eq!(v["positive_semidefinite"], false);
    assert!((v["eigenvalues"][0].as_f64().unwrap() + 0.25).abs() < 1e-12);
    assert!(!run(&["density", "--sa", "1,2"]).status.success());
}

#[test]
fn table_text_and_json() {
    let text = stdout(&run(&["table"]));
    assert!(text.lines().any(|l| l.trim_start().starts_with("GAMMA_5: Ψ+ → +Φ+")), "{text}");
    let v = json(&run(&["table", "--format", "json"]));
    let recs = v.as_array().unwrap();
    assert_eq!(recs.len(), 64 + 28);
    for r in recs {
        let ph = r["phase"].as_array().unwrap();
        let (re, im) = (ph[0].as_f64().unwrap(), ph[1].as_f64().unwrap());
        assert!((re.hypot(im) - 1.0).abs() < 1e-12);
    }
}

#[test]
fn gate_output() {
    assert!(stdout(&run(&["gate", "SWAP"])).contains("+Π1 −Π2 +Π3 +Π4"));
    assert!(stdout(&run(&["gate", "NOT2"])).contains("γ5 = i·P·T"));
    let v = json(&run(&["gate", "CNOT", "--format", "json"]));
    let rows = &v["matrix"]["rows"];
    assert_eq!(rows[1][3][0], 1.0);
    assert_eq!(rows[3][1][0], 1.0);
    assert_eq!(rows[1][1][0], 0.0);
    let o = run(&["gate", "TOFFOLI"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown gate"));
    assert!(run(&["gate", "HADAMARD1"]).status.success());
}

#[test]
fn classify_templates() {
    let dir = tempfile::tempdir().unwrap();
    let odd = write(dir.path(), "odd.json", &even_odd_template(Parity::Odd, Sign::Plus));
    let v = json(&run(&["classify", &odd, "--format", "json"]));
    assert_eq!(v["kind"], "ODD_PLUS");
    assert_eq!(v["c_invariant"], true);

    let even = write(dir.path(), "even.json", &even_odd_template(Parity::Even, Sign::Plus));
    let v = json(&run(&["classify", &even, "--format", "json"]));
    assert_eq!(v["kind"], "EVEN_PLUS");
    assert_eq!(v["p_invariant"], true);

    let mixed = (bell_state(BellLabel::PhiPlus).projector().scale_real(0.7)
        + bell_state(BellLabel::PsiPlus).projector().scale_real(0.3))
    .matmul(&ComplexMatrix4::identity());
    let path = write(dir.path(), "mixed.json", &mixed);
    let v = json(&run(&["classify", &path, "--format", "json"]));
    assert_eq!(v["kind"], "NEITHER");

    let bad = write(dir.path(), "bad.json", &ComplexMatrix4::identity());
    let o = run(&["classify", &bad]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("not a valid density matrix"));
}
