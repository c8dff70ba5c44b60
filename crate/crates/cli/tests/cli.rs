//! End-to-end tests of the ckhopf binary: exit codes, output shapes, and
//! JSON round-trips through the documented schemas.

use std::path::PathBuf;
use std::process::Output;

use ckhopf::catalog::{catalog_entry, galilei, So3Primitive};
use ckhopf::coeff::{JMonomial, JPolynomial, ZSeries};
use ckhopf::hopf::AlgebraElement;
use ckhopf::json::{lie_to_dto, quantum_from_dto, quantum_to_dto, QuantumAlgebraDto};
use ckhopf::liealg::{BasisLabel, LieAlgebraData, LinearTerm};

fn ckhopf(args: &[&str]) -> Output {
    std::process::Command::new(env!("CARGO_BIN_EXE_ckhopf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn code_of(out: &Output) -> i32 {
    out.status.code().expect("terminated by exit, not a signal")
}

/// A scratch file that removes itself.
struct TempFile(PathBuf);

impl TempFile {
    fn new(name: &str, contents: &str) -> Self {
        let mut path = std::env::temp_dir();
        path.push(format!("ckhopf-test-{}-{name}", std::process::id()));
        std::fs::write(&path, contents).expect("temp file is writable");
        TempFile(path)
    }

    fn path(&self) -> &str {
        self.0.to_str().expect("utf-8 temp path")
    }
}

impl Drop for TempFile {
    fn drop(&mut self) {
        let _ = std::fs::remove_file(&self.0);
    }
}

#[test]
fn show_prints_the_structure_maps() {
    let out = ckhopf(&["show", "galilei:X01", "--order", "3"]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("[X01, X12] = (-1)*X02"), "{text}");
    assert!(text.contains("γ(X12) = (1/2*z)*X02 + (-1)*X12"), "{text}");
    assert!(text.contains("z dimension: sec"), "{text}");
}

#[test]
fn show_output_is_byte_stable() {
    let first = ckhopf(&["show", "so_z3:X12", "--order", "4", "--format", "json"]);
    let second = ckhopf(&["show", "so_z3:X12", "--order", "4", "--format", "json"]);
    assert_eq!(first.stdout, second.stdout);
    assert!(!first.stdout.is_empty());
}

#[test]
fn show_json_round_trips_to_the_construction() {
    for name in ["so_z3:X02", "galilei:X12"] {
        let out = ckhopf(&["show", name, "--order", "3", "--format", "json"]);
        assert_eq!(code_of(&out), 0);
        let dto: QuantumAlgebraDto = serde_json::from_str(&stdout_of(&out)).unwrap();
        let parsed = quantum_from_dto(&dto).unwrap();
        assert_eq!(parsed, catalog_entry(name, 3).unwrap(), "{name}");
    }
}

#[test]
fn verify_passes_catalog_entries() {
    let out = ckhopf(&["verify", "so_z3:X01", "--order", "4"]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("coassociativity: pass"), "{text}");
    assert!(text.contains("all checks passed"), "{text}");
}

#[test]
fn verify_fails_on_a_corrupted_antipode() {
    let mut q = galilei(So3Primitive::X01, 3);
    q.set_antipode(0, AlgebraElement::generator(0, 3));
    let file = TempFile::new(
        "corrupt.json",
        &serde_json::to_string(&quantum_to_dto(&q)).unwrap(),
    );
    let out = ckhopf(&["verify", file.path()]);
    assert_eq!(code_of(&out), 1);
    let text = stdout_of(&out);
    assert!(text.contains("antipode identity: FAIL"), "{text}");
    assert!(text.contains("verification failed"), "{text}");
}

#[test]
fn contract_reaches_the_galilei_limit() {
    let out = ckhopf(&[
        "contract", "so_z3:X02", "--j", "dual,dual", "--order", "3", "--format", "json",
    ]);
    assert_eq!(code_of(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value["warnings"], serde_json::json!([]));
    let dto: QuantumAlgebraDto = serde_json::from_value(value["result"].clone()).unwrap();
    assert_eq!(quantum_from_dto(&dto).unwrap(), galilei(So3Primitive::X02, 3));
}

#[test]
fn contract_reports_singular_limits_with_exit_two() {
    let labels = vec![BasisLabel::pair(0, 1), BasisLabel::pair(0, 2)];
    let mut alg = LieAlgebraData::new(labels, 3);
    let mut term = LinearTerm::new();
    term.insert(
        1,
        ZSeries::constant(3, JPolynomial::from_monomial(JMonomial::var(1).pow(-1))),
    );
    alg.set_bracket(0, 1, term);
    let file = TempFile::new(
        "singular.json",
        &serde_json::to_string(&lie_to_dto(&alg)).unwrap(),
    );
    let out = ckhopf(&["contract", file.path(), "--j", "dual"]);
    assert_eq!(code_of(&out), 2);
    let text = stdout_of(&out);
    assert!(text.contains("singular contraction"), "{text}");
    assert!(text.contains("j1"), "{text}");
}

#[test]
fn order_flag_truncates_files_but_never_extends() {
    let q = galilei(So3Primitive::X02, 4);
    let file = TempFile::new(
        "order.json",
        &serde_json::to_string(&quantum_to_dto(&q)).unwrap(),
    );
    let truncated = ckhopf(&["show", file.path(), "--order", "3", "--format", "json"]);
    assert_eq!(code_of(&truncated), 0);
    let dto: QuantumAlgebraDto = serde_json::from_str(&stdout_of(&truncated)).unwrap();
    assert_eq!(quantum_from_dto(&dto).unwrap(), q.truncated(3));

    let extended = ckhopf(&["show", file.path(), "--order", "5"]);
    assert_eq!(code_of(&extended), 3);
    assert!(stderr_of(&extended).contains("extend"), "{}", stderr_of(&extended));
}

#[test]
fn usage_errors_exit_three() {
    assert_eq!(code_of(&ckhopf(&["frobnicate"])), 3);
    assert_eq!(code_of(&ckhopf(&["show", "no_such:entry"])), 3);
    assert_eq!(code_of(&ckhopf(&["show", "so_z3:X02", "--order", "1"])), 3);
    assert_eq!(code_of(&ckhopf(&["contract", "so_z3:X02", "--j", "frob"])), 3);
    assert_eq!(code_of(&ckhopf(&["enumerate", "2", "--model", "nope"])), 3);
    assert_eq!(code_of(&ckhopf(&["enumerate", "2", "--k", "4"])), 3);
}

#[test]
fn help_exits_zero() {
    let out = ckhopf(&["--help"]);
    assert_eq!(code_of(&out), 0);
    assert!(stdout_of(&out).contains("enumerate"));
}

#[test]
fn enumerate_emits_verdicts_per_assignment() {
    let out = ckhopf(&["enumerate", "3", "--format", "json"]);
    assert_eq!(code_of(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let entries = value.as_array().unwrap();
    assert_eq!(entries.len(), 6);
    for entry in entries {
        let verdicts = entry["verdicts"].as_array().unwrap();
        assert_eq!(verdicts.len(), 8);
        for v in verdicts {
            assert_eq!(v["basis"], "model");
            assert!(v["verdict"] == "allowed" || v["verdict"] == "singular");
        }
    }

    let exact = ckhopf(&["enumerate", "2", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&exact)).unwrap();
    for entry in value.as_array().unwrap() {
        for v in entry["verdicts"].as_array().unwrap() {
            assert_eq!(v["basis"], "exact");
            assert_eq!(v["verdict"], "allowed");
        }
    }
}

#[test]
fn distinguish_separates_and_declines_to_separate() {
    let out = ckhopf(&["distinguish", "galilei:X02", "galilei:X12", "--order", "3"]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("distinguished by antipode square involutive"), "{text}");

    let out = ckhopf(&["distinguish", "galilei:X01", "galilei:X12", "--order", "3"]);
    assert_eq!(code_of(&out), 0);
    assert!(stdout_of(&out).contains("not distinguished"));
}
