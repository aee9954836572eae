//! End-to-end command tests: JSON I/O, exit codes, and the documented
//! examples.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::{json, Value};

use g2fn::g2::G2Model;
use g2fn::json as enc;
use g2fn::ScalarMode;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_g2fn"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write_json(dir: &Path, name: &str, v: &Value) -> String {
    let path = dir.join(name);
    fs::write(&path, enc::to_canonical_string(v)).unwrap();
    path.to_string_lossy().into_owned()
}

fn zero_g2_torsion() -> Value {
    json!({"type": "g2", "t": vec![vec!["0"; 7]; 7]})
}

fn identity_g2_torsion() -> Value {
    let rows: Vec<Vec<String>> = (0..7)
        .map(|i| (0..7).map(|j| if i == j { "1" } else { "0" }.to_string()).collect())
        .collect();
    json!({"type": "g2", "t": rows})
}

#[test]
fn verify_each_family_passes() {
    for family in ["g2", "spin7", "fn"] {
        let out = run(&["verify", "--family", family, "--samples", "5", "--seed", "1"]);
        assert!(out.status.success(), "family {family}: {out:?}");
        let v = stdout_json(&out);
        assert_eq!(v["failures"].as_array().unwrap().len(), 0);
        assert_eq!(v["checked"], json!(5));
    }
}

#[test]
fn verify_rejects_unknown_family() {
    let out = run(&["verify", "--family", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bracket_identity_torsion_matches_closed_form() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_json(dir.path(), "t.json", &identity_g2_torsion());
    let out = run(&["bracket", "--kind", "cr-chi", "--torsion", &path]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["exact_match"], json!(true));
    assert_eq!(v["pi7_endo"][0][0], json!("-16"));
    assert_eq!(v["pi7_endo"][0][1], json!("0"));
    assert_eq!(v["class"]["components"], json!(["V1"]));
}

#[test]
fn bracket_zero_torsion_is_zero() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_json(dir.path(), "t.json", &zero_g2_torsion());
    for kind in ["cr-chi", "chi-chi"] {
        let out = run(&["bracket", "--kind", kind, "--torsion", &path]);
        assert!(out.status.success());
        let v = stdout_json(&out);
        assert_eq!(v["exact_match"], json!(true));
        for comp in v["bracket"]["components"].as_array().unwrap() {
            assert_eq!(comp["terms"].as_array().unwrap().len(), 0);
        }
        assert_eq!(v["class"]["components"].as_array().unwrap().len(), 0);
    }
}

#[test]
fn bracket_rejects_family_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_json(dir.path(), "t.json", &zero_g2_torsion());
    let out = run(&["bracket", "--kind", "pp", "--torsion", &path]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bracket_random_spin7_matches() {
    let mut rng = g2fn::rng::SmallRng::new(99);
    let t = g2fn::spin7::Spin7Torsion::new(rng.matrix(8, 7)).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = write_json(dir.path(), "t.json", &enc::torsion_spin7_to_value(&t));
    let out = run(&["bracket", "--kind", "pp", "--torsion", &path]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["exact_match"], json!(true));
    assert_eq!(v["family"], json!("spin7"));
}

#[test]
fn classify_examples() {
    let dir = tempfile::tempdir().unwrap();
    let zero = write_json(dir.path(), "zero.json", &zero_g2_torsion());
    let out = run(&["classify", "--torsion", &zero]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["components"].as_array().unwrap().len(), 0);

    let ident = write_json(dir.path(), "id.json", &identity_g2_torsion());
    let out = run(&["classify", "--torsion", &ident]);
    assert_eq!(stdout_json(&out)["components"], json!(["V1"]));

    // a pure traceless-symmetric witness stays in its row
    let model = G2Model::new();
    let witnesses = g2fn::classify::g2_witnesses(&model).unwrap();
    let (names, t) = witnesses
        .iter()
        .find(|(names, _)| names == &vec!["V27".to_string()])
        .unwrap();
    let path = write_json(dir.path(), "v27.json", &enc::torsion_g2_to_value(t));
    let out = run(&["classify", "--torsion", &path]);
    assert_eq!(stdout_json(&out)["components"], json!(names.clone()));
}

#[test]
fn classify_rejects_family_mismatch_and_bad_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_json(dir.path(), "t.json", &zero_g2_torsion());
    let out = run(&["classify", "--torsion", &path, "--family", "spin7"]);
    assert_eq!(out.status.code(), Some(2));
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{not json").unwrap();
    let out = run(&["classify", "--torsion", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["classify", "--torsion", "/nonexistent/x.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn phisigma_certificate_fields() {
    let out = run(&["phisigma"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["minimal_polynomial_ok"], json!(true));
    assert_eq!(v["trace"], json!("0"));
    assert_eq!(v["trace_zero"], json!(true));
    assert_eq!(v["rank_minus1"], json!(48));
    assert_eq!(v["rank_6"], json!(8));
}

#[test]
fn fn_poly_exterior_derivative() {
    // d(x^1 e^2) = e^{12} on R^3
    let dir = tempfile::tempdir().unwrap();
    let input = json!({
        "op": "d",
        "form": {
            "n": 3, "k": 1, "scalar": "rational",
            "terms": [
                {"i": [2], "c": {"monomials": [{"e": [1, 0, 0], "c": "1"}]}}
            ]
        }
    });
    let path = write_json(dir.path(), "op.json", &input);
    let out = run(&["fn", "poly", "--input", &path]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let terms = v["result"]["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 1);
    assert_eq!(terms[0]["i"], json!([1, 2]));
    assert_eq!(terms[0]["c"]["monomials"][0]["c"], json!("1"));
    assert_eq!(terms[0]["c"]["monomials"][0]["e"], json!([0, 0, 0]));
}

#[test]
fn fn_poly_bracket_round_trip() {
    let mut rng = g2fn::rng::SmallRng::new(17);
    let k1 = rng.poly_vector_form(3, 1, 2);
    let k2 = rng.poly_vector_form(3, 1, 2);
    let expect = k1.fn_bracket(&k2).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let input = json!({
        "op": "bracket",
        "k1": enc::poly_vector_form_to_value(&k1, ScalarMode::Rational),
        "k2": enc::poly_vector_form_to_value(&k2, ScalarMode::Rational),
    });
    let path = write_json(dir.path(), "op.json", &input);
    let out = run(&["fn", "poly", "--input", &path]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let got = enc::poly_vector_form_from_value(&v["result"]).unwrap();
    assert_eq!(got, expect);
}

#[test]
fn metric_from_phi_of_the_model_form() {
    let model = G2Model::new();
    let dir = tempfile::tempdir().unwrap();
    let path = write_json(
        dir.path(),
        "phi.json",
        &enc::form_to_value(&model.phi, ScalarMode::Rational),
    );
    let out = run(&["metric", "from-phi", "--phi", &path]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["mode"], json!("rational"));
    for i in 0..7 {
        for j in 0..7 {
            let expect = if i == j { "1" } else { "0" };
            assert_eq!(v["g"][i][j], json!(expect));
        }
    }
}

#[test]
fn out_flag_duplicates_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("report.json");
    let out = bin()
        .args([
            "verify",
            "--family",
            "fn",
            "--samples",
            "3",
            "--seed",
            "2",
            "--out",
        ])
        .arg(&out_path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let file_bytes = fs::read(&out_path).unwrap();
    assert_eq!(file_bytes, out.stdout);
}

#[test]
fn float_mode_still_verifies() {
    let out = run(&[
        "verify", "--family", "g2", "--samples", "3", "--seed", "1", "--mode", "float",
        "--tol", "1e-9",
    ]);
    assert!(out.status.success(), "{out:?}");
    let v = stdout_json(&out);
    assert_eq!(v["mode"], json!("float"));
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
}
