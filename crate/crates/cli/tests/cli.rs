use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn unproj(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unproj"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = unproj(&all);
    let v = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (out.status.code().unwrap(), v)
}

fn validate(report: &Value) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas/report.schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator
        .iter_errors(report)
        .map(|e| e.to_string())
        .collect();
    assert!(errors.is_empty(), "{errors:?}");
}

#[test]
fn scroll_passes() {
    let (code, v) = json(&["scroll", "1", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["results"]["krull_dimension"], 3);
    validate(&v);
}

#[test]
fn scroll_json_matches_schema() {
    let (code, v) = json(&["scroll", "2", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["degree"], 4);
    validate(&v);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["scroll", "1", "0"][..],
        &["scroll", "0", "1"],
        &["scroll", "x", "1"],
        &["unproject", "1", "2"],
        &["unproject", "1", "2", "--f", "x02^2"],
        &["unproject", "1", "2", "--f", "x12 + x12^2"],
        &["unproject", "1", "2", "--points", "0:0"],
        &["lattice", "bogus"],
        &["lattice", "chain"],
        &["scroll", "1", "1", "--field", "fp:4"],
        &["verify-all", "--grid", "q<=1"],
    ] {
        assert_eq!(unproj(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn points_give_scroll_tag() {
    let (code, v) = json(&["unproject", "1", "2", "--points", "0:1"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["classification"]["tag"], "F(1,3)");
    assert_eq!(v["results"]["codimension"], 3);
    validate(&v);
    let (_, v) = json(&["unproject", "1", "2", "--points", "1:-1"]);
    assert_eq!(v["results"]["classification"]["tag"], "F(2,2)");
}

#[test]
fn weighted_unprojection_uses_golden_table() {
    let (code, v) = json(&["unproject", "1", "2", "--f", "x12^2"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["k"], 2);
    assert_eq!(
        v["results"]["hilbert"],
        serde_json::json!([1, 5, 13, 24, 39, 57])
    );
    assert_eq!(v["results"]["golden"]["table"], v["results"]["hilbert"]);
    let labels: Vec<&str> = v["results"]["checks"]["items"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["label"].as_str().unwrap())
        .collect();
    assert!(labels.contains(&"hilbert table matches golden"));
}

#[test]
fn element_of_i_is_not_a_domain() {
    let out = unproj(&["unproject", "1", "1", "--f", "x00"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("not a domain"));
    let (code, v) = json(&["unproject", "1", "1", "--f", "x00"]);
    assert_eq!(code, 1);
    assert_eq!(v["status"], "fail");
    validate(&v);
}

#[test]
fn rees_flag_reports_containment_failure() {
    let (code, v) = json(&["unproject", "1", "1", "--f", "x11", "--rees"]);
    assert_eq!(code, 1);
    let rees = &v["results"]["rees"];
    assert_eq!(rees["base"]["comparison"]["equal"], true);
    assert_eq!(rees["unprojection"]["comparison"]["superset"], false);
    assert_eq!(rees["unprojection_elimination_is_q"], true);
}

#[test]
fn lattice_commands() {
    let (code, v) = json(&["lattice", "chain", "--D", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["gamma_hat_sq"], -2);
    assert_eq!(
        v["results"]["singularities"],
        serde_json::json!(["1/2(1,1)", "A1"])
    );
    validate(&v);
    let (_, v) = json(&["lattice", "chain", "--D", "2,1", "--on-delta0", "1"]);
    assert_eq!(v["results"]["gamma_hat_sq"], -3);
    assert_eq!(
        v["results"]["singularities"],
        serde_json::json!(["1/3(1,1)", "A1"])
    );
    let (code, v) = json(&["lattice", "elementary", "2", "--on-delta0"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["d_prime"], 3);
    let (_, v) = json(&["lattice", "elementary", "2"]);
    assert_eq!(v["results"]["d_prime"], 1);
    let (code, v) = json(&["lattice", "horikawa", "2", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["pg"], 7);
    assert_eq!(v["results"]["Ksq"], 11);
    validate(&v);
}

#[test]
fn text_and_json_agree_on_status() {
    for args in [
        &["scroll", "1", "2"][..],
        &["unproject", "1", "1", "--f", "x00"],
        &["lattice", "horikawa", "3", "3"],
    ] {
        let text = String::from_utf8(unproj(args).stdout).unwrap();
        let (_, v) = json(args);
        assert!(
            text.contains(&format!("status: {}", v["status"].as_str().unwrap())),
            "{args:?}"
        );
    }
}

#[test]
fn verify_all_small_grid_over_both_fields() {
    let (code, q) = json(&["verify-all", "--grid", "m<=1", "n<=2", "k<=2", "--no-rees"]);
    assert_eq!(code, 0, "{}", q["results"]["summary"]);
    validate(&q);
    let (code, p) = json(&[
        "verify-all",
        "--grid",
        "m<=1 n<=2 k<=2",
        "--no-rees",
        "--field",
        "fp:32003",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        q["results"]["checks"]["items"],
        p["results"]["checks"]["items"]
    );
}

#[test]
fn verify_all_with_rees_fails_only_on_containment() {
    let (code, v) = json(&["verify-all", "--grid", "m<=1 n<=1 k<=1"]);
    assert_eq!(code, 1);
    let failed: Vec<String> = v["results"]["checks"]["items"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .map(|c| c["label"].as_str().unwrap().to_string())
        .collect();
    assert!(!failed.is_empty());
    assert!(
        failed.iter().all(|l| l.contains("contains Q2")),
        "{failed:?}"
    );
}

#[test]
fn update_golden_writes_and_reproduces() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let out = unproj(&[
        "verify-all",
        "--grid",
        "m<=1 n<=1 k<=2",
        "--no-rees",
        "--golden-dir",
        d,
    ]);
    assert_eq!(
        out.status.code(),
        Some(1),
        "missing golden values leave the run partial"
    );
    let out = unproj(&[
        "verify-all",
        "--grid",
        "m<=1 n<=1 k<=2",
        "--no-rees",
        "--golden-dir",
        d,
        "--update-golden",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(dir.path().join("golden.json")).unwrap();
    let g: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(g["provenance"]["fields"], serde_json::json!(["q"]));
    assert_eq!(
        g["hilbert"]["m=1 n=1 k=2 f=x11^2 field=q"],
        serde_json::json!([1, 4, 10, 18, 29, 42])
    );
    let (code, v) = json(&[
        "verify-all",
        "--grid",
        "m<=1 n<=1 k<=2",
        "--no-rees",
        "--golden-dir",
        d,
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "pass");
    let again = unproj(&[
        "verify-all",
        "--grid",
        "m<=1 n<=1 k<=2",
        "--no-rees",
        "--golden-dir",
        d,
        "--update-golden",
    ]);
    assert_eq!(again.status.code(), Some(0));
    assert_eq!(
        std::fs::read_to_string(dir.path().join("golden.json")).unwrap(),
        text
    );
}
