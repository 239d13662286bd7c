use std::process::{Command, Output};

use serde_json::Value;

fn projgeom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_projgeom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_small_geometry_passes() {
    let o = projgeom(&["verify", "--q", "2", "--h", "2", "--k", "1", "--suite", "all"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<_> = text
        .lines()
        .filter(|l| l.contains(": pass") || l.contains(": fail"))
        .collect();
    assert!(!lines.is_empty());
    assert!(lines.iter().all(|l| l.ends_with(": pass")), "{text}");
    assert!(text.contains("main.askey1: pass"));
}

#[test]
fn verify_json_schema() {
    let o = projgeom(&[
        "verify", "--q", "2", "--h", "2", "--k", "1", "--suite", "main", "--format", "json",
    ]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["context"]["q"], "2");
    assert_eq!(v["context"]["h"], 2);
    assert_eq!(v["context"]["mode"], "geometry");
    assert_eq!(v["context"]["y"], "001");
    let rels = v["relations"].as_array().unwrap();
    assert!(rels.iter().all(|r| r["status"] == "pass" && r.get("witness").is_none()));
    assert!(rels.iter().any(|r| r["id"] == "main.askey2"));
    assert!(v.get("timings").is_none());
}

#[test]
fn reports_are_deterministic() {
    let args = ["verify", "--q", "3", "--h", "2", "--k", "1", "--format", "json"];
    assert_eq!(projgeom(&args).stdout, projgeom(&args).stdout);
    let args = ["decompose", "--q", "2", "--h", "3", "--k", "1"];
    assert_eq!(projgeom(&args).stdout, projgeom(&args).stdout);
}

#[test]
fn timings_only_on_request() {
    let o = projgeom(&[
        "verify",
        "--q",
        "2",
        "--h",
        "2",
        "--k",
        "1",
        "--suite",
        "generators",
        "--timings",
        "--format",
        "json",
    ]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["timings"]
        .as_object()
        .is_some_and(|t| t.contains_key("generators.k1l1")));
}

#[test]
fn usage_errors() {
    for args in [
        &["verify", "--q", "4", "--h", "2", "--k", "1"][..],
        &["verify", "--q", "symbolic", "--h", "2", "--k", "1"],
        &["decompose", "--symbolic", "--h", "2", "--k", "1"],
        &["verify", "--q", "2", "--h", "2", "--k", "2"],
        &[
            "module", "--h", "2", "--k", "1", "--alpha", "1", "--beta", "0", "--rho", "0",
        ],
        &["verify", "--q", "2", "--h", "2", "--k", "1", "--bogus"],
        &["enumerate", "--q", "2", "--h", "2", "--k", "1", "--operator", "Z"],
    ] {
        let o = projgeom(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn capacity_cap_is_enforced() {
    let o = projgeom(&["verify", "--q", "2", "--h", "3", "--k", "2", "--max-size", "100"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("capacity"));
}

#[test]
fn unknown_suite_is_an_error() {
    let o = projgeom(&["verify", "--q", "2", "--h", "2", "--k", "1", "--suite", "nope"]);
    assert!(!o.status.success());
}

#[test]
fn module_symbolic() {
    let o = projgeom(&[
        "module",
        "--h",
        "3",
        "--k",
        "2",
        "--alpha",
        "0",
        "--beta",
        "1",
        "--rho",
        "0",
        "--symbolic",
        "--format",
        "json",
    ]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["context"]["q"], "symbolic");
    assert_eq!(v["context"]["type"], "(0,1,0)");
    let rows = v["tables"].as_array().unwrap();
    assert_eq!(rows.len(), 6);
    let k1 = rows[0]["entries"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["name"] == "K1")
        .unwrap();
    assert_eq!(k1["formula"], k1["matrix"]);
}

#[test]
fn module_numeric_each_prime() {
    for q in ["2", "3", "5", "7"] {
        let o = projgeom(&[
            "module", "--q", q, "--h", "4", "--k", "2", "--alpha", "1", "--beta", "0", "--rho", "0",
        ]);
        assert!(o.status.success(), "q={q}");
        assert!(!stdout(&o).contains(": fail"));
    }
}

#[test]
fn convert_example() {
    let o = projgeom(&[
        "convert", "--h", "2", "--k", "1", "--alpha", "0", "--beta", "1", "--rho", "0",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    for line in ["nu=1", "mu=1", "d=0", "case=C2", "e=-1", "convert.round_trip: pass"] {
        assert!(text.lines().any(|l| l == line), "{line} missing from {text}");
    }
}

#[test]
fn convert_undefined_parameters() {
    let o = projgeom(&[
        "convert", "--h", "3", "--k", "1", "--alpha", "0", "--beta", "1", "--rho", "1",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("level k"));
}

#[test]
fn decompose_example() {
    let o = projgeom(&["decompose", "--q", "2", "--h", "2", "--k", "1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("multiplicity (0,0,0) dim 6: 1"));
    assert!(text.contains("multiplicity (0,1,0) dim 2: 2"));
    assert!(text.contains("multiplicity (0,0,1) dim 2: 3"));
    assert!(text.contains("total: 16 = 16"));

    let o = projgeom(&["decompose", "--q", "2", "--h", "2", "--k", "1", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["total"]["sum"], 16);
    assert_eq!(v["total"]["size"], 16);
}

#[test]
fn y_override_and_invariance() {
    let o = projgeom(&["decompose", "--q", "2", "--h", "2", "--k", "1", "--y", "100"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("y=100"));
    let o = projgeom(&["verify", "--q", "2", "--h", "2", "--k", "1", "--y", "001", "--y", "100"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("y-invariance.multiplicities: pass"));
    let bad = projgeom(&["verify", "--q", "2", "--h", "2", "--k", "1", "--y", "110;011"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn enumerate_summary_and_operator() {
    let o = projgeom(&["enumerate", "--q", "2", "--h", "2", "--k", "1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("size=16"));
    assert!(text.contains("stratum (0,1): size 6"));

    let o = projgeom(&[
        "enumerate",
        "--q",
        "2",
        "--h",
        "2",
        "--k",
        "1",
        "--operator",
        "A*",
        "--format",
        "json",
    ]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["operator"]["dim"], 16);
    assert_eq!(v["operator"]["entries"].as_array().unwrap().len(), 16);
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("projgeom-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let o = projgeom(&[
        "verify",
        "--q",
        "2",
        "--h",
        "2",
        "--k",
        "1",
        "--suite",
        "center",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(!v["relations"].as_array().unwrap().is_empty());
    std::fs::remove_dir_all(&dir).unwrap();
}
