use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/data");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eqorient")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut args = args.to_vec();
    args.push("--json");
    let v: Value = serde_json::from_str(&stdout(&args)).unwrap();
    assert_eq!(v["schema"], 1);
    v
}

#[test]
fn klein_four_units() {
    let v = json(&["burnside", "units", "--group", "C2xC2"]);
    assert_eq!(v["dimension"], 4);
    assert_eq!(v["order"], 16);
    // the same group read from a permutation file
    let w = json(&["burnside", "units", "--group", &data("klein.json")]);
    assert_eq!(w["order"], 16);
}

#[test]
fn gamma_rho_text() {
    let out = stdout(&["orient", "gamma-rho", "--group", "C3"]);
    assert!(out.starts_with("HZ-orientable: false, HA-orientable: false\n"), "{out}");
    let out = stdout(&["orient", "gamma-rho", "--group", "C2"]);
    assert!(out.starts_with("HZ-orientable: true, HA-orientable: false\n"), "{out}");
}

#[test]
fn subgroup_classes() {
    assert!(stdout(&["group", "subgroups", "--group", "C2"]).starts_with("2 classes"));
    assert_eq!(json(&["group", "subgroups", "--group", "S3"])["count"], 4);
    assert_eq!(json(&["group", "info", "--group", "D4"])["order"], 8);
}

#[test]
fn burnside_arithmetic() {
    // [C2/e]·[C2/e] = 2[C2/e]
    let v = json(&["burnside", "mul", "--group", "C2", "--a", "1,0", "--b", "1,0"]);
    assert_eq!(v["product"]["coefficients"], serde_json::json!([2, 0]));
    let v = json(&["burnside", "norm", "--group", "C2", "--from", "0", "--element", "-1"]);
    assert_eq!(v["norm"]["coefficients"], serde_json::json!([1, -1]));
    let v = json(&["burnside", "res", "--group", "C2", "--to", "0", "--element", "0,1"]);
    assert_eq!(v["restriction"]["coefficients"], serde_json::json!([1]));
    let v = json(&["burnside", "tr", "--group", "C2", "--from", "0", "--element", "3"]);
    assert_eq!(v["transfer"]["coefficients"], serde_json::json!([3, 0]));
    let v = json(&["burnside", "tom", "--group", "C2"]);
    assert_eq!(v["marks"], serde_json::json!([[2, 0], [1, 1]]));
}

#[test]
fn mackey_commands() {
    assert_eq!(json(&["mackey", "verify", "--group", "S3", "--coefficients", "units"])["valid"], true);
    let v = json(&["mackey", "show", "--group", "C2", "--coefficients", "units"]);
    assert_eq!(v["levels"][1]["value"], "(Z/2)^2");
    let v = json(&["mackey", "tn", "--n", "2"]);
    assert_eq!(v["entries"].as_array().unwrap().len(), 6);
    assert_eq!(json(&["mackey", "tn", "--n", "3", "--cyclic"])["group"], "C8");
}

#[test]
fn representations() {
    let rho = "external(sign(Sigma2), regular(C2))";
    assert_eq!(json(&["rep", "homog", "--group", "C2", "--structure", "Sigma2", "--rep", rho])["homogeneous"], true);
    let sigma = "external(sign(Sigma2), sign(C2))";
    assert_eq!(json(&["rep", "homog", "--group", "C2", "--structure", "Sigma2", "--rep", sigma])["homogeneous"], false);
    let v = json(&["rep", "homog", "--group", "C2", "--structure", "Sigma2", "--rep", &data("rho_tau.json")]);
    assert_eq!(v["homogeneous"], true);
    let v = json(&["rep", "fiber", "--group", "C2", "--structure", "Sigma2", "--rep", rho]);
    let fibers = v["fibers"].as_array().unwrap();
    assert_eq!(fibers.len(), 2);
    assert!(fibers.iter().all(|f| f["values"] == serde_json::json!(["2", "0"])));
}

#[test]
fn orientation_commands() {
    let v = json(&["orient", "pi0", "--group", "C2", "--structure", "Sigma2"]);
    assert_eq!(v["counts"], serde_json::json!([1, 2]));
    let v = json(&["orient", "induced-line", "--group", "C2"]);
    assert_eq!(v["w1Z"], 0);
    assert_eq!(v["haOrientable"], false);
    assert_eq!(json(&["orient", "odd-collapse", "--group", "C9"])["collapse"], true);
}

#[test]
fn bredon_compute() {
    let v = json(&["bredon", "compute", "--group", "C2", "--complex", "circle", "--coefficients", "units"]);
    assert_eq!(v["cohomology"][1]["text"], "(Z/2)^2");
    let v = json(&["bredon", "compute", "--group", "C2", "--complex", &data("s2sigma.json"), "--coefficients", "ghost"]);
    assert!(v["cohomology"].as_array().unwrap().iter().all(|d| d["text"] == "0"));
    let out = stdout(&["bredon", "compute", "--group", "C2", "--complex", "point", "--coefficients", "constZ"]);
    assert!(out.starts_with("H^0 = Z\n"));
}

#[test]
fn input_errors_exit_with_two() {
    let cases: &[&[&str]] = &[
        &["group", "info", "--group", "Z9"],
        &["orient", "odd-collapse", "--group", "C2"],
        &["burnside", "mul", "--group", "C2", "--a", "1,x", "--b", "1,0"],
        &["burnside", "res", "--group", "C2", "--to", "7", "--element", "1,0"],
        &["bredon", "compute", "--group", "C1", "--complex", &data("bad_square.json"), "--coefficients", "constZ"],
        &["bredon", "compute", "--group", "C2", "--complex", "point", "--coefficients", "nope"],
        &["group", "frobnicate"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
    }
    let out = run(&["group", "info", "--group", "C2"]);
    assert!(String::from_utf8(out.stderr).unwrap().is_empty());
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["burnside", "units", "--group", "D4", "--list", "--json"][..],
        &["mackey", "show", "--group", "S3", "--coefficients", "burnside"][..],
        &["orient", "pi0", "--group", "C2xC2", "--structure", "S3", "--json"][..],
    ] {
        assert_eq!(stdout(args), stdout(args));
    }
}
