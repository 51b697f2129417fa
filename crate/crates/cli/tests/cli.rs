use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_twoqubit"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn input(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("twoqubit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const BELL: &str = r#"{"matrix": [
    [[0.5,0],[0,0],[0,0],[0.5,0]],
    [[0,0],[0,0],[0,0],[0,0]],
    [[0,0],[0,0],[0,0],[0,0]],
    [[0.5,0],[0,0],[0,0],[0.5,0]]]}"#;

const BELL_BLOCH: &str = r#"{"bloch": [[1,0,0,0],[0,1,0,0],[0,0,-1,0],[0,0,0,1]]}"#;

const MIXED: &str = r#"{"matrix": [
    [[0.25,0],[0,0],[0,0],[0,0]],
    [[0,0],[0.25,0],[0,0],[0,0]],
    [[0,0],[0,0],[0.25,0],[0,0]],
    [[0,0],[0,0],[0,0],[0.25,0]]]}"#;

#[test]
fn bell_state_is_entangled() {
    let p = input("bell.json", BELL);
    let out = run(&["analyze", p.to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["separable"], false);
    assert!((v["concurrence"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert!((v["eof"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    let pt: Vec<f64> = serde_json::from_value(v["pt_eigenvalues"].clone()).unwrap();
    assert!((pt[3] + 0.5).abs() < 1e-12);
}

#[test]
fn maximally_mixed_is_separable() {
    let p = input("mixed.json", MIXED);
    let v = json(&run(&["analyze", p.to_str().unwrap(), "--json"]));
    assert_eq!(v["separable"], true);
    assert_eq!(v["branch"], "all-quarter");
    for e in v["eigenvalues"].as_array().unwrap() {
        assert!((e.as_f64().unwrap() - 0.25).abs() < 1e-15);
    }
}

#[test]
fn bloch_and_matrix_inputs_agree_byte_for_byte() {
    let a = input("bell_m.json", BELL);
    let b = input("bell_b.json", BELL_BLOCH);
    for extra in [&["--json"][..], &[][..]] {
        let mut x = vec!["analyze", a.to_str().unwrap()];
        x.extend_from_slice(extra);
        let mut y = vec!["analyze", b.to_str().unwrap()];
        y.extend_from_slice(extra);
        assert_eq!(run(&x).stdout, run(&y).stdout);
    }
}

#[test]
fn text_output_has_every_field() {
    let p = input("bell_t.json", BELL);
    let out = run(&["analyze", p.to_str().unwrap()]);
    let text = String::from_utf8(out.stdout).unwrap();
    for key in [
        "eigenvalues:",
        "branch:",
        "separable:",
        "concurrence:",
        "eof upper bound:",
    ] {
        assert!(text.contains(key), "{key} missing from\n{text}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["bogus"]).status.code(), Some(1));
    let missing = run(&["fuzz", "--samples", "1", "--seed", "1"]);
    assert_eq!(missing.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&missing.stderr).contains("--family"));

    let garbage = input("garbage.json", "{not json");
    assert_eq!(
        run(&["analyze", garbage.to_str().unwrap()]).status.code(),
        Some(1)
    );
    let two_keys = input("two.json", r#"{"matrix": null, "bloch": null}"#);
    assert_eq!(
        run(&["analyze", two_keys.to_str().unwrap()]).status.code(),
        Some(1)
    );

    let not_hermitian = input(
        "nh.json",
        r#"{"matrix": [
            [[1,0],[0,0],[0,0],[0,0]],
            [[0,0],[0,0],[0,0],[0,0]],
            [[0,0],[0,0],[0,0],[0,0]],
            [[0,0],[0,0],[0,0],[0,0.5]]]}"#,
    );
    let out = run(&["analyze", not_hermitian.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));

    let not_positive = input(
        "np.json",
        r#"{"bloch": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]}"#,
    );
    assert_eq!(
        run(&["analyze", not_positive.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );

    assert_eq!(
        run(&["chain", "--q", "0.7", "--epsilon", "0.1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["chain", "--q", "0.5", "--sweep", "0.1:x"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["chain", "--q", "0.5", "--sweep", "0.5:0.1:0.1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn chain_transfer_distances() {
    let v = json(&run(&["chain", "--q", "0.5", "--epsilon", "0.1"]));
    assert_eq!(v["n_max"], 10);
    let v = json(&run(&["chain", "--q", "0.5", "--epsilon", "0.01"]));
    assert_eq!(v["n_max"], 109);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 112);
    assert_eq!(rows[109]["entangled"], true);
    assert_eq!(rows[110]["entangled"], false);
}

#[test]
fn chain_with_fixed_length_reports_critical_noise() {
    let v = json(&run(&[
        "chain",
        "--q",
        "0.5",
        "--epsilon",
        "0.1",
        "--n",
        "10",
    ]));
    let eps = v["epsilon_critical"].as_f64().unwrap();
    assert!((eps - 0.1040415402).abs() < 1e-9);
    assert_eq!(v["rows"].as_array().unwrap().len(), 11);
}

#[test]
fn sweep_crosses_two_thirds() {
    let v = json(&run(&["chain", "--q", "0.5", "--sweep", "0.6:0.7:0.05"]));
    let n: Vec<_> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["n_max"].clone())
        .collect();
    assert_eq!(n, [Value::from(1), Value::from(1), Value::from(0)]);

    let out = run(&["chain", "--q", "0.5", "--sweep", "0:0.1:0.1", "--csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        text.lines().collect::<Vec<_>>(),
        ["epsilon,n_max", "0,unbounded", "0.1,10"]
    );
}

#[test]
fn fuzz_is_deterministic() {
    let args = [
        "fuzz",
        "--samples",
        "1",
        "--seed",
        "42",
        "--family",
        "ginibre",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["pass"], true);
}

#[test]
fn fuzz_pure_family() {
    let out = run(&[
        "fuzz",
        "--samples",
        "10000",
        "--seed",
        "5",
        "--family",
        "pure",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v = json(&out);
    assert_eq!(v["failures"], 0);
    for key in [
        "max_eigenvalue_error",
        "max_pt_eigenvalue_error",
        "max_concurrence_error",
    ] {
        assert!(v[key].as_f64().unwrap() <= 1e-10, "{key} = {}", v[key]);
    }
}
