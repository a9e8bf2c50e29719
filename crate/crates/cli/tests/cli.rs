use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_ambitoric"));
    c.env_remove("AMBITORIC_THREADS");
    c
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin().args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn check_example() {
    let o = run(&["check", &data("example.json")]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    assert_eq!(r["command"], "check");
    assert_eq!(r["seed"], 0);
    assert_eq!(r["conditions"]["extremal"], true);
    assert_eq!(r["conditions"]["bach_flat"], true);
    assert_eq!(r["boundary_data"]["c_alpha"], serde_json::json!(["1/3", "-1/6"]));
    assert_eq!(r["boundary_data"]["c_beta"], serde_json::json!(["-1/2", "1/4"]));
}

#[test]
fn overlapping_intervals_fail_validation() {
    let text = std::fs::read_to_string(data("example.json")).unwrap().replace(r#""beta": ["0", "1"]"#, r#""beta": ["0", "5/2"]"#);
    let o = run_stdin(&["check", "-"], &text);
    assert_eq!(code(&o), 2);
    let r = json(&o);
    assert_eq!(r["valid"], false);
    assert!(!r["violations"].as_array().unwrap().is_empty());
}

#[test]
fn malformed_input() {
    let text = std::fs::read_to_string(data("example.json")).unwrap();
    assert_eq!(code(&run_stdin(&["check", "-"], &text[..text.len() / 2])), 1);
    assert_eq!(code(&run_stdin(&["check", "-"], r#"{"type": "hyperbolic", "A": ["x"]}"#)), 1);
    assert_eq!(code(&run(&["check", "/nonexistent/data.json"])), 1);
}

#[test]
fn usage_errors() {
    let f = data("example.json");
    assert_eq!(code(&run(&["verify", &f, "--points", "0"])), 64);
    assert_eq!(code(&run(&["frobnicate"])), 64);
    assert_eq!(code(&run(&["--format", "csv", "check", &f])), 64);
    assert_eq!(code(&run(&["stability", &f, "--crease", "z0=1"])), 64);
    assert_eq!(code(&bin().args(["check", &f]).env("AMBITORIC_THREADS", "zero").output().unwrap()), 64);
    let help = run(&["--help"]);
    assert_eq!(code(&help), 0);
    assert!(String::from_utf8_lossy(&help.stdout).contains("verify"));
}

#[test]
fn verify_example_passes() {
    let o = bin().args(["verify", &data("example.json"), "--points", "200"]).env("AMBITORIC_THREADS", "2").output().unwrap();
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let r = json(&o);
    assert_eq!(r["passed"], true);
    assert_eq!(r["closedness_plus"]["samples"], 200);
    assert!(r["closedness_minus"]["max_abs"].as_f64().unwrap() < 1e-7);
    assert!(r["grid"]["max_curvature_err"].as_f64().unwrap() < 1e-3);
    assert_eq!(r["boundary"].as_array().unwrap().len(), 4);
}

#[test]
fn injected_error_is_caught() {
    let o = run(&["verify", &data("example.json"), "--inject-error", "--points", "20"]);
    assert_eq!(code(&o), 3);
    let r = json(&o);
    assert_eq!(r["passed"], false);
    assert!(!r["failures"].as_array().unwrap().is_empty());
    assert!(!o.stderr.is_empty());
}

#[test]
fn verify_csv_grid() {
    let o = run(&["--format", "csv", "verify", &data("example.json"), "--grid", "3", "--points", "10"]);
    assert_eq!(code(&o), 0);
    let mut rd = csv::Reader::from_reader(&o.stdout[..]);
    assert_eq!(rd.headers().unwrap().iter().take(3).collect::<Vec<_>>(), ["x", "y", "side"]);
    assert_eq!(rd.records().count(), 18);
}

#[test]
fn same_seed_same_bytes() {
    let f = data("example.json");
    for args in [vec!["--seed", "5", "verify", &f, "--points", "30"], vec!["--seed", "9", "catalog", "random", "--type", "elliptic"]] {
        let (a, b) = (run(&args), run(&args));
        assert_eq!(a.stdout, b.stdout);
        assert!(!a.stdout.is_empty());
    }
    let r = json(&run(&["--seed", "5", "verify", &f, "--points", "30"]));
    assert_eq!(r["seed"], 5);
}

#[test]
fn stability_verdicts() {
    let r = json(&run(&["stability", &data("example.json"), "--crease", "x0=5/2"]));
    assert_eq!(r["verdict"], "Polystable");
    assert!(r["witness"].is_null());
    assert!(r["crease"]["futaki"]["value"].as_f64().unwrap() > 0.0);

    let o = run(&["stability", &data("unstable.json")]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    assert_eq!(r["verdict"], "Unstable");
    assert!(r["witness"]["futaki"]["value"].as_f64().unwrap() <= 0.0);
}

#[test]
fn polytope_report() {
    let r = json(&run(&["polytope", &data("example.json")]));
    assert_eq!(r["polytope"]["facets"].as_array().unwrap().len(), 4);
    assert_eq!(r["scalar_affine"]["a"], serde_json::json!(["-60", "60"]));
    let o = run(&["--format", "csv", "polytope", &data("example.json")]);
    assert_eq!(String::from_utf8_lossy(&o.stdout).lines().count(), 9);
}

#[test]
fn catalog_wpp() {
    let r = json(&run(&["catalog", "wpp", "--beta", "1", "2", "3", "4"]));
    assert_eq!(r["weights"], serde_json::json!([3, 8, 15]));
    assert_eq!(r["s_min"], "-12");
    assert_eq!(r["s_max"], "60");
    assert_eq!(r["s_avg"], "26");
    assert_eq!(code(&run(&["catalog", "wpp", "--beta", "4", "3", "2", "1"])), 2);
}

#[test]
fn catalog_output_pipes_back() {
    let o = run(&["catalog", "bachflat", "--beta", "1", "2", "3", "4", "--alpha", "21/10", "29/10", "--bisect"]);
    let r = json(&o);
    assert_eq!(r["provenance"]["family"], "bach_flat");
    let back = run_stdin(&["check", "-"], &String::from_utf8(o.stdout.clone()).unwrap());
    assert_eq!(code(&back), code(&o));
    assert_eq!(json(&back)["conditions"]["bach_flat"], true);

    let o = run(&["--seed", "3", "catalog", "random", "--type", "parabolic"]);
    assert_eq!(code(&o), 0);
    let back = run_stdin(&["check", "-"], &String::from_utf8(o.stdout).unwrap());
    assert_eq!(code(&back), 0);
    assert_eq!(json(&back)["conditions"]["extremal"], true);
}
