use cudiv::euler::{HallCertificate, SetFamily};
use cudiv::model::zoo;
use std::io::Write;
use std::process::{Command, Output};

fn cudiv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cudiv")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn temp_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn matrix_div_value() {
    let o = cudiv(&["matrix-div", "--m", "3", "--k", "7"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "Div_3(7) = 4");
    let o = cudiv(&["--format", "records", "matrix-div", "--m", "5", "--k", "4"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["value"], "inf");
}

#[test]
fn villadsen_simple_interval() {
    let o = cudiv(&["villadsen", "--variant", "simple1", "--N", "2", "--n", "3"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("interval (2, 10]"), "{}", stdout(&o));
    let o = cudiv(&["--format", "records", "villadsen", "--variant", "simple1", "--N", "2", "--n", "3"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["interval"]["lower"], 2);
    assert_eq!(v["interval"]["upper"], 10);
    assert_eq!(v["construction"]["d_n"], 14);
}

#[test]
fn villadsen_other_variants() {
    let o = cudiv(&["villadsen", "--variant", "simple2", "--n", "1", "--k", "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("∞ by rank"));
    let o = cudiv(&["villadsen", "--variant", "inf_tensor", "--N", "2", "--n", "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("div_2 > 2: true"));
}

#[test]
fn hall_pigeonhole_fails_with_violator() {
    let f = temp_file(r#"{"ground": 1, "members": [{"set": [1], "mult": 2}]}"#);
    let o = cudiv(&["--format", "records", "hall", "--family", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let cert: HallCertificate = serde_json::from_str(stdout(&o).trim()).unwrap();
    let family = SetFamily::from_json(r#"{"ground": 1, "members": [{"set": [1], "mult": 2}]}"#).unwrap();
    assert!(!cert.feasible);
    assert!(cert.recheck(&family));
}

#[test]
fn hall_and_euler_feasible() {
    let text = r#"{"ground": 2, "members": [{"set": [1, 2], "mult": 2}]}"#;
    let f = temp_file(text);
    let o = cudiv(&["--format", "records", "hall", "--family", f.path().to_str().unwrap()]);
    assert!(o.status.success());
    let cert: HallCertificate = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert!(cert.recheck(&SetFamily::from_json(text).unwrap()));
    let o = cudiv(&["euler", "--family", f.path().to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("e = 2·z1z2"), "{}", stdout(&o));
    let o = cudiv(&["euler", "--family", f.path().to_str().unwrap(), "--max-terms", "0"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("by matching"));
}

#[test]
fn analyze_model_file() {
    let f = temp_file(&zoo::extnat(7, 7).to_document().to_json());
    let o = cudiv(&["--format", "records", "analyze", "--model", f.path().to_str().unwrap(), "--m", "3"]);
    assert!(o.status.success());
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[0]["kind"], "Div");
    assert_eq!(lines[0]["value"], 4);
    let o = cudiv(&["analyze", "--model", f.path().to_str().unwrap(), "--m", "3", "--kind", "cov"]);
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn exit_codes() {
    assert_eq!(cudiv(&["no-such-command"]).status.code(), Some(2));
    let bad = temp_file("{ not json");
    assert_eq!(cudiv(&["hall", "--family", bad.path().to_str().unwrap()]).status.code(), Some(3));
    assert_eq!(cudiv(&["hall", "--family", "/nonexistent/family.json"]).status.code(), Some(3));
    let nonassoc = temp_file(
        r#"{"name": "bad", "size": 2, "add": [[0, 1], [1, 0]], "leq": [[0, 1]], "unit": 1, "top": null}"#,
    );
    let o = cudiv(&["analyze", "--model", nonassoc.path().to_str().unwrap(), "--m", "2"]);
    assert_eq!(o.status.code(), Some(3), "{}", String::from_utf8_lossy(&o.stderr));
    let o = cudiv(&["villadsen", "--variant", "simple2", "--n", "9"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn suite_records_are_deterministic() {
    let args = ["--format", "records", "verify-suite", "--filter", "euler-hall", "--seed", "11"];
    let a = cudiv(&args);
    let b = cudiv(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_str(stdout(&a).trim()).unwrap();
    assert_eq!(v["seed"], 11);
    assert_eq!(v["pass"], true);
}
