use std::io::Write;
use std::process::{Command, Output};

fn pfusion(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pfusion")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn spec_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

const S3: &str = r#"{"name":"S3","degree":3,"generators":["(0 1 2)","(0 1)"],"primes":[2,3]}"#;

#[test]
fn check_s3_text_and_json() {
    let f = spec_file(S3);
    let path = f.path().to_str().unwrap();
    let out = pfusion(&["check", path, "--prime", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("oracle p-nilpotent = true, agree"));

    let out = pfusion(&["check", path, "--prime", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["oracle"]["p_nilpotent"], true);
    assert_eq!(v["verdicts"].as_array().unwrap().len(), 12);
}

#[test]
fn check_sl23_quillen_is_hypothesis_only() {
    let out = pfusion(&["check", "builtin:SL(2,3)", "--prime", "2", "--criteria", "quillen", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdicts"][0]["applicability"], "hypothesis-only");
    assert_eq!(v["verdicts"][0]["verdict"], "true");
    assert_eq!(v["oracle"]["p_nilpotent"], false);
}

#[test]
fn cross_validate_builtin_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("report.json");
    let out = pfusion(&["cross-validate", "--builtin", "--out", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("0 disagree"));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(report["disagreements"].as_array().unwrap().len(), 0);
    assert!(report["pairs"].as_array().unwrap().len() >= 25);
}

#[test]
fn cross_validate_files() {
    let f = spec_file(S3);
    let out = pfusion(&["cross-validate", f.path().to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["totals"]["pairs"], 2);
}

#[test]
fn explain_prints_witness_and_condition() {
    let out = pfusion(&["explain", "builtin:A4", "--prime", "2", "--criterion", "element-fusion"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("witness: elements"));
    assert!(text.contains("condition:"));
}

#[test]
fn corpus_list() {
    let out = pfusion(&["corpus", "--list"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("SL(2,3)") && text.contains("S4"));
    let out = pfusion(&["corpus", "--show", "S4"]);
    let spec: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(spec["degree"], 4);
}

#[test]
fn input_errors_exit_with_two() {
    let bad = spec_file(r#"{"name":"x","degree":3,"generators":["(0 3)"],"primes":[2]}"#);
    let out = pfusion(&["check", bad.path().to_str().unwrap(), "--prime", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("out of range"));

    let not_prime = spec_file(r#"{"name":"x","degree":3,"generators":["(0 1)"],"primes":[4]}"#);
    assert_eq!(pfusion(&["check", not_prime.path().to_str().unwrap(), "--prime", "2"]).status.code(), Some(2));
    assert_eq!(pfusion(&["check", "builtin:S3", "--prime", "4"]).status.code(), Some(2));
    assert_eq!(pfusion(&["check", "builtin:S3", "--prime", "2", "--criteria", "bogus"]).status.code(), Some(2));
    assert_eq!(pfusion(&["check", "/nonexistent.json", "--prime", "2"]).status.code(), Some(2));
    assert_eq!(pfusion(&["cross-validate"]).status.code(), Some(2));
    assert_eq!(pfusion(&["check"]).status.code(), Some(2));
}

#[test]
fn sylow_cap_is_not_fatal() {
    let out = pfusion(&["check", "builtin:S4", "--prime", "2", "--max-sylow", "4", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdicts"][0]["verdict"], "not-computed");
}
