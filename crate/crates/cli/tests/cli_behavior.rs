//! End-to-end behavior of the binary: exit codes, output formats, and
//! cache-file handling.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cyclofc"))
}

#[test]
fn invalid_primes_exit_2() {
    let out = bin().args(["pair", "--p", "4", "--q", "5"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("p must be an odd prime"), "stderr: {err}");

    let out = bin().args(["pair", "--p", "7", "--q", "7"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin()
        .args(["pair", "--p", "5", "--q", "3", "--theorems", "bogus"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn failed_verdicts_still_exit_0() {
    // (5,7) fails the exponent gap; verdict content must not leak into
    // the exit code
    let dir = tempfile::tempdir().unwrap();
    let out = bin()
        .args(["pair", "--p", "5", "--q", "7", "--theorems", "main"])
        .arg("--cache-path")
        .arg(dir.path().join("c.jsonl"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("inconclusive"), "stdout: {text}");
}

#[test]
fn json_output_carries_schema_version() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin()
        .args(["pair", "--p", "5", "--q", "3", "--json"])
        .arg("--cache-path")
        .arg(dir.path().join("c.jsonl"))
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = 0;
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["version"], 1);
        assert_eq!(v["p"], 5);
        assert_eq!(v["q"], 3);
        assert!(v["conditions"].as_array().unwrap().len() > 1);
        if v["theorem"] == "main1" {
            assert_eq!(v["conclusion"], "no_solutions_below_bound");
            assert!(v["bounds"]["lowb"].is_string());
        }
        lines += 1;
    }
    assert_eq!(lines, 5, "one record per theorem");
}

#[test]
fn csv_has_stable_columns() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin()
        .args(["pair", "--p", "5", "--q", "3", "--theorems", "main", "--csv"])
        .arg("--cache-path")
        .arg(dir.path().join("c.jsonl"))
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let header = text.lines().next().unwrap();
    assert_eq!(header, "p,q,theorem,condition,verdict,witness");
    assert!(text.lines().count() > 2);
}

#[test]
fn search_reports_emptiness_and_json() {
    let out = bin()
        .args(["search", "--p", "3", "--q", "5", "--height", "30"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("no solutions up to height 30"), "stdout: {text}");

    let out = bin()
        .args(["search", "--p", "3", "--q", "5", "--height", "30", "--workers", "3", "--json"])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["height"], 30);
    assert_eq!(v["solutions"].as_array().unwrap().len(), 0);
}

#[test]
fn cache_roundtrip_and_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.jsonl");

    let out = bin()
        .args(["cache", "warm", "--cutoff", "40"])
        .arg("--cache-path")
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let first = std::fs::read_to_string(&path).unwrap();
    assert!(first.contains("\"m\":37"));

    // warming again appends nothing
    let out = bin()
        .args(["cache", "warm", "--cutoff", "40"])
        .arg("--cache-path")
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), first);

    let out = bin().args(["cache", "list"]).arg("--cache-path").arg(&path).output().unwrap();
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("h_23^- = 3"), "stdout: {text}");
    assert!(text.contains("h_37^- = 37"));

    // a disagreeing duplicate is an integrity error, reported with its line
    let mut broken = first.clone();
    broken.push_str("{\"version\":1,\"m\":37,\"h_minus\":\"36\",\"computed_by\":\"test\"}\n");
    std::fs::write(&path, &broken).unwrap();
    let out = bin().args(["cache", "list"]).arg("--cache-path").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("duplicate modulus 37 disagrees"), "stderr: {err}");

    // syntactic corruption names the offending line
    std::fs::write(&path, "not json\n").unwrap();
    let out = bin().args(["cache", "list"]).arg("--cache-path").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 1"), "stderr: {err}");
}

#[test]
fn cache_env_variable_is_honored() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("from_env.jsonl");
    let out = bin()
        .args(["cache", "warm", "--cutoff", "20"])
        .env("CYCLOFC_CACHE", &path)
        .current_dir(dir.path())
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(path.exists());
}

#[test]
fn scan_writes_csv_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("out.jsonl");
    let csv_path = dir.path().join("out.csv");
    let out = bin()
        .args(["scan", "--p-min", "3", "--p-max", "13", "--q-min", "3", "--q-max", "13",
               "--theorems", "main1"])
        .arg("--output")
        .arg(&out_path)
        .arg("--csv")
        .arg(&csv_path)
        .arg("--cache-path")
        .arg(dir.path().join("c.jsonl"))
        .output()
        .unwrap();
    assert!(out.status.success());
    let summary = String::from_utf8_lossy(&out.stdout);
    assert!(summary.contains("scanned 20 pairs"), "stdout: {summary}");
    let csv = std::fs::read_to_string(&csv_path).unwrap();
    assert!(csv.starts_with("p,q,theorem,condition,verdict,witness\n"));
    assert_eq!(std::fs::read_to_string(&out_path).unwrap().lines().count(), 20);
}
