use std::path::Path;
use std::process::{Command, Output};

fn balcert(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_balcert"))
        .args(args)
        .current_dir(cwd)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn edit_json(path: &Path, f: impl FnOnce(&mut serde_json::Value)) {
    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    f(&mut v);
    std::fs::write(path, serde_json::to_string_pretty(&v).unwrap()).unwrap();
}

#[test]
fn catalog_listing() {
    let dir = tempfile::tempdir().unwrap();
    let o = balcert(&["catalog", "--max-rank", "2", "--format", "json"], dir.path());
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["count"], 4);

    let o = balcert(&["catalog", "--max-rank", "8"], dir.path());
    let text = stdout(&o);
    for name in ["g2(2)", "f4(-20)", "f4(4)", "e6(2)", "e6(-14)", "e8(8)", "e8(-24)"] {
        assert!(text.lines().any(|l| l.starts_with(name)), "{name} missing");
    }

    let o = balcert(&["catalog", "--max-rank", "1"], dir.path());
    assert!(o.status.success());
    assert!(stdout(&o).contains("0 pairs"));
}

#[test]
fn analyze_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let o = balcert(&["analyze", "g2(2)"], dir.path());
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let cert = dir.path().join("g2_2.json");
    assert!(cert.exists());
    let o = balcert(&["verify", "g2_2.json"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("ok g2(2)"));
}

#[test]
fn analyze_special_mode() {
    let dir = tempfile::tempdir().unwrap();
    let o = balcert(&["analyze", "so(1,4)", "--out", "x.json"], dir.path());
    assert!(o.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("x.json")).unwrap()).unwrap();
    assert_eq!(v["ordering"]["mode"], "so_1_2n_special");
    assert_eq!(v["pluriclosed_certificate"]["branch"], "so_1_2n");
}

#[test]
fn analyze_rejects_non_catalog_pair() {
    let dir = tempfile::tempdir().unwrap();
    let o = balcert(&["analyze", "su(2,2)"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not in catalog (p+q must be odd)"));
}

fn tampered_reason(edit: impl FnOnce(&mut serde_json::Value)) -> (Option<i32>, String) {
    let dir = tempfile::tempdir().unwrap();
    assert!(balcert(&["analyze", "su(3,2)", "--out", "c.json"], dir.path()).status.success());
    let path = dir.path().join("c.json");
    edit_json(&path, edit);
    let o = balcert(&["verify", "c.json", "--format", "json"], dir.path());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    (o.status.code(), v["reason"].as_str().unwrap_or("").to_string())
}

#[test]
fn verify_reason_codes() {
    let negate = |v: &mut serde_json::Value| {
        let g = v["metric"][0]["g"].as_str().unwrap().to_string();
        v["metric"][0]["g"] = format!("-{g}").into();
    };
    assert_eq!(tampered_reason(negate), (Some(1), "positivity violated".into()));

    let bump = |v: &mut serde_json::Value| {
        let g = v["metric"][0]["g"].as_str().unwrap();
        let (n, d) = g.split_once('/').unwrap();
        let n: i64 = n.parse().unwrap();
        let d: i64 = d.parse().unwrap();
        v["metric"][0]["g"] = format!("{}/{d}", n + d).into();
    };
    assert_eq!(tampered_reason(bump), (Some(1), "balanced identity failed".into()));

    let version = |v: &mut serde_json::Value| v["schema_version"] = 7.into();
    assert_eq!(tampered_reason(version), (Some(1), "schema mismatch".into()));

    let flip = |v: &mut serde_json::Value| {
        let s = v["pluriclosed_certificate"]["sign_constraints"][0]["sign"].as_i64().unwrap();
        v["pluriclosed_certificate"]["sign_constraints"][0]["sign"] = (-s).into();
    };
    assert_eq!(tampered_reason(flip), (Some(1), "sign pattern violated".into()));
}

#[test]
fn verify_parse_error_and_missing_file() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("junk.json"), "not json").unwrap();
    let o = balcert(&["verify", "junk.json"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("parse error"));
    let o = balcert(&["verify", "absent.json"], dir.path());
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sweep_writes_certificates_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let o = balcert(&["sweep", "--max-rank", "4", "--out", "out", "--format", "json"], dir.path());
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let out = dir.path().join("out");
    let rows: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(!rows.is_empty());
    for row in &rows {
        assert_eq!(row["balanced"], true);
        assert_eq!(row["pluriclosed"], true);
        assert_eq!(row["chern"], true);
        let file = row["file"].as_str().unwrap();
        let v = balcert(&["verify", file], dir.path());
        assert!(v.status.success(), "{file}");
    }
    assert!(out.join("summary.jsonl").exists());
    assert!(out.join("su_2_1.json").exists());
    let leftovers: Vec<_> = std::fs::read_dir(&out)
        .unwrap()
        .filter_map(|e| e.ok())
        .filter(|e| e.file_name().to_string_lossy().ends_with(".tmp"))
        .collect();
    assert!(leftovers.is_empty());
}

#[test]
fn sweep_sequential_empty_catalog() {
    let dir = tempfile::tempdir().unwrap();
    let o = balcert(&["sweep", "--max-rank", "1", "--out", "out", "--sequential"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 pairs, 0 failed"));
}

#[test]
fn bad_flags_are_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(balcert(&["catalog", "--max-rank", "x"], dir.path()).status.code(), Some(2));
    assert_eq!(balcert(&["sweep", "--format", "yaml"], dir.path()).status.code(), Some(2));
}
