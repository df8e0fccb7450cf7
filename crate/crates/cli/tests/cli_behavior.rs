//! Black-box checks of the binary: exit codes, artifact layout, and
//! byte-level reproducibility under a fixed seed.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_phaselab"))
}

struct Workdir(PathBuf);

impl Workdir {
    fn new(name: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("phaselab-{}-{name}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        Workdir(dir)
    }

    fn file(&self, name: &str, content: &str) -> PathBuf {
        let p = self.0.join(name);
        fs::write(&p, content).unwrap();
        p
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.join(name)
    }
}

impl Drop for Workdir {
    fn drop(&mut self) {
        let _ = fs::remove_dir_all(&self.0);
    }
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("process exited by signal")
}

#[test]
fn classify_writes_reports_and_exits_zero() {
    let w = Workdir::new("classify-ok");
    let cusp = w.file("cusp.txt", "x2^3 + x1^9\n");
    let out_dir = w.path("out");
    let out = bin()
        .args(["classify", cusp.to_str().unwrap(), "--out"])
        .arg(&out_dir)
        .output()
        .unwrap();
    assert_eq!(code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));

    let report: serde_json::Value =
        serde_json::from_slice(&fs::read(out_dir.join("cusp.report.json")).unwrap()).unwrap();
    assert_eq!(report["schema_version"], 1);
    assert_eq!(report["p_c_prime"]["num"], "6");
    assert_eq!(report["p_c_prime"]["den"], "1");
    assert_eq!(report["theta_c"]["num"], "1");
    assert_eq!(report["theta_c"]["den"], "3");

    let summary = fs::read_to_string(out_dir.join("classify_summary.csv")).unwrap();
    let mut lines = summary.lines();
    assert!(lines.next().unwrap().starts_with("file,input,newton_distance,r_height"));
    assert!(lines.next().unwrap().contains(",6,1/3,"));
}

#[test]
fn empty_input_exits_two() {
    let w = Workdir::new("classify-empty");
    let empty = w.file("empty.txt", "");
    let out = bin()
        .args(["classify", empty.to_str().unwrap(), "--out"])
        .arg(w.path("out"))
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("empty input"));
}

#[test]
fn parse_errors_are_collected_not_fail_fast() {
    let w = Workdir::new("classify-mixed");
    let bad = w.file("bad.txt", "x2^3 +* x1");
    let good = w.file("good.txt", "x2^4 + x1^10");
    let out_dir = w.path("out");
    let out = bin()
        .args([
            "classify",
            bad.to_str().unwrap(),
            good.to_str().unwrap(),
            "--out",
        ])
        .arg(&out_dir)
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse error"));
    // The good input still gets its report.
    assert!(out_dir.join("good.report.json").exists());
    let index: serde_json::Value =
        serde_json::from_slice(&fs::read(out_dir.join("classify_index.json")).unwrap()).unwrap();
    assert_eq!(index["all_ok"], false);
    assert_eq!(index["inputs"].as_array().unwrap().len(), 2);
}

#[test]
fn fixed_seed_replays_identical_report_bytes() {
    let w = Workdir::new("verify-seeded");
    for d in ["a", "b"] {
        let out = bin()
            .args(["verify", "--suite", "classify", "--seed", "7", "--out"])
            .arg(w.path(d))
            .output()
            .unwrap();
        assert_eq!(code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    }
    let a = fs::read(w.path("a").join("exact_checks.json")).unwrap();
    let b = fs::read(w.path("b").join("exact_checks.json")).unwrap();
    assert_eq!(a, b, "same seed must reproduce the report byte for byte");
    // Only the metadata file may differ between the runs.
    assert!(w.path("a").join("run_meta.json").exists());
}

#[test]
fn inverted_lambda_range_exits_two() {
    let w = Workdir::new("verify-badrange");
    let out = bin()
        .args([
            "verify",
            "--suite",
            "decay",
            "--lambda-min-exp",
            "12",
            "--lambda-max-exp",
            "8",
            "--out",
        ])
        .arg(w.path("out"))
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
}

#[test]
fn unknown_suite_exits_two() {
    let w = Workdir::new("verify-badsuite");
    let out = bin()
        .args(["verify", "--suite", "nonsense", "--out"])
        .arg(w.path("out"))
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
}
