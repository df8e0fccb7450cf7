//! The `classify` subcommand: parse each input file as a bivariate phase
//! polynomial, run the full pipeline, and write one report per input plus a
//! batch summary CSV.

use std::collections::HashSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use phaselab_core::{classify, parse_poly, RestrictionReport};
use rayon::prelude::*;
use serde_json::json;

use crate::report::{
    classify_summary_csv, report_invariants_hold, restriction_json, write_atomic, write_json,
    SCHEMA_VERSION,
};
use crate::{EXIT_FAIL, EXIT_INPUT, EXIT_PASS};

fn classify_file(path: &Path) -> Result<RestrictionReport, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("read failed: {e}"))?;
    if text.trim().is_empty() {
        return Err("empty input".to_string());
    }
    let poly = parse_poly(text.trim()).map_err(|e| e.to_string())?;
    classify(&poly).map_err(|e| e.to_string())
}

/// Report file names come from input stems; a repeated stem gets a numeric
/// suffix so batch runs over sibling directories never clobber each other.
fn report_name(path: &Path, taken: &mut HashSet<String>) -> String {
    let stem = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("input")
        .to_string();
    let mut name = format!("{stem}.report.json");
    let mut k = 1;
    while !taken.insert(name.clone()) {
        name = format!("{stem}.{k}.report.json");
        k += 1;
    }
    name
}

pub fn run_classify(files: &[PathBuf], out: &Path) -> ExitCode {
    if let Err(e) = fs::create_dir_all(out) {
        eprintln!("cannot create output directory {}: {e}", out.display());
        return ExitCode::from(EXIT_INPUT);
    }

    let results: Vec<(String, Result<RestrictionReport, String>)> = files
        .par_iter()
        .map(|p| (p.display().to_string(), classify_file(p)))
        .collect();

    let mut taken = HashSet::new();
    let mut summary_rows = Vec::new();
    let mut entries = Vec::new();
    let mut any_error = false;
    let mut any_lemma_failed = false;
    for (path, result) in files.iter().zip(&results) {
        let (file, outcome) = result;
        match outcome {
            Ok(rep) => {
                let name = report_name(path, &mut taken);
                let ok = report_invariants_hold(rep);
                any_lemma_failed |= !ok;
                if let Err(e) = write_json(out, &name, &restriction_json(file, rep)) {
                    eprintln!("{file}: write failed: {e}");
                    any_error = true;
                    continue;
                }
                println!(
                    "{file}: d = {}, p'_c = {} -> {name}",
                    rep.d,
                    rep.p_c_prime
                        .as_ref()
                        .map(|r| r.to_string())
                        .unwrap_or_else(|| "n/a".into()),
                );
                entries.push(json!({
                    "file": file,
                    "report": name,
                    "invariants_hold": ok,
                }));
                summary_rows.push((file.clone(), rep.clone()));
            }
            Err(msg) => {
                eprintln!("{file}: {msg}");
                any_error = true;
                entries.push(json!({"file": file, "error": msg}));
            }
        }
    }

    let mut wrote_summary = true;
    match classify_summary_csv(&summary_rows) {
        Ok(bytes) => {
            if let Err(e) = write_atomic(&out.join("classify_summary.csv"), &bytes) {
                eprintln!("classify_summary.csv: write failed: {e}");
                wrote_summary = false;
                any_error = true;
            }
        }
        Err(e) => {
            eprintln!("classify_summary.csv: {e}");
            wrote_summary = false;
            any_error = true;
        }
    }
    let index = json!({
        "schema_version": SCHEMA_VERSION,
        "kind": "classify_index",
        "inputs": entries,
        "summary_csv": if wrote_summary { Some("classify_summary.csv") } else { None },
        "all_ok": !any_error && !any_lemma_failed,
    });
    if let Err(e) = write_json(out, "classify_index.json", &index) {
        eprintln!("classify_index.json: write failed: {e}");
        any_error = true;
    }

    if any_error {
        ExitCode::from(EXIT_INPUT)
    } else if any_lemma_failed {
        ExitCode::from(EXIT_FAIL)
    } else {
        ExitCode::from(EXIT_PASS)
    }
}
