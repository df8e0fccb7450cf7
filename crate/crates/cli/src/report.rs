//! Report serialization: JSON trees for the exact objects, CSV tables for
//! the per-point data, and atomic file writes. Reports carry no timestamps,
//! so a rerun with the same config and seed is byte-identical; the wall
//! clock goes to the separate run metadata file.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use phaselab_core::rational::{decimal_string, to_f64};
use phaselab_core::{exponent_lemmas, Branch, CaseAb, Rat, RestrictionReport};
use phaselab_verify::{BoundCheck, CounterexampleReport, DecayCase, ExactCheck, Verdict};
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u64 = 1;

pub fn rat_json(r: &Rat) -> Value {
    json!({
        "num": r.numer().to_string(),
        "den": r.denom().to_string(),
        "decimal": decimal_string(r, 12),
    })
}

fn opt_rat(r: &Option<Rat>) -> Value {
    match r {
        Some(r) => rat_json(r),
        None => Value::Null,
    }
}

fn pair_rat(p: &Option<(Rat, Rat)>) -> Value {
    match p {
        Some((a, b)) => json!([rat_json(a), rat_json(b)]),
        None => Value::Null,
    }
}

pub fn restriction_json(file: &str, rep: &RestrictionReport) -> Value {
    let lemmas: Vec<Value> = exponent_lemmas(rep)
        .iter()
        .map(|l| json!({"name": l.name, "holds": l.holds, "detail": l.detail}))
        .collect();
    json!({
        "schema_version": SCHEMA_VERSION,
        "kind": "restriction_report",
        "file": file,
        "input": rep.input,
        "newton_distance": rat_json(&rep.d),
        "linear_height": rat_json(&rep.h_lin),
        "linear_height_exact": rep.h_lin_exact,
        "linear_shear": rat_json(&rep.lin_shear),
        "adapted_shear": pair_rat(&rep.adapted_shear),
        "swapped": rep.swapped,
        "case": match rep.case_ab {
            Some(CaseAb::A) => Value::from("A"),
            Some(CaseAb::B) => Value::from("B"),
            None => Value::Null,
        },
        "m": opt_rat(&rep.m),
        "m_defaulted": rep.m_defaulted,
        "kappa": pair_rat(&rep.kappa),
        "kappa_tilde": pair_rat(&rep.kappa_tilde),
        "a_exp": opt_rat(&rep.a_exp),
        "b_exp": rep.b_exp,
        "n_exp": opt_rat(&rep.n_exp),
        "h_cap": opt_rat(&rep.h_cap),
        "r_height": opt_rat(&rep.hr),
        "p_c_prime": opt_rat(&rep.p_c_prime),
        "theta_c": opt_rat(&rep.theta_c),
        "n1": opt_rat(&rep.n1),
        "branch": match rep.branch {
            Some(Branch::Nd) => Value::from("nd"),
            Some(Branch::D) => Value::from("d"),
            None => Value::Null,
        },
        "gaps": rep.gaps,
        "lemmas": lemmas,
    })
}

/// All exponent lemmas a report can state hold for it.
pub fn report_invariants_hold(rep: &RestrictionReport) -> bool {
    exponent_lemmas(rep).iter().all(|l| l.holds)
}

pub fn bound_check_json(check: &BoundCheck, csv_name: &str) -> Value {
    let mut argmax = Map::new();
    for (col, v) in check.columns.iter().zip(&check.ratio_argmax) {
        argmax.insert((*col).to_string(), json!(v));
    }
    let blocks: Vec<Value> = check
        .block_sups
        .iter()
        .map(|(b, s)| json!({"block_log2": b, "sup": s}))
        .collect();
    json!({
        "schema_version": SCHEMA_VERSION,
        "kind": "bound_check",
        "lemma_id": check.lemma_id,
        "verdict": check.verdict.as_str(),
        "ratio_sup": check.ratio_sup,
        "ratio_argmax": argmax,
        "block_sups": blocks,
        "parameter_grid": {
            "columns": check.columns,
            "points": check.rows.len(),
            "csv": csv_name,
        },
        "skipped": check.skipped,
        "notes": check.notes,
    })
}

pub fn inconclusive_json(kind: &str, id: &str, reason: &str) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "kind": kind,
        "id": id,
        "verdict": "inconclusive",
        "reason": reason,
    })
}

pub fn bound_check_csv(check: &BoundCheck) -> Result<Vec<u8>, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&check.columns)?;
    for row in &check.rows {
        w.write_record(row.iter().map(|v| v.to_string()))?;
    }
    w.into_inner().map_err(|e| e.into_error().into())
}

pub fn decay_json(cases: &[DecayCase], tol: f64, csv_name: &str) -> Value {
    let rows: Vec<Value> = cases
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "expected_slope": c.expected_slope,
                "slope": c.fit.slope,
                "intercept": c.fit.intercept,
                "max_residual": c.fit.max_residual,
                "within": c.within,
                "points": c.samples.len(),
            })
        })
        .collect();
    json!({
        "schema_version": SCHEMA_VERSION,
        "kind": "decay_rates",
        "slope_tol": tol,
        "all_within": cases.iter().all(|c| c.within),
        "csv": csv_name,
        "cases": rows,
    })
}

pub fn decay_csv(cases: &[DecayCase]) -> Result<Vec<u8>, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["case", "lambda", "re", "im", "abs", "log2_abs"])?;
    for c in cases {
        for (lambda, v) in &c.samples {
            w.write_record([
                c.name.to_string(),
                lambda.to_string(),
                v.re.to_string(),
                v.im.to_string(),
                v.norm().to_string(),
                v.norm().log2().to_string(),
            ])?;
        }
    }
    w.into_inner().map_err(|e| e.into_error().into())
}

pub fn counterexample_json(rep: &CounterexampleReport, csv_name: &str) -> Value {
    let cases: Vec<Value> = rep
        .cases
        .iter()
        .map(|c| {
            json!({
                "delta": c.delta,
                "slope": c.fit.slope,
                "intercept": c.fit.intercept,
                "max_residual": c.fit.max_residual,
                "slope_ok": c.slope_ok,
                "control_ok": c.control_ok,
                "points": c.samples.len(),
            })
        })
        .collect();
    json!({
        "schema_version": SCHEMA_VERSION,
        "kind": "d4_counterexample",
        "expected_slope": rep.expected_slope,
        "slope_tol": rep.slope_tol,
        "control_floor": rep.control_floor,
        "principal_edge_ok": rep.edge_ok,
        "weight_ok": rep.kappa_ok,
        "distance_ok": rep.distance_ok,
        "all_ok": rep.all_ok(),
        "csv": csv_name,
        "cases": cases,
    })
}

pub fn counterexample_csv(rep: &CounterexampleReport) -> Result<Vec<u8>, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["delta", "lambda", "re", "im", "abs", "log2_abs", "fitted_slope"])?;
    for c in &rep.cases {
        for (lambda, v) in &c.samples {
            w.write_record([
                c.delta.to_string(),
                lambda.to_string(),
                v.re.to_string(),
                v.im.to_string(),
                v.norm().to_string(),
                v.norm().log2().to_string(),
                c.fit.slope.to_string(),
            ])?;
        }
    }
    w.into_inner().map_err(|e| e.into_error().into())
}

pub fn exact_checks_json(checks: &[ExactCheck]) -> Value {
    let rows: Vec<Value> = checks
        .iter()
        .map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail}))
        .collect();
    json!({
        "schema_version": SCHEMA_VERSION,
        "kind": "exact_checks",
        "all_passed": checks.iter().all(|c| c.passed),
        "checks": rows,
    })
}

/// One row per classified input; the exact fields ride along as fraction
/// strings next to decimal columns for plotting.
pub fn classify_summary_csv(
    rows: &[(String, RestrictionReport)],
) -> Result<Vec<u8>, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "file",
        "input",
        "newton_distance",
        "r_height",
        "p_c_prime",
        "theta_c",
        "r_height_decimal",
        "p_c_prime_decimal",
    ])?;
    let opt = |r: &Option<Rat>| r.as_ref().map(|v| v.to_string()).unwrap_or_default();
    let opt_dec = |r: &Option<Rat>| {
        r.as_ref()
            .map(|v| to_f64(v).to_string())
            .unwrap_or_default()
    };
    for (file, rep) in rows {
        w.write_record([
            file.clone(),
            rep.input.clone(),
            rep.d.to_string(),
            opt(&rep.hr),
            opt(&rep.p_c_prime),
            opt(&rep.theta_c),
            opt_dec(&rep.hr),
            opt_dec(&rep.p_c_prime),
        ])?;
    }
    w.into_inner().map_err(|e| e.into_error().into())
}

/// Stability verdicts extended with the budget outcome for the exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Inconclusive,
}

impl Outcome {
    pub fn merge(self, other: Outcome) -> Outcome {
        use Outcome::*;
        match (self, other) {
            (Fail, _) | (_, Fail) => Fail,
            (Inconclusive, _) | (_, Inconclusive) => Inconclusive,
            _ => Pass,
        }
    }

    pub fn from_verdict(v: Verdict) -> Outcome {
        match v {
            Verdict::Stable => Outcome::Pass,
            Verdict::Growing => Outcome::Fail,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Inconclusive => "inconclusive",
        }
    }
}

/// Write through a temp file in the same directory so a crash never leaves
/// a half-written report behind.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> io::Result<()> {
    let mut tmp: PathBuf = path.to_path_buf();
    let name = match path.file_name().and_then(|n| n.to_str()) {
        Some(n) => format!(".{n}.tmp"),
        None => return Err(io::Error::new(io::ErrorKind::InvalidInput, "bad path")),
    };
    tmp.set_file_name(name);
    fs::write(&tmp, bytes)?;
    fs::rename(&tmp, path)
}

pub fn write_json(dir: &Path, name: &str, value: &Value) -> io::Result<()> {
    let mut bytes = serde_json::to_vec_pretty(value).expect("json tree is serializable");
    bytes.push(b'\n');
    write_atomic(&dir.join(name), &bytes)
}
