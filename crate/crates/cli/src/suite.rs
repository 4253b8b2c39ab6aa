//! Reference scenarios checked against golden files.

use std::path::{Path, PathBuf};

use anyhow::Result;
use fusiondim::bisets::BisetElement;
use fusiondim::characters::FieldTag;
use fusiondim::context::FusionContext;
use fusiondim::fusion::presets;
use fusiondim::realize::{self, MonotoneOptions};
use num_bigint::BigInt;
use serde_json::{json, Value};
use similar::TextDiff;

pub fn default_golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("golden")
}

type Scenario = fn() -> Result<Value>;

pub const SCENARIOS: &[(&str, Scenario)] = &[
    ("sigma3-nonrealizable", sigma3),
    ("frobenius-twenty-index-gap", frobenius_twenty),
    ("trivial-fusion-omega", trivial_omega),
    ("lattice-equality", lattice_equality),
    ("saturation", saturation),
];

fn context(name: &str) -> Result<FusionContext> {
    Ok(FusionContext::new(presets::fusion(name)?)?)
}

fn rows(m: &[Vec<BigInt>]) -> Vec<Vec<String>> {
    m.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
}

fn sigma3() -> Result<Value> {
    Ok(serde_json::to_value(realize::sigma3_demo()?)?)
}

fn frobenius_twenty() -> Result<Value> {
    let ctx = context("C5-semidirect-C4")?;
    let index = realize::p_local_index(&ctx)?;
    let two_zero: Vec<BigInt> = vec![2.into(), 0.into()];
    let monotone = realize::solve_monotone(&ctx, &two_zero, MonotoneOptions::default())?;
    Ok(json!({
        "columns": ctx.f_domain.labels,
        "real_basis": ctx.real_basis.labels,
        "stable_real_lattice": rows(ctx.stable_lattice(FieldTag::R).basis()),
        "dim_image": rows(ctx.dim_image(FieldTag::R)?.basis()),
        "cb": rows(ctx.cb().lattice().basis()),
        "index": index,
        "monotone_2_0": monotone,
    }))
}

const P_GROUPS: &[&str] = &["C2", "C3", "C4", "C5", "C9", "C2xC2", "C3xC3", "D8", "Q8", "SD16"];

fn trivial_omega() -> Result<Value> {
    let mut out = Vec::new();
    for name in P_GROUPS {
        let ctx = context(name)?;
        let w = &ctx.omega()?.omega;
        let identity = BisetElement::basis(ctx.alg.identity_id());
        out.push(json!({
            "fusion": ctx.fs.name(),
            "omega": w.describe(&ctx.alg),
            "is_identity": *w == identity,
        }));
    }
    Ok(Value::Array(out))
}

const LATTICE_INSTANCES: &[&str] =
    &["C4", "C9", "D8", "Q8", "C3xC3", "A4", "S3", "S4", "SL2(3)", "C5-semidirect-C4", "PGL3(3)"];

fn lattice_equality() -> Result<Value> {
    let mut out = Vec::new();
    for name in LATTICE_INSTANCES {
        let ctx = context(name)?;
        let a = realize::lattice_equality_check(&ctx)?;
        let idx = realize::p_local_index(&ctx)?;
        out.push(json!({ "lattices": a, "p_local": idx }));
    }
    Ok(Value::Array(out))
}

fn saturation() -> Result<Value> {
    let mut out = Vec::new();
    for &(name, _) in presets::CATALOG {
        let fs = presets::fusion(name)?;
        out.push(json!({ "preset": name, "fusion": fs.name(), "verdict": fs.saturation() }));
    }
    Ok(Value::Array(out))
}

pub struct SuiteRun {
    pub summary: Value,
    pub mismatches: usize,
    pub diffs: String,
}

/// Runs every scenario; `bless` rewrites the golden files instead of comparing.
pub fn run(dir: &Path, bless: bool, only: Option<&str>) -> Result<SuiteRun> {
    if let Some(o) = only {
        if !SCENARIOS.iter().any(|(n, _)| *n == o) {
            let names: Vec<&str> = SCENARIOS.iter().map(|(n, _)| *n).collect();
            anyhow::bail!(fusiondim::Error::input(format!("unknown scenario '{o}'; known: {names:?}")));
        }
    }
    let mut summary = Vec::new();
    let mut mismatches = 0;
    let mut diffs = String::new();
    for &(name, scenario) in SCENARIOS {
        if only.is_some_and(|o| o != name) {
            continue;
        }
        let mut actual = serde_json::to_string_pretty(&scenario()?)?;
        actual.push('\n');
        let path = dir.join(format!("{name}.json"));
        let status = if bless {
            std::fs::create_dir_all(dir)?;
            std::fs::write(&path, &actual)?;
            "written"
        } else {
            match std::fs::read_to_string(&path) {
                Ok(golden) if golden == actual => "match",
                Ok(golden) => {
                    mismatches += 1;
                    let diff = TextDiff::from_lines(&golden, &actual);
                    diffs.push_str(&diff.unified_diff().header(&format!("golden/{name}.json"), "actual").to_string());
                    "mismatch"
                }
                Err(_) => {
                    mismatches += 1;
                    diffs.push_str(&format!("missing golden file {}\n", path.display()));
                    "missing"
                }
            }
        };
        summary.push(json!({ "scenario": name, "status": status }));
    }
    Ok(SuiteRun { summary: json!({ "scenarios": summary, "mismatches": mismatches }), mismatches, diffs })
}
