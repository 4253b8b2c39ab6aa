use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn fusiondim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fusiondim")).args(args).env_remove("FUSIONDIM_CACHE_DIR").output().unwrap()
}

fn report(args: &[&str]) -> Value {
    let out = fusiondim(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn a4_fusion_has_three_subgroup_classes() {
    let r = report(&["fusion", "build", "--group", "preset:A4", "--sylow", "auto:2"]);
    assert_eq!(r["tool"], "fusiondim");
    assert_eq!(r["input_hash"].as_str().unwrap().len(), 64);
    let res = &r["result"];
    assert_eq!(res["saturation"]["verdict"]["saturated"], true);
    assert_eq!(res["f_subgroup_classes"].as_array().unwrap().len(), 3);
    // the three involutions of V are fused
    assert_eq!(res["element_f_classes"][1].as_array().unwrap().len(), 3);
}

#[test]
fn frobenius_twenty_lattices_agree() {
    let r = report(&["verify", "theorem-a", "--fusion", "preset:C5-semidirect-C4"]);
    let res = &r["result"];
    assert_eq!(res["equal"], true);
    assert_eq!(res["image"], serde_json::json!([[1, 1], [0, 4]]));
    assert_eq!(res["cba"], res["image"]);
}

#[test]
fn monotone_two_zero_needs_n_two() {
    let f = r#"{"domain":"F","values":{"1a":2,"5a":0}}"#;
    let r = report(&["realize", "monotone", "--fusion", "preset:C5-semidirect-C4", "--function", f]);
    let res = &r["result"]["solution"]["result"];
    assert_eq!(res["status"], "realized");
    assert_eq!(res["n"], 2);
    assert_eq!(res["recheck"], true);
    // Q2 has degree 4 = |S| - 1 and is the augmentation character I_S
    assert_eq!(res["witness"]["coords"], serde_json::json!([0, 1]));
    let table = report(&["characters", "table", "--fusion", "preset:C5-semidirect-C4"]);
    let q2 = &table["result"]["rational_basis"][1];
    assert_eq!(q2["degree"], "4");
    assert_eq!(q2["construction"]["p"], "5a");
    assert_eq!(q2["construction"]["q"], "1a");
}

#[test]
fn virtual_outside_cba_is_a_precondition_error() {
    let f = r#"{"domain":"F","values":{"1a":2,"5a":0}}"#;
    let out = fusiondim(&["realize", "virtual", "--fusion", "preset:C5-semidirect-C4", "--function", f]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("(**)"));
}

#[test]
fn unsaturated_omega_is_refused() {
    let out = fusiondim(&["omega", "--fusion", "preset:S4-normal-V"]);
    assert_eq!(code(&out), 3);
    let r = report(&["fusion", "saturation", "--fusion", "preset:S4-normal-V"]);
    assert_eq!(r["result"]["verdict"]["witness"]["kind"], "sylow-fails");
    assert_eq!(r["result"]["verdict"]["witness"]["aut_f_order"], 6);
}

#[test]
fn bad_inputs_exit_one() {
    let out = fusiondim(&["omega", "--fusion", "preset:NoSuchGroup"]);
    assert_eq!(code(&out), 1);
    let f = r#"{"domain":"F","values":{"1a":2}}"#;
    let out = fusiondim(&["realize", "virtual", "--fusion", "preset:S3", "--function", f]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("missing value"));
    let out = fusiondim(&["realize", "virtual", "--fusion", "preset:S3", "--function", r#"{"domain":"F","values":{},"x":1}"#]);
    assert_eq!(code(&out), 1);
}

#[test]
fn oversized_group_file_exits_four() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("big.json");
    let degree = 300;
    let cycle: Vec<usize> = (0..degree).map(|i| (i + 1) % degree).collect();
    let spec = serde_json::json!({ "name": "C300", "degree": degree, "generators": [cycle] });
    std::fs::write(&path, spec.to_string()).unwrap();
    let out = fusiondim(&["group", "info", "--group", path.to_str().unwrap()]);
    assert_eq!(code(&out), 4, "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn group_file_matches_preset() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s3.json");
    std::fs::write(&path, r#"{"name":"S3","degree":3,"generators":[[1,2,0],[1,0,2]]}"#).unwrap();
    let file = report(&["verify", "theorem-a", "--group", path.to_str().unwrap(), "--sylow", "auto:3"]);
    let preset = report(&["verify", "theorem-a", "--fusion", "preset:S3"]);
    assert_eq!(file["result"]["image"], preset["result"]["image"]);
    assert_eq!(file["result"]["equal"], true);
    assert_ne!(file["input_hash"], preset["input_hash"]);
}

#[test]
fn reports_are_deterministic() {
    let args = ["verify", "question-6-2", "--fusion", "preset:D8", "--bound", "6"];
    let a = fusiondim(&args);
    let b = fusiondim(&[&args[..], &["--seed", "17"]].concat());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let r: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(r["result"]["all_realized_with_n_1"], true);
    assert_eq!(r["result"]["evidence_only"], true);
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_fusiondim"))
            .args(["omega", "--fusion", "preset:S4"])
            .env("FUSIONDIM_CACHE_DIR", dir.path())
            .output()
            .unwrap()
    };
    let first = run();
    assert!(first.status.success());
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    let second = run();
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stdout, fusiondim(&["omega", "--fusion", "preset:S4"]).stdout);
}

#[test]
fn tsv_lattice_has_labelled_columns() {
    let out = fusiondim(&["lattice", "Cb", "--fusion", "preset:C5-semidirect-C4", "--format", "tsv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "1a\t5a\n1\t1\n0\t2\n");
}

#[test]
fn lattice_membership_uses_both_routes() {
    let f = r#"{"domain":"G","values":{"1a":2,"2a":2,"3a":0}}"#;
    let r = report(&["lattice", "DP", "--fusion", "preset:S3", "--function", f]);
    let m = &r["result"]["membership"];
    assert_eq!(m["member"], true);
    assert_eq!(m["lattice_contains"], true);
}

#[test]
fn transfer_fixes_stable_functions() {
    let out = fusiondim(&["fusion", "build", "--fusion", "preset:S4", "--format", "tsv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<Vec<&str>> = text.lines().skip(1).map(|l| l.split('\t').collect()).collect();
    // |S|/|Q| is constant on F-classes; marking one S-class of each fused pair is not
    let stable: Vec<String> = rows.iter().map(|r| format!("\"{}\":{}", r[0], 8 / r[1].parse::<i64>().unwrap())).collect();
    let fused = rows.iter().find(|r| rows.iter().any(|o| o[0] != r[0] && o[2] == r[2])).unwrap()[0];
    let unstable: Vec<String> =
        rows.iter().map(|r| format!("\"{}\":{}", r[0], i64::from(r[0] == fused))).collect();
    let run = |values: &[String]| {
        let f = format!(r#"{{"domain":"S","values":{{{}}}}}"#, values.join(","));
        report(&["transfer", "--fusion", "preset:S4", "--function", &f])["result"].clone()
    };
    let r = run(&stable);
    assert_eq!(r["input_f_stable"], true);
    assert_eq!(r["fixed"], true);
    let r = run(&unstable);
    assert_eq!(r["input_f_stable"], false);
    assert_eq!(r["output_f_stable"], true);
}

#[test]
fn reference_suite_matches_goldens() {
    let out = fusiondim(&["verify", "paper-suite"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn golden_mismatch_exits_six_with_diff() {
    let dir = tempfile::tempdir().unwrap();
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("golden").join("sigma3-nonrealizable.json");
    let text = std::fs::read_to_string(golden).unwrap().replace("\"-1\"", "\"-2\"");
    std::fs::write(dir.path().join("sigma3-nonrealizable.json"), text).unwrap();
    let out = fusiondim(&[
        "verify",
        "paper-suite",
        "--scenario",
        "sigma3-nonrealizable",
        "--golden-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 6);
    let diff = String::from_utf8_lossy(&out.stderr);
    assert!(diff.contains("-    \"-2\"") && diff.contains("+    \"-1\""), "{diff}");
}
