use std::path::{Path, PathBuf};
use std::process::Command as Process;

use serde_json::Value;

use current_km_cli::problem::ProblemFile;
use current_km_cli::{run, Command, EXIT_ERROR, EXIT_INTEGRABLE, EXIT_MISMATCH, EXIT_NOT_INTEGRABLE};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn classify(name: &str) -> (Value, i32) {
    let out = run(&Command::Classify { file: fixture(name), depth: None, json_indent: 2 });
    (serde_json::from_str(&out.output).unwrap(), out.code)
}

fn verify(name: &str) -> (Value, i32) {
    let out = run(&Command::Verify { file: fixture(name), depth: None, max_power: None });
    (serde_json::from_str(&out.output).unwrap(), out.code)
}

fn binary(args: &[&str]) -> (String, i32) {
    let out = Process::new(env!("CARGO_BIN_EXE_current-km")).args(args).output().unwrap();
    (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap())
}

#[test]
fn golden_report() {
    let path = fixture("v3_v2.json");
    let (stdout, code) = binary(&["classify", path.to_str().unwrap()]);
    let golden =
        std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/v3_v2.json")).unwrap();
    assert_eq!(code, EXIT_INTEGRABLE);
    assert_eq!(stdout, golden);
}

#[test]
fn tensor_product_example() {
    let (report, code) = classify("v3_v2.json");
    assert_eq!(code, EXIT_INTEGRABLE);
    assert_eq!(report["verdict"]["status"], "Integrable");
    assert_eq!(report["weights"], serde_json::json!([["2"], ["3"]]));
    let mults: Vec<u64> =
        report["character"]["entries"].as_array().unwrap().iter().map(|e| e[1].as_u64().unwrap()).collect();
    assert_eq!(mults, [1, 2, 3, 3, 2, 1]);
}

#[test]
fn byte_determinism() {
    let path = fixture("a2_two_points.json");
    let first = binary(&["classify", path.to_str().unwrap()]);
    let second = binary(&["classify", path.to_str().unwrap()]);
    assert_eq!(first, second);

    // key order and whitespace of the input do not matter
    let dir = tempfile::tempdir().unwrap();
    let shuffled = dir.path().join("shuffled.json");
    std::fs::write(
        &shuffled,
        r#"{ "psi": {"h1": {"t": "1", "1": "5"}},
             "gcm": [[2]], "ideal": ["t^2-1"], "variables": ["t"] }"#,
    )
    .unwrap();
    let reference = binary(&["classify", fixture("v3_v2.json").to_str().unwrap(), "--json-indent", "0"]);
    let reordered = binary(&["classify", shuffled.to_str().unwrap(), "--json-indent", "0"]);
    assert_eq!(reference, reordered);
    assert_eq!(reference.0.lines().count(), 1);
}

#[test]
fn echoed_input_round_trips() {
    for name in ["v3_v2.json", "a2_two_points.json", "radical_obstruction.json", "non_dominant.json"] {
        let original = ProblemFile::from_json(&std::fs::read_to_string(fixture(name)).unwrap()).unwrap();
        let (report, _) = classify(name);
        let echoed: ProblemFile = serde_json::from_value(report["input"].clone()).unwrap();
        assert_eq!(echoed, original, "{name}");
        assert_eq!(echoed.to_spec().unwrap(), original.to_spec().unwrap());
    }
}

#[test]
fn exit_codes() {
    assert_eq!(classify("v3_v2.json").1, EXIT_INTEGRABLE);
    assert_eq!(classify("radical_obstruction.json").1, EXIT_NOT_INTEGRABLE);
    assert_eq!(classify("non_dominant.json").1, EXIT_NOT_INTEGRABLE);

    let (report, code) = classify("not_cofinite.json");
    assert_eq!((code, report["error"]["kind"].as_str()), (EXIT_ERROR, Some("NotCofinite")));
    let (report, code) = classify("irrational.json");
    assert_eq!((code, report["error"]["kind"].as_str()), (EXIT_ERROR, Some("NonRationalPoint")));
    let (report, code) = classify("missing_entry.json");
    assert_eq!((code, report["error"]["kind"].as_str()), (EXIT_ERROR, Some("MissingPsiEntry")));
    let (report, code) = classify("no_such_file.json");
    assert_eq!((code, report["error"]["kind"].as_str()), (EXIT_ERROR, Some("Io")));
    let (report, code) = classify("rank_mismatch.json");
    assert_eq!((code, report["error"]["kind"].as_str()), (EXIT_ERROR, Some("Schema")));
    assert_ne!(EXIT_MISMATCH, EXIT_ERROR);
}

#[test]
fn binary_exit_codes() {
    assert_eq!(binary(&["classify", fixture("radical_obstruction.json").to_str().unwrap()]).1, EXIT_NOT_INTEGRABLE);
    let (stdout, code) = binary(&["classify"]);
    assert_eq!(code, EXIT_ERROR);
    let report: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(report["error"]["kind"], "Usage");
}

#[test]
fn verify_integrable() {
    let (report, code) = verify("v3_v2.json");
    assert_eq!(code, EXIT_INTEGRABLE);
    let oracle = &report["oracle"];
    assert_eq!(oracle["confirmed"], true);
    for row in oracle["comparison"].as_array().unwrap() {
        assert_eq!(row["predicted"], row["oracle"]);
    }
    let ranks: Vec<u64> =
        oracle["comparison"].as_array().unwrap().iter().map(|r| r["oracle"].as_u64().unwrap()).collect();
    assert_eq!(ranks, [1, 2, 3, 3, 2, 1]);
}

#[test]
fn verify_through_options() {
    // `options.verify` makes `classify` include the oracle section too
    let (report, code) = classify("a2_two_points.json");
    assert_eq!(code, EXIT_INTEGRABLE);
    assert_eq!(report["weights"], serde_json::json!([["0", "2"], ["1", "0"]]));
    assert_eq!(report["oracle"]["confirmed"], true);
}

#[test]
fn verify_obstruction_is_corroborated() {
    let (report, code) = verify("radical_obstruction.json");
    assert_eq!(code, EXIT_INTEGRABLE);
    assert_eq!(report["verdict"]["reason"]["kind"], "RadicalObstruction");
    assert_eq!(report["verdict"]["reason"]["witness"], "t");
    let probe = &report["oracle"]["probes"][0];
    assert_eq!((probe["generator"].as_str(), probe["nilpotent"].as_bool()), (Some("f1⊗1"), Some(false)));
    assert_eq!(probe["power"], 8);

    let (report, code) = verify("non_dominant.json");
    assert_eq!(code, EXIT_INTEGRABLE);
    assert_eq!(report["verdict"]["reason"]["kind"], "NonDominantWeight");
    assert_eq!(report["oracle"]["confirmed"], true);
}

#[test]
fn verify_rejects_non_type_a() {
    let (report, code) = verify("affine_verify.json");
    assert_eq!(code, EXIT_ERROR);
    assert_eq!(report["error"]["kind"], "UnsupportedOracleType");
    // classification alone still works for affine matrices
    assert_eq!(classify("affine_verify.json").1, EXIT_INTEGRABLE);
}

#[test]
fn depth_flag_overrides_options() {
    let out = run(&Command::Classify { file: fixture("v3_v2.json"), depth: Some(2), json_indent: 0 });
    let report: Value = serde_json::from_str(&out.output).unwrap();
    assert_eq!(report["character"]["depth"], 2);
    assert_eq!(report["character"]["complete"], false);
    assert_eq!(report["character"]["entries"].as_array().unwrap().len(), 3);
}
