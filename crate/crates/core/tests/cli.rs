use std::process::{Command, Output};

fn yangian(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_yangian"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn lie_suite_passes() {
    let out = yangian(&["verify", "lie", "--n", "5"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("principal-cartan-action"));
    assert!(text.contains("principal-commutator"));
}

#[test]
fn corollary_reducible_singlet() {
    let out = yangian(&["verify", "corollary52", "--a", "3/2", "--b", "0", "--output", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let report = &v["corollary52"][0];
    assert_eq!(report["verdict"]["kind"], "reducible");
    assert_eq!(report["verdict"]["submodule_dims"], serde_json::json!([1]));
    assert_eq!(report["a"], "3/2");
    assert_eq!(report["check"], "corollary52");
}

#[test]
fn isomorphism_variants_and_dump() {
    let dir = tempdir();
    let dump = dir.join("residuals.json");
    let bad = yangian(&[
        "verify",
        "isomorphism",
        "--n",
        "4",
        "--depth",
        "3",
        "--variant",
        "as-printed",
        "--dump",
        dump.to_str().unwrap(),
    ]);
    assert_eq!(code(&bad), 1);
    let dumps: serde_json::Value = serde_json::from_slice(&std::fs::read(&dump).unwrap()).unwrap();
    let first = &dumps[0];
    assert_eq!(first["check"], "isomorphism-round-trip");
    assert_eq!(first["residual"]["order"], 4);
    let good = yangian(&["verify", "isomorphism", "--n", "4", "--depth", "3"]);
    assert_eq!(code(&good), 0);
}

#[test]
fn theorem51_json_schema() {
    let out = yangian(&["verify", "theorem51", "--a", "2/3", "--b", "-1/5", "--output", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let t = &v["theorem51"][0];
    assert_eq!(t["check"], "theorem51");
    assert_eq!(t["c"], "1/2");
    assert_eq!(t["convention"], "subscript/2");
    assert_eq!(t["verdict"], "pass");
    let entries = t["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 72);
    for key in ["i", "j", "k", "m", "expected_coeff", "computed_coeff", "pass"] {
        assert!(entries[0].get(key).is_some(), "missing {key}");
    }
}

#[test]
fn same_seed_gives_identical_bytes() {
    let args = ["verify", "qybe", "--n", "2", "--seed", "17", "--output", "json"];
    let a = yangian(&args);
    let b = yangian(&args);
    assert_eq!(a.stdout, b.stdout);
    let other = yangian(&["verify", "qybe", "--n", "2", "--seed", "18", "--output", "json"]);
    assert_ne!(a.stdout, other.stdout);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "lie", "--n", "one"][..],
        &["verify", "corollary52", "--a", "x/2"],
        &["verify"],
        &["verify", "rtt", "--variant", "corrected"],
        &["verify", "lie", "--depth", "0"],
        &["verify", "lie", "--output", "xml"],
    ] {
        let out = yangian(args);
        assert_eq!(code(&out), 2, "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn relation_survey_reports_survivor() {
    let out = yangian(&["verify", "principal-relations", "--n", "3"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("surviving variants: [rtt-derived]"));
    let single = yangian(&["verify", "principal-relations", "--n", "2", "--variant", "theorem"]);
    assert_eq!(code(&single), 1);
}

fn tempdir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("yangian-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
