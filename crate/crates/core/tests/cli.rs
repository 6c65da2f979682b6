use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stonespec"))
        .args(args)
        .env_remove("STONESPEC_MAX_RING")
        .env_remove("STONESPEC_MAX_SPACE")
        .env_remove("STONESPEC_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn ring_spec_lists_two_points_for_z6() {
    let z6 = data("z6.ring");
    let o = run(&[
        "ring-spec",
        "--file",
        z6.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let points = v["points"].as_array().unwrap();
    assert_eq!(points.len(), 2);
    assert_eq!(points[0]["generators"], serde_json::json!(["(0,1)"]));
    assert_eq!(v["topology"], serde_json::json!([[], [0], [0, 1], [1]]));
}

#[test]
fn alexandroff_probe_shows_infinity_in_cofinite_neighborhoods() {
    let o = run(&[
        "alexandroff",
        "--probe",
        "{n>=3}",
        "--probe",
        "{1,4}",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["probes"][0]["contains_infinity"], true);
    assert_eq!(v["probes"][1]["contains_infinity"], false);
    assert_eq!(v["probes"][1]["naturals"], serde_json::json!([1, 4]));
}

#[test]
fn exit_codes() {
    let z6 = data("z6.ring");
    let local = data("local3.ring");
    assert_eq!(run(&["ring-spec"]).status.code(), Some(2));
    assert_eq!(
        run(&["ring-spec", "--file", z6.to_str().unwrap(), "--bogus"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["ring-spec", "--file", "/nonexistent"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["alexandroff", "--probe", "evens"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    let capped = run(&[
        "ring-spec",
        "--file",
        local.to_str().unwrap(),
        "--max-ring",
        "8",
    ]);
    assert_eq!(capped.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("cap is 8"));
    assert_eq!(
        run(&["verify", "--suite", "counting"]).status.code(),
        Some(0)
    );
}

#[test]
fn env_overrides_caps() {
    let local = data("local3.ring");
    let o = Command::new(env!("CARGO_BIN_EXE_stonespec"))
        .args(["ring-spec", "--file", local.to_str().unwrap()])
        .env("STONESPEC_MAX_RING", "8")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn parse_errors_cite_location() {
    let dir = std::env::temp_dir().join(format!("stonespec-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.ring");
    std::fs::write(&bad, "{\"product\": [{\"p\": 2,\n \"q\": 1}]}").unwrap();
    let o = run(&["ring-spec", "--file", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line"));
    let _ = std::fs::remove_dir_all(dir);
}

#[test]
fn output_is_deterministic() {
    let a = run(&[
        "verify",
        "--suite",
        "ultrafilters",
        "--suite",
        "alexandroff",
        "--format",
        "json",
        "--seed",
        "7",
    ]);
    let b = run(&[
        "verify",
        "--suite",
        "alexandroff",
        "--suite",
        "ultrafilters",
        "--format",
        "json",
        "--seed",
        "7",
    ]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn dot_outputs_are_graphs() {
    let o = run(&[
        "compactify",
        "--gen",
        "evens",
        "--format",
        "dot",
        "--window",
        "3",
    ]);
    let text = stdout(&o);
    assert!(text.starts_with("graph compactification {"));
    assert_eq!(text.matches("doublecircle").count(), 2);
    let space = data("three_point.space");
    let o = run(&[
        "space-beta",
        "--file",
        space.to_str().unwrap(),
        "--format",
        "dot",
    ]);
    assert!(stdout(&o).starts_with("digraph"));
    // localization output has no graph form
    let z6 = data("z6.ring");
    let o = run(&[
        "ring-localize",
        "--file",
        z6.to_str().unwrap(),
        "--gens",
        "(1,0)",
        "--format",
        "dot",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn ultra_reports_quotient_and_canonical_map() {
    let local = data("local3.ring");
    let o = run(&[
        "ultra",
        "--ring",
        local.to_str().unwrap(),
        "--at",
        "x",
        "--kind",
        "star",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["quotient"]["order"], 4);
    assert_eq!(v["quotient_is_field"], false);
    assert_eq!(v["canonical_map_is_isomorphism"], true);
    let o = run(&[
        "ultra",
        "--ring",
        local.to_str().unwrap(),
        "--at",
        "y",
        "--kind",
        "flat",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["quotient"]["order"], 3);
    assert_eq!(v["quotient_is_field"], true);
}

#[test]
fn space_check_passes_on_sample_space() {
    let space = data("two_sierpinski.space");
    let o = run(&["space-check", "--file", space.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("FAIL"));
}
