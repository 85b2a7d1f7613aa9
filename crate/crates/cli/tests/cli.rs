//! End-to-end tests of the `repcount` binary: output shapes, frozen values,
//! and the exit-code contract (0 holds, 1 violated, 2 usage, 3 budget).

use std::process::Command;

fn repcount(args: &[&str]) -> (i32, String, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_repcount"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        output.status.code().expect("no signal"),
        String::from_utf8(output.stdout).expect("utf-8 stdout"),
        String::from_utf8(output.stderr).expect("utf-8 stderr"),
    )
}

fn stdout_of(args: &[&str]) -> String {
    let (code, stdout, stderr) = repcount(args);
    assert_eq!(code, 0, "args {args:?} failed: {stderr}");
    stdout
}

// ---------------------------------------------------------------------------
// count
// ---------------------------------------------------------------------------

#[test]
fn count_hyper_headline_value() {
    assert_eq!(stdout_of(&["count", "--base", "4", "--kind", "hyper", "--n", "67"]), "3\n");
}

#[test]
fn count_accepts_pattern_input() {
    let stdout = stdout_of(&["count", "--base", "4", "--kind", "balanced", "--n", "[1 2 1]_4"]);
    assert_eq!(stdout, "3\n");
}

#[test]
fn count_balanced_negative_argument() {
    assert_eq!(stdout_of(&["count", "--base", "4", "--kind", "balanced", "--n", "-2"]), "2\n");
}

#[test]
fn count_json_schema() {
    let stdout = stdout_of(&[
        "count", "--base", "4", "--kind", "balanced", "--n", "[1 2 1]_4", "--json",
    ]);
    let value: serde_json::Value = serde_json::from_str(&stdout).expect("valid json");
    assert_eq!(value["base"], 4);
    assert_eq!(value["kind"], "balanced");
    assert_eq!(value["n"], "25");
    assert_eq!(value["count"], "3");
}

#[test]
fn count_respects_memo_limit_flag() {
    for limit in ["0", "5", "1000000"] {
        let stdout = stdout_of(&[
            "count", "--memo-limit", limit, "--base", "4", "--kind", "hyper", "--n", "67",
        ]);
        assert_eq!(stdout, "3\n");
    }
}

// ---------------------------------------------------------------------------
// enumerate
// ---------------------------------------------------------------------------

#[test]
fn enumerate_hyper_headline_listing() {
    let stdout = stdout_of(&["enumerate", "--base", "4", "--kind", "hyper", "--n", "67"]);
    assert_eq!(stdout, "[3 4 3]_4\n[4 0 3]_4\n[1 0 0 3]_4\n");
}

#[test]
fn enumerate_balanced_headline_listing_as_json() {
    let stdout = stdout_of(&[
        "enumerate", "--base", "4", "--kind", "balanced", "--n", "25", "--json",
    ]);
    let value: serde_json::Value = serde_json::from_str(&stdout).expect("valid json");
    assert_eq!(
        value,
        serde_json::json!(["[1 2 1]_4", "[2 -2 1]_4", "[1 -2 -2 1]_4"])
    );
}

#[test]
fn enumerate_zero_lists_the_empty_expansion_once() {
    let stdout = stdout_of(&["enumerate", "--base", "4", "--kind", "balanced", "--n", "0"]);
    assert_eq!(stdout, "[0]_4\n");
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

#[test]
fn verify_shift_first_window_holds() {
    let (code, stdout, _) = repcount(&["verify", "shift", "--base", "4", "--j", "1"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("verdict: holds"), "stdout: {stdout}");
}

#[test]
fn verify_shift_json_report() {
    let stdout = stdout_of(&["verify", "shift", "--base", "6", "--j", "2", "--json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout).expect("valid json");
    assert_eq!(value["base"], 6);
    assert_eq!(value["j"], 2);
    assert_eq!(value["interval"], serde_json::json!(["-14", "86"]));
    assert_eq!(value["zero_on_interval"], true);
    assert_eq!(value["left_boundary"], "-1");
    assert_eq!(value["right_boundary"], "-1");
    assert_eq!(value["failures"], serde_json::json!([]));
}

#[test]
fn verify_maxima_hyper_json_report() {
    let stdout = stdout_of(&[
        "verify", "maxima-hyper", "--base", "4", "--k", "5", "--json",
    ]);
    let value: serde_json::Value = serde_json::from_str(&stdout).expect("valid json");
    assert_eq!(value["interval"], serde_json::json!(["64", "255"]));
    assert_eq!(value["max"], "5");
    assert_eq!(value["first_argmax"], "68");
    assert_eq!(value["predicted_argmax"], "68");
    assert_eq!(value["agree"], true);
}

#[test]
fn verify_maxima_balanced_holds() {
    let (code, stdout, _) = repcount(&["verify", "maxima-balanced", "--r", "2"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("max 5"), "stdout: {stdout}");
    assert!(stdout.contains("26"), "stdout: {stdout}");
}

#[test]
fn verify_oracle_range_holds() {
    let (code, stdout, _) = repcount(&[
        "verify", "oracle", "--base", "4", "--range", "-200..200",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("602 checks"), "stdout: {stdout}");
}

#[test]
fn verify_oracle_base_2_skips_balanced() {
    let (code, stdout, _) = repcount(&["verify", "oracle", "--base", "2", "--range", "0..50"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("51 checks"), "stdout: {stdout}");
}

// ---------------------------------------------------------------------------
// scan
// ---------------------------------------------------------------------------

#[test]
fn scan_hyper_emits_the_headline_csv_table() {
    let stdout = stdout_of(&["scan", "--base", "4", "--kind", "hyper", "--range", "0..8"]);
    assert_eq!(
        stdout,
        "n,value\n0,1\n1,1\n2,1\n3,1\n4,2\n5,1\n6,1\n7,1\n8,2\n"
    );
}

#[test]
fn scan_shift_difference_shows_the_boundary_spikes() {
    let stdout = stdout_of(&[
        "scan", "--base", "4", "--kind", "D", "--j", "1", "--range", "-2..6",
    ]);
    assert_eq!(
        stdout,
        "n,value\n-2,-1\n-1,0\n0,0\n1,0\n2,0\n3,0\n4,0\n5,0\n6,-1\n"
    );
}

#[test]
fn scan_balanced_json_matches_the_headline_table() {
    let stdout = stdout_of(&[
        "scan", "--base", "4", "--kind", "balanced", "--range", "-2..6", "--format", "json",
    ]);
    let value: serde_json::Value = serde_json::from_str(&stdout).expect("valid json");
    let expected = serde_json::json!([
        ["-2", "2"], ["-1", "1"], ["0", "1"], ["1", "1"], ["2", "2"],
        ["3", "1"], ["4", "1"], ["5", "1"], ["6", "3"]
    ]);
    assert_eq!(value, expected);
}

#[test]
fn scan_workers_do_not_change_the_output() {
    let serial = stdout_of(&[
        "scan", "--base", "6", "--kind", "balanced", "--range", "-150..150",
    ]);
    for workers in ["2", "5", "64"] {
        let parallel = stdout_of(&[
            "scan", "--base", "6", "--kind", "balanced", "--range", "-150..150",
            "--workers", workers,
        ]);
        assert_eq!(parallel, serial, "workers = {workers}");
    }
}

// ---------------------------------------------------------------------------
// normalize
// ---------------------------------------------------------------------------

#[test]
fn normalize_rewrites_the_lowest_digit() {
    assert_eq!(stdout_of(&["normalize", "--pattern", "[1 -2]_4"]), "[0 2]_4\n");
    assert_eq!(
        stdout_of(&["normalize", "--pattern", "[0 -1 -1 -2]_4"]),
        "[-1 2 2 2]_4\n"
    );
    assert_eq!(stdout_of(&["normalize", "--pattern", "[1 2 1]_4"]), "[1 2 1]_4\n");
}

// ---------------------------------------------------------------------------
// exit codes
// ---------------------------------------------------------------------------

#[test]
fn usage_errors_exit_2() {
    let cases: &[&[&str]] = &[
        &["count", "--base", "2", "--kind", "balanced", "--n", "5"],
        &["count", "--base", "5", "--kind", "hyper", "--n", "5"],
        &["count", "--base", "4", "--kind", "hyper", "--n", "-3"],
        &["count", "--base", "4", "--kind", "hyper", "--n", "[1 2]_6"],
        &["count", "--base", "4", "--kind", "hyper", "--n", "[1 ?]_4"],
        &["enumerate", "--base", "4", "--kind", "hyper", "--n", "-1"],
        &["scan", "--base", "4", "--kind", "D", "--range", "0..8"],
        &["scan", "--base", "4", "--kind", "hyper", "--j", "1", "--range", "0..8"],
        &["scan", "--base", "4", "--kind", "hyper", "--range", "8..0"],
        &["scan", "--base", "4", "--kind", "hyper", "--range", "0..8", "--workers", "0"],
        &["normalize", "--pattern", "[1 7]_4"],
        &["normalize", "--pattern", "[1 2]_2"],
        &["verify", "maxima-hyper", "--base", "4", "--k", "2"],
        &["verify", "maxima-balanced", "--r", "0"],
        &["count", "--base", "4", "--n", "5"],
        &["frobnicate"],
    ];
    for args in cases {
        let (code, _, stderr) = repcount(args);
        assert_eq!(code, 2, "args {args:?} gave stderr: {stderr}");
    }
}

#[test]
fn pattern_errors_carry_byte_offsets() {
    let (code, _, stderr) = repcount(&["normalize", "--pattern", "[1 ?]_4"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("byte 3"), "stderr: {stderr}");
}

#[test]
fn budget_overruns_exit_3() {
    let cases: &[&[&str]] = &[
        &["scan", "--base", "4", "--kind", "hyper", "--range", "0..8", "--budget", "4"],
        &["verify", "shift", "--base", "4", "--j", "3", "--budget", "10"],
        &["verify", "maxima-hyper", "--base", "4", "--k", "9", "--budget", "100"],
        &["verify", "oracle", "--base", "4", "--range", "0..99", "--budget", "99"],
    ];
    for args in cases {
        let (code, _, stderr) = repcount(args);
        assert_eq!(code, 3, "args {args:?} gave stderr: {stderr}");
        assert!(stderr.contains("budget"), "stderr: {stderr}");
    }
}
