//! End-to-end tests of the compiled binary: flag surface, output formats,
//! and exit codes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arith-identities"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn eval_prints_plain_values() {
    let out = run(&["eval", "phi", "12"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "4");

    assert_eq!(stdout(&run(&["eval", "tau", "12"])).trim(), "6");
    assert_eq!(stdout(&run(&["eval", "mu", "30"])).trim(), "-1");
    assert_eq!(stdout(&run(&["eval", "pillai", "12"])).trim(), "40");
    assert_eq!(stdout(&run(&["eval", "mertens", "10"])).trim(), "-1");
    assert_eq!(
        stdout(&run(&["eval", "jordan", "6", "--k", "2"])).trim(),
        "24"
    );
}

#[test]
fn eval_methods_report_residuals() {
    let out = run(&["eval", "phi", "6", "--method", "fourier"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("2 (residual"), "got: {text}");

    let out = run(&["eval", "phi", "5", "--method", "res1"]);
    assert_eq!(stdout(&out).trim(), "4");

    let out = run(&["eval", "pillai", "12", "--method", "padic-product"]);
    assert_eq!(stdout(&out).trim(), "40");
}

#[test]
fn eval_domain_error_exits_2() {
    let out = run(&["eval", "phi", "2", "--method", "res1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("outside the validity domain"));
}

#[test]
fn eval_unknown_function_and_method_exit_2() {
    assert_eq!(run(&["eval", "zeta", "3"]).status.code(), Some(2));
    let out = run(&["eval", "phi", "10", "--method", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("no method"));
}

#[test]
fn eval_width_guard_exits_3() {
    // n above the floor-sum width guard trips before any work happens
    let out = run(&["eval", "phi", "3000000", "--method", "res1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("overflow"));
}

#[test]
fn unknown_flags_exit_2() {
    assert_eq!(run(&["verify", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn help_exits_0() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "--help"]).status.code(), Some(0));
}

#[test]
fn verify_single_identity_json() {
    let out = run(&["verify", "--id", "I6", "--max-n", "50", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["verdict"], "pass");
    let idents = v["identities"].as_array().unwrap();
    assert_eq!(idents.len(), 1);
    assert_eq!(idents[0]["id"], "I6");
    assert_eq!(idents[0]["checked"], 50);
    assert_eq!(idents[0]["failed"], 0);
}

#[test]
fn verify_unknown_identity_exits_2() {
    let out = run(&["verify", "--id", "I99"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown identity"));
}

#[test]
fn verify_text_report_lists_selected_identities() {
    let out = run(&[
        "verify", "--id", "I9,I10", "--max-n", "60", "--format", "text",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("cos-sum-zero"));
    assert!(text.contains("k-cos-sum-half"));
    assert!(text.contains("note:"), "typo note shown in text output");
    assert!(text.contains("verdict: pass"));
}

#[test]
fn verify_writes_report_file_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&[
        "verify",
        "--id",
        "I12",
        "--max-n",
        "40",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(
        stdout(&out).contains("verdict: pass"),
        "one-line summary printed"
    );
    let body = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&body).unwrap();
    assert_eq!(v["identities"][0]["id"], "I12");
}

#[test]
fn verify_formats_carry_identical_numbers() {
    let args = ["--id", "I16,I21", "--max-n", "80"];
    let json_out = run(&[&["verify"], &args[..], &["--format", "json"]].concat());
    let csv_out = run(&[&["verify"], &args[..], &["--format", "csv"]].concat());
    assert_eq!(json_out.status.code(), Some(0));
    assert_eq!(csv_out.status.code(), Some(0));

    let v: serde_json::Value = serde_json::from_str(&stdout(&json_out)).unwrap();
    let csv_text = stdout(&csv_out);
    let rows: Vec<&str> = csv_text.trim_end().lines().collect();
    assert_eq!(rows.len(), 3, "header plus two identities");
    for (ident, row) in v["identities"].as_array().unwrap().iter().zip(&rows[1..]) {
        let cells: Vec<&str> = row.split(',').collect();
        assert_eq!(cells[0], ident["id"].as_str().unwrap());
        assert_eq!(cells[3], ident["checked"].to_string());
        assert_eq!(cells[4], ident["passed"].to_string());
        assert_eq!(cells[5], ident["failed"].to_string());
        assert_eq!(cells[6], ident["skipped"].to_string());
    }
}

#[test]
fn verify_domain_filtering_at_max_n_1() {
    let out = run(&[
        "verify",
        "--max-n",
        "1",
        "--max-pair",
        "4",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let idents = v["identities"].as_array().unwrap();
    assert_eq!(idents.len(), 26);
    let by_id = |token: &str| {
        idents
            .iter()
            .find(|i| i["id"] == token)
            .unwrap_or_else(|| panic!("{token} present"))
            .clone()
    };
    // skipped below their domains
    for token in ["I3", "I5", "I8", "I9", "I10", "I11", "I13", "I14"] {
        assert_eq!(by_id(token)["checked"], 0, "{token} skipped at n = 1");
        assert_eq!(by_id(token)["skipped"], 1);
    }
    // checked at n = 1
    for token in [
        "I4", "I6", "I12", "I15", "I16", "I17", "I18", "I19", "I20", "I21", "I22",
    ] {
        assert_eq!(by_id(token)["checked"], 1, "{token} checked at n = 1");
        assert_eq!(by_id(token)["failed"], 0);
    }
}

#[test]
fn verify_workers_flag_accepted() {
    let out = run(&[
        "verify",
        "--id",
        "I2",
        "--max-pair",
        "30",
        "--workers",
        "4",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["identities"][0]["checked"], 900);
}

#[test]
fn bench_emits_csv_records() {
    let out = run(&[
        "bench",
        "--id",
        "phi_factored,I6",
        "--ns",
        "200,400",
        "--reps",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.trim_end().lines().collect();
    assert_eq!(lines[0], "target,n,reps,min_ns,median_ns,checksum");
    assert_eq!(lines.len(), 5, "two targets x two grid points");
    assert!(lines[1].starts_with("phi_factored,200,3,"));
    assert!(lines[3].starts_with("I6,200,3,"));
}

#[test]
fn bench_rejects_bad_targets_and_reps() {
    assert_eq!(run(&["bench", "--id", "nope"]).status.code(), Some(2));
    let out = run(&["bench", "--id", "I6", "--ns", "100", "--reps", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn list_shows_the_whole_catalog() {
    let out = run(&["list"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("I1 "));
    assert!(text.contains("I26"));
    assert!(text.contains("gcd-floor"));
    assert!(text.contains("n >= 4"), "res3 domain shown");

    let out = run(&["list", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let entries = v.as_array().unwrap();
    assert_eq!(entries.len(), 26);
    assert_eq!(entries[10]["id"], "I11");
    assert_eq!(entries[10]["domain"], "n >= 4");
    assert!(entries[8]["note"]
        .as_str()
        .unwrap()
        .contains("both 0 and n/2"));
}
