//! Contract tests for the `geomharm` binary: wire formats, exit codes
//! and output determinism.

use std::process::{Command, Output};

use geomharm_core::report::IdentityReport;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_geomharm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_lines(output: &Output) -> Vec<String> {
    String::from_utf8_lossy(&output.stdout)
        .lines()
        .map(str::to_string)
        .collect()
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn table_polynomials_match_known_rows() {
    let out = run(&["table", "hgp_coeffs", "--n", "3"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(
        stdout_lines(&out),
        vec!["0", "x", "x + 3*x^2", "x + 9*x^2 + 11*x^3"]
    );

    let out = run(&["table", "gp_coeffs", "--n", "3"]);
    assert_eq!(
        stdout_lines(&out),
        vec!["1", "x", "x + 2*x^2", "x + 6*x^2 + 6*x^3"]
    );
}

#[test]
fn table_scalar_sequences() {
    let out = run(&["table", "bernoulli", "--n", "4"]);
    assert_eq!(stdout_lines(&out), vec!["1", "-1/2", "1/6", "0", "-1/30"]);

    let out = run(&["table", "harmonic", "--n", "4"]);
    assert_eq!(stdout_lines(&out), vec!["0", "1", "3/2", "11/6", "25/12"]);

    let out = run(&["table", "genocchi", "--n", "6"]);
    assert_eq!(stdout_lines(&out), vec!["1", "-1", "0", "1", "0", "-3"]);

    let out = run(&["table", "ordered_bell", "--n", "5"]);
    assert_eq!(stdout_lines(&out), vec!["1", "1", "3", "13", "75", "541"]);

    let out = run(&["table", "poly_bernoulli", "--n", "3", "--q", "2"]);
    assert_eq!(stdout_lines(&out), vec!["1", "1/4", "-1/36", "-1/24"]);
}

#[test]
fn table_triangles_emit_rows() {
    let out = run(&["table", "stirling2", "--n", "4"]);
    assert_eq!(
        stdout_lines(&out),
        vec!["1", "0 1", "0 1 1", "0 1 3 1", "0 1 7 6 1"]
    );
    let out = run(&["table", "stirling1", "--n", "4"]);
    assert_eq!(
        stdout_lines(&out),
        vec!["1", "0 1", "0 1 1", "0 2 3 1", "0 6 11 6 1"]
    );
}

#[test]
fn table_json_and_csv_formats() {
    let out = run(&["table", "bernoulli", "--n", "2", "--format", "json"]);
    let value: serde_json::Value =
        serde_json::from_str(&stdout_lines(&out).join("\n")).expect("valid json");
    assert_eq!(value["name"], "bernoulli");
    assert_eq!(value["offset"], 0);
    assert_eq!(value["values"][1], "-1/2");

    let out = run(&["table", "stirling2", "--n", "2", "--format", "csv"]);
    assert_eq!(stdout_lines(&out), vec!["0,0,1", "1,0,0", "1,1,1", "2,0,0", "2,1,1", "2,2,1"]);
}

#[test]
fn table_unknown_sequence_exits_2() {
    assert_eq!(exit_code(&run(&["table", "unknown", "--n", "3"])), 2);
}

#[test]
fn verify_passes_and_validates_flags() {
    let out = run(&["verify", "--suite", "number", "--max-n", "12"]);
    assert_eq!(exit_code(&out), 0);

    assert_eq!(exit_code(&run(&["verify", "--suite", "all", "--max-n", "1"])), 2);
    assert_eq!(exit_code(&run(&["verify", "--suite", "bogus", "--max-n", "5"])), 2);
}

#[test]
fn verify_json_reports_round_trip_byte_identical() {
    let out = run(&[
        "verify", "--suite", "integral", "--max-n", "8", "--format", "json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let lines = stdout_lines(&out);
    assert!(!lines.is_empty());
    for line in &lines {
        let report: IdentityReport = serde_json::from_str(line).expect("parses as report");
        let reserialized = serde_json::to_string(&report).expect("serializes");
        assert_eq!(&reserialized, line, "round trip changed bytes");
    }
}

#[test]
fn verify_output_is_deterministic_across_job_counts() {
    let strip_elapsed = |out: &Output| -> Vec<serde_json::Value> {
        stdout_lines(out)
            .iter()
            .map(|line| {
                let mut v: serde_json::Value = serde_json::from_str(line).unwrap();
                v.as_object_mut().unwrap().remove("elapsed_ns");
                v
            })
            .collect()
    };
    let one = run(&[
        "verify", "--suite", "polynomial", "--max-n", "8", "--jobs", "1", "--format", "json",
    ]);
    let four = run(&[
        "verify", "--suite", "polynomial", "--max-n", "8", "--jobs", "4", "--format", "json",
    ]);
    assert_eq!(exit_code(&one), 0);
    assert_eq!(exit_code(&four), 0);
    assert_eq!(strip_elapsed(&one), strip_elapsed(&four));
}

#[test]
fn verify_csv_has_header_and_rows() {
    let out = run(&[
        "verify", "--suite", "number", "--max-n", "4", "--format", "csv",
    ]);
    let lines = stdout_lines(&out);
    assert_eq!(lines[0], "identity_id,params,status,lhs,rhs,elapsed_ns");
    assert!(lines.len() > 1);
    assert!(lines[1..].iter().all(|l| l.contains(",pass,") || l.contains(",skipped")));
}

#[test]
fn eval_examples() {
    let out = run(&["eval", "A", "--m", "1", "--x", "1/2"]);
    assert_eq!(stdout_lines(&out), vec!["2"]);

    let out = run(&["eval", "hA", "--m", "0", "--x", "1/2"]);
    assert_eq!(stdout_lines(&out), vec!["0 + -2*ln(1-x)"]);

    let out = run(&["eval", "hA", "--m", "1", "--x", "1/2", "--p", "3"]);
    assert_eq!(stdout_lines(&out), vec!["31/16"]);

    let out = run(&["eval", "A", "--m", "2", "--x", "1/3", "--numeric"]);
    let lines = stdout_lines(&out);
    assert_eq!(lines[0], "3/2");
    assert!(lines[1].starts_with("numeric: 1.5"));
}

#[test]
fn eval_domain_violations_exit_2() {
    assert_eq!(exit_code(&run(&["eval", "A", "--m", "1", "--x", "3/2"])), 2);
    assert_eq!(exit_code(&run(&["eval", "hA", "--m", "1", "--x", "0"])), 2);
    assert_eq!(exit_code(&run(&["eval", "A", "--m", "1", "--x", "1/0"])), 2);
}

#[test]
fn bench_contract() {
    let out = run(&[
        "bench", "--m", "1", "--p", "20,50", "--x", "1/3", "--reps", "1", "--format", "csv",
    ]);
    assert_eq!(exit_code(&out), 0);
    let lines = stdout_lines(&out);
    assert_eq!(lines[0], "series,m,p,closed_ns,naive_ns,equal");
    // 2 series x 2 m-values x 2 p-values
    assert_eq!(lines.len(), 9);
    assert!(lines[1..].iter().all(|l| l.ends_with(",true")));

    assert_eq!(
        exit_code(&run(&["bench", "--m", "1", "--p", "10", "--x", "1/3", "--reps", "0"])),
        2
    );
}

#[test]
fn explore_families() {
    let out = run(&["explore", "eq13_odd", "--max-n", "6"]);
    assert_eq!(exit_code(&out), 0);
    let lines = stdout_lines(&out);
    assert!(lines[0].contains("open problem"));
    assert!(lines[1..].iter().all(|l| l.starts_with("n=")));
    assert!(!lines.iter().any(|l| l.contains("pass") || l.contains("fail")));

    let out = run(&["explore", "hgp_semiorth", "--max-n", "4", "--format", "csv"]);
    assert_eq!(exit_code(&out), 0);
    let lines = stdout_lines(&out);
    assert_eq!(lines[0], "n,m,value,note");
    assert_eq!(lines.len(), 17);

    assert_eq!(exit_code(&run(&["explore", "bad", "--max-n", "3"])), 2);
}
