//! Black-box tests against the installed binary: exit codes, output
//! shapes, determinism.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_nensemble"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary spawns")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

fn write_net(dir: &Path, body: &str) -> String {
    let path = dir.join("domains.json");
    fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn eval_prints_all_labeled_fields() {
    let out = run(&["eval", "--q", "1", "--gamma", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for field in ["w_minus", "w_center", "w_plus", "nu", "nu_over_q", "entropy", "chi"] {
        assert!(text.lines().any(|l| l.starts_with(field)), "missing {field} in:\n{text}");
    }
    assert!(text.contains("-0.575210382604"));
    assert!(text.lines().any(|l| l.starts_with("chi") && l.ends_with("-1")));
}

#[test]
fn invert_prints_the_bias_alone() {
    let out = run(&["invert", "--q", "1", "--nu", "-0.575211"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1.00000145473\n");
}

#[test]
fn invert_rejects_the_boundary_naming_the_interval() {
    let out = run(&["invert", "--q", "1", "--nu", "1.0"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("strictly inside (-1, 1)"), "{err}");
}

#[test]
fn solve_reports_gamma_and_weights() {
    let out = run(&["solve", "--states", "0,1,2,3,4", "--target", "2.0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().any(|l| l.starts_with("gamma") && l.ends_with('0')));
    assert_eq!(text.matches("0.2\n").count(), 5, "{text}");
}

#[test]
fn solve_rejects_targets_outside_the_ladder() {
    let out = run(&["solve", "--states", "0,1,2", "--target", "2.5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn solve_rejects_unparseable_state_lists() {
    let out = run(&["solve", "--states", "0,x,2", "--target", "1.0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("\"x\""));
}

#[test]
fn sweep_writes_deterministic_files() {
    let dir = tempfile::tempdir().unwrap();
    let csv_a = dir.path().join("a.csv");
    let csv_b = dir.path().join("b.csv");
    let svg_a = dir.path().join("a.svg");
    let svg_b = dir.path().join("b.svg");
    for (csv, svg) in [(&csv_a, &svg_a), (&csv_b, &svg_b)] {
        let out = run(&[
            "sweep",
            "--out-csv",
            csv.to_str().unwrap(),
            "--out-svg",
            svg.to_str().unwrap(),
        ]);
        assert!(out.status.success(), "{}", stderr(&out));
    }
    assert_eq!(fs::read(&csv_a).unwrap(), fs::read(&csv_b).unwrap());
    assert_eq!(fs::read(&svg_a).unwrap(), fs::read(&svg_b).unwrap());

    let text = fs::read_to_string(&csv_a).unwrap();
    assert!(text.starts_with("gamma,w_minus,w_center,w_plus,nu_over_q,entropy\n"));
    assert_eq!(text.lines().count(), 202);
}

#[test]
fn sweep_rejects_inverted_range_and_single_step() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("out.csv");
    let out = run(&[
        "sweep", "--gamma-min", "2", "--gamma-max", "-2", "--out-csv", csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["sweep", "--steps", "1", "--out-csv", csv.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!csv.exists());
}

#[test]
fn sweep_reports_unwritable_paths_as_io_failures() {
    let out = run(&["sweep", "--out-csv", "/nonexistent-dir/out.csv"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("/nonexistent-dir/out.csv"));
}

#[test]
fn network_distributes_and_reports() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_net(
        dir.path(),
        r#"{"domains": [{"label": "benzoid", "N": 6, "q": 1}, {"label": "nitro", "N": 8, "q": 2}]}"#,
    );
    let out = run(&["network", "--domains-path", &path, "--total-charge", "0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().next().unwrap().ends_with('0'));
    assert!(text.contains("benzoid"));
    assert!(text.contains("nitro"));
    assert!(text.lines().any(|l| l.starts_with("residual")));
}

#[test]
fn network_missing_file_is_an_io_failure() {
    let out = run(&["network", "--domains-path", "/no/such/file.json", "--total-charge", "0"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn network_syntax_error_is_a_config_failure_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_net(dir.path(), "{\"domains\": [\n  {\"label\": \"x\", }\n]}");
    let out = run(&["network", "--domains-path", &path, "--total-charge", "0"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr(&out).contains("line 2"), "{}", stderr(&out));
}

#[test]
fn network_missing_capacity_field_is_a_config_failure() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_net(dir.path(), r#"{"domains": [{"label": "x", "N": 6}]}"#);
    let out = run(&["network", "--domains-path", &path, "--total-charge", "0"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr(&out).contains('q'), "{}", stderr(&out));
}

#[test]
fn network_unknown_field_is_a_config_failure() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_net(
        dir.path(),
        r#"{"domains": [{"label": "x", "N": 6, "q": 1, "capcity": 2}]}"#,
    );
    let out = run(&["network", "--domains-path", &path, "--total-charge", "0"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr(&out).contains("capcity"));
}

#[test]
fn network_semantically_invalid_domain_is_a_config_failure() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_net(dir.path(), r#"{"domains": [{"label": "thin", "N": 1, "q": 3}]}"#);
    let out = run(&["network", "--domains-path", &path, "--total-charge", "0"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr(&out).contains("thin"));
}

#[test]
fn network_infeasible_target_is_a_parameter_failure() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_net(dir.path(), r#"{"domains": [{"label": "solo", "N": 4, "q": 1}]}"#);
    let out = run(&["network", "--domains-path", &path, "--total-charge", "1.5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_flags_exit_two() {
    let out = run(&["eval", "--q", "1", "--gamma", "1", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn emitted_csv_round_trips_through_the_library() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("q2.csv");
    let out = run(&[
        "sweep", "--q", "2", "--gamma-min", "-3", "--gamma-max", "3", "--steps", "61",
        "--out-csv", csv.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = fs::read_to_string(&csv).unwrap();
    for line in text.lines().skip(1) {
        let cols: Vec<f64> = line.split(',').map(|c| c.parse().unwrap()).collect();
        let [gamma, w_minus, w_center, w_plus, nu_over_q, entropy] = cols[..] else {
            panic!("bad row: {line}");
        };
        let w = nensemble::weights_from_gamma(2u32, gamma).unwrap();
        assert!((w_minus - w.minus()).abs() <= 5e-12);
        assert!((w_center - w.center()).abs() <= 5e-12);
        assert!((w_plus - w.plus()).abs() <= 5e-12);
        assert!((nu_over_q - w.charge_fraction()).abs() <= 5e-12);
        assert!((entropy - w.entropy()).abs() <= 5e-12);
    }
}
