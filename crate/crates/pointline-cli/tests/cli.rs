//! End-to-end checks of the binary: exit codes, byte determinism, the
//! config-document path and a few physics anchors.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pointline"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

#[test]
fn free_point_scatter_is_all_pass() {
    let out = run(&[
        "scatter",
        "--xi",
        "1.5707963267948966",
        "--alpha",
        "0,0",
        "--beta",
        "0,-1",
        "--k-min",
        "0.1",
        "--k-max",
        "10",
        "--k-count",
        "20",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    let header = lines.next().unwrap();
    assert_eq!(
        header,
        "k,re_r_l,im_r_l,re_t_l,im_t_l,re_r_r,im_r_r,re_t_r,im_t_r,t2"
    );
    for line in lines {
        let t2: f64 = line.split(',').next_back().unwrap().parse().unwrap();
        assert!((t2 - 1.0).abs() < 1e-12);
    }
    let err = String::from_utf8(out.stderr.clone()).unwrap();
    assert!(err.contains("all-pass"));
}

#[test]
fn separated_point_blocks_everything() {
    let out = run(&[
        "scatter",
        "--xi",
        "0.4",
        "--alpha",
        "0.5403023058681398,0.8414709848078965",
        "--beta",
        "0,0",
        "--k-count",
        "10",
    ]);
    assert!(out.status.success());
    for line in stdout(&out).lines().skip(1) {
        let t2: f64 = line.split(',').next_back().unwrap().parse().unwrap();
        assert!(t2.abs() < 1e-20);
    }
    let err = String::from_utf8(out.stderr.clone()).unwrap();
    assert!(err.contains("all-block"));
}

#[test]
fn output_is_byte_deterministic() {
    let args = [
        "spectrum",
        "--theta-plus",
        "2.2",
        "--theta-minus",
        "0.9",
        "--box",
        "dirichlet",
        "--l",
        "1",
        "--levels",
        "12",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout, "same config must emit identical bytes");
    // LF line endings only
    assert!(!stdout(&a).contains('\r'));
}

#[test]
fn dual_spectra_swap_sectors() {
    let out = run(&[
        "dual",
        "--theta-plus",
        "2.2",
        "--theta-minus",
        "0.9",
        "--box",
        "dirichlet",
        "--l",
        "1",
        "--levels",
        "8",
    ]);
    assert!(out.status.success());
    for line in stdout(&out).lines().skip(1) {
        let cols: Vec<&str> = line.split(',').collect();
        let diff: f64 = cols[5].parse().unwrap();
        assert!(diff < 1e-10);
        assert_ne!(cols[2], cols[4], "sector labels must be exchanged");
    }
}

#[test]
fn berry_latitude_matches_prediction() {
    let out = run(&["berry", "--latitude", "1.5707963267948966", "--vertices", "2000"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let line = text.lines().nth(1).unwrap();
    let cols: Vec<&str> = line.split(',').collect();
    let gamma: f64 = cols[3].parse().unwrap();
    let pi = std::f64::consts::PI;
    let dist = ((gamma + pi).rem_euclid(2.0 * pi)).min(2.0 * pi - (gamma + pi).rem_euclid(2.0 * pi));
    assert!(dist < 1e-6, "equator phase must be -pi mod 2pi, got {gamma}");
}

#[test]
fn flow_diagonal_shift_is_one() {
    let dir = std::env::temp_dir().join("pointline_cli_test_flow");
    std::fs::create_dir_all(&dir).unwrap();
    let summary = dir.join("summary.json");
    let out = run(&[
        "flow",
        "--path",
        "diagonal",
        "--steps",
        "200",
        "--levels",
        "6",
        "--summary",
        summary.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&summary).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["uniform_shift"], serde_json::json!(1));
    assert_eq!(v["closed"], serde_json::json!(true));
}

#[test]
fn config_document_replaces_flags() {
    let dir = std::env::temp_dir().join("pointline_cli_test_cfg");
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("cfg.json");
    std::fs::write(
        &cfg,
        r#"{"schema": "pointline-config/1", "command": "scatter",
            "params": {"theta-plus": 1.5707963267948966, "theta-minus": 3.141592653589793,
                       "k-min": 1.0, "k-max": 1.0000001, "k-count": 2}}"#,
    )
    .unwrap();
    let out = run(&["--config", cfg.to_str().unwrap()]);
    assert!(out.status.success());
    // δ with g+ = 1 at kL0 = 1: |t|^2 = 1/2
    let text = stdout(&out);
    let first = text.lines().nth(1).unwrap();
    let t2: f64 = first.split(',').next_back().unwrap().parse().unwrap();
    assert!((t2 - 0.5).abs() < 1e-9);
}

#[test]
fn malformed_inputs_exit_2() {
    // clap-level: unknown flag
    let out = run(&["classify", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
    // domain validation: xi out of range
    let out = run(&["classify", "--xi", "9.9", "--alpha", "1,0", "--beta", "0,0"]);
    assert_eq!(out.status.code(), Some(2));
    // norm violation
    let out = run(&["classify", "--xi", "0", "--alpha", "2,0", "--beta", "0,0"]);
    assert_eq!(out.status.code(), Some(2));
    // bad complex literal
    let out = run(&["classify", "--xi", "0", "--alpha", "1", "--beta", "0,0"]);
    assert_eq!(out.status.code(), Some(2));
    // bad schema
    let dir = std::env::temp_dir().join("pointline_cli_test_bad");
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("bad.json");
    std::fs::write(&cfg, r#"{"schema": "nope", "command": "scatter"}"#).unwrap();
    let out = run(&["--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("pointline-config/1"), "error must carry a schema hint");
}

#[test]
fn classify_reports_witten_point() {
    let out = run(&["classify", "--self-dual", "3.141592653589793"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("witten-point"));
    assert!(text.contains("supersymmetry"));
}

#[test]
fn deg_flag_converts_angles() {
    let a = run(&["classify", "--self-dual", "60", "--deg"]);
    let b = run(&["classify", "--self-dual", "1.0471975511965976"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
}
