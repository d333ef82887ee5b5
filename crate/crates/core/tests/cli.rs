//! End-to-end checks of the `zerodyn` binary: formats, exit codes and the
//! tolerance profile environment variable.

use std::process::Command;

use serde_json::Value;
use zerodyn::cli::{parse_trajectory_csv, CSV_HEADER, EXIT_CONFIG, EXIT_FAILED, EXIT_OK, EXIT_SINGULAR};

fn zerodyn(args: &[&str], env: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_zerodyn"));
    cmd.args(args).env_remove("ZERODYN_TOL_PROFILE");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn temp_path(name: &str) -> std::path::PathBuf {
    std::env::temp_dir().join(format!("zerodyn-{}-{name}", std::process::id()))
}

#[test]
fn solve_csv_has_the_schema() {
    let (code, out, _) = zerodyn(&["solve", "--model", "4i12d", "--param", "a=1", "--param", "b=1", "--x0", "0.1,0.2+0.1i", "--t", "0:1:11"], &[]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().next(), Some(CSV_HEADER));
    let rows = parse_trajectory_csv(&out).unwrap();
    assert_eq!(rows.len(), 11);
    assert_eq!(rows[0].1[0].re, 0.1);
    assert_eq!(rows[0].1[1].im, 0.1);
}

#[test]
fn solve_json_document() {
    let (code, out, _) = zerodyn(&["solve", "--model", "4.(i)1.2d", "--param", "a=1", "--param", "b=1", "--format", "json", "--t", "0:0.5:6"], &[]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], "zerodyn.trajectory");
    assert_eq!(v["version"], 1);
    assert_eq!(v["source"], "4.(i)1.2d");
    assert_eq!(v["trajectory"]["times"].as_array().unwrap().len(), 6);
}

#[test]
fn blow_up_writes_partial_output_and_exits_3() {
    // canonical system with a2 = 0, b2 = 1: y1 has a pole at t = 1/2
    let (code, out, err) = zerodyn(&["solve", "--plane", "9,1,6;9,1,6", "--x0", "0.1,0.2", "--t", "0:1:51"], &[]);
    assert_eq!(code, EXIT_SINGULAR, "{err}");
    let rows = parse_trajectory_csv(&out).unwrap();
    assert!(rows.len() > 20 && rows.len() < 51);
    assert!(out.lines().last().unwrap().contains("stopped at t="));
    assert!(err.contains("stopped"));
}

#[test]
fn configuration_errors_exit_2() {
    assert_eq!(zerodyn(&["solve", "--model", "4i99z", "--param", "a=1"], &[]).0, EXIT_CONFIG);
    assert_eq!(zerodyn(&["solve", "--model", "4i12d", "--param", "a=1+"], &[]).0, EXIT_CONFIG);
    assert_eq!(zerodyn(&["solve", "--model", "4i12d", "--param", "a=1"], &[]).0, EXIT_CONFIG);
    assert_eq!(zerodyn(&["reduce", "--table", "1,2;3"], &[]).0, EXIT_CONFIG);
    assert_eq!(zerodyn(&["frobnicate"], &[]).0, EXIT_CONFIG);
    assert_eq!(zerodyn(&["catalog", "list"], &[("ZERODYN_TOL_PROFILE", "sloppy")]).0, EXIT_CONFIG);
    assert_eq!(zerodyn(&["catalog", "list", "--set-tol", "nonsense=1"], &[]).0, EXIT_CONFIG);
}

#[test]
fn profile_from_environment_and_flag() {
    let args = ["verify", "--model", "4i12a", "--samples", "5", "--trajectories", "1"];
    let rhs = |out: &str| serde_json::from_str::<Value>(out).unwrap()["tolerances"]["rhs_match"].as_f64().unwrap();
    let (code, base, _) = zerodyn(&args, &[]);
    assert_eq!(code, EXIT_OK);
    let (_, strict, _) = zerodyn(&args, &[("ZERODYN_TOL_PROFILE", "strict")]);
    assert!((rhs(&strict) - rhs(&base) / 10.0).abs() < 1e-12 * rhs(&base));
    let mut flagged = vec!["--tol-profile", "loose"];
    flagged.extend(args);
    let (_, loose, _) = zerodyn(&flagged, &[("ZERODYN_TOL_PROFILE", "strict")]);
    assert!((rhs(&loose) - rhs(&base) * 100.0).abs() < 1e-12 * rhs(&loose));
}

#[test]
fn verify_fails_below_the_numerical_floor() {
    let (code, out, _) = zerodyn(&["verify", "--model", "4i12a", "--samples", "5", "--trajectories", "0", "--tol", "1e-30"], &[]);
    assert_eq!(code, EXIT_FAILED);
    assert_eq!(serde_json::from_str::<Value>(&out).unwrap()["pass"], false);
}

#[test]
fn exported_catalog_loads_back() {
    let path = temp_path("catalog.json");
    let (code, _, _) = zerodyn(&["catalog", "export", "-o", path.to_str().unwrap()], &[]);
    assert_eq!(code, EXIT_OK);
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["schema"], "zerodyn.catalog");
    assert_eq!(doc["version"], 1);
    let (_, builtin, _) = zerodyn(&["catalog", "list", "--format", "json"], &[]);
    let (code, loaded, _) = zerodyn(&["--catalog", path.to_str().unwrap(), "catalog", "list", "--format", "json"], &[]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(builtin, loaded);
    let listing: Value = serde_json::from_str(&loaded).unwrap();
    assert_eq!(listing["entries"], 44);
    assert_eq!(listing["distinct"], 34);
    let _ = std::fs::remove_file(path);
}

#[test]
fn reduce_reports_reducibility() {
    // canonical table for a2 = b2 = 1
    let (code, out, _) = zerodyn(&["reduce", "--table", "12,1,7;9,2,9"], &[]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["reducible"], true);
    assert!(v["round_trip"].as_f64().unwrap() < 1e-9);
    let (code, out, _) = zerodyn(&["reduce", "--table", "1,0,0;0,1,0"], &[]);
    assert_eq!(code, EXIT_FAILED);
    assert_eq!(serde_json::from_str::<Value>(&out).unwrap()["reducible"], false);
}

#[test]
fn isochrony_finds_a_multiple_of_two_pi() {
    let (code, out, _) = zerodyn(&["isochrony", "--a2", "1", "--b2", "1", "--z0", "0.03+0.01i,-0.02+0.02i"], &[]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    let q = v["estimate"]["multiple"].as_u64().unwrap();
    let period = v["estimate"]["period"].as_f64().unwrap();
    assert!((period - q as f64 * std::f64::consts::TAU).abs() < 1e-9);
    assert!(v["estimate"]["deviation"].as_f64().unwrap() < 1e-6);
}

#[test]
fn output_file_matches_stdout() {
    let path = temp_path("traj.csv");
    let args = ["solve", "--model", "4ii12a", "--param", "a=0.5", "--param", "b=-0.3i", "--seed", "9", "--t", "0:0.4:5"];
    let (c1, stdout, _) = zerodyn(&args, &[]);
    let mut with_file = args.to_vec();
    with_file.extend(["-o", path.to_str().unwrap()]);
    let (c2, empty, _) = zerodyn(&with_file, &[]);
    assert_eq!((c1, c2), (EXIT_OK, EXIT_OK));
    assert!(empty.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout);
    let _ = std::fs::remove_file(path);
}
