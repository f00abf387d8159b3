use std::{fs, path::Path, process::Command};

use serde_json::Value;

fn symprod(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_symprod")).args(args).output().expect("binary runs")
}

fn report(out: &std::process::Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn unknown_flag_exits_two() {
    assert_eq!(symprod(&["transform", "--bogus"]).status.code(), Some(2));
}

#[test]
fn bad_descriptor_exits_two() {
    assert_eq!(symprod(&["transform", "--domain", "hexagon 1"]).status.code(), Some(2));
    assert_eq!(symprod(&["holder", "--nodes", "7"]).status.code(), Some(2));
}

#[test]
fn identities_pass_on_the_disc() {
    let out = symprod(&["identities", "--domain", "disc 0 0 1", "--n", "3", "--nodes", "256", "--samples", "50"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let r = report(&out);
    assert_eq!(r["passed"], Value::Bool(true));
    for key in ["cauchy", "norlund", "genocchi_hermite", "pushforward", "derivative", "newton"] {
        assert!(r["results"][key].is_object(), "missing {key}");
    }
}

#[test]
fn annulus_census_finds_six_components() {
    let out = symprod(&["components", "--domain", "annulus 0 0 0.3 1", "--n", "2", "--samples", "5000"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["results"]["distinct"], Value::from(6));
}

#[test]
fn reports_carry_meta() {
    let out = symprod(&["transform", "--samples", "4", "--seed", "7"]);
    let r = report(&out);
    assert_eq!(r["meta"]["seed"], Value::from(7));
    assert!(r["meta"]["version"].is_string());
    assert!(r["meta"]["config"].is_object());
}

fn artifacts(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut files: Vec<_> = fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let p = e.unwrap().path();
            (p.file_name().unwrap().to_string_lossy().into_owned(), fs::read(&p).unwrap())
        })
        .collect();
    files.sort();
    files
}

#[test]
fn runs_are_byte_identical() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let base = ["holder", "--samples", "300", "--n", "2"];
    for dir in [&a, &b] {
        let mut args = base.to_vec();
        let path = dir.path().to_str().unwrap();
        args.extend(["--out", path]);
        let out = symprod(&args);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    }
    let (fa, fb) = (artifacts(a.path()), artifacts(b.path()));
    assert!(fa.iter().any(|(n, _)| n == "report.json"));
    assert!(fa.iter().any(|(n, _)| n.ends_with(".csv")));
    assert_eq!(fa, fb);
}

#[test]
fn config_file_is_overridden_by_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    fs::write(&cfg, "# census\ndomain = annulus 0 0 0.3 1\nn = 3; samples = 2000\nseed = 5\n").unwrap();
    let out = symprod(&["components", "--config", cfg.to_str().unwrap(), "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["meta"]["seed"], Value::from(5));
    assert_eq!(r["results"]["n"], Value::from(2));
    assert_eq!(r["results"]["distinct"], Value::from(6));
}

#[test]
fn unknown_config_key_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.cfg");
    fs::write(&cfg, "colour = blue\n").unwrap();
    assert_eq!(symprod(&["transform", "--config", cfg.to_str().unwrap()]).status.code(), Some(2));
}
