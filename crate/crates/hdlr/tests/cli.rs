//! Command-line behavior: outputs, exit codes, cache handling.

use std::path::Path;
use std::process::{Command, Output};

fn hdlr(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hdlr")).args(args).env("HDLR_CACHE_DIR", cache).output().expect("run hdlr")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn hirzebruch_text_has_negative_constant() {
    let dir = tempfile::tempdir().unwrap();
    let o = hdlr(dir.path(), &["toric", "--builtin", "hirzebruch"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("csm(Ω_2) csm(Ω_2) = (-h^2)*csm(Ω_1)"), "{text}");
    assert!(text.contains("csm(Ω_4) csm(Ω_4) = (h^2)*csm(Ω_4) + (2*h^2)*csm(Ω_3) + (h^2)*csm(Ω_2) + (h^2)*csm(Ω_1)"));
}

#[test]
fn latex_and_json_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let o = hdlr(dir.path(), &["toric", "--builtin", "hirzebruch", "--format", "latex"]);
    assert!(stdout(&o).starts_with("\\begin{align*}"));
    let o = hdlr(dir.path(), &["toric", "--builtin", "a2", "--format", "json"]);
    assert!(o.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["labels"].as_array().unwrap().len(), 6);
}

#[test]
fn projective_mc_table() {
    let dir = tempfile::tempdir().unwrap();
    let o = hdlr(dir.path(), &["toric", "--builtin", "projective", "--m", "1", "--kind", "mc", "--format", "csv"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("i,j,k,value\n"));
}

#[test]
fn invalid_fan_exits_2_with_report() {
    let dir = tempfile::tempdir().unwrap();
    let fan = dir.path().join("fan.json");
    std::fs::write(&fan, r#"{"dim":2,"rays":[[1,0],[1,2],[0,1]],"max_cones":[[1,2],[2,3]]}"#).unwrap();
    let o = hdlr(dir.path(), &["toric", "--fan", fan.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("smooth: false"), "{err}");
}

#[test]
fn grassmannian_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let o = hdlr(dir.path(), &["gr", "--d", "1", "--n", "3"]);
    assert!(stdout(&o).contains("csm(Ω_3) csm(Ω_3) = (h^2)*csm(Ω_3) + (2*h^2)*csm(Ω_2) + (3*h^2)*csm(Ω_1)"));
    let o = hdlr(dir.path(), &["gr", "--d", "2", "--n", "4", "--triple", "34,34,14"]);
    assert_eq!(stdout(&o), "7*h^4\n");
    let o = hdlr(dir.path(), &["gr", "--d", "2", "--n", "4", "--triple", "23,23,12", "--term", "23"]);
    assert_eq!(stdout(&o), "h*(z3 - z4)*(z2 - z4)*(z1 - z3 + h)*(z1 - z2 + h)^2/((z1 - z3)*(z1 - z2))\n");
}

#[test]
fn over_budget_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let o = hdlr(dir.path(), &["gr", "--d", "3", "--n", "7", "--triple", "123,123,123"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(hdlr(dir.path(), &["verify", "--suite", "identities"]).status.code(), Some(0));
    assert_eq!(hdlr(dir.path(), &["verify", "--suite", "tables"]).status.code(), Some(1));
    assert_eq!(hdlr(dir.path(), &["verify", "--suite", "nonsense"]).status.code(), Some(1));
}

#[test]
fn cache_inspect_and_clear() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    hdlr(&cache, &["gr", "--d", "1", "--n", "3", "--triple", "3,3,1"]);
    let o = hdlr(&cache, &["cache", "inspect"]);
    assert!(stdout(&o).contains("entries: 1"), "{}", stdout(&o));
    assert!(hdlr(&cache, &["cache", "clear"]).status.success());
    assert!(stdout(&hdlr(&cache, &["cache", "inspect"])).contains("entries: 0"));
}

#[test]
fn repeated_runs_are_identical() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["verify", "--suite", "residues", "--format", "json"];
    let a = hdlr(dir.path(), &args);
    let b = hdlr(dir.path(), &args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = hdlr(dir.path(), &["gr", "--d", "2", "--n", "4", "--theory", "K", "--format", "json"]);
    let d = hdlr(dir.path(), &["gr", "--d", "2", "--n", "4", "--theory", "K", "--format", "json"]);
    assert_eq!(c.stdout, d.stdout);
}

#[test]
fn output_file_is_written() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.txt");
    let o = hdlr(dir.path(), &["-o", out.to_str().unwrap(), "gr", "--d", "1", "--n", "2"]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert!(std::fs::read_to_string(out).unwrap().contains("space: Gr(1,2)"));
}
