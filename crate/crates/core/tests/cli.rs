use std::path::Path;
use std::process::{Command, Output};

use liejordan::foundation::rat;
use liejordan::io::{read_cls, read_lie, write_lie};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liejordan")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn text(o: &Output) -> String {
    format!("{}{}", String::from_utf8_lossy(&o.stdout), String::from_utf8_lossy(&o.stderr))
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

#[test]
fn build_then_verify_succeeds() {
    let dir = tempfile::tempdir().unwrap();
    let out = path(dir.path(), "so5.json");
    let o = run(&["build", "--model", "maximal:1", "--out", &out]);
    assert_eq!(code(&o), 0, "{}", text(&o));
    let o = run(&["verify", &out, "--checks", "jacobi,simple"]);
    assert_eq!(code(&o), 0, "{}", text(&o));
    let o = run(&["verify", &out, "--mode", "sampled", "--samples", "200", "--json"]);
    assert_eq!(code(&o), 0, "{}", text(&o));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(report.to_string().contains("jacobi"));
}

#[test]
fn round_trip_through_files_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    for model in ["maximal:1", "sl:5:1", "so-even-spin:3", "sp:3:2"] {
        let lie = path(dir.path(), "a.json");
        let triple = path(dir.path(), "t.json");
        let ljs = path(dir.path(), "s.json");
        let again = path(dir.path(), "b.json");
        assert_eq!(code(&run(&["build", "--model", model, "--out", &lie, "--triple-out", &triple])), 0);
        let o = run(&["decompose", &lie, "--triple", &triple, "--out", &ljs]);
        assert_eq!(code(&o), 0, "{model}: {}", text(&o));
        assert_eq!(code(&run(&["build", "--structure", &ljs, "--out", &again])), 0);
        assert_eq!(std::fs::read(&lie).unwrap(), std::fs::read(&again).unwrap(), "{model}");
        let exported = path(dir.path(), "e.json");
        assert_eq!(code(&run(&["export", "--model", model, "--format", "ljs-v1", "--out", &exported])), 0);
        assert_eq!(std::fs::read(&ljs).unwrap(), std::fs::read(&exported).unwrap(), "{model}");
    }
}

#[test]
fn perturbed_file_names_the_violating_triple() {
    let dir = tempfile::tempdir().unwrap();
    let good = path(dir.path(), "good.json");
    assert_eq!(code(&run(&["build", "--model", "maximal:1", "--out", &good])), 0);
    let l = read_lie(&std::fs::read_to_string(&good).unwrap()).unwrap();
    let bad = path(dir.path(), "bad.json");
    std::fs::write(&bad, write_lie(&l.perturbed(0, 1, 5, &rat(1)))).unwrap();
    let o = run(&["verify", &bad, "--checks", "jacobi"]);
    assert_eq!(code(&o), 1, "{}", text(&o));
    assert!(text(&o).contains("Jacobi identity fails on basis triple"), "{}", text(&o));
}

#[test]
fn classify_writes_cls_json() {
    let o = run(&["classify", "--type", "G", "--rank", "2"]);
    assert_eq!(code(&o), 0, "{}", text(&o));
    let rows = read_cls(&String::from_utf8(o.stdout.clone()).unwrap()).unwrap();
    assert_eq!(rows.len(), 1);
    assert!(rows[0].exists);
    assert_eq!(rows[0].dims, (3, 4, 1));
    // Byte-stable for a fixed seed.
    assert_eq!(run(&["classify", "--type", "G", "--rank", "2"]).stdout, o.stdout);
}

#[test]
fn models_list_names_every_family() {
    let o = run(&["models", "--list"]);
    assert_eq!(code(&o), 0);
    let t = text(&o);
    for name in ["maximal:n", "sl:n:i", "so-odd:n:i", "so-even:n:i", "so-even-spin:n", "sp:n:i"] {
        assert!(t.contains(name), "{name} missing from\n{t}");
    }
}

#[test]
fn error_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    // Invalid parameters.
    assert_eq!(code(&run(&["build", "--model", "sl:4:2"])), 3);
    assert_eq!(code(&run(&["build", "--model", "so-odd:3:1"])), 3);
    assert_eq!(code(&run(&["classify", "--type", "Q", "--rank", "2"])), 3);
    assert_eq!(code(&run(&["classify", "--type", "E", "--rank", "5"])), 3);
    assert_eq!(code(&run(&["frobnicate"])), 3);
    // Malformed input.
    let junk = path(dir.path(), "junk.json");
    std::fs::write(&junk, "{ not json").unwrap();
    assert_eq!(code(&run(&["verify", &junk])), 2);
    assert_eq!(code(&run(&["verify", &path(dir.path(), "missing.json")])), 2);
    let wrong = path(dir.path(), "wrong.json");
    std::fs::write(&wrong, r#"{"dim":2,"labels":["a","b"],"brackets":[{"i":1,"j":0,"terms":[]}]}"#).unwrap();
    assert_eq!(code(&run(&["verify", &wrong])), 2);
}
