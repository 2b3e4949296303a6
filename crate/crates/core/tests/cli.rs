use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn brauer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brauer")).args(args).output().expect("binary runs")
}

fn with_input(name: &str, args: &[&str]) -> Output {
    let path = data(name);
    let mut all = vec!["--input", path.to_str().unwrap()];
    all.extend_from_slice(args);
    brauer(&all)
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [&["classify", "--explain"][..], &["resolve", "--edge", "e1", "--max", "4"], &["relations"]] {
        let a = with_input("triangle.bg.json", args);
        let b = with_input("triangle.bg.json", args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
    }
    let dir = data("");
    let a = brauer(&["--input-dir", dir.to_str().unwrap(), "classify"]);
    let b = brauer(&["--input-dir", dir.to_str().unwrap(), "classify"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn a4_syzygies_have_period_six() {
    let out = with_input("a4.bg.json", &["syzygy", "--edge", "e1", "--max", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["period"], 6);
}

#[test]
fn walk_lists_edges() {
    let out = with_input("a4.bg.json", &["walk", "--edge", "e1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out), serde_json::json!(["e1", "e2", "e3"]));
}

#[test]
fn exit_codes() {
    assert_eq!(with_input("a4.bg.json", &["verify", "--max", "3"]).status.code(), Some(0));
    assert_eq!(with_input("a4.bg.json", &["resolve", "--edge", "e1"]).status.code(), Some(2));
    assert_eq!(with_input("a4.bg.json", &["walk", "--edge", "e9"]).status.code(), Some(1));
    assert_eq!(with_input("triangle.bg.json", &["verify", "--max", "3", "--flip-sign", "e1:2:0:0"]).status.code(), Some(3));
    assert_eq!(with_input("triangle.bg.json", &["verify", "--drop-relation", "0"]).status.code(), Some(3));
    assert_eq!(brauer(&["--input", "/nonexistent.bg.json", "quiver"]).status.code(), Some(1));
    assert_eq!(brauer(&["frobnicate"]).status.code(), Some(1));
}

#[test]
fn invalid_graph_reports_violations() {
    let dir = std::env::temp_dir().join(format!("brauer-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.bg.json");
    std::fs::write(
        &path,
        r#"{"vertices":[{"id":"v1"}],"edges":[{"id":"e1","ends":["v1","v2"]}],"rotation":{"v1":[["e1",0]]}}"#,
    )
    .unwrap();
    let out = brauer(&["--input", path.to_str().unwrap(), "quiver"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout).into_owned() + &String::from_utf8_lossy(&out.stderr);
    assert!(text.contains("v2"), "{text}");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn quiver_renders_dot() {
    let out = with_input("triangle.bg.json", &["--format", "dot", "quiver"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("digraph"));
}

#[test]
fn prime_field_agrees_on_classification() {
    let q = with_input("star3_m2.bg.json", &["classify"]);
    let p = with_input("star3_m2.bg.json", &["--field", "fp:7", "classify"]);
    assert_eq!(json(&q)["homogeneity"], json(&p)["homogeneity"]);
    assert_eq!(json(&q)["d_koszul"], json(&p)["d_koszul"]);
}
