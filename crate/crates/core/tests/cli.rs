use std::path::Path;
use std::process::{Command, Output};

fn fano(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fano-pentad")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_owned()
}

const PENTAGRAM: &str = r#"{"contexts": [
  ["XII", "IYI", "IIY", "XYY"],
  ["YII", "IXI", "IIY", "YXY"],
  ["YII", "IYI", "IIX", "YYX"],
  ["XII", "IXI", "IIX", "XXX"],
  ["XYY", "YXY", "YYX", "XXX"]
]}"#;

#[test]
fn enumerate_points_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("points.csv");
    let o = fano(&["enumerate", "points", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "63");
    let table = std::fs::read_to_string(&out).unwrap();
    assert_eq!(table.lines().count(), 64);
    assert_eq!(table.lines().nth(1), Some("1,IIX,A"));
}

#[test]
fn enumerate_planes_json_with_coords() {
    let o = fano(&["enumerate", "planes", "--format", "json", "--coords"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<serde_json::Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rows.len(), 135);
    assert!(rows[0].get("coords").is_some());
    assert_eq!(String::from_utf8_lossy(&o.stderr).trim(), "135");
}

#[test]
fn usage_errors() {
    assert_eq!(fano(&["enumerate", "points", "--bogus"]).status.code(), Some(2));
    assert_eq!(fano(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(fano(&["show", "--pentad", "12096"]).status.code(), Some(2));
    assert_eq!(fano(&["verify", "/nonexistent/contexts.json"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let good = fano(&["verify", &write(dir.path(), "pentagram.json", PENTAGRAM)]);
    assert_eq!(good.status.code(), Some(0));
    assert!(stdout(&good).contains("10_2 \u{2212} 5_4"));

    let single = fano(&["verify", &write(dir.path(), "single.json", r#"{"contexts": [["XII", "IXI", "XXI"]]}"#)]);
    assert_eq!(single.status.code(), Some(1));

    let json = fano(&[
        "verify",
        "--format",
        "json",
        &write(dir.path(), "open.json", r#"{"contexts": [["XII", "IXI", "IIX"]]}"#),
    ]);
    assert_eq!(json.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["report"]["verdict"], "malformed_context");

    let bad = fano(&["verify", &write(dir.path(), "bad.json", r#"{"contexts": [["QXI", "IXI", "QII"]]}"#)]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).starts_with("error:"));
}

#[test]
fn show_config() {
    let o = fano(&["show", "--pentad", "0", "--as", "config"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("observables (25)"));
    assert!(text.contains("contexts (30)"));
    assert!(text.contains("10_6 15_2 \u{2212} 30_3"));
}

#[test]
fn census_with_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.json");
    let cache = cache.to_str().unwrap();
    let first = fano(&["census", "--cache", cache, "--threads", "2"]);
    assert_eq!(first.status.code(), Some(0));
    assert!(Path::new(cache).exists());
    let second = fano(&["census", "--cache", cache]);
    assert_eq!(second.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(stdout(&first).lines().count(), 48);

    assert_eq!(fano(&["table1", "--cache", cache]).status.code(), Some(0));
    assert_eq!(fano(&["laws", "--cache", cache]).status.code(), Some(0));
}

#[test]
fn corrupt_cache_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let cache = write(dir.path(), "cache.json", "{\"version\":\"something else\"}\n");
    assert_eq!(fano(&["census", "--cache", &cache]).status.code(), Some(2));
}
