use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewgentle")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn temp_file(name: &str, body: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("skewgentle-{}-{name}", std::process::id()));
    std::fs::File::create(&path).unwrap().write_all(body.as_bytes()).unwrap();
    path
}

const E3_JSON: &str = r#"{
  "vertices": ["1", "2", "3", "4"],
  "arrows": [
    {"name": "a1", "source": "3", "target": "1"},
    {"name": "a2", "source": "1", "target": "2"},
    {"name": "a4", "source": "3", "target": "2"},
    {"name": "a3", "source": "2", "target": "4"}
  ],
  "relations": [["a1", "a2"], ["a4", "a3"]],
  "special": ["4"]
}"#;

#[test]
fn invariants_of_a_json_file() {
    let path = temp_file("e3.json", E3_JSON);
    let o = run(&["--format", "json", "invariants", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["gorenstein"], 2);
    assert_eq!(v["profile"], serde_json::json!([]));
    std::fs::remove_file(path).ok();
}

#[test]
fn present_fixture() {
    let o = run(&["present", "fixture:e1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("(2,a3,1+)"));
    assert!(text.contains("(2,a3,1-)"));
}

#[test]
fn malformed_json_exits_with_two() {
    let path = temp_file("bad.json", "{ not json");
    let o = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
    std::fs::remove_file(path).ok();
    assert_eq!(run(&["validate", "/nonexistent/skewgentle.json"]).status.code(), Some(2));
    assert_eq!(run(&["validate", "fixture:nope"]).status.code(), Some(2));
}

#[test]
fn invalid_algebra_exits_with_one() {
    let body = r#"{"vertices": ["1", "2", "3"], "arrows": [
        {"name": "a", "source": "1", "target": "2"}, {"name": "b", "source": "2", "target": "3"}],
        "relations": [], "special": ["2"]}"#;
    let path = temp_file("invalid.json", body);
    let o = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    std::fs::remove_file(path).ok();
}

#[test]
fn word_and_curve_commands() {
    let o = run(&["word2curve", "fixture:e3", "a2.a3,a3~,a4~ (1,2,1,0)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("with grading (1,2,1,0)"));
    let o = run(&["--format", "json", "word2curve", "fixture:e3", "band:a2.a3,a3~,a4~,a1 (0,1,0,-1,0)"]);
    let curve = stdout(&o);
    let path = temp_file("curve.json", &curve);
    let back = run(&["curve2word", "fixture:e3", path.to_str().unwrap()]);
    assert_eq!(back.status.code(), Some(0), "{}", String::from_utf8_lossy(&back.stderr));
    assert!(stdout(&back).contains("band:"));
    std::fs::remove_file(path).ok();
    assert_eq!(run(&["word2curve", "fixture:e3", "a1.a2"]).status.code(), Some(1));
}

#[test]
fn complex_command() {
    let o = run(&["complex", "fixture:e3", "band:a2.a3,a3~,a4~,a1 (0,1,0,-1,0)", "--poly=2,1"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert!(text.contains("degree -1: P3"));
    assert!(text.contains("degree 1: P4+ + P4-"));
}

#[test]
fn dot_only_for_pictures() {
    let o = run(&["--format", "dot", "surface", "fixture:e2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("graph"));
    assert_eq!(run(&["--format", "dot", "invariants", "fixture:e3"]).status.code(), Some(2));
}

#[test]
fn small_roundtrip_passes() {
    let o = run(&["roundtrip", "--count", "2", "--max-letters", "3", "--max-arrows", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("mismatches 0"));
}
