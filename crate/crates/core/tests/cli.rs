//! End-to-end runs of the command-line tool.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn skewdg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewdg")).args(args).env_remove("SKEWDG_FIELD").output().expect("binary runs")
}

fn out_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("skewdg-cli-{}-{name}.json", std::process::id()))
}

fn json_of(args: &[&str], name: &str) -> (i32, Value, String) {
    let path = out_path(name);
    let mut full = args.to_vec();
    let p = path.to_str().unwrap();
    full.extend(["--out", p]);
    let o = skewdg(&full);
    let text = std::fs::read_to_string(&path).unwrap_or_default();
    let _ = std::fs::remove_file(&path);
    (o.status.code().unwrap(), serde_json::from_str(&text).unwrap_or(Value::Null), text)
}

#[test]
fn classify_reports_case_and_verdict() {
    let (code, v, _) = json_of(&["classify", "--matrix", "[[1,1,0],[1,1,0],[1,1,0]]"], "classify");
    assert_eq!(code, 0);
    assert_eq!(v["case"], "R1c");
    assert_eq!(v["predicted_gorenstein"], "NonGorenstein");
}

#[test]
fn cohomology_of_the_identity() {
    let (code, v, _) = json_of(&["cohomology", "--matrix", "[[1,0,0],[0,1,0],[0,0,1]]", "--max-degree", "8"], "identity");
    assert_eq!(code, 0);
    assert_eq!(v["dims"], serde_json::json!([1, 0, 0, 0, 0, 0, 0, 0, 0]));
}

#[test]
fn config_file_and_flag_override() {
    let cfg = out_path("config-input");
    std::fs::write(&cfg, r#"{"matrix": [[1, 0, 0], [0, 1, 0], [0, 0, 0]], "field": {"Fp": 101}, "max_degree": 4}"#).unwrap();
    let c = cfg.to_str().unwrap();
    let (code, v, _) = json_of(&["cohomology", "--config", c], "config");
    assert_eq!((code, v["dims"].clone(), v["field"].clone()), (0, serde_json::json!([1, 1, 1, 1, 1]), Value::String("Fp:101".into())));
    let (_, v, _) = json_of(&["cohomology", "--config", c, "--max-degree", "2", "--field", "Q"], "config-override");
    assert_eq!((v["dims"].clone(), v["field"].clone()), (serde_json::json!([1, 1, 1]), Value::String("Q".into())));
    let _ = std::fs::remove_file(cfg);
}

#[test]
fn json_is_byte_identical_across_runs() {
    let args = ["crosscheck", "--matrix", "[[2,1,1],[2,1,1],[2,1,1]]", "--max-degree", "5"];
    let (c1, _, a) = json_of(&args, "det-a");
    let (c2, _, b) = json_of(&args, "det-b");
    assert_eq!((c1, c2), (0, 0));
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn exit_statuses() {
    let bad_prime = skewdg(&["classify", "--matrix", "[[1,0,0],[0,0,0],[0,0,0]]", "--field", "Fp:9"]);
    assert_eq!(bad_prime.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad_prime.stderr).contains("prime"));
    let malformed = skewdg(&["classify", "--matrix", "[[1,0],[0,1]]"]);
    assert_eq!(malformed.status.code(), Some(2));
    let bounds = skewdg(&["gorenstein", "--matrix", "[[1,1,1],[1,1,1],[1,1,1]]", "--hom-bound", "9", "--int-bound", "4"]);
    assert_eq!(bounds.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bounds.stderr).contains("bound insufficient"));
    assert_eq!(skewdg(&["no-such-command"]).status.code(), Some(2));
    // The predicted presentation misses a relation here, so crosscheck reports a falsification.
    assert_eq!(skewdg(&["crosscheck", "--matrix", "[[1,1,0],[1,1,0],[1,1,0]]", "--max-degree", "5"]).status.code(), Some(1));
}

#[test]
fn transform_and_presentation_certificates() {
    let (code, v, _) = json_of(&["transform", "--matrix", "[[1,1,0],[1,1,0],[1,1,0]]", "--transform", "[[0,2,0],[0,0,-1],[\"1/3\",0,0]]", "--max-degree", "5"], "transform");
    assert_eq!(code, 0);
    assert_eq!(v["dims_original"], v["dims_transformed"]);
    let (code, v, _) = json_of(&["gorenstein", "--presentation", "gen x:1, y:1; rel y*y"], "presentation");
    assert_eq!(code, 0);
    assert_eq!(v["left"]["verdict"], "NonGorenstein");
}

#[test]
fn acceptance_runs_the_suite() {
    let help = skewdg(&["--help"]);
    assert!(String::from_utf8_lossy(&help.stdout).contains("acceptance"));
    let o = skewdg(&["acceptance"]);
    let text = String::from_utf8_lossy(&o.stdout);
    assert_eq!(text.lines().filter(|l| l.starts_with("criterion")).count(), 12);
    assert_eq!(o.status.code(), Some(0), "{text}");
}
