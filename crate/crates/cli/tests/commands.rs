use std::path::Path;

use convexdim::closure::fixtures::nonatomic_bridgeless_geometry;
use convexdim::geometry::fixtures::three_trees;
use convexdim::io::{geometry_to_json, point_set_to_json};
use convexdim_cli::{run, EXIT_INPUT, EXIT_LAW, EXIT_OK};
use serde_json::Value;
use tempfile::TempDir;

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("convexdim").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

fn generated(dir: &TempDir, name: &str, args: &[&str]) -> String {
    let (code, out, err) = cli(args);
    assert_eq!(code, EXIT_OK, "{err}");
    write(dir, name, &out)
}

fn report(path: &str) -> Value {
    let (code, out, err) = cli(&["analyze", path]);
    assert_eq!(code, EXIT_OK, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn generated_files_round_trip_byte_for_byte() {
    let dir = TempDir::new().unwrap();
    let left = generated(&dir, "l.json", &["generate", "es", "2", "1"]);
    let right = generated(&dir, "r.json", &["generate", "random", "3", "5"]);
    let composed = generated(&dir, "c.json", &["generate", "compose", &left, &right]);
    for path in [&left, &right, &composed] {
        let text = std::fs::read_to_string(path).unwrap();
        let parsed = convexdim::io::parse_point_set(&text).unwrap();
        assert_eq!(point_set_to_json(&parsed).unwrap(), text);
    }
    let again = cli(&["generate", "random", "3", "5"]).1;
    assert_eq!(again, std::fs::read_to_string(&right).unwrap());
}

#[test]
fn three_trees_report() {
    let dir = TempDir::new().unwrap();
    let path = write(
        &dir,
        "three_trees.json",
        &point_set_to_json(&three_trees()).unwrap(),
    );
    let r = report(&path);
    assert_eq!(r["copoints"], 12);
    assert_eq!(r["critical_pairs"], 12);
    assert_eq!(r["dim"], 4);
    assert_eq!(r["chiG"], 4);
    assert_eq!(r["chiH"], 4);
    assert_eq!(r["b"], 4);
    assert_eq!(r["cdim"], 6);
    assert_eq!(r["large_hyperedges"], 2);
}

#[test]
fn nonatomic_bridgeless_report() {
    let dir = TempDir::new().unwrap();
    let family = geometry_to_json(&nonatomic_bridgeless_geometry()).unwrap();
    let path = write(&dir, "bridgeless.json", &family);
    let r = report(&path);
    assert_eq!(r["atomic"], false);
    assert_eq!(r["two_edge_connected"], true);
    assert_eq!(r["critical_pairs"], 6);
    let (code, out, _) = cli(&["export", &path, "--kind", "family"]);
    assert_eq!(code, EXIT_OK);
    let reparsed = write(&dir, "again.json", &out);
    assert_eq!(report(&reparsed), r);
}

#[test]
fn xes_two_report() {
    let dir = TempDir::new().unwrap();
    let path = generated(&dir, "xes2.json", &["generate", "xes", "2"]);
    let r = report(&path);
    assert_eq!(
        (r["dim"].clone(), r["b"].clone(), r["cdim"].clone()),
        (3.into(), 3.into(), 3.into())
    );
    let (code, out, _) = cli(&["verify", &path]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("n=4 "), "{out}");
    assert!(!out.contains("FAIL"), "{out}");
}

#[test]
fn report_file_and_dot_output() {
    let dir = TempDir::new().unwrap();
    let input = generated(&dir, "es.json", &["generate", "es", "2", "2"]);
    let report_path = dir.path().join("report.json");
    let prefix = dir.path().join("g");
    let (code, out, err) = cli(&[
        "analyze",
        &input,
        "--report",
        &report_path.display().to_string(),
        "--dot",
        &prefix.display().to_string(),
    ]);
    assert_eq!(code, EXIT_OK, "{err}");
    assert!(out.starts_with("n=6 "), "{out}");
    let saved: Value =
        serde_json::from_str(&std::fs::read_to_string(&report_path).unwrap()).unwrap();
    assert_eq!(saved["n"], 6);
    for kind in ["copoint_graph", "critical_digraph", "copoint_poset"] {
        let dot = std::fs::read_to_string(dir.path().join(format!("g_{kind}.dot"))).unwrap();
        assert!(dot.trim_end().ends_with('}'), "{kind}");
        let header = if kind == "critical_digraph" || kind == "copoint_poset" {
            "digraph"
        } else {
            "graph"
        };
        assert!(dot.starts_with(header), "{kind}: {dot}");
        assert!(dot.contains('@'), "{kind}");
    }
    let (code, poset, _) = cli(&["export", &input, "--kind", "copoint-poset"]);
    assert_eq!(code, EXIT_OK);
    assert!(poset.contains("rankdir=BT"));
}

#[test]
fn input_errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let missing = dir.path().join("missing.json").display().to_string();
    assert_eq!(cli(&["analyze", &missing]).0, EXIT_INPUT);
    let junk = write(&dir, "junk.json", "{\"neither\": 1}");
    assert_eq!(cli(&["verify", &junk]).0, EXIT_INPUT);
    // {1,2} and {2,3} closed but {2} missing
    let bad = write(
        &dir,
        "bad.json",
        r#"{"ground": ["1", "2", "3"], "closed_sets": [[], ["1", "2"], ["2", "3"], ["1", "2", "3"]]}"#,
    );
    let (code, _, err) = cli(&["analyze", &bad]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("{2}"), "{err}");
    let doubled = write(
        &dir,
        "doubled.json",
        r#"{"points": [{"label": "a", "x": "0", "y": "0"}, {"label": "b", "x": "0", "y": "0"}]}"#,
    );
    assert_eq!(cli(&["analyze", &doubled]).0, EXIT_INPUT);
    assert_eq!(cli(&["generate", "xes", "9"]).0, EXIT_INPUT);
    assert_eq!(cli(&["generate", "random", "0", "1"]).0, EXIT_INPUT);
    assert_eq!(
        cli(&["search", "--max-n", "3", "--count", "1"]).0,
        EXIT_INPUT
    );
    assert_eq!(cli(&["no-such-command"]).0, EXIT_INPUT);
}

#[test]
fn collinear_sets_skip_planar_laws() {
    let dir = TempDir::new().unwrap();
    let line = write(
        &dir,
        "line.json",
        r#"{"points": [{"label": "a", "x": "0", "y": "0"}, {"label": "b", "x": "1", "y": "1"}, {"label": "c", "x": "2", "y": "2"}]}"#,
    );
    let (code, out, err) = cli(&["verify", &line]);
    assert_eq!(code, EXIT_OK, "{err}");
    assert!(out.contains("SKIP"), "{out}");
}

#[test]
fn law_failure_exits_with_three() {
    assert_eq!(
        convexdim_cli::Failure::Law("x".into()).exit_code(),
        EXIT_LAW
    );
}

#[test]
fn search_writes_summary() {
    let (code, out, err) = cli(&["search", "--seed", "3", "--count", "6", "--max-n", "6"]);
    assert_eq!(code, EXIT_OK, "{err}");
    assert!(err.contains("6 instances"), "{err}");
    let summary: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(summary["instances"], 6);
    assert_eq!(summary["law_failures"], Value::Array(vec![]));
}

#[test]
fn search_over_a_directory() {
    let dir = TempDir::new().unwrap();
    generated(&dir, "a.json", &["generate", "xes", "2"]);
    write(&dir, "b.json", &point_set_to_json(&three_trees()).unwrap());
    write(&dir, "notes.txt", "ignored");
    let path = dir.path().display().to_string();
    let (code, out, err) = cli(&["search", "--from-dir", &path, "--workers", "2"]);
    assert_eq!(code, EXIT_OK, "{err}");
    let summary: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(summary["instances"], 2);
    assert!(Path::new(&path).join("notes.txt").exists());
}
