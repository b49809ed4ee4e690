use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

mod support;
use support::{golden_cases, golden_dir};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_foldcheck"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).env_remove("FOLDCHECK_THREADS").output().unwrap()
}

#[test]
fn outputs_match_golden_files() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for (file, argv, exit) in golden_cases() {
        let argv: Vec<&str> = argv.iter().map(String::as_str).collect();
        let first = run(&argv);
        let second = run(&argv);
        assert_eq!(first.status.code(), Some(exit), "{file}: {}", String::from_utf8_lossy(&first.stderr));
        assert_eq!(first.stdout, second.stdout, "{file}: output differs between runs");
        let path = golden_dir().join(&file);
        if update {
            fs::write(&path, &first.stdout).unwrap();
        }
        let expected = fs::read(&path).unwrap_or_else(|_| panic!("missing golden file {file}"));
        assert_eq!(String::from_utf8_lossy(&first.stdout), String::from_utf8_lossy(&expected), "{file}");
    }
}

#[test]
fn fold_verdicts() {
    let oct: Value = serde_json::from_slice(&run(&["fold", "--builtin", "octahedron"]).stdout).unwrap();
    assert_eq!(oct["outcome"], "foldable");
    assert_eq!(oct["witness"].as_array().unwrap().len(), 8);
    let tet = run(&["fold", "--builtin", "tetrahedron"]);
    assert_eq!(tet.status.code(), Some(3));
    let tet: Value = serde_json::from_slice(&tet.stdout).unwrap();
    assert_eq!(tet["reason"], "no-vertex-colouring");
}

#[test]
fn base_rotates_the_witness() {
    let out = run(&["fold", "--builtin", "octahedron", "--base", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["witness"][0], "5");
    let bad = run(&["fold", "--builtin", "octahedron", "--base", "99"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).starts_with("error: unknown-face:"));
}

#[test]
fn torus_colour_report() {
    let doc: Value = serde_json::from_slice(&run(&["color", "--builtin", "torus8"]).stdout).unwrap();
    let inv = &doc["involutions"];
    let pairs = |c: &str| serde_json::to_string(&inv[c]).unwrap();
    assert_eq!(pairs("1"), r#"[["1","4"],["2","7"],["3","6"],["5","8"]]"#);
    assert_eq!(pairs("2"), r#"[["1","2"],["3","4"],["5","6"],["7","8"]]"#);
    assert_eq!(pairs("3"), r#"[["1","8"],["2","3"],["4","5"],["6","7"]]"#);
    assert_eq!(doc["vertex_colouring"]["B"], doc["vertex_colouring"]["C"]);
}

#[test]
fn input_errors_exit_two_with_one_line() {
    let dir = tempfile::tempdir().unwrap();
    let dangling = dir.path().join("d.surface.json");
    fs::write(
        &dangling,
        r#"{"vertices":["A","B","C"],"edges":{"a":["A","B"],"b":["B","C"],"c":["A","C"]},"faces":{"1":["a","b","z"]}}"#,
    )
    .unwrap();
    let syntax = dir.path().join("s.surface.json");
    fs::write(&syntax, "{\n  \"vertices\": [\"A\",\n}").unwrap();
    for (path, kind) in [(&dangling, "dangling-reference"), (&syntax, "syntax")] {
        let out = run(&["validate", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(2));
        assert!(out.stdout.is_empty());
        let err = String::from_utf8(out.stderr).unwrap();
        assert_eq!(err.lines().count(), 1, "{err}");
        assert!(err.starts_with(&format!("error: {kind}:")), "{err}");
    }
    let usage = run(&["fold", "--limit", "3"]);
    assert_eq!(usage.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&usage.stderr).starts_with("error: usage:"));
    let open = run(&["fold", "--builtin", "triangle"]);
    assert_eq!(open.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&open.stderr).starts_with("error: not-closed:"));
}

#[test]
fn pretty_writes_only_to_stderr() {
    let plain = run(&["fold", "--builtin", "torus8"]);
    let pretty = run(&["fold", "--builtin", "torus8", "--pretty"]);
    assert_eq!(plain.stdout, pretty.stdout);
    assert!(plain.stderr.is_empty());
    assert!(String::from_utf8_lossy(&pretty.stderr).contains("foldable"));
}

#[test]
fn out_file_receives_the_document() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("verdict.json");
    let out = run(&["fold", "--builtin", "octahedron", "--out", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(fs::read(&target).unwrap(), run(&["fold", "--builtin", "octahedron"]).stdout);
}

#[test]
fn batch_mode_orders_by_name_and_is_thread_independent() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["torus8", "octahedron", "tetrahedron"] {
        let text = run(&["builtin", name]).stdout;
        fs::write(dir.path().join(format!("{name}.surface.json")), text).unwrap();
    }
    fs::write(dir.path().join("notes.txt"), "ignored").unwrap();
    fs::write(dir.path().join("broken.surface.json"), "{").unwrap();

    let input = dir.path().to_str().unwrap();
    let outputs: Vec<Output> = ["0", "1", "4"]
        .iter()
        .map(|t| bin().args(["fold", input]).env("FOLDCHECK_THREADS", t).output().unwrap())
        .collect();
    for o in &outputs[1..] {
        assert_eq!(o.stdout, outputs[0].stdout);
    }
    assert_eq!(outputs[0].status.code(), Some(3));
    let doc: Value = serde_json::from_slice(&outputs[0].stdout).unwrap();
    let files: Vec<&str> = doc["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["file"].as_str().unwrap())
        .collect();
    assert_eq!(
        files,
        ["broken.surface.json", "octahedron.surface.json", "tetrahedron.surface.json", "torus8.surface.json"]
    );
    let exits: Vec<i64> = doc["results"].as_array().unwrap().iter().map(|r| r["exit"].as_i64().unwrap()).collect();
    assert_eq!(exits, [2, 0, 3, 0]);

    let out_dir = dir.path().join("verdicts");
    let status = bin()
        .args(["fold", input, "--out", out_dir.to_str().unwrap()])
        .env("FOLDCHECK_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(3));
    let single = run(&["fold", "--builtin", "octahedron"]).stdout;
    assert_eq!(fs::read(out_dir.join("octahedron.json")).unwrap(), single);
    let mut written: Vec<String> = fs::read_dir(&out_dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    written.sort();
    assert_eq!(written, ["octahedron.json", "tetrahedron.json", "torus8.json"]);
}

#[test]
fn builtin_output_parses_back_identically() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["triangle", "tetrahedron", "octahedron", "torus8"] {
        let text = run(&["builtin", name]).stdout;
        let path = dir.path().join("s.surface.json");
        fs::write(&path, &text).unwrap();
        let again = run(&["validate", path.to_str().unwrap()]);
        assert_eq!(again.status.code(), Some(0));
        let via_file = run(&["fold", path.to_str().unwrap()]).stdout;
        let via_builtin = run(&["fold", "--builtin", name]).stdout;
        assert_eq!(via_file, via_builtin);
    }
}
