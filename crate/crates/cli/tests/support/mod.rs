//! Golden-file cases shared by the CLI and acceptance suites.

use std::path::{Path, PathBuf};

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// (file name, arguments, expected exit code).
pub fn golden_cases() -> Vec<(String, Vec<String>, i32)> {
    let mut cases = Vec::new();
    let fixtures = ["triangle", "tetrahedron", "octahedron", "torus8"];
    for name in fixtures {
        cases.push((format!("builtin-{name}.surface.json"), vec!["builtin".into(), name.into()], 0));
        cases.push((format!("validate-{name}.json"), args(&["validate", "--builtin", name]), 0));
        let colour_exit = if name == "tetrahedron" { 3 } else { 0 };
        cases.push((format!("color-{name}.json"), args(&["color", "--builtin", name, "--all"]), colour_exit));
    }
    for name in ["tetrahedron", "octahedron", "torus8"] {
        let foldable = if name == "tetrahedron" { 3 } else { 0 };
        cases.push((format!("fold-{name}.json"), args(&["fold", "--builtin", name]), foldable));
        cases.push((format!("enumerate-{name}.json"), args(&["enumerate", "--builtin", name, "--limit", "1000"]), foldable));
        let oriented = if name == "tetrahedron" { 3 } else { 0 };
        cases.push((format!("orient-{name}.json"), args(&["orient", "--builtin", name]), oriented));
    }
    cases.push((
        "render-worked-example.svg".into(),
        args(&["render", "--sigma", "(1,4,3,8,5,2,7,6)", "--rho", "(1,4)(2,7)(3,6)(5,8)", "--components"]),
        0,
    ));
    cases.push(("render-octahedron.svg".into(), args(&["render", "--builtin", "octahedron", "--colour", "2"]), 0));
    cases
}

fn args(a: &[&str]) -> Vec<String> {
    a.iter().map(|s| s.to_string()).collect()
}
