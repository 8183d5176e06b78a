//! End-to-end tests of the ctxlab binary: golden comparisons against the
//! library, JSON shape, exit codes, determinism.

use std::process::{Command, Output, Stdio};

use serde_json::Value;

use ctxlab::catalog::catalog;
use ctxlab::coloring::{chromatic_number, SearchConfig};
use ctxlab::dsl::serialize_logic;
use ctxlab::state::enumerate_states;

fn ctxlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ctxlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ctxlab_stdin(args: &[&str], stdin: &str) -> Output {
    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_ctxlab"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout_json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn catalog_list_names_everything() {
    let out = ctxlab(&["catalog", "list"]);
    let text = String::from_utf8(out.stdout).unwrap();
    for name in ["pentagon", "yu-oh", "g32", "triangle-demo"] {
        assert!(text.lines().any(|l| l == name), "missing {name}");
    }
}

#[test]
fn chroma_json_matches_library() {
    let out = ctxlab(&["chroma", "--catalog", "yu-oh", "--json"]);
    let v = stdout_json(&out);
    let h = catalog("yu-oh").unwrap().hypergraph;
    let cert = chromatic_number(&h, 7, SearchConfig::default()).unwrap();
    assert_eq!(v["chromatic_number"], cert.chromatic_number);
    assert_eq!(v["exhausted"], serde_json::json!(cert.exhausted));
    assert_eq!(v["witness"]["k"], cert.chromatic_number);
    assert_eq!(
        v["witness"]["assignment"].as_object().unwrap().len(),
        h.vertex_count()
    );
}

#[test]
fn states_json_matches_library() {
    let out = ctxlab(&[
        "states",
        "--catalog",
        "pentagon",
        "--json",
        "--separating",
        "--at-most-one",
        "1,3,5,7,9",
    ]);
    let v = stdout_json(&out);
    let h = catalog("pentagon").unwrap().hypergraph;
    let states = enumerate_states(&h).unwrap();
    assert_eq!(v["count"], states.len());
    assert_eq!(v["states"].as_array().unwrap().len(), states.len());
    assert_eq!(v["separating"]["separating"], true);
    assert_eq!(v["subset_max_ones"], 2);
}

#[test]
fn hull_json_shape_and_determinism() {
    let args = [
        "hull",
        "--catalog",
        "pentagon",
        "--json",
        "--coords",
        "pairs:(1,3),(3,5),(5,7),(7,9),(9,1)",
        "--filter",
        "exclude:middle",
    ];
    let first = ctxlab(&args);
    let second = ctxlab(&args);
    assert_eq!(first.stdout, second.stdout, "output must be deterministic");
    let v = stdout_json(&first);
    assert_eq!(v["states_used"], 10);
    assert_eq!(v["hull"]["dimension"], 5);
    let facets = v["hull"]["facets"].as_array().unwrap();
    let klyachko = serde_json::json!({
        "normal": ["1", "1", "1", "1", "1"],
        "bound": "-3",
        "sense": "ge",
    });
    assert!(facets.contains(&klyachko));
    for f in facets {
        assert_eq!(f["sense"], "ge");
        assert!(f["bound"].is_string());
    }
}

#[test]
fn verify_realization_assert_passes_on_yu_oh() {
    let out = ctxlab(&["verify-realization", "--catalog", "yu-oh", "--assert", "--faithful"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("contexts: ok"));
}

#[test]
fn require_admissible_exit_codes() {
    // pentagon: chromatic number equals uniformity, exit 0
    let ok = ctxlab(&["chroma", "--catalog", "pentagon", "--require-admissible"]);
    assert_eq!(ok.status.code(), Some(0));
    // yu-oh: chromatic number 4 > uniformity 3, exit 1
    let fail = ctxlab(&["chroma", "--catalog", "yu-oh", "--require-admissible"]);
    assert_eq!(fail.status.code(), Some(1));
}

#[test]
fn fractional_target_assert_exit_code() {
    let dir = std::env::temp_dir().join("ctxlab-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("omega0.txt");
    let mut text = String::new();
    for v in [1, 3, 5, 7, 9] {
        text.push_str(&format!("{v} 1/2\n"));
    }
    for v in [2, 4, 6, 8, 10] {
        text.push_str(&format!("{v} 0\n"));
    }
    std::fs::write(&path, text).unwrap();
    let out = ctxlab(&[
        "fractional",
        "--catalog",
        "pentagon",
        "--target",
        path.to_str().unwrap(),
        "--assert",
    ]);
    assert_eq!(out.status.code(), Some(1), "omega0 must be unreachable");
    assert!(String::from_utf8(out.stdout).unwrap().contains("not reachable"));
}

#[test]
fn usage_and_parse_errors_exit_2() {
    let no_input = ctxlab(&["validate"]);
    assert_eq!(no_input.status.code(), Some(2));

    let bad = ctxlab_stdin(&["validate", "-"], "context a\n");
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8(bad.stderr).unwrap().contains("error:"));

    let unknown = ctxlab(&["validate", "--catalog", "no-such-logic"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn catalog_show_roundtrips_through_stdin() {
    for name in ["pentagon", "yu-oh", "g32", "triangle-demo"] {
        let shown = ctxlab(&["catalog", "show", name]);
        assert!(shown.status.success());
        let text = String::from_utf8(shown.stdout).unwrap();
        assert_eq!(text, serialize_logic(&catalog(name).unwrap()));
        // feeding the canonical text back must validate cleanly in strict mode
        let out = ctxlab_stdin(&["validate", "-", "--strict", "--json"], &text);
        let v = stdout_json(&out);
        assert_eq!(
            v["vertices"].as_array().unwrap().len(),
            catalog(name).unwrap().hypergraph.vertex_count()
        );
    }
}

#[test]
fn fractional_values_prints_omega0() {
    let out = ctxlab(&[
        "fractional",
        "--catalog",
        "triangle-demo",
        "--values",
        "0=1/3,1=1/3,2=1/3",
        "--json",
    ]);
    let v = stdout_json(&out);
    for (_, val) in v["state"].as_object().unwrap() {
        assert_eq!(val, "1/3");
    }
}
