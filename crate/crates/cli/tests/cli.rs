use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_wugsnake"))
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn wugsnake")
}

fn lines(args: &[&str]) -> Vec<Value> {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn tmp(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(format!("{}-{name}", std::process::id()))
}

#[test]
fn markov_tree_has_2_5_29() {
    let v = lines(&["markov", "tree", "--depth", "3"]);
    assert_eq!(v.len(), 15);
    let hit = v.iter().find(|l| l["farey"] == "2/3").expect("2/3 node");
    assert_eq!(hit["triple"], json!([5, 29, 2]));
    assert_eq!(hit["matrix"][0][1], json!(29));
}

#[test]
fn wug_count_example() {
    let f = fixture("d32.json");
    let v = lines(&["wug", "count", "--file", f.to_str().unwrap()]);
    assert_eq!(
        v,
        vec![json!({"bruteforce": 29, "permanent": 29, "det": 29})]
    );
}

#[test]
fn collide_example() {
    let v = lines(&["semigroup", "collide", "--family", "4,11"]);
    assert_eq!(v[0], json!({"farey": ["4/5", "1/7"], "value": 355318099}));
}

#[test]
fn subtract_trace() {
    let v = lines(&[
        "subtract",
        "--triple",
        "7,5,3",
        "--strategy",
        "min-remainder",
        "--trace",
    ]);
    assert_eq!(v[0]["pairs"][0], json!([0, 2]));
    assert_eq!(v[0]["reconstructed"], json!([7, 5, 3]));
    assert!(v[0]["trace"].is_array());
}

#[test]
fn perron_surd() {
    let v = lines(&["perron", "--plls", "1,1,2,2"]);
    assert_eq!(v[0]["value"], "sqrt(221)/5");
}

#[test]
fn wug_det_anchor() {
    let v = lines(&["wug", "det", "--head", "0,0,1", "--specs", "1,1,1;1,0,1*5"]);
    assert_eq!(v[0]["wug_determinant"], json!(11));
}

#[test]
fn big_values_are_strings() {
    let v = lines(&["markov", "tree", "--depth", "6"]);
    let big = v
        .iter()
        .flat_map(|l| l["triple"].as_array().unwrap().clone())
        .find(|x| x.is_string())
        .expect("a Markov number above 2^53 at depth 6");
    assert!(big.as_str().unwrap().len() >= 16);
}

#[test]
fn enum_three_generators() {
    let gens = "[[[1,1],[1,2]],[[2,1],[1,1]],[[1,0],[1,1]]]";
    let v = lines(&[
        "semigroup",
        "enum",
        "--gens",
        gens,
        "--scheme",
        "barycentric",
        "--depth",
        "1",
    ]);
    assert_eq!(v.len(), 3 + 4);
    assert_eq!(v[0]["farey"], json!([1, 0, 0]));
}

#[test]
fn property_commands() {
    for args in [
        &["wug", "random", "--seed", "7", "--count", "30"][..],
        &["cohn", "fricke", "--seed", "7", "--count", "30"],
        &[
            "subtract",
            "--random",
            "30",
            "--seed",
            "7",
            "--strategy",
            "b-then-c",
        ],
        &["tetris", "mediant", "--seed", "7", "--count", "30"],
    ] {
        let v = lines(args);
        assert_eq!(v.len(), 1, "{args:?} reported failures");
        assert_eq!(v[0]["passed"], json!(30));
    }
}

#[test]
fn output_file_and_determinism() {
    let args = ["semigroup", "family", "--family", "2,3", "--depth", "3"];
    let a = run(&args).stdout;
    assert_eq!(a, run(&args).stdout);
    let p = tmp("family.jsonl");
    let status = bin().args(args).arg("--output").arg(&p).status().unwrap();
    assert!(status.success());
    assert_eq!(std::fs::read(&p).unwrap(), a);
}

#[test]
fn render_is_stable() {
    let spec = tmp("snake.json");
    std::fs::write(&spec, r#"{"fraction": "2/5", "head": 1}"#).unwrap();
    let svg = tmp("snake.svg");
    let go = || {
        let out = run(&[
            "render",
            "--kind",
            "snake",
            "--in",
            spec.to_str().unwrap(),
            "--out",
            svg.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        std::fs::read_to_string(&svg).unwrap()
    };
    let first = go();
    assert!(first.starts_with("<svg"));
    assert_eq!(first, go());

    let wug = fixture("d32.json");
    let out = run(&[
        "render",
        "--kind",
        "wug",
        "--in",
        wug.to_str().unwrap(),
        "--out",
        svg.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(
        std::fs::read_to_string(&svg)
            .unwrap()
            .matches("<circle")
            .count(),
        16
    );
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["nope"]).status.code(), Some(1));
    assert_eq!(
        run(&["markov", "tree", "--depth", "x"]).status.code(),
        Some(1)
    );
    assert_eq!(
        run(&["farey", "word", "--fraction", "3/2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["markov", "form", "--triple", "1,2,3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["subtract", "--triple", "0,0,0"]).status.code(),
        Some(2)
    );
    let missing = run(&["wug", "count", "--file", "/nonexistent/w.json"]);
    assert_eq!(missing.status.code(), Some(1));
    assert!(!missing.stderr.is_empty());
}
