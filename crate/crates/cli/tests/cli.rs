use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn twodist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twodist"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn analyze_pentagon() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "c5.g6", "Dhc\n");
    let out = twodist(&["analyze", &f]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["mu"], 2);
    assert_eq!(v["dim"], 2);
    assert_eq!(v["theta"], 3);
    assert_eq!(v["borsuk_score"], 0);
    assert_eq!(v["spherical"], true);
    assert_eq!(v["schema"], 1);
}

#[test]
fn analyze_other_formats() {
    let dir = tempfile::tempdir().unwrap();
    let d = write(dir.path(), "k3.col", "c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    let v = json(&twodist(&["analyze", "--format", "dimacs", &d]));
    assert_eq!((v["n"].clone(), v["mu"].clone(), v["theta"].clone()), (3.into(), 0.into(), 1.into()));
    let e = write(dir.path(), "c4.txt", "0 1\n1 2\n2 3\n3 0\n");
    let v = json(&twodist(&["analyze", &e]));
    assert_eq!(v["tau1"], "2.000000000000000");
    assert_eq!(v["radius"], "0.7071067812");
}

#[test]
fn analyze_writes_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "g.g6", "A_\nD?{\n");
    let o = dir.path().join("out.json");
    let out = twodist(&["analyze", &f, "-o", o.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&fs::read_to_string(o).unwrap()).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
}

#[test]
fn data_and_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "bad.g6", "Dx\n");
    let out = twodist(&["analyze", &f]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("graph6"));
    let loops = write(dir.path(), "loop.col", "p edge 2 1\ne 1 1\n");
    assert_eq!(twodist(&["analyze", &loops]).status.code(), Some(2));
    assert_eq!(twodist(&["analyze", "/nonexistent/file"]).status.code(), Some(2));
    assert_eq!(twodist(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(twodist(&["enumerate"]).status.code(), Some(1));
    assert_eq!(twodist(&["--help"]).status.code(), Some(0));
}

#[test]
fn enumerate_small_orders() {
    let out = twodist(&["enumerate", "--max-n", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("# n=6: 156 graphs"));
    assert!(text.contains("max score 0, 0 violations, 0 unresolved"));
}

#[test]
fn certify_square() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "c4.g6", "Cr\n");
    let out = twodist(&["certify", &f, "--precision", "1e-20"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["dim"], 2);
    assert!(v["max_deviation"].as_f64().unwrap() < 1e-9);
    assert_eq!(v["points"].as_array().unwrap().len(), 4);
    assert_eq!(twodist(&["certify", &f, "--precision", "zero"]).status.code(), Some(1));
}

#[test]
fn search_is_reproducible_and_resumable() {
    let dir = tempfile::tempdir().unwrap();
    let log = dir.path().join("run.jsonl");
    let log = log.to_str().unwrap();
    let args = ["search", "--blocks", "2,2,1", "--iters", "30", "--restarts", "5", "--seed", "4", "--log", log];
    let a = twodist(&args);
    assert_eq!(a.status.code(), Some(0));
    let first = fs::read(log).unwrap();
    let lines: Vec<Value> = first
        .split(|&b| b == b'\n')
        .filter(|l| !l.is_empty())
        .map(|l| serde_json::from_slice(l).unwrap())
        .collect();
    assert_eq!(lines[0]["kind"], "header");
    for rec in &lines[1..] {
        for key in ["iter", "restart", "move", "mu", "score", "hash"] {
            assert!(rec.get(key).is_some(), "missing {key}");
        }
    }
    // resuming a finished log reruns nothing and reports the same best
    let b = twodist(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(fs::read(log).unwrap(), first);

    let other = dir.path().join("other.jsonl");
    let mut args2 = args;
    args2[10] = other.to_str().unwrap();
    let c = twodist(&args2);
    assert_eq!(fs::read(other).unwrap(), first);
    assert_eq!(c.stdout, a.stdout);

    assert_eq!(twodist(&["search", "--blocks", "0x2", "--log", log]).status.code(), Some(1));
}

#[test]
fn sdist_commands() {
    let dir = tempfile::tempdir().unwrap();
    let rect = r#"{"n":4,"s":3,"pairs":[[0,1,2],[2,3,2],[1,2,3],[0,3,3],[0,2,1],[1,3,1]]}"#;
    let f = write(dir.path(), "rect.json", rect);
    let out = twodist(&["sdist", &f, "--params", "16/25,9/25"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["dim"], 2);
    assert_eq!(v["theta"], 2);
    assert_eq!(v["verdict"], "no");
    assert_eq!(v["possibly_spherical"], false);

    let out = twodist(&["sdist", &f, "--budget", "300", "--seed", "1"]);
    assert_eq!(json(&out)["dim"], 2);

    let bad = twodist(&["sdist", &f, "--params", "1/2"]);
    assert_eq!(bad.status.code(), Some(2));
    assert_eq!(twodist(&["sdist", &f]).status.code(), Some(1));
}

#[test]
fn search_with_minimal_cover() {
    let dir = tempfile::tempdir().unwrap();
    let log = dir.path().join("strict.jsonl");
    let log = log.to_str().unwrap();
    let base = ["search", "--blocks", "1,1,1,1,1", "--iters", "40", "--restarts", "6", "--log", log];
    let strict = twodist(&[&base[..], &["--keep-cover-minimal"]].concat());
    assert_eq!(strict.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&strict.stdout).unwrap();
    assert!(v["best_score"].as_i64().unwrap() <= 0);
    let header: Value = serde_json::from_str(fs::read_to_string(log).unwrap().lines().next().unwrap()).unwrap();
    assert_eq!(header["config"]["keep_cover_minimal"], true);

    // the free walk finds a positive score and verification demotes it
    fs::remove_file(log).unwrap();
    let free = twodist(&base);
    assert_eq!(free.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&free.stdout).unwrap();
    assert!(v["best_score"].as_i64().unwrap() > 0);
    assert_eq!(v["candidate"], "demoted");
}
