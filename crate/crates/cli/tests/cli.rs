use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn hublab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hublab")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    let text = stdout(out);
    let start = text.find('{').expect("json block");
    serde_json::from_str(&text[start..]).unwrap()
}

fn path(dir: &TempDir, name: &str) -> PathBuf {
    dir.path().join(name)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn generate(dir: &TempDir, name: &str, args: &[&str]) -> PathBuf {
    let out = path(dir, name);
    let mut full = vec!["generate"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", s(&out)]);
    let res = hublab(&full);
    assert_eq!(code(&res), 0, "{}", String::from_utf8_lossy(&res.stderr));
    out
}

#[test]
fn bad_g_pipeline() {
    let dir = TempDir::new().unwrap();
    let g = generate(&dir, "bad-g.txt", &["bad-g", "--k", "3"]);
    let text = fs::read_to_string(&g).unwrap();
    assert!(text.starts_with("# hublab family=bad-g k=3 n=19\np directed 19 "));

    let labels = path(&dir, "g.labels");
    let order = path(&dir, "g.order");
    let res = hublab(&["build", "--graph", s(&g), "--algo", "g-hhl", "--out", s(&labels), "--order-out", s(&order)]);
    assert_eq!(code(&res), 0);
    assert!(stdout(&res).contains("size: 98\n"));
    let report = json(&res);
    assert_eq!(report["valid"], Value::Bool(true));
    assert_eq!(report["respects_order"], Value::Bool(true));

    let res = hublab(&["verify", "--graph", s(&g), "--labels", s(&labels)]);
    assert_eq!(code(&res), 0);
    assert!(stdout(&res).contains("valid: true\n"));

    let canon = path(&dir, "canon.labels");
    let res = hublab(&["build", "--graph", s(&g), "--algo", "canonical", "--order", s(&order), "--out", s(&canon)]);
    assert_eq!(code(&res), 0);
    assert_eq!(fs::read(&canon).unwrap(), fs::read(&labels).unwrap());
}

#[test]
fn every_build_output_verifies() {
    let dir = TempDir::new().unwrap();
    let g = generate(&dir, "r.txt", &["random", "--n", "7", "--m", "10", "--maxlen", "3", "--seed", "5"]);
    for algo in ["g-hhl", "w-hhl", "d-hhl", "cohen", "sphs"] {
        let labels = path(&dir, &format!("{algo}.labels"));
        let res = hublab(&["build", "--graph", s(&g), "--algo", algo, "--out", s(&labels)]);
        assert_eq!(code(&res), 0, "{algo}: {}", String::from_utf8_lossy(&res.stderr));
        let res = hublab(&["verify", "--graph", s(&g), "--labels", s(&labels)]);
        assert_eq!(code(&res), 0, "{algo}");
    }
    let res = hublab(&["build", "--graph", s(&g), "--algo", "cohen", "--exact-mds"]);
    assert_eq!(code(&res), 0);
}

#[test]
fn outputs_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let a = generate(&dir, "a.txt", &["random", "--n", "9", "--m", "14", "--maxlen", "4", "--seed", "11", "--directed"]);
    let b = generate(&dir, "b.txt", &["random", "--n", "9", "--m", "14", "--maxlen", "4", "--seed", "11", "--directed"]);
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let first = hublab(&["build", "--graph", s(&a), "--algo", "d-hhl"]);
    let second = hublab(&["build", "--graph", s(&a), "--algo", "d-hhl"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn corrupted_labels_are_invalid() {
    let dir = TempDir::new().unwrap();
    let g = generate(&dir, "c4.txt", &["cycle4"]);
    let labels = path(&dir, "c4.labels");
    assert_eq!(code(&hublab(&["build", "--graph", s(&g), "--algo", "g-hhl", "--out", s(&labels)])), 0);
    let text = fs::read_to_string(&labels).unwrap();
    let broken: String = text.lines().map(|l| if l.starts_with("l 2 ") { "l 2 2:0\n".to_string() } else { format!("{l}\n") }).collect();
    fs::write(&labels, broken).unwrap();
    let res = hublab(&["verify", "--graph", s(&g), "--labels", s(&labels)]);
    assert_eq!(code(&res), 1);
    assert!(stdout(&res).contains("valid: false\n"));
    assert!(json(&res)["violations"].as_u64().unwrap() > 0);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&hublab(&["generate", "bad-g"])), 2);
    assert_eq!(code(&hublab(&["frobnicate"])), 2);
    assert_eq!(code(&hublab(&["build", "--graph", "/nonexistent/graph", "--algo", "g-hhl"])), 2);
    let dir = TempDir::new().unwrap();
    let bad = path(&dir, "bad.txt");
    fs::write(&bad, "p undirected 2 1\na 0 1 -3\n").unwrap();
    let res = hublab(&["build", "--graph", s(&bad), "--algo", "g-hhl"]);
    assert_eq!(code(&res), 2);
    assert!(String::from_utf8_lossy(&res.stderr).contains("NegativeLength"));
}

#[test]
fn oracles_and_limits() {
    let dir = TempDir::new().unwrap();
    let c4 = generate(&dir, "c4.txt", &["cycle4"]);
    let res = hublab(&["compare", "--graph", s(&c4), "--algo", "g-hhl", "--oracle", "hl-bnb"]);
    assert_eq!(code(&res), 0);
    let r = json(&res);
    assert_eq!(r["upper"], Value::from(9));
    assert_eq!(r["complete"], Value::Bool(true));
    let res = hublab(&["compare", "--graph", s(&c4), "--oracle", "hhl"]);
    assert_eq!(json(&res)["optimum"], Value::from(9));

    let sep = generate(&dir, "sep.txt", &["separator", "--k", "4"]);
    let res = hublab(&["compare", "--graph", s(&sep), "--oracle", "hl-bnb", "--budget", "10"]);
    assert_eq!(code(&res), 3);
    assert_eq!(json(&res)["complete"], Value::Bool(false));
    assert_eq!(code(&hublab(&["compare", "--graph", s(&sep), "--oracle", "hhl"])), 3);

    let star = path(&dir, "star.txt");
    fs::write(&star, "p undirected 5 4\na 0 1 1\na 0 2 1\na 0 3 1\na 0 4 1\n").unwrap();
    let res = hublab(&["compare", "--graph", s(&star), "--oracle", "hd"]);
    assert_eq!(code(&res), 0);
    assert_eq!(json(&res)["h"], Value::from(5));
}

#[test]
fn explicit_labelings_verify() {
    let dir = TempDir::new().unwrap();
    let base = path(&dir, "tri.txt");
    fs::write(&base, "p undirected 3 3\na 0 1 1\na 1 2 1\na 0 2 1\n").unwrap();
    let cases: [(&str, Vec<&str>); 4] = [
        ("sep", vec!["separator", "--k", "3"]),
        ("c4p", vec!["cycle4", "--directed"]),
        ("vcu", vec!["vc-undirected", "--base", s(&base)]),
        ("vcd", vec!["vc-directed", "--base", s(&base)]),
    ];
    for (name, args) in cases {
        let hl = path(&dir, &format!("{name}.labels"));
        let mut full = args.clone();
        full.extend_from_slice(&["--with-hl", s(&hl)]);
        let g = generate(&dir, &format!("{name}.txt"), &full);
        let res = hublab(&["verify", "--graph", s(&g), "--labels", s(&hl)]);
        assert_eq!(code(&res), 0, "{name}");
    }
    let hl = path(&dir, "bad-g.labels");
    let res = hublab(&["generate", "bad-g", "--k", "2", "--with-hl", s(&hl)]);
    assert_eq!(code(&res), 2);
}

#[test]
fn query_matches_graph() {
    let dir = TempDir::new().unwrap();
    let g = generate(&dir, "w.txt", &["bad-w", "--k", "2"]);
    let labels = path(&dir, "w.labels");
    assert_eq!(code(&hublab(&["build", "--graph", s(&g), "--algo", "w-hhl", "--out", s(&labels)])), 0);
    let res = hublab(&["query", "--labels", s(&labels), "--graph", s(&g), "0", "7"]);
    assert_eq!(code(&res), 0);
    let r = json(&res);
    assert_eq!(r["exact"], Value::Bool(true));
    assert_eq!(r["dist"], r["true_dist"]);
    assert_eq!(code(&hublab(&["query", "--labels", s(&labels), "0", "999"])), 2);

    let g = generate(&dir, "g.txt", &["bad-g", "--k", "2"]);
    let labels = path(&dir, "g.labels");
    assert_eq!(code(&hublab(&["build", "--graph", s(&g), "--algo", "g-hhl", "--out", s(&labels)])), 0);
    let res = hublab(&["query", "--labels", s(&labels), "--graph", s(&g), "10", "0"]);
    assert!(stdout(&res).contains("dist: null\n"));
    assert_eq!(json(&res)["exact"], Value::Bool(true));
}

#[test]
fn graph_to_stdout_without_out() {
    let res = hublab(&["generate", "cycle4"]);
    assert_eq!(code(&res), 0);
    assert_eq!(stdout(&res), "# hublab family=cycle4 directed=false\np undirected 4 4\na 0 1 1\na 0 3 1\na 1 2 1\na 2 3 1\n");
}
