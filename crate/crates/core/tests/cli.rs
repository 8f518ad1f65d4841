use std::path::{Path, PathBuf};
use std::process::Command;

use deltah::delta::DeltaResult;
use deltah::graph::{decode, encode, Format};
use deltah::{Graph, Weighting};
use tempfile::TempDir;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn deltah(args: &[&str]) -> Run {
    let output = Command::new(env!("CARGO_BIN_EXE_deltah")).args(args).output().unwrap();
    Run {
        code: output.status.code().unwrap(),
        out: String::from_utf8(output.stdout).unwrap(),
        err: String::from_utf8(output.stderr).unwrap(),
    }
}

fn save(dir: &Path, name: &str, g: &Graph) -> PathBuf {
    let path = dir.join(name);
    let format = Format::from_path(&path).unwrap();
    std::fs::write(&path, encode(g, format).unwrap()).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn delta_on_k4() {
    let dir = TempDir::new().unwrap();
    let k4 = save(dir.path(), "k4.g6", &Graph::complete(4).unwrap());
    let run = deltah(&["delta", s(&k4)]);
    assert_eq!(run.code, 0, "{}", run.err);
    assert_eq!(run.out.lines().next(), Some("5/8 (0.625) [F-sequence branch, j=2]"));
    assert!(run.out.contains("maps to K0 + F1"));
}

#[test]
fn delta_interval_output() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("all-pass.g6");
    std::fs::write(&path, format!("{}\n", deltah::delta::INTERVAL_EXAMPLE_G6)).unwrap();
    let run = deltah(&["delta", s(&path)]);
    assert_eq!(run.code, 0, "{}", run.err);
    assert_eq!(
        run.out.lines().next(),
        Some("[17/32, 8/15] ([0.53125, 0.533333]) [interval branch, g=8]")
    );
    assert_eq!(run.out.matches("maps to").count(), 19);
}

#[test]
fn delta_json_revalidates() {
    let dir = TempDir::new().unwrap();
    let h = Graph::wheel(5).unwrap();
    let path = save(dir.path(), "w5.json", &h);
    let run = deltah(&["delta", s(&path), "--json"]);
    assert_eq!(run.code, 0, "{}", run.err);
    let res: DeltaResult = serde_json::from_str(&run.out).unwrap();
    assert!(res.validate(&h));
    assert_eq!(res.value(), deltah::Rational::new(7, 12));
    // deterministic output
    assert_eq!(deltah(&["delta", s(&path), "--json"]).out, run.out);
}

#[test]
fn hom_petersen_to_c5() {
    let dir = TempDir::new().unwrap();
    let p = save(dir.path(), "p.edges", &Graph::petersen());
    let c5 = save(dir.path(), "c5.g6", &Graph::cycle(5).unwrap());
    let c3 = save(dir.path(), "c3.g6", &Graph::cycle(3).unwrap());
    let run = deltah(&["hom", s(&p), s(&c5)]);
    assert_eq!((run.code, run.out.as_str()), (0, "NONE\n"));
    let run = deltah(&["hom", s(&p), s(&c3)]);
    assert_eq!(run.code, 0);
    let mapping: Vec<usize> = run.out.split_whitespace().map(|x| x.parse().unwrap()).collect();
    assert_eq!(mapping.len(), 10);
    assert!(Graph::petersen().edges().all(|(u, v)| mapping[u] != mapping[v]));
}

#[test]
fn small_queries() {
    let dir = TempDir::new().unwrap();
    let p = save(dir.path(), "p.g6", &Graph::petersen());
    assert_eq!(deltah(&["chromatic", s(&p)]).out, "3\n");
    assert_eq!(deltah(&["oddgirth", s(&p)]).out, "5\n");
    let c6 = save(dir.path(), "c6.g6", &Graph::cycle(6).unwrap());
    assert_eq!(deltah(&["oddgirth", s(&c6)]).out, "none\n");
    let run = deltah(&["gallery", "C7bar", "--format", "edges"]);
    assert_eq!(run.code, 0);
    assert!(run.out.starts_with("7 14\n"));
}

#[test]
fn oracle_edits() {
    let dir = TempDir::new().unwrap();
    let c5_2 = Weighting::new(Graph::cycle(5).unwrap(), vec![2; 5]).unwrap().blow_up();
    let path = save(dir.path(), "c5x2.g6", &c5_2);
    let run = deltah(&["oracle", "edits", s(&path), "--k", "2"]);
    assert_eq!((run.code, run.out.as_str()), (0, "4\n"));
    let big = save(dir.path(), "big.g6", &Graph::empty(30));
    let run = deltah(&["oracle", "edits", s(&big), "--k", "2"]);
    assert_eq!(run.code, 3);
    assert!(run.err.contains("resource"));
}

#[test]
fn witness_and_certify() {
    let dir = TempDir::new().unwrap();
    let k4 = save(dir.path(), "k4.g6", &Graph::complete(4).unwrap());
    let out = dir.path().join("w.json");
    let run = deltah(&["witness", s(&k4), "--n", "40", "--out", s(&out)]);
    assert_eq!(run.code, 0, "{}", run.err);
    let w = decode(&std::fs::read_to_string(&out).unwrap(), Format::Json).unwrap();
    assert_eq!(w.order(), 40);
    assert_eq!(w.min_degree(), Some(25));
    let run = deltah(&["certify", s(&k4), "--n", "40"]);
    assert_eq!(run.code, 0, "{}", run.out);
    assert_eq!(run.out.matches("PASS").count(), 3);
    let run = deltah(&["certify", s(&k4), "--n", "4"]);
    assert_eq!(run.code, 2);
}

#[test]
fn verify_suites() {
    let run = deltah(&["verify", "haggkvist:2", "--corpus", "exhaustive:5"]);
    assert_eq!(run.code, 0, "{}", run.out);
    assert!(run.out.contains("violations 0"));
    let run = deltah(&["verify", "odd-girth", "--corpus", "random:50,8,0.5,1", "--json"]);
    assert_eq!(run.code, 0);
    let v: serde_json::Value = serde_json::from_str(&run.out).unwrap();
    assert_eq!(v["checked"], 50);
    assert!(v["violations"].as_array().unwrap().is_empty());
    assert_eq!(deltah(&["verify", "local-bip:1", "--corpus", "exhaustive:5"]).code, 0);
}

#[test]
fn usage_errors() {
    let run = deltah(&["nonsense"]);
    assert_eq!(run.code, 2);
    assert!(!run.err.is_empty());
    assert_eq!(deltah(&["verify", "bogus"]).code, 2);
    assert_eq!(deltah(&["delta", "/nonexistent/graph.g6"]).code, 2);
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.g6");
    std::fs::write(&bad, "D?").unwrap();
    let run = deltah(&["delta", s(&bad)]);
    assert_eq!(run.code, 2);
    assert!(run.err.contains("byte"));
    let c6 = save(dir.path(), "c6.g6", &Graph::cycle(6).unwrap());
    let run = deltah(&["delta", s(&c6)]);
    assert_eq!(run.code, 2);
    assert!(run.err.contains("undefined"));
    // unknown extension needs --format
    let plain = dir.path().join("graph.dat");
    std::fs::write(&plain, "Bw\n").unwrap();
    assert_eq!(deltah(&["chromatic", s(&plain)]).code, 2);
    assert_eq!(deltah(&["chromatic", s(&plain), "--format", "g6"]).out, "3\n");
}
