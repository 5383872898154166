use std::path::PathBuf;

use pwt_cli::{run_to, RunReport};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn run(args: &[&str]) -> (i32, String) {
    let mut argv = vec!["pwt".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let mut out = Vec::new();
    let code = run_to(argv, &mut out);
    (code, String::from_utf8(out).unwrap())
}

#[test]
fn exit_codes() {
    let l0 = fixture("lambda0.alg");
    assert_eq!(run(&["pwt", &l0]).0, 0);
    assert_eq!(run(&["extend-bijection", &l0, "--at", "2"]).0, 0);
    assert_eq!(run(&["extend-bijection", &l0, "--at", "3"]).0, 2);
    assert_eq!(run(&["pwt", &l0, "--field", "4"]).0, 1);
    assert_eq!(run(&["frobnicate", &l0]).0, 1);
    assert_eq!(run(&["pwt", "/nonexistent.alg"]).0, 1);
    assert_eq!(run(&["extend-bijection", &l0, "--at", "7"]).0, 1);
    assert_eq!(run(&["extend-bijection", &l0]).0, 1);
}

#[test]
fn parse_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.alg");
    std::fs::write(&path, "vertices 1 2\narrow a 1 2\nrelation a a\n").unwrap();
    assert_eq!(run(&["indecs", path.to_str().unwrap()]).0, 1);
    std::fs::write(&path, "vertices 1 2\narrow a 1 2\nmodule M\n  dim 1 1\n  map a [[1, 1]]\n").unwrap();
    assert_eq!(run(&["indecs", path.to_str().unwrap()]).0, 1);
}

#[test]
fn pwt_lists_three_modules() {
    let (code, out) = run(&["pwt", &fixture("lambda0.alg")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("3 basic PWT modules"));
    assert!(out.contains("2/3⊕3/4⊕4  [1, 2, 2]"));
}

#[test]
fn json_is_deterministic_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for (p, threads) in [(&a, "1"), (&b, "3")] {
        let code = run(&[
            "extend-bijection",
            &fixture("lambda0.alg"),
            "--at",
            "2",
            "--json",
            p.to_str().unwrap(),
            "--threads",
            threads,
        ])
        .0;
        assert_eq!(code, 0);
    }
    let (ta, tb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ta, tb);
    let text = String::from_utf8(ta).unwrap();
    let report = RunReport::from_json(&text).unwrap();
    assert_eq!(report.to_json(), text);
    assert_eq!(RunReport::from_json(&report.to_json()).unwrap(), report);
    assert_eq!(report.command, "extend-bijection");
    assert_eq!(report.algebra_digest.len(), 64);
    assert!(report.checks.iter().all(|c| c.pass));
}

#[test]
fn failure_reports_name_the_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("r.json");
    let code = run(&["extend-bijection", &fixture("lambda0.alg"), "--at", "3", "--json", p.to_str().unwrap()]).0;
    assert_eq!(code, 2);
    let report = RunReport::from_json(&std::fs::read_to_string(&p).unwrap()).unwrap();
    assert_eq!(report.results["error"], "NotSourceExtension");
    assert!(!report.checks[0].pass);
}

#[test]
fn mutation_graph_dot() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("g.dot");
    let code = run(&["mutation-graph", &fixture("lambda0.alg"), "--dot", p.to_str().unwrap()]).0;
    assert_eq!(code, 0);
    let dot = std::fs::read_to_string(&p).unwrap();
    assert!(dot.starts_with("digraph mutations {"));
    assert_eq!(dot.matches("->").count(), 2);
}

#[test]
fn other_commands_succeed() {
    let l0 = fixture("lambda0.alg");
    for args in [
        vec!["indecs", l0.as_str(), "--field", "2"],
        vec!["ext-table", l0.as_str(), "--field", "Q"],
        vec!["mutate", l0.as_str()],
        vec!["mutate", l0.as_str(), "--module", "P2", "--summand", "P2"],
        vec!["extend-verify-a", l0.as_str(), "--at", "2"],
        vec!["extend-verify-b", l0.as_str(), "--at", "2", "--field", "3"],
        vec!["extend-verify-b", l0.as_str(), "--at", "4"],
        vec!["extend-verify-a", l0.as_str(), "--extend-by", "P2"],
        vec!["tilt-count", l0.as_str(), "--at", "2"],
    ] {
        let (code, out) = run(&args);
        assert_eq!(code, 0, "{args:?}\n{out}");
    }
    let (code, out) = run(&["pwt", &fixture("c3.alg")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("1 basic PWT modules"));
    let (code, out) = run(&["extend-bijection", &fixture("a2.alg"), "--at", "1", "--field", "2", "--dim-bound", "1"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("3 = 2 + 1"));
}
