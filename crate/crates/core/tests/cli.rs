//! The command-line front end, driven in-process through `cli::run` and,
//! where the environment matters, through the built binary.

use std::process::Command;

use matchroots::cli::{run, EXIT_COUNTEREXAMPLE, EXIT_OK, EXIT_USAGE};
use matchroots::{matching_polynomial, Graph};

fn cli(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("matchroots").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn first_line(s: &str) -> &str {
    s.lines().next().unwrap_or("")
}

#[test]
fn mu_of_friendship_graph() {
    let (code, out, _) = cli(&["mu", "F(2)"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(first_line(&out), "x^5-6x^3+5x");
    assert!(out.contains("matching vector: 1 6 5"));
    assert!(out.contains("max matching size: 2"));
}

#[test]
fn mu_of_single_vertex() {
    let (code, out, _) = cli(&["mu", "@"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(first_line(&out), "x");
}

#[test]
fn charpoly_of_a_path_is_mu() {
    let path = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap().to_graph6().unwrap();
    let (code, out, _) = cli(&["mu", "--charpoly", &path]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("charpoly equals mu: true"), "{out}");
    assert!(out.contains("forest: true"));
    let (_, out, _) = cli(&["mu", "--charpoly", "K_3"]);
    assert!(out.contains("charpoly equals mu: false"));
    assert!(out.contains("forest: false"));
}

#[test]
fn classify_examples() {
    let (_, out, _) = cli(&["classify", "T(2,3)"]);
    assert!(out.starts_with("z=5\n"), "{out}");
    assert!(out.contains("T(2,3)"));
    let (_, out, _) = cli(&["classify", "K2"]);
    assert!(out.starts_with("z=2\n"), "{out}");
    let (_, out, _) = cli(&["classify", "L(1,2)"]);
    assert!(out.starts_with("z=5\n"));
    assert!(out.contains("R = {0, ±1, ±√5}"), "{out}");
}

#[test]
fn enumerate_counts() {
    for (args, want) in [
        (&["enumerate", "-n", "5", "--connected", "--count"][..], "21"),
        (&["enumerate", "-n", "4", "--connected", "--count"][..], "6"),
        (&["enumerate", "-n", "6", "--count"][..], "156"),
    ] {
        let (code, out, _) = cli(args);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.trim(), want, "{args:?}");
    }
    let (code, _, err) = cli(&["enumerate", "-n", "11", "--count"]);
    assert_ne!(code, EXIT_OK);
    assert!(!err.is_empty());
}

#[test]
fn verify_appendix_exits_zero() {
    let (code, out, _) = cli(&["--format", "json", "verify", "appendix"]);
    assert_eq!(code, EXIT_OK);
    let report: serde_json::Value = serde_json::from_str(first_line(&out)).unwrap();
    assert_eq!(report["status"], "confirmed");
    assert_eq!(report["witnesses"].as_array().unwrap().len(), 30);
}

#[test]
fn verify_friendship_exceptions() {
    let (code, out, _) = cli(&["verify", "exceptions:friendship", "--cap", "9"]);
    assert_eq!(code, EXIT_OK);
    for line in ["F_1: unique", "F_3: unique", "F_4: unique", "F_2: non-unique (listed: non-unique); partners: 5.10"] {
        assert!(out.contains(line), "{line}\n{out}");
    }
}

#[test]
fn verify_comatching_partner() {
    let (code, out, _) = cli(&["--format", "json", "verify", "comatching:K(4,3;1)"]);
    assert_eq!(code, EXIT_OK);
    let report: serde_json::Value = serde_json::from_str(first_line(&out)).unwrap();
    let witnesses = report["witnesses"].as_array().unwrap();
    assert_eq!(witnesses.len(), 1);
    assert_eq!(witnesses[0]["label"], "K_{1,5} ∪ K_3");
}

#[test]
fn counterexample_exits_one_and_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("l2.jsonl");
    let (code, _, _) = cli(&["verify", "exceptions:L(t,2)", "--no-timing", "--report", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_COUNTEREXAMPLE);
    let written = std::fs::read_to_string(&path).unwrap();
    let report: serde_json::Value = serde_json::from_str(first_line(&written)).unwrap();
    assert_eq!(report["status"], "counterexample");
    assert!(report.get("elapsed_ms").is_none());
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, err) = cli(&["mu", "K(2,1;"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("position") || err.contains("at "), "{err}");
    assert_eq!(cli(&["verify", "bogus"]).0, EXIT_USAGE);
    assert_eq!(cli(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(cli(&["mu", "S(5,1)"]).0, EXIT_USAGE);
}

#[test]
fn iso_subcommand() {
    assert_eq!(cli(&["iso", "F(2)", "S(2,4)"]).1.trim(), "isomorphic");
    assert_eq!(cli(&["iso", "5.10", "5.11"]).1.trim(), "not isomorphic");
}

#[test]
fn json_graph6_round_trips() {
    let (_, out, _) = cli(&["--format", "json", "verify", "tables", "--no-timing"]);
    let report: serde_json::Value = serde_json::from_str(first_line(&out)).unwrap();
    for w in report["witnesses"].as_array().unwrap() {
        let g = Graph::from_graph6(w["graph6"].as_str().unwrap()).unwrap();
        assert_eq!(matching_polynomial(&g).to_string(), w["mu"].as_str().unwrap());
    }
    let (_, out, _) = cli(&["--format", "json", "mu", "K(2,1;1)"]);
    let value: serde_json::Value = serde_json::from_str(first_line(&out)).unwrap();
    let g = Graph::from_graph6(value["graph6"].as_str().unwrap()).unwrap();
    assert_eq!(matching_polynomial(&g).to_string(), value["mu"].as_str().unwrap());
}

#[test]
fn thread_count_does_not_change_output() {
    let runs: Vec<String> = ["1", "2", "7"]
        .iter()
        .map(|t| {
            let (_, a, _) = cli(&["--threads", t, "enumerate", "-n", "7", "--connected"]);
            let (_, b, _) = cli(&["--threads", t, "--format", "json", "verify", "exceptions:S(t)", "--cap", "8", "--no-timing"]);
            a + &b
        })
        .collect();
    assert!(runs.windows(2).all(|w| w[0] == w[1]));
    assert_eq!(runs[0].lines().count(), 853 + 1);
}

#[test]
fn spill_cache_directory_is_populated() {
    let dir = tempfile::tempdir().unwrap();
    let bin = env!("CARGO_BIN_EXE_matchroots");
    let run_mu = || Command::new(bin).args(["mu", "K(4,3;1)"]).env("MATCHROOTS_CACHE", dir.path()).output().unwrap();
    let first = run_mu();
    assert!(first.status.success());
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().file_name()).collect();
    assert_eq!(files.len(), 1);
    assert!(files[0].to_string_lossy().ends_with(".mv"));
    let second = run_mu();
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(String::from_utf8_lossy(&first.stdout).lines().next(), Some("x^9-8x^7+15x^5"));
}
