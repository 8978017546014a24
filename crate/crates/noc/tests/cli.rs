//! End-to-end tests of the `noc` binary: every subcommand stays a thin
//! adapter, so its outputs must match direct library calls.

mod support;

use noc::classify::{classify, KnowledgeBase};
use noc::{catalog, graph6, solver};
use std::io::Write;
use std::process::{Command, Stdio};

fn noc_cmd(args: &[&str]) -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_noc"));
    cmd.args(args);
    cmd
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = noc_cmd(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
    )
}

fn run_with_stdin(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = noc_cmd(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .expect("stdin piped")
        .write_all(stdin.as_bytes())
        .expect("stdin written");
    let out = child.wait_with_output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
    )
}

#[test]
fn classify_text_matches_library() {
    let (code, stdout, _) = run(&["classify", "--h1", "2K2", "--h2", "gem"]);
    assert_eq!(code, 0);
    let expected = classify(&catalog::two_k2(), &catalog::gem(), &KnowledgeBase::builtin());
    assert_eq!(stdout.trim(), expected.to_string());
    assert!(stdout.contains("c=3"));
}

#[test]
fn classify_json_is_one_schema_stable_document() {
    let (code, stdout, _) = run(&["classify", "--h1", "P5", "--h2", "diamond", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).expect("single JSON document");
    assert_eq!(v["verdict"], "near-optimal-colourable");
    assert_eq!(v["rule"], "knowledge-base");
    assert_eq!(v["constant"], "6");

    let (code, stdout, _) = run(&["classify", "--h1", "claw", "--h2", "claw", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["verdict"], "not-near-optimal-colourable");
    assert_eq!(v["witness"]["family"], "odd-antiholes");
    assert_eq!(v["witness"]["min_index"], 2);
}

#[test]
fn classify_accepts_raw_graph6() {
    let g6 = format!("g6:{}", graph6::encode(&catalog::gem()));
    let (code, stdout, _) = run(&["classify", "--h1", "2K2", "--h2", &g6]);
    assert_eq!(code, 0);
    assert!(stdout.contains("c=3"));
}

#[test]
fn classify_with_kb_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("extra.kb");
    std::fs::write(&path, "claw\tK3\t4\tample bound for claw-free triangle-free\n").unwrap();
    let (code, stdout, _) = run(&[
        "classify",
        "--h1",
        "claw",
        "--h2",
        "K3",
        "--kb",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("c=4"), "{stdout}");
}

#[test]
fn gen_families_and_named() {
    let (code, stdout, _) = run(&["gen", "--family", "antihole", "--param", "3"]);
    assert_eq!(code, 0);
    let g = graph6::decode(stdout.trim()).unwrap();
    assert_eq!(g.n(), 7);
    assert_eq!(g.edge_count(), 14);

    let (_, stdout, _) = run(&["gen", "--family", "x", "--param", "2"]);
    let x2 = graph6::decode(stdout.trim()).unwrap();
    assert_eq!(x2.n(), 7);

    let (_, stdout, _) = run(&["gen", "--family", "named", "--name", "P4vK1"]);
    assert_eq!(stdout.trim(), graph6::encode(&catalog::gem()));

    let (code, _, stderr) = run(&["gen", "--family", "antihole", "--param", "1"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("at least 2"));
}

#[test]
fn solve_reports_requested_invariants() {
    let input = format!(
        "{}\n{}\n",
        graph6::encode(&catalog::cycle(5).unwrap()),
        graph6::encode(&catalog::complete(4).unwrap())
    );
    let (code, stdout, _) = run_with_stdin(&["solve", "--what", "chi,omega,perfect"], &input);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].contains("chi=3") && lines[0].contains("omega=2"));
    assert!(lines[0].contains("perfect=false"));
    assert!(lines[1].contains("chi=4") && lines[1].contains("omega=4"));
    assert!(lines[1].contains("perfect=true"));

    let (code, stdout, _) = run_with_stdin(&["solve", "--what", "omega", "--json"], &input);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v[0]["omega"], 2);
    assert_eq!(v[1]["omega"], 4);
}

#[test]
fn filter_keeps_free_graphs_in_order() {
    let c5 = graph6::encode(&catalog::cycle(5).unwrap());
    let c4 = graph6::encode(&catalog::cycle(4).unwrap());
    let input = format!("{c5}\n{c4}\n");
    let (code, stdout, stderr) = run_with_stdin(&["filter", "--free", "C4"], &input);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), c5);
    assert!(stderr.contains("kept 1"));

    // malformed lines are reported and flip the exit code
    let input = format!("{c5}\n???bad\n");
    let (code, stdout, stderr) = run_with_stdin(&["filter", "--free", "C4"], &input);
    assert_eq!(code, 2);
    assert_eq!(stdout.trim(), c5);
    assert!(stderr.contains("line 2"));
}

#[test]
fn verify_exit_codes_and_report_file() {
    let c5 = graph6::encode(&catalog::cycle(5).unwrap());
    // chi(C5)=3 > max(2, 2): one violation, exit 1
    let (code, stdout, _) =
        run_with_stdin(&["verify", "--constant", "2", "--records"], &format!("{c5}\n"));
    assert_eq!(code, 1);
    assert!(stdout.contains("violations=1"));

    // adequate constant: exit 0 and a parseable report file
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let (code, _, _) = run_with_stdin(
        &[
            "verify",
            "--constant",
            "3",
            "--free",
            "2K2,gem",
            "--report",
            path.to_str().unwrap(),
        ],
        &format!("{c5}\n"),
    );
    assert_eq!(code, 0);
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["totals"]["kept"], 1);
    assert_eq!(report["totals"]["violations"], 0);
    assert_eq!(report["constant"], 3);
}

#[test]
fn verify_matches_direct_solver_results() {
    // feature parity: the CLI agrees with direct library solves
    let graphs = [
        catalog::x_family(1).unwrap(),
        catalog::odd_antihole(7).unwrap(),
        catalog::complete(5).unwrap(),
    ];
    let input: String = graphs
        .iter()
        .map(|g| format!("{}\n", graph6::encode(g)))
        .collect();
    let (_, stdout, _) = run_with_stdin(
        &["verify", "--constant", "0", "--records", "--json"],
        &input,
    );
    let report: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    for (i, g) in graphs.iter().enumerate() {
        let rec = &report["records"][i];
        assert_eq!(rec["omega"], solver::clique_number(g).0);
        assert_eq!(rec["chi"], solver::chromatic_number(g).unwrap().0);
    }
}

#[test]
fn claims_subcommand_aggregates() {
    let c5 = graph6::encode(&catalog::cycle(5).unwrap());
    let k6 = graph6::encode(&catalog::complete(6).unwrap());
    let (code, stdout, _) = run_with_stdin(&["claims", "--n", "1"], &format!("{c5}\n{k6}\n"));
    assert_eq!(code, 0);
    assert!(stdout.contains("qualifying=2"));
    assert!(stdout.contains("passed=1"));
    assert!(stdout.contains("failed=0"));
}

#[test]
fn decompose_reports_partitions() {
    let x1 = graph6::encode(&catalog::x_family(1).unwrap());
    let (code, stdout, _) =
        run_with_stdin(&["decompose", "--n", "1", "--json"], &format!("{x1}\n"));
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v[0]["q"], serde_json::json!([0, 1, 2, 3, 4]));
    assert_eq!(v[0]["f"], serde_json::json!([5]));
    // X_1 contains a gem, so the n=1 hypotheses fail
    assert_eq!(v[0]["claims"]["hypotheses_met"], false);

    let k4 = graph6::encode(&catalog::complete(4).unwrap());
    let (_, stdout, _) = run_with_stdin(&["decompose", "--json"], &format!("{k4}\n"));
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v[0]["no_c5"], true);

    let anti = graph6::encode(&catalog::odd_antihole(9).unwrap());
    let (code, stdout, _) = run_with_stdin(
        &["decompose", "--kind", "antihole", "--n", "2", "--json"],
        &format!("{anti}\n"),
    );
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v[0]["r"], 9);
}

#[test]
fn constant_subcommand_prints_derivation() {
    let (code, stdout, _) = run(&["constant", "--n", "3"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("[3, 30, 60]"));

    let (code, stdout, _) = run(&["constant", "--n", "1", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["thresholds"], serde_json::json!([3]));
    assert_eq!(v["antihole_bound"], "67");
    assert_eq!(v["constant"], "2278");
}

#[test]
fn file_input_and_worker_env_are_honoured() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("corpus.g6");
    let mut text = String::new();
    for k in [5usize, 7, 9] {
        text.push_str(&graph6::encode(&catalog::odd_antihole(k).unwrap()));
        text.push('\n');
    }
    std::fs::write(&path, &text).unwrap();
    let run_env = |workers: &str| {
        let out = noc_cmd(&[
            "verify",
            "--constant",
            "9",
            "--records",
            "--json",
            "--input",
            path.to_str().unwrap(),
        ])
        .env("NOC_THREADS", workers)
        .output()
        .expect("binary runs");
        (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
    };
    let (code1, out1) = run_env("1");
    let (code2, out2) = run_env("3");
    assert_eq!(code1, 0);
    assert_eq!(code2, 0);
    assert_eq!(out1, out2, "reports must not depend on the worker count");
}

#[test]
fn operational_errors_exit_two() {
    let (code, _, _) = run(&["classify", "--h1", "Q9", "--h2", "gem"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["frobnicate"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["solve", "--what", "entropy"]);
    assert_eq!(code, 2);
    let (code, _, stderr) = run(&["solve", "--what", "chi", "--input", "/nonexistent/file"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("nonexistent"));
}
