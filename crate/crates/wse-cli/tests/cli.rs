//! End-to-end tests of the `wse` binary: record contents, exit codes,
//! output formats, error policies, and byte-level determinism.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

use wse::corpus::{enumerate_connected, sample_random_tree};
use wse::graph6::write_graph6;
use wse::metrics::invariant_summary;
use wse::rng::GeneratorSeed;
use wse::Graph;

fn wse_bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wse"))
        .args(args)
        .env_remove("WSE_PARALLELISM")
        .output()
        .expect("binary starts")
}

fn wse_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_wse"))
        .args(args)
        .env_remove("WSE_PARALLELISM")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child
        .stdin
        .take()
        .expect("stdin piped")
        .write_all(input.as_bytes())
        .expect("stdin accepts input");
    child.wait_with_output().expect("binary exits")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr_str(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

fn json_lines(out: &Output) -> Vec<Value> {
    stdout_str(out)
        .lines()
        .map(|l| serde_json::from_str(l).expect("every stdout line is a JSON object"))
        .collect()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn graph_file(dir: &tempfile::TempDir, name: &str, graphs: &[&Graph]) -> String {
    let path = dir.path().join(name);
    let text: String = graphs.iter().map(|g| write_graph6(g) + "\n").collect();
    std::fs::write(&path, text).expect("fixture written");
    path.to_str().expect("UTF-8 path").to_string()
}

#[test]
fn verify_passes_on_every_five_vertex_class() {
    let out = wse_bin(&["verify", "--enumerate", "5"]);
    assert_eq!(exit_code(&out), 0);

    let expected: usize = enumerate_connected(5, true)
        .unwrap()
        .iter()
        .map(Graph::edge_count)
        .sum();
    let records = json_lines(&out);
    assert_eq!(records.len(), expected);
    assert!(records.iter().all(|r| r["pass"] == Value::Bool(true)));
    assert!(records.iter().all(|r| r["delta"].as_i64().unwrap() >= 0));
    assert!(stderr_str(&out).contains("21 graphs"));
}

#[test]
fn verify_reports_each_edge_of_a_file_graph() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = Graph::complete(3).unwrap();
    let path = graph_file(&dir, "k3.g6", &[&k3]);

    let out = wse_bin(&["verify", "--file", &path]);
    assert_eq!(exit_code(&out), 0);
    let records = json_lines(&out);
    assert_eq!(records.len(), 3);
    for r in &records {
        assert_eq!(r["graph"], "Bw");
        assert_eq!(r["wse_before"], 0);
        assert_eq!(r["wse_after"], -1);
        assert_eq!(r["delta"], 1);
        assert_eq!(r["pass"], true);
    }
    let edges: Vec<&str> = records
        .iter()
        .map(|r| r["edge"].as_str().unwrap())
        .collect();
    assert_eq!(edges, ["0-1", "0-2", "1-2"]);
}

#[test]
fn verify_sees_zero_delta_contractions() {
    let out = wse_bin(&["verify", "--enumerate", "3"]);
    assert_eq!(exit_code(&out), 0);
    let deltas: Vec<i64> = json_lines(&out)
        .iter()
        .map(|r| r["delta"].as_i64().unwrap())
        .collect();
    assert_eq!(deltas.iter().min(), Some(&0));
    assert_eq!(deltas.iter().max(), Some(&1));
}

#[test]
fn lemmas_all_hold_on_the_four_vertex_corpus() {
    let out = wse_bin(&["lemmas", "--enumerate", "4"]);
    assert_eq!(exit_code(&out), 0);
    let records = json_lines(&out);
    // 6 classes with 3+3+4+4+5+6 = 25 edges, 6 checks per edge.
    assert_eq!(records.len(), 150);
    assert!(records.iter().all(|r| r["holds"] == Value::Bool(true)));
    assert!(records.iter().all(|r| r["witness"] == Value::Null));

    let names: std::collections::BTreeSet<&str> = records
        .iter()
        .map(|r| r["lemma"].as_str().unwrap())
        .collect();
    let expected: std::collections::BTreeSet<&str> = ["D1", "D2", "E1", "E2", "Conj0", "Conj1"]
        .into_iter()
        .collect();
    assert_eq!(names, expected);
}

#[test]
fn lemmas_hold_on_cycle_file_and_seeded_tree() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = Graph::cycle(4).unwrap();
    let path = graph_file(&dir, "c4.g6", &[&c4]);

    let out = wse_bin(&["lemmas", "--file", &path]);
    assert_eq!(exit_code(&out), 0);
    let records = json_lines(&out);
    assert_eq!(records.len(), 24); // 4 edges x 6 checks
    assert!(records.iter().all(|r| r["holds"] == Value::Bool(true)));

    let out = wse_bin(&["lemmas", "--tree", "12", "--seed", "7"]);
    assert_eq!(exit_code(&out), 0);
    assert!(json_lines(&out)
        .iter()
        .all(|r| r["holds"] == Value::Bool(true)));
}

#[test]
fn conjecture2_flags_path_equality() {
    let dir = tempfile::tempdir().unwrap();
    let p9 = Graph::path(9).unwrap();
    let path = graph_file(&dir, "p9.g6", &[&p9]);

    let out = wse_bin(&["conjecture2", "--file", &path]);
    assert_eq!(exit_code(&out), 0);
    let records = json_lines(&out);
    assert_eq!(records.len(), 1);
    let r = &records[0];
    assert_eq!(r["n"], 9);
    assert_eq!(r["radius"], 4);
    assert_eq!(r["wse"], 64);
    assert_eq!(r["bound"], 64);
    assert_eq!(r["within_bound"], true);
    assert_eq!(r["equality"], true);
    assert_eq!(r["is_path"], true);
}

#[test]
fn conjecture2_filters_by_radius() {
    // Only P8 and C8 reach radius 4 among the 11117 classes on 8 vertices.
    let out = wse_bin(&["conjecture2", "--enumerate", "8"]);
    assert_eq!(exit_code(&out), 0);
    let records = json_lines(&out);
    assert_eq!(records.len(), 2);
    assert!(records
        .iter()
        .all(|r| r["within_bound"] == Value::Bool(true)));
    let path_record = records
        .iter()
        .find(|r| r["is_path"] == Value::Bool(true))
        .unwrap();
    assert_eq!(path_record["equality"], true);
    assert_eq!(path_record["wse"], 40);
    let cycle_record = records
        .iter()
        .find(|r| r["is_path"] == Value::Bool(false))
        .unwrap();
    assert_eq!(cycle_record["wse"], 32);
    assert_eq!(cycle_record["equality"], false);
    assert!(stderr_str(&out).contains("skipped 11115"));

    // A sampled tree is reported iff its radius reaches 4.
    let tree = sample_random_tree(15, GeneratorSeed(9)).unwrap();
    let qualifies = invariant_summary(&tree).unwrap().radius >= 4;
    let out = wse_bin(&["conjecture2", "--tree", "15", "--seed", "9"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(json_lines(&out).len(), usize::from(qualifies));
}

#[test]
fn chain_walks_a_path_down_to_k2() {
    let dir = tempfile::tempdir().unwrap();
    let p4 = Graph::path(4).unwrap();
    let path = graph_file(&dir, "p4.g6", &[&p4]);

    let out = wse_bin(&["chain", "--file", &path]);
    assert_eq!(exit_code(&out), 0);
    let records = json_lines(&out);
    let steps: Vec<(u64, &str, i64)> = records
        .iter()
        .map(|r| {
            (
                r["step"].as_u64().unwrap(),
                r["graph"].as_str().unwrap(),
                r["wse"].as_i64().unwrap(),
            )
        })
        .collect();
    assert_eq!(steps, [(0, "Ch", 0), (1, "Bg", -1), (2, "A_", -1)]);
    assert!(stderr_str(&out).contains("non-increasing"));
}

#[test]
fn chain_handles_triangle_and_all_strategies() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = Graph::complete(3).unwrap();
    let path = graph_file(&dir, "k3.g6", &[&k3]);

    for extra in [
        &["--strategy", "first-edge"][..],
        &["--strategy", "max-degree"][..],
        &["--strategy", "random", "--strategy-seed", "3"][..],
    ] {
        let mut args = vec!["chain", "--file", &path];
        args.extend_from_slice(extra);
        let out = wse_bin(&args);
        assert_eq!(exit_code(&out), 0, "strategy {extra:?}");
        let wses: Vec<i64> = json_lines(&out)
            .iter()
            .map(|r| r["wse"].as_i64().unwrap())
            .collect();
        assert_eq!(wses, [0, -1]);
    }
}

#[test]
fn chain_rejects_bad_configurations() {
    let out = wse_bin(&["chain", "--enumerate", "4"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_str(&out).contains("exactly one input graph"));

    let out = wse_bin(&[
        "chain",
        "--tree",
        "5",
        "--seed",
        "1",
        "--strategy",
        "random",
    ]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_str(&out).contains("--strategy-seed"));

    let out = wse_bin(&[
        "chain",
        "--tree",
        "5",
        "--seed",
        "1",
        "--strategy-seed",
        "4",
    ]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn gen_emits_canonical_enumeration_order() {
    let out = wse_bin(&["gen", "--enumerate", "3"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_str(&out), "Bg\nBw\n");
}

#[test]
fn gen_emits_seeded_samples_deterministically() {
    let out = wse_bin(&["gen", "--tree", "2", "--seed", "1"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_str(&out), "A_\n");

    let args = [
        "gen", "--gnp", "10", "--p", "1/2", "--seed", "5", "--count", "3",
    ];
    let first = wse_bin(&args);
    let second = wse_bin(&args);
    assert_eq!(exit_code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(stdout_str(&first).lines().count(), 3);

    // p = 1/1 forces the complete graph.
    let out = wse_bin(&["gen", "--gnp", "5", "--p", "1/1", "--seed", "0"]);
    assert_eq!(
        stdout_str(&out),
        write_graph6(&Graph::complete(5).unwrap()) + "\n"
    );
}

#[test]
fn gen_rejects_invalid_probabilities() {
    for p in ["0/1", "2/1"] {
        let out = wse_bin(&["gen", "--gnp", "5", "--p", p, "--seed", "0"]);
        assert_eq!(exit_code(&out), 2, "p = {p}");
    }
    let out = wse_bin(&["gen", "--gnp", "5", "--p", "0.5", "--seed", "0"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn identical_invocations_are_byte_identical_across_worker_counts() {
    let base = wse_bin(&["verify", "--enumerate", "5", "--parallelism", "1"]);
    assert_eq!(exit_code(&base), 0);
    for workers in ["0", "3", "8"] {
        let out = wse_bin(&["verify", "--enumerate", "5", "--parallelism", workers]);
        assert_eq!(out.stdout, base.stdout, "workers = {workers}");
    }

    // The environment default must behave exactly like the flag.
    let out = Command::new(env!("CARGO_BIN_EXE_wse"))
        .args(["verify", "--enumerate", "5"])
        .env("WSE_PARALLELISM", "4")
        .output()
        .expect("binary starts");
    assert_eq!(out.stdout, base.stdout);

    let base = wse_bin(&["lemmas", "--enumerate", "5", "--output", "csv"]);
    let par = wse_bin(&[
        "lemmas",
        "--enumerate",
        "5",
        "--output",
        "csv",
        "--parallelism",
        "0",
    ]);
    assert_eq!(base.stdout, par.stdout);
}

#[test]
fn summary_reports_pinned_invariants() {
    let dir = tempfile::tempdir().unwrap();
    let p9 = Graph::path(9).unwrap();
    let k5 = Graph::complete(5).unwrap();
    let c6 = Graph::cycle(6).unwrap();
    let path = graph_file(&dir, "trio.g6", &[&p9, &k5, &c6]);

    let out = wse_bin(&["summary", "--file", &path]);
    assert_eq!(exit_code(&out), 0);
    let records = json_lines(&out);
    let condensed: Vec<(u64, u64, u64, u64, i64, u64, u64)> = records
        .iter()
        .map(|r| {
            (
                r["n"].as_u64().unwrap(),
                r["m"].as_u64().unwrap(),
                r["wiener"].as_u64().unwrap(),
                r["total_ecc"].as_u64().unwrap(),
                r["wse"].as_i64().unwrap(),
                r["radius"].as_u64().unwrap(),
                r["diameter"].as_u64().unwrap(),
            )
        })
        .collect();
    assert_eq!(
        condensed,
        [
            (9, 8, 120, 56, 64, 4, 8),
            (5, 10, 10, 5, 5, 1, 1),
            (6, 6, 27, 18, 9, 3, 3),
        ]
    );
}

#[test]
fn summary_skips_disconnected_graphs_with_a_diagnostic() {
    let dir = tempfile::tempdir().unwrap();
    let two_k2 = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
    let k3 = Graph::complete(3).unwrap();
    let path = graph_file(&dir, "mixed.g6", &[&two_k2, &k3]);

    let out = wse_bin(&["summary", "--file", &path]);
    assert_eq!(exit_code(&out), 0);
    let records = json_lines(&out);
    assert_eq!(records.len(), 1);
    assert_eq!(records[0]["graph"], "Bw");
    let err = stderr_str(&out);
    assert!(err.contains("not connected"));
    assert!(err.contains("1 skipped"));
}

#[test]
fn parse_error_policy_aborts_or_skips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.g6");
    std::fs::write(&path, "Bw\nB t\nBg\n").unwrap();
    let path = path.to_str().unwrap();

    let out = wse_bin(&["summary", "--file", path]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_str(&out).contains(":2:"));
    assert!(stdout_str(&out).is_empty());

    let out = wse_bin(&["summary", "--file", path, "--on-error", "skip"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(json_lines(&out).len(), 2);
    assert!(stderr_str(&out).contains("line skipped"));
}

#[test]
fn precondition_policy_governs_small_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let k2 = Graph::path(2).unwrap();
    let k3 = Graph::complete(3).unwrap();
    let path = graph_file(&dir, "k2k3.g6", &[&k2, &k3]);

    let out = wse_bin(&["verify", "--file", &path]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_str(&out).contains("need at least 3"));

    let out = wse_bin(&["verify", "--file", &path, "--on-error", "skip"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(json_lines(&out).len(), 3);
    assert!(stderr_str(&out).contains("skipped"));
}

#[test]
fn stdin_is_a_file_source() {
    let out = wse_with_stdin(&["summary", "--file", "-"], "Bw\n");
    assert_eq!(exit_code(&out), 0);
    let records = json_lines(&out);
    assert_eq!(records.len(), 1);
    assert_eq!(records[0]["wiener"], 3);
}

#[test]
fn csv_and_human_formats_share_the_record_stream() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = Graph::complete(3).unwrap();
    let path = graph_file(&dir, "k3.g6", &[&k3]);

    let out = wse_bin(&["verify", "--file", &path, "--output", "csv"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_str(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("graph,edge,wse_before,wse_after,delta,pass")
    );
    assert_eq!(lines.clone().count(), 3);
    assert!(lines.all(|l| l.starts_with("Bw,") && l.ends_with(",true")));
    assert!(stderr_str(&out).contains("verify:"));

    let out = wse_bin(&["verify", "--file", &path, "--output", "human"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_str(&out);
    assert_eq!(text.lines().count(), 4); // 3 records + summary on stdout
    assert!(text.lines().last().unwrap().starts_with("verify:"));
    assert!(stderr_str(&out).is_empty());
}

#[test]
fn machine_formats_keep_stdout_parseable() {
    let out = wse_bin(&["conjecture2", "--enumerate", "8"]);
    for line in stdout_str(&out).lines() {
        serde_json::from_str::<Value>(line).expect("pure JSONL stdout");
    }
    assert!(stderr_str(&out).contains("conjecture2:"));
}

#[test]
fn source_flags_are_validated() {
    // Exactly one source.
    let out = wse_bin(&["verify", "--enumerate", "4", "--tree", "5", "--seed", "1"]);
    assert_eq!(exit_code(&out), 2);
    let out = wse_bin(&["verify"]);
    assert_eq!(exit_code(&out), 2);

    // Sampler flags without their sampler.
    let out = wse_bin(&["verify", "--enumerate", "4", "--seed", "1"]);
    assert_eq!(exit_code(&out), 2);
    let out = wse_bin(&["verify", "--enumerate", "4", "--count", "2"]);
    assert_eq!(exit_code(&out), 2);
    let out = wse_bin(&["verify", "--tree", "5", "--seed", "1", "--p", "1/2"]);
    assert_eq!(exit_code(&out), 2);

    // Samplers demand their parameters up front.
    let out = wse_bin(&["verify", "--gnp", "5", "--seed", "1"]);
    assert_eq!(exit_code(&out), 2);
    let out = wse_bin(&["verify", "--tree", "5"]);
    assert_eq!(exit_code(&out), 2);

    // Enumeration beyond the supported range is an operational error.
    let out = wse_bin(&["verify", "--enumerate", "9"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn seeded_sources_advance_one_seed_per_sample() {
    let batch = wse_bin(&["gen", "--tree", "9", "--seed", "40", "--count", "3"]);
    let singles: String = (40..43)
        .map(|seed| write_graph6(&sample_random_tree(9, GeneratorSeed(seed)).unwrap()) + "\n")
        .collect();
    assert_eq!(stdout_str(&batch), singles);
}

#[test]
fn closing_stdout_early_is_a_quiet_stop() {
    // The reference stream is ~78KB of JSONL — larger than a pipe buffer —
    // so dropping the read end mid-stream forces a write failure.
    let mut child = Command::new(env!("CARGO_BIN_EXE_wse"))
        .args(["verify", "--enumerate", "6"])
        .env_remove("WSE_PARALLELISM")
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    drop(child.stdout.take());
    let out = child.wait_with_output().expect("binary exits");

    assert!(
        out.status.success(),
        "a consumer hanging up is not an error"
    );
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(
        !stderr.contains("error:"),
        "no diagnostic on a closed pipe, got: {stderr}"
    );
}
