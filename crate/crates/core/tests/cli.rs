use std::fs;
use std::process::{Command, Output};

fn chordsep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chordsep"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn analyze_cycle_json() {
    let o = chordsep(&["analyze", "--generate", "cycle:8", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["hyperbolicity"]["delta_hat"], 2.0);
    assert_eq!(v["bottleneck"]["delta_prime"], 2.0);
    assert_eq!(v["mu"], 2);
    assert_eq!(v["diameter"], 4);
    assert_eq!(v["separators"].as_array().unwrap().len(), 3);
}

#[test]
fn analyze_text_lists_every_invariant() {
    let o = chordsep(&["analyze", "--generate", "grid:2,3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for needle in [
        "mu 3",
        "separators r=3",
        "delta_hat",
        "bottleneck",
        "stability GridPoints",
    ] {
        assert!(out.contains(needle), "missing {needle:?} in\n{out}");
    }
}

#[test]
fn check_passes_with_status_zero() {
    let o = chordsep(&[
        "check",
        "thm_3_16",
        "--generate",
        "complete:4",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "pass");
    assert_eq!(v["check_id"], "thm_3_16");
}

#[test]
fn check_list_names_every_check() {
    let o = chordsep(&["check", "--list"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).lines().count(),
        chordsep::harness::CHECK_IDS.len()
    );
}

#[test]
fn generate_round_trips_byte_identically() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("g.edges");
    let o = chordsep(&["generate", "example_2_9:8", "-o", first.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(&first).unwrap();
    let g = chordsep::Graph::parse_edge_list(&text).unwrap();
    assert_eq!(g.to_edge_list(), text);
    // the file loads back through the CLI
    let o = chordsep(&[
        "check",
        "prop_2_8",
        first.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["params"]["k"], 9);
}

#[test]
fn seeds_are_reproducible() {
    let a = chordsep(&["generate", "erdos_renyi:10,0.3", "--seed", "7"]);
    let b = chordsep(&["generate", "erdos_renyi:10,0.3", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        chordsep(&["check", "no_such_check", "--generate", "cycle:5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        chordsep(&["analyze", "--generate", "moebius:3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(chordsep(&["analyze"]).status.code(), Some(2));
    assert_eq!(chordsep(&["frobnicate"]).status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.edges");
    fs::write(&bad, "0 1\n2 3\n").unwrap();
    let o = chordsep(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("disconnected"));
}

#[test]
fn corpus_writes_report_and_requires_seeds() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let cfg = dir.path().join("corpus.json");
    let body = serde_json::json!({
        "graphs": [{"spec": "cycle:6"}, {"spec": "erdos_renyi:7,0.4", "seeds": [1, 2]}],
        "checks": ["thm_3_13", "prop_3_4"],
        "output": report,
    });
    fs::write(&cfg, body.to_string()).unwrap();
    let o = chordsep(&["corpus", cfg.to_str().unwrap()]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["graphs"], 3);
    assert_eq!(v["fails"], 0);
    assert_eq!(v["reports"].as_array().unwrap().len(), 6);

    let unseeded = serde_json::json!({"graphs": [{"spec": "erdos_renyi:7,0.4"}]});
    fs::write(&cfg, unseeded.to_string()).unwrap();
    assert_eq!(
        chordsep(&["corpus", cfg.to_str().unwrap()]).status.code(),
        Some(2)
    );
}
