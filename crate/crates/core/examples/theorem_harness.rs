//! Run theorem checks on single graphs and on a small corpus.
//!
//!     cargo run --example theorem_harness [ER_COUNT]

use chordsep::graph::GraphSpec;
use chordsep::harness::{replay, run_check, run_checks, run_corpus, standard_corpus, CHECK_IDS};
use chordsep::{Caps, Status};

fn main() -> chordsep::Result<()> {
    let caps = Caps::from_env();

    let k4 = GraphSpec::parse("complete:4")?.build(None)?;
    let r = run_check(&k4, "complete:4", "thm_3_16", &caps)?;
    println!(
        "{} on {}: {} with {}",
        r.check_id,
        r.graph_id,
        r.status,
        serde_json::to_string(&r.params).unwrap()
    );

    let g = GraphSpec::parse("erdos_renyi:9,0.35")?.build(Some(11))?;
    for r in run_checks(&g, "er", &CHECK_IDS, &caps)? {
        println!(
            "  {:<13} {:<12} {}",
            r.check_id,
            r.status.to_string(),
            r.note.unwrap_or_default()
        );
        if r.status == Status::Fail {
            let w = r.witness.as_ref().expect("fails carry witnesses");
            println!("    witness replays: {}", replay(&g, w)?);
        }
    }

    let count = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(10);
    let mut cfg = standard_corpus(count);
    // the three large examples dominate the runtime; keep this demo quick
    cfg.graphs.retain(|e| !e.spec.starts_with("example"));
    let report = run_corpus(&cfg)?;
    println!("\ncorpus: {} graphs, {} fails", report.graphs, report.fails);
    for (id, s) in &report.summary {
        println!(
            "  {id:<13} pass {:>3} vacuous {:>3} inconclusive {:>3}",
            s.pass, s.vacuous, s.inconclusive
        );
    }
    Ok(())
}
