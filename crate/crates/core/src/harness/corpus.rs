//! Check suites over generated corpora.

use std::collections::BTreeMap;
use std::path::PathBuf;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{run_checks, TheoremReport, CHECK_IDS};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphSpec};
use crate::{Caps, Status};

/// One generator with the seeds to draw it with. Random families need at
/// least one seed; deterministic ones ignore seeds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub spec: String,
    #[serde(default)]
    pub seeds: Vec<u64>,
}

/// A corpus run, as read from a JSON config file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusConfig {
    pub graphs: Vec<CorpusEntry>,
    /// Check ids to run; all when absent.
    #[serde(default)]
    pub checks: Option<Vec<String>>,
    #[serde(default)]
    pub caps: Option<Caps>,
    /// Where the CLI writes the JSON report.
    #[serde(default)]
    pub output: Option<PathBuf>,
}

impl CorpusConfig {
    /// `(graph_id, graph)` for every entry and seed, in config order.
    pub fn graphs(&self) -> Result<Vec<(String, Graph)>> {
        let mut out = Vec::new();
        for entry in &self.graphs {
            let in_graph = |graph_id: String, e: Error| Error::InGraph {
                graph_id,
                source: Box::new(e),
            };
            let spec =
                GraphSpec::parse(&entry.spec).map_err(|e| in_graph(entry.spec.clone(), e))?;
            if spec.is_random() {
                if entry.seeds.is_empty() {
                    let e = Error::InvalidParams("random families need explicit seeds".into());
                    return Err(in_graph(entry.spec.clone(), e));
                }
                for &seed in &entry.seeds {
                    let id = format!("{spec}@{seed}");
                    let g = spec
                        .build(Some(seed))
                        .map_err(|e| in_graph(id.clone(), e))?;
                    out.push((id, g));
                }
            } else {
                let g = spec
                    .build(None)
                    .map_err(|e| in_graph(spec.to_string(), e))?;
                out.push((spec.to_string(), g));
            }
        }
        Ok(out)
    }

    fn check_ids(&self) -> Result<Vec<&str>> {
        match &self.checks {
            None => Ok(CHECK_IDS.to_vec()),
            Some(ids) => ids
                .iter()
                .map(|id| {
                    CHECK_IDS
                        .iter()
                        .find(|c| **c == id)
                        .copied()
                        .ok_or_else(|| Error::UnknownCheck(id.clone()))
                })
                .collect(),
        }
    }
}

/// The three named constructions, `er_count` seeded connected Erdős–Rényi graphs on
/// 6 to 14 vertices, small grids and complete graphs.
pub fn standard_corpus(er_count: u64) -> CorpusConfig {
    let mut graphs: Vec<CorpusEntry> = ["example_2_9:8", "example_3_14:12", "example_6_9:4"]
        .iter()
        .map(|s| CorpusEntry {
            spec: s.to_string(),
            seeds: Vec::new(),
        })
        .collect();
    for seed in 0..er_count {
        let n = 6 + seed % 9;
        // average degree between 2 and 3 keeps cycle counts manageable
        let degree = [2.0, 2.5, 3.0][(seed / 9 % 3) as usize];
        let p = (degree / (n - 1) as f64).min(0.45);
        let p = (p * 100.0).round() / 100.0;
        graphs.push(CorpusEntry {
            spec: format!("erdos_renyi:{n},{p}"),
            seeds: vec![seed],
        });
    }
    for spec in ["grid:2,2", "grid:2,3", "grid:2,4", "grid:3,2", "path:8"] {
        graphs.push(CorpusEntry {
            spec: spec.to_string(),
            seeds: Vec::new(),
        });
    }
    for n in 3..=8 {
        graphs.push(CorpusEntry {
            spec: format!("complete:{n}"),
            seeds: Vec::new(),
        });
    }
    CorpusConfig {
        graphs,
        checks: None,
        caps: None,
        output: None,
    }
}

/// Status counts for one check across the corpus.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    pub inconclusive: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusReport {
    pub graphs: usize,
    pub fails: usize,
    pub summary: BTreeMap<String, CheckSummary>,
    /// Sorted by `(graph_id, check_id)`.
    pub reports: Vec<TheoremReport>,
}

impl CorpusReport {
    /// Any failing check: a violated theorem or an implementation defect.
    pub fn alarm(&self) -> bool {
        self.fails > 0
    }
}

pub fn run_corpus(cfg: &CorpusConfig) -> Result<CorpusReport> {
    let caps = cfg.caps.unwrap_or_else(Caps::from_env);
    let ids = cfg.check_ids()?;
    let graphs = cfg.graphs()?;
    let per_graph: Vec<Vec<TheoremReport>> = graphs
        .par_iter()
        .map(|(id, g)| {
            run_checks(g, id, &ids, &caps).map_err(|e| Error::InGraph {
                graph_id: id.clone(),
                source: Box::new(e),
            })
        })
        .collect::<Result<_>>()?;
    let mut reports: Vec<TheoremReport> = per_graph.into_iter().flatten().collect();
    reports.sort_by(|x, y| (&x.graph_id, &x.check_id).cmp(&(&y.graph_id, &y.check_id)));
    let mut summary: BTreeMap<String, CheckSummary> = BTreeMap::new();
    for r in &reports {
        let s = summary.entry(r.check_id.clone()).or_default();
        match r.status {
            Status::Pass => s.pass += 1,
            Status::Fail => s.fail += 1,
            Status::Vacuous => s.vacuous += 1,
            Status::Inconclusive => s.inconclusive += 1,
        }
    }
    Ok(CorpusReport {
        graphs: graphs.len(),
        fails: reports.iter().filter(|r| r.status == Status::Fail).count(),
        summary,
        reports,
    })
}
