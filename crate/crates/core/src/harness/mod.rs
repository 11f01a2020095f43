//! Executable theorem checks.
//!
//! Every check derives its hypothesis parameters from the graph itself
//! (minimal passing chordality parameters, separator diameters, the
//! hyperbolicity and stability constants, the bottleneck constant) and then
//! tests the promised conclusion. A `fail` is a violation of a proved
//! statement and always carries a [`Witness`] that [`replay`] can re-check.
//!
//! Statuses: `vacuous` when the hypothesis holds for no admissible
//! parameters or nothing qualifies, `inconclusive` when an enumeration
//! behind either side hit a cap.

mod checks;
mod corpus;
mod profile;
mod witness;

use std::collections::BTreeMap;
use std::sync::OnceLock;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::bottleneck::{bp_delta, BpReport};
use crate::chordality::CycleCatalog;
use crate::error::{Error, Result};
use crate::geodesics::{stability_constant, StabilityMode, StabilityReport};
use crate::graph::{Graph, Grid};
use crate::hyperbolicity::{delta_hat, HyperbolicityReport};
use crate::separators::{separator_diameter_profile, DiameterProfile};
use crate::{Caps, Status};

pub use corpus::{
    run_corpus, standard_corpus, CheckSummary, CorpusConfig, CorpusEntry, CorpusReport,
};
pub use profile::{profile, GraphProfile};
pub use witness::{replay, Witness};

/// Every check id, in report order.
pub const CHECK_IDS: [&str; 28] = [
    "prop_2_8",
    "thm_2_16",
    "thm_2_17",
    "thm_2_18",
    "cor_2_19",
    "cor_2_20",
    "prop_3_4",
    "thm_3_7_fwd",
    "thm_3_7_bwd",
    "thm_3_11_fwd",
    "thm_3_11_bwd",
    "thm_3_13",
    "thm_3_16",
    "thm_4_6",
    "thm_4_7",
    "cor_4_9",
    "cor_4_10",
    "thm_5_2",
    "prop_5_4",
    "prop_5_6",
    "prop_5_7",
    "thm_6_4_fwd",
    "thm_6_4_bwd",
    "prop_6_6",
    "prop_6_7",
    "thm_6_8_fwd",
    "thm_6_8_bwd",
    "prop_6_10",
];

/// Hypothesis parameters as reported, keyed by name.
pub type Params = BTreeMap<String, serde_json::Value>;

/// Outcome of one check on one graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub check_id: String,
    pub graph_id: String,
    pub status: Status,
    pub params: Params,
    pub witness: Option<Witness>,
    /// Why the check was vacuous or inconclusive.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub runtime_ms: u64,
}

/// What a check function returns before timing and ids are attached.
#[derive(Debug, Clone, Default)]
pub(crate) struct Outcome {
    pub status: Option<Status>,
    pub params: Params,
    pub witness: Option<Witness>,
    pub note: Option<String>,
}

/// Lazily computed invariants shared by the checks on one graph.
pub struct Analysis<'g> {
    pub g: &'g Graph,
    pub caps: Caps,
    catalog: OnceLock<Result<CycleCatalog>>,
    separators: [OnceLock<Result<DiameterProfile>>; 3],
    bp: OnceLock<BpReport>,
    grid4: OnceLock<Grid>,
    hyperbolicity: OnceLock<Result<HyperbolicityReport>>,
    stability: [OnceLock<StabilityReport>; 2],
}

impl<'g> Analysis<'g> {
    pub fn new(g: &'g Graph, caps: Caps) -> Analysis<'g> {
        Analysis {
            g,
            caps,
            catalog: OnceLock::new(),
            separators: Default::default(),
            bp: OnceLock::new(),
            grid4: OnceLock::new(),
            hyperbolicity: OnceLock::new(),
            stability: Default::default(),
        }
    }

    /// All simple cycles with families tagged on the half grid.
    pub fn catalog(&self) -> Result<&CycleCatalog> {
        self.catalog
            .get_or_init(|| CycleCatalog::full(self.g, &self.caps))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Minimal vertex r-separator diameters for `r` in `1..=3`.
    pub fn separators(&self, r: u32) -> Result<&DiameterProfile> {
        if !(1..=3).contains(&r) {
            return Err(Error::InvalidParams(format!(
                "separator profiles are cached for r in 1..=3, got {r}"
            )));
        }
        self.separators[r as usize - 1]
            .get_or_init(|| separator_diameter_profile(self.g, r, &self.caps))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn bp(&self) -> &BpReport {
        self.bp.get_or_init(|| bp_delta(self.g))
    }

    /// The 4-subdivision used by point-level bottleneck checks.
    pub fn grid4(&self) -> &Grid {
        self.grid4
            .get_or_init(|| Grid::new(self.g, 4).expect("positive resolution"))
    }

    /// `delta_hat` at resolution 4.
    pub fn hyperbolicity(&self) -> Result<&HyperbolicityReport> {
        self.hyperbolicity
            .get_or_init(|| delta_hat(self.g, 4, &self.caps))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn stability(&self, mode: StabilityMode) -> &StabilityReport {
        let i = match mode {
            StabilityMode::Vertices => 0,
            StabilityMode::GridPoints => 1,
        };
        self.stability[i].get_or_init(|| stability_constant(self.g, mode, self.caps.geodesics))
    }
}

/// Runs one named check.
pub fn run_check(g: &Graph, graph_id: &str, check_id: &str, caps: &Caps) -> Result<TheoremReport> {
    let a = Analysis::new(g, *caps);
    run_check_with(&a, graph_id, check_id)
}

/// Runs one named check against a shared [`Analysis`].
pub fn run_check_with(a: &Analysis, graph_id: &str, check_id: &str) -> Result<TheoremReport> {
    let f = checks::lookup(check_id).ok_or_else(|| Error::UnknownCheck(check_id.to_string()))?;
    let start = Instant::now();
    let out = f(a)?;
    let status = out.status.unwrap_or(Status::Vacuous);
    if status == Status::Fail && out.witness.is_none() {
        return Err(Error::Consistency(format!(
            "{check_id} failed without a witness"
        )));
    }
    Ok(TheoremReport {
        check_id: check_id.to_string(),
        graph_id: graph_id.to_string(),
        status,
        params: out.params,
        witness: out.witness,
        note: out.note,
        runtime_ms: start.elapsed().as_millis() as u64,
    })
}

/// Runs several checks on one graph, sharing the computed invariants.
pub fn run_checks(
    g: &Graph,
    graph_id: &str,
    check_ids: &[&str],
    caps: &Caps,
) -> Result<Vec<TheoremReport>> {
    let a = Analysis::new(g, *caps);
    check_ids
        .iter()
        .map(|id| run_check_with(&a, graph_id, id))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphSpec;

    fn status(spec: &str, check: &str) -> TheoremReport {
        let g = GraphSpec::parse(spec).unwrap().build(Some(5)).unwrap();
        run_check(&g, spec, check, &Caps::default()).unwrap()
    }

    #[test]
    fn spec_examples() {
        assert_eq!(status("random_tree:20", "thm_3_13").status, Status::Pass);
        assert_eq!(status("complete:4", "thm_3_16").status, Status::Pass);
        let r = status("example_2_9:8", "prop_2_8");
        assert_eq!(r.params["k"], 9);
        assert_eq!(r.status, Status::Pass);
    }

    #[test]
    fn every_check_runs_on_small_graphs() {
        for spec in [
            "cycle:8",
            "complete:5",
            "grid:3,3",
            "random_tree:12",
            "erdos_renyi:9,0.35",
        ] {
            let g = GraphSpec::parse(spec).unwrap().build(Some(3)).unwrap();
            let reports = run_checks(&g, spec, &CHECK_IDS, &Caps::default()).unwrap();
            for r in reports {
                assert_ne!(
                    r.status,
                    Status::Fail,
                    "{spec} {}: {:?}",
                    r.check_id,
                    r.witness
                );
            }
        }
        let g = GraphSpec::parse("cycle:5").unwrap().build(None).unwrap();
        assert!(matches!(
            run_check(&g, "c5", "nope", &Caps::default()),
            Err(Error::UnknownCheck(_))
        ));
    }
}
