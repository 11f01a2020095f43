//! Every invariant of one graph in a single report.

use serde::{Deserialize, Serialize};

use crate::bottleneck::{bp_delta, BpReport};
use crate::chordality::{ChordalityProfile, CycleCatalog};
use crate::error::Result;
use crate::geodesics::{stability_constant, StabilityMode, StabilityReport};
use crate::graph::Graph;
use crate::hyperbolicity::{delta_hat, HyperbolicityReport};
use crate::separators::{separator_diameter_profile, DiameterProfile};
use crate::Caps;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphProfile {
    pub vertices: usize,
    pub edges: usize,
    /// Maximum degree.
    pub mu: usize,
    pub diameter: u32,
    pub chordality: ChordalityProfile,
    /// For `r = 1, 2, 3`.
    pub separators: Vec<DiameterProfile>,
    pub hyperbolicity: HyperbolicityReport,
    pub bottleneck: BpReport,
    pub stability: Vec<StabilityReport>,
}

/// Computes the full profile; `resolution` is the hyperbolicity grid.
pub fn profile(g: &Graph, caps: &Caps, resolution: usize) -> Result<GraphProfile> {
    let catalog = CycleCatalog::full(g, caps)?;
    Ok(GraphProfile {
        vertices: g.n(),
        edges: g.edge_count(),
        mu: g.max_degree(),
        diameter: g.diameter(),
        chordality: ChordalityProfile::from_catalog(&catalog),
        separators: (1..=3)
            .map(|r| separator_diameter_profile(g, r, caps))
            .collect::<Result<_>>()?,
        hyperbolicity: delta_hat(g, resolution, caps)?,
        bottleneck: bp_delta(g),
        stability: [StabilityMode::Vertices, StabilityMode::GridPoints]
            .into_iter()
            .map(|m| stability_constant(g, m, caps.geodesics))
            .collect(),
    })
}
