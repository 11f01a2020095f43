use serde::{Deserialize, Serialize};

use super::Cycle;
use crate::error::{Error, Result};
use crate::graph::{Graph, Grid};

/// Cycle families a chordality predicate can be restricted to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CycleFamily {
    All,
    /// Geodesic triangles.
    Triangles,
    /// Geodesic bigons.
    Bigons,
    /// Bigons whose two corners are vertices.
    VertexBigons,
}

impl CycleFamily {
    pub const ALL: [CycleFamily; 4] = [
        CycleFamily::All,
        CycleFamily::Triangles,
        CycleFamily::Bigons,
        CycleFamily::VertexBigons,
    ];

    pub fn contains(self, tags: FamilyTags) -> bool {
        match self {
            CycleFamily::All => true,
            CycleFamily::Triangles => tags.triangle,
            CycleFamily::Bigons => tags.bigon,
            CycleFamily::VertexBigons => tags.vertex_bigon,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyTags {
    pub triangle: bool,
    pub bigon: bool,
    pub vertex_bigon: bool,
}

/// `reach[i]` is the largest `a` such that the arc from position `i` to
/// `i + a` is a geodesic. Sub-arcs of geodesic arcs are geodesic, so the arc
/// `i -> i + a` is geodesic exactly when `a <= reach[i]`.
pub(crate) fn reach_table(grid: &Grid, ids: &[usize]) -> Vec<usize> {
    let n = ids.len();
    (0..n)
        .map(|i| {
            let mut a = 0;
            while a < n && grid.dist(ids[i], ids[(i + a + 1) % n]) as usize == a + 1 {
                a += 1;
            }
            a
        })
        .collect()
}

/// Tags the cycle with the families it belongs to, using corners on the
/// `1/t` grid.
pub fn classify_cycle(g: &Graph, c: &Cycle, t: usize) -> Result<FamilyTags> {
    if !(t == 1 || t == 2) {
        return Err(Error::InvalidParams(format!(
            "classification resolution must be 1 or 2, got {t}"
        )));
    }
    let grid = Grid::new(g, t)?;
    Ok(classify_on(&grid, c.grid_ids(g, &grid)))
}

pub(crate) fn classify_on(grid: &Grid, ids: Vec<usize>) -> FamilyTags {
    let n = ids.len();
    let t = grid.resolution();
    let reach = reach_table(grid, &ids);
    let mut tags = FamilyTags::default();
    if n % 2 == 0 {
        let half = n / 2;
        for i in 0..half {
            if reach[i] >= half && reach[i + half] >= half {
                tags.bigon = true;
                if i % t == 0 && half % t == 0 {
                    tags.vertex_bigon = true;
                }
            }
        }
    }
    tags.triangle = tags.bigon || has_triangle(&reach);
    tags
}

fn has_triangle(reach: &[usize]) -> bool {
    let n = reach.len();
    for i in 0..n {
        for a in 1..=reach[i].min(n - 2) {
            let j = (i + a) % n;
            for b in 1..=reach[j].min(n - a - 1) {
                let k = (j + b) % n;
                if reach[k] >= n - a - b {
                    return true;
                }
            }
        }
    }
    false
}
