//! Cycles, shortcuts and every chordality predicate.
//!
//! A [`CycleCatalog`] enumerates the simple cycles of a graph once and
//! precomputes, per cycle, its shortest shortcut, the shortest strict
//! shortcut at each vertex and its family tags. Every chordality question is
//! then answered from the catalog without touching the graph again.
//!
//! Density is reported as a closed radius: a shortcut-vertex set with radius
//! `rho` is `eps`-dense for every `eps > rho`.

mod cycles;
mod family;
mod shortcut;

pub use cycles::{enumerate_cycles, Cycle, CycleList};
pub use family::{classify_cycle, CycleFamily, FamilyTags};
pub use shortcut::{
    density_radius, min_shortcut, min_shortcut_length, shortcut_vertices, strict_shortcut_lengths,
    strict_to_closed, ShortcutCert,
};

pub(crate) use family::{classify_on, reach_table};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Grid};
use crate::{Caps, Length, Status};

/// Per-cycle data the predicates need.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleInfo {
    pub cycle: Cycle,
    pub tags: FamilyTags,
    /// Shortest shortcut (strict or not).
    pub min_shortcut: Option<u32>,
    /// Shortest strict shortcut at each position of the cycle.
    pub strict: Vec<Option<u32>>,
}

impl CycleInfo {
    pub fn new(g: &Graph, grid: &Grid, cycle: Cycle) -> CycleInfo {
        let tags = classify_on(grid, cycle.grid_ids(g, grid));
        CycleInfo {
            min_shortcut: min_shortcut_length(g, &cycle),
            strict: strict_shortcut_lengths(g, &cycle),
            tags,
            cycle,
        }
    }

    /// Density radius of the strict-shortcut vertices of length `<= m`.
    pub fn radius(&self, m: usize) -> Option<Length> {
        let mut pos: Vec<usize> = (0..self.strict.len())
            .filter(|&i| self.strict[i].is_some_and(|s| s as usize <= m))
            .collect();
        shortcut::radius_of_positions(self.cycle.len(), &mut pos)
    }

    /// Whether this cycle satisfies the predicate selected by `m` and `rho`
    /// (see [`ChordalityQuery`]).
    pub fn satisfies(&self, m: Option<usize>, rho: Option<Length>) -> bool {
        match (m, rho) {
            (None, _) => self.min_shortcut.is_some(),
            (Some(m), None) => self.min_shortcut.is_some_and(|s| s as usize <= m),
            (Some(m), Some(rho)) => self.radius(m).is_some_and(|r| r <= rho),
        }
    }
}

/// One chordality predicate: every cycle of the family with `L >= k` has
/// a shortcut (`m` absent), a shortcut of length `<= m` (`rho` absent), or
/// strict shortcuts of length `<= m` whose endpoints are dense with radius
/// `<= rho`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordalityQuery {
    pub k: usize,
    pub m: Option<usize>,
    #[serde(with = "crate::serde_length::opt")]
    pub rho: Option<Length>,
    pub family: CycleFamily,
}

impl ChordalityQuery {
    pub fn validate(&self) -> Result<()> {
        if self.k < 4 {
            return Err(Error::Precondition(format!("k = {} < 4", self.k)));
        }
        if let Some(m) = self.m {
            if m == 0 {
                return Err(Error::Precondition("m must be >= 1".into()));
            }
            if self.k < 2 * m {
                return Err(Error::Precondition(format!(
                    "k = {} < 2m = {}",
                    self.k,
                    2 * m
                )));
            }
        }
        if self.rho.is_some() && self.m.is_none() {
            return Err(Error::Precondition(
                "a density radius needs a shortcut length m".into(),
            ));
        }
        if self.rho.is_some_and(|r| r < Length::from_integer(0)) {
            return Err(Error::Precondition("negative density radius".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordalityVerdict {
    pub status: Status,
    /// Canonically smallest failing cycle.
    pub witness: Option<Cycle>,
    /// Cycles the predicate was evaluated on.
    pub examined: usize,
}

/// Extreme value of a parameter over the qualifying cycles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "value")]
pub enum Bound<T> {
    /// No cycle qualifies.
    Vacuous,
    Finite(T),
    /// Some qualifying cycle admits no value at all.
    Infinite,
}

impl<T: Copy> Bound<T> {
    pub fn finite(self) -> Option<T> {
        match self {
            Bound::Finite(x) => Some(x),
            _ => None,
        }
    }
}

/// All simple cycles of a graph with their precomputed shortcut data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleCatalog {
    pub infos: Vec<CycleInfo>,
    pub truncated: bool,
    pub lmax: usize,
    /// Corner resolution used for family tags.
    pub resolution: usize,
}

impl CycleCatalog {
    /// Enumerates cycles up to length `lmax` (at most `caps.cycles`) and tags
    /// families at resolution `t` (1 or 2).
    pub fn build(g: &Graph, lmax: usize, caps: &Caps, t: usize) -> Result<CycleCatalog> {
        if !(t == 1 || t == 2) {
            return Err(Error::InvalidParams(format!(
                "classification resolution must be 1 or 2, got {t}"
            )));
        }
        let list = enumerate_cycles(g, lmax, caps.cycles);
        let grid = Grid::new(g, t)?;
        let infos = list
            .cycles
            .into_par_iter()
            .map(|c| CycleInfo::new(g, &grid, c))
            .collect();
        Ok(CycleCatalog {
            infos,
            truncated: list.truncated,
            lmax,
            resolution: t,
        })
    }

    /// Complete catalog (`lmax = |V|`) at resolution 2.
    pub fn full(g: &Graph, caps: &Caps) -> Result<CycleCatalog> {
        Self::build(g, g.n(), caps, 2)
    }

    pub fn max_len(&self) -> usize {
        self.infos.iter().map(|i| i.cycle.len()).max().unwrap_or(0)
    }

    fn qualifying(&self, k: usize, family: CycleFamily) -> impl Iterator<Item = &CycleInfo> {
        self.infos
            .iter()
            .filter(move |i| i.cycle.len() >= k && family.contains(i.tags))
    }

    pub fn check(&self, q: &ChordalityQuery) -> Result<ChordalityVerdict> {
        q.validate()?;
        let mut examined = 0;
        for info in self.qualifying(q.k, q.family) {
            examined += 1;
            if !info.satisfies(q.m, q.rho) {
                return Ok(ChordalityVerdict {
                    status: Status::Fail,
                    witness: Some(info.cycle.clone()),
                    examined,
                });
            }
        }
        let status = if self.truncated {
            Status::Inconclusive
        } else if examined == 0 {
            Status::Vacuous
        } else {
            Status::Pass
        };
        Ok(ChordalityVerdict {
            status,
            witness: None,
            examined,
        })
    }

    /// Smallest `m` with `(k, m)`-chordality on the family.
    pub fn min_m(&self, k: usize, family: CycleFamily) -> Bound<usize> {
        let mut best = Bound::Vacuous;
        for info in self.qualifying(k, family) {
            match info.min_shortcut {
                None => return Bound::Infinite,
                Some(s) => {
                    let s = s as usize;
                    best = match best {
                        Bound::Finite(b) if b >= s => Bound::Finite(b),
                        _ => Bound::Finite(s),
                    };
                }
            }
        }
        best
    }

    /// Smallest closed radius `rho` with the strict-shortcut vertices of
    /// length `<= m` dense on every qualifying cycle.
    pub fn min_rho(&self, k: usize, m: usize, family: CycleFamily) -> Bound<Length> {
        let mut best = Bound::Vacuous;
        for info in self.qualifying(k, family) {
            match info.radius(m) {
                None => return Bound::Infinite,
                Some(r) => {
                    best = match best {
                        Bound::Finite(b) if b >= r => Bound::Finite(b),
                        _ => Bound::Finite(r),
                    };
                }
            }
        }
        best
    }

    /// Whether any cycle of the family has length `>= k`.
    pub fn any(&self, k: usize, family: CycleFamily) -> bool {
        self.qualifying(k, family).next().is_some()
    }
}

/// One-shot chordality check building its own catalog with default caps.
pub fn chordality_check(
    g: &Graph,
    k: usize,
    m: Option<usize>,
    rho: Option<Length>,
    family: CycleFamily,
    lmax: Option<usize>,
) -> Result<ChordalityVerdict> {
    let q = ChordalityQuery { k, m, rho, family };
    q.validate()?;
    let catalog = CycleCatalog::build(g, lmax.unwrap_or(g.n()), &Caps::from_env(), 2)?;
    catalog.check(&q)
}

/// Minimal parameters per `(family, k)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileEntry {
    pub family: CycleFamily,
    pub k: usize,
    /// Smallest `m` with `(k, m)`-chordality.
    pub min_m: Bound<usize>,
    /// Smallest density radius for strict shortcuts of length `<= m`, for
    /// `m = 1..`.
    pub min_rho: Vec<(usize, Bound<Length>)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordalityProfile {
    pub entries: Vec<ProfileEntry>,
    pub cycles: usize,
    pub truncated: bool,
}

impl ChordalityProfile {
    /// Entries for `k = 4..=max cycle length` and every family, with `m` up
    /// to `k / 2`, since `k >= 2m` is assumed throughout.
    pub fn from_catalog(catalog: &CycleCatalog) -> ChordalityProfile {
        let mut entries = Vec::new();
        for family in CycleFamily::ALL {
            for k in 4..=catalog.max_len().max(4) {
                entries.push(ProfileEntry {
                    family,
                    k,
                    min_m: catalog.min_m(k, family),
                    min_rho: (1..=k / 2)
                        .map(|m| (m, catalog.min_rho(k, m, family)))
                        .collect(),
                });
            }
        }
        ChordalityProfile {
            entries,
            cycles: catalog.infos.len(),
            truncated: catalog.truncated,
        }
    }
}
