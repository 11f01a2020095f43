//! Generalized chordality, vertex separators and hyperbolicity on finite graphs.
//!
//! Every edge has length one and interior points of edges are points of the
//! graph. All lengths are exact rationals ([`Length`]); the hot loops work on
//! integer grids (see [`graph::Grid`]) so nothing here touches floating point.
//!
//! The crate is organised by invariant:
//!
//! * [`graph`]: the graph model, exact metric, neighborhoods, subdivision and
//!   generators (including the three infinite constructions, truncated).
//! * [`geodesics`]: geodesic enumeration, Hausdorff distance and the
//!   stability constant of geodesics.
//! * [`chordality`]: cycles, (strict) shortcuts, density radii, the
//!   triangle/bigon cycle families and every chordality predicate.
//! * [`separators`]: minimal (r-)separators, sphere constructions, neighbor
//!   separators and obstructing sets.
//! * [`hyperbolicity`]: the Rips constant estimated on a point grid.
//! * [`bottleneck`]: the bottleneck property on vertices and on points.
//! * [`harness`]: every theorem as an executable check, plus corpus runs and
//!   JSON reports.

pub mod bottleneck;
pub mod chordality;
pub mod error;
pub mod geodesics;
pub mod graph;
pub mod harness;
pub mod hyperbolicity;
pub mod separators;

pub use error::{Error, Result};
pub use graph::{Graph, PointRef};

/// Outcome of evaluating a predicate or a theorem on one graph.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize,
)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// No object satisfied the hypothesis, so nothing was tested.
    Vacuous,
    /// An enumeration hit its cap before a verdict was reached.
    Inconclusive,
}

impl Status {
    /// Pass or vacuous: the statement holds on what was examined.
    pub fn holds(self) -> bool {
        matches!(self, Status::Pass | Status::Vacuous)
    }
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Vacuous => "vacuous",
            Status::Inconclusive => "inconclusive",
        })
    }
}

/// Enumeration limits. Hitting any of them turns a verdict into
/// [`Status::Inconclusive`] instead of a pass.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Caps {
    /// Simple cycles kept per graph.
    pub cycles: usize,
    /// Geodesics enumerated per endpoint pair.
    pub geodesics: usize,
    /// Candidate subsets examined per endpoint pair when searching
    /// r-separators with `r >= 2`.
    pub separator_subsets: usize,
    /// Induced paths examined per start vertex.
    pub chordal_paths: usize,
}

impl Default for Caps {
    fn default() -> Caps {
        Caps {
            cycles: 200_000,
            geodesics: geodesics::DEFAULT_GEODESIC_CAP,
            separator_subsets: 1 << 16,
            chordal_paths: 10_000,
        }
    }
}

impl Caps {
    /// Defaults overridden by `CHORDSEP_CYCLE_CAP`, `CHORDSEP_GEODESIC_CAP`,
    /// `CHORDSEP_SEPARATOR_BUDGET` and `CHORDSEP_PATH_CAP` when set.
    pub fn from_env() -> Caps {
        let read = |key: &str, default: usize| {
            std::env::var(key)
                .ok()
                .and_then(|v| v.parse().ok())
                .unwrap_or(default)
        };
        let d = Caps::default();
        Caps {
            cycles: read("CHORDSEP_CYCLE_CAP", d.cycles),
            geodesics: read("CHORDSEP_GEODESIC_CAP", d.geodesics),
            separator_subsets: read("CHORDSEP_SEPARATOR_BUDGET", d.separator_subsets),
            chordal_paths: read("CHORDSEP_PATH_CAP", d.chordal_paths),
        }
    }
}

/// Exact length in edge units.
pub type Length = num_rational::Ratio<i64>;

/// `num / den` as a [`Length`].
pub fn len(num: i64, den: i64) -> Length {
    Length::new(num, den)
}

/// Lossy view used only for JSON output and display.
pub fn to_f64(l: Length) -> f64 {
    *l.numer() as f64 / *l.denom() as f64
}

pub(crate) mod serde_length {
    use super::{to_f64, Length};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(l: &Length, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(to_f64(*l))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Length, D::Error> {
        let x = f64::deserialize(d)?;
        from_f64(x).ok_or_else(|| serde::de::Error::custom("length is not a multiple of 1/1024"))
    }

    pub fn from_f64(x: f64) -> Option<Length> {
        let scaled = x * 1024.0;
        if scaled.fract() != 0.0 || !scaled.is_finite() {
            return None;
        }
        Some(Length::new(scaled as i64, 1024))
    }

    pub mod opt {
        use super::*;
        use serde::Serialize;

        pub fn serialize<S: Serializer>(l: &Option<Length>, s: S) -> Result<S::Ok, S::Error> {
            l.map(to_f64).serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Length>, D::Error> {
            match Option::<f64>::deserialize(d)? {
                None => Ok(None),
                Some(x) => from_f64(x)
                    .map(Some)
                    .ok_or_else(|| serde::de::Error::custom("length is not a multiple of 1/1024")),
            }
        }
    }
}
