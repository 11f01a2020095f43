//! The Rips hyperbolicity constant, estimated from below on a point grid.
//!
//! Only geodesic triangles that are simple cycles are examined, which is
//! enough to bound `δ(G)` from above as well as below. On the `1/t` grid the
//! corners range over the `2/t` grid (vertices and midpoints for `t = 4`) and
//! the points of each side over the `1/t` grid. A side of a triangle on a
//! cycle is an arc; the union of the two other sides is the complementary
//! arc, so the thinness of side `[x, y]` is
//!
//! ```text
//! side(x, y) = max_{p in [x, y]} min_{q in [y, x]} d(p, q)
//! ```
//!
//! which depends only on the arc. Distances from a grid point to a side are
//! exact because every stop of the side is on the grid; only the maximising
//! point can be missed, so the estimate never exceeds the true constant.
//! Since `side(x, y)` is at most half the arc length, arcs that cannot beat
//! the current best are skipped.

use std::sync::atomic::{AtomicU32, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chordality::{enumerate_cycles, reach_table, Cycle};
use crate::error::{Error, Result};
use crate::geodesics::GeodesicPath;
use crate::graph::{Graph, Grid, PointRef};
use crate::{Caps, Length};

/// Triangle and point attaining [`HyperbolicityReport::delta_hat`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleWitness {
    pub cycle: Cycle,
    pub corners: [PointRef; 3],
    /// Point of the side from `corners[side]` to the next corner that is
    /// farthest from the other two sides.
    pub point: PointRef,
    pub side: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperbolicityReport {
    #[serde(with = "crate::serde_length")]
    pub delta_hat: Length,
    pub resolution: usize,
    pub witness: Option<TriangleWitness>,
    /// Every cycle that can be a geodesic triangle was examined.
    pub complete: bool,
    pub triangles: usize,
}

/// Thinness of one triangle: the largest distance from a grid point of a
/// side to the union of the other two sides.
pub fn triangle_thinness(
    g: &Graph,
    corners: &[PointRef; 3],
    sides: &[GeodesicPath; 3],
    t: usize,
) -> Result<Length> {
    for (i, side) in sides.iter().enumerate() {
        side.validate(g)?;
        let (x, y) = (corners[i], corners[(i + 1) % 3]);
        if side.endpoints != (x, y) && side.endpoints != (y, x) {
            return Err(Error::InvalidGeodesic(format!(
                "side {i} does not join {x:?} and {y:?}"
            )));
        }
        if t % side.resolution != 0 {
            return Err(Error::InvalidParams(format!(
                "side {i} is not on the 1/{t} grid"
            )));
        }
    }
    let samples: Vec<Vec<PointRef>> = sides.iter().map(|s| s.sample(t)).collect();
    let mut best = Length::from_integer(0);
    for i in 0..3 {
        let others: Vec<&PointRef> = samples[(i + 1) % 3]
            .iter()
            .chain(&samples[(i + 2) % 3])
            .collect();
        for p in &samples[i] {
            let d = others.iter().map(|q| p.distance(g, q)).min().unwrap();
            best = best.max(d);
        }
    }
    Ok(best)
}

struct CycleResult {
    value: u32,
    /// Corner positions and the arg-max position.
    corners: [usize; 3],
    side: usize,
    point: usize,
}

/// `delta_hat` on the `1/t` grid (`t` even; 4 by default).
pub fn delta_hat(g: &Graph, t: usize, caps: &Caps) -> Result<HyperbolicityReport> {
    if t < 2 || t % 2 != 0 {
        return Err(Error::InvalidParams(format!(
            "resolution must be even and >= 2, got {t}"
        )));
    }
    // each side is at most the diameter of the metric graph, <= diam(G) + 1
    let lmax = (3 * (g.diameter() as usize + 1)).min(g.n());
    let list = enumerate_cycles(g, lmax, caps.cycles);
    let grid = Grid::new(g, t)?;
    // longest first so the pruning bound bites early
    let mut order: Vec<usize> = (0..list.cycles.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(list.cycles[i].len()));
    let best = AtomicU32::new(0);
    let triangles = std::sync::atomic::AtomicUsize::new(0);
    let results: Vec<(usize, CycleResult)> = order
        .par_iter()
        .filter_map(|&ci| {
            let c = &list.cycles[ci];
            // thinness is at most L/4, i.e. L*t/4 grid units
            if ((c.len() * t / 4) as u32) < best.load(Ordering::Relaxed) {
                return None;
            }
            let ids = c.grid_ids(g, &grid);
            let r = cycle_thinness(&grid, &ids, &best)?;
            triangles.fetch_add(1, Ordering::Relaxed);
            best.fetch_max(r.value, Ordering::Relaxed);
            Some((ci, r))
        })
        .collect();
    let top = results.iter().map(|(_, r)| r.value).max().unwrap_or(0);
    let witness = results
        .iter()
        .filter(|(_, r)| r.value == top && top > 0)
        .min_by_key(|(ci, _)| *ci)
        .map(|(ci, r)| {
            let c = &list.cycles[*ci];
            let ids = c.grid_ids(g, &grid);
            let n = ids.len();
            TriangleWitness {
                cycle: c.clone(),
                corners: r.corners.map(|p| grid.point(ids[p % n])),
                point: grid.point(ids[r.point % n]),
                side: r.side,
            }
        });
    Ok(HyperbolicityReport {
        delta_hat: grid.to_length(top),
        resolution: t,
        witness,
        complete: !list.truncated,
        triangles: triangles.into_inner(),
    })
}

/// Largest side value over the geodesic triangles of one cycle, or `None`
/// if the cycle is not a geodesic triangle with corners on every other grid
/// position.
fn cycle_thinness(grid: &Grid, ids: &[usize], best: &AtomicU32) -> Option<CycleResult> {
    let n = ids.len();
    let reach = reach_table(grid, ids);
    // arc (i, a) with i and a even; first triangle using it
    let mut first: Vec<Option<[usize; 3]>> = vec![None; n * (n / 2 + 1)];
    let slot = |i: usize, a: usize| i * (n / 2 + 1) + a;
    let mut any = false;
    for i in (0..n).step_by(2) {
        for a in (2..=reach[i].min(n / 2)).step_by(2) {
            let j = (i + a) % n;
            for b in (2..=reach[j].min(n / 2)).step_by(2) {
                if a + b + 2 > n {
                    break;
                }
                let c = n - a - b;
                let k = (j + b) % n;
                if c <= reach[k] {
                    any = true;
                    for (s, len) in [(i, a), (j, b), (k, c)] {
                        let e = &mut first[slot(s, len)];
                        if e.is_none() {
                            *e = Some([i, j, k]);
                        }
                    }
                }
            }
        }
    }
    if !any {
        return None;
    }
    let mut out = CycleResult {
        value: 0,
        corners: [0, 0, 0],
        side: 0,
        point: 0,
    };
    let mut have = false;
    for i in (0..n).step_by(2) {
        for a in (2..=n / 2).step_by(2) {
            let Some(tri) = first[slot(i, a)] else {
                continue;
            };
            if !have {
                out.corners = tri;
                have = true;
            }
            let floor = best.load(Ordering::Relaxed).max(out.value);
            if ((a / 2) as u32) < floor || ((a / 2) as u32) <= out.value {
                continue;
            }
            let (v, p) = side_value(grid, ids, i, a);
            if v > out.value {
                out = CycleResult {
                    value: v,
                    corners: tri,
                    side: tri.iter().position(|&x| x == i).unwrap(),
                    point: p,
                };
            }
        }
    }
    Some(out)
}

/// `max_{p in [i, i+a]} min_{q in [i+a, i+n]} d(p, q)` and its arg-max.
fn side_value(grid: &Grid, ids: &[usize], i: usize, a: usize) -> (u32, usize) {
    let n = ids.len();
    let mut best = (0, i);
    for p in i..=i + a {
        let x = ids[p % n];
        // the nearest endpoint bounds the inner minimum
        let mut m = (p - i).min(i + a - p) as u32;
        if m <= best.0 {
            continue;
        }
        for q in i + a..=i + n {
            m = m.min(grid.dist(x, ids[q % n]));
            if m <= best.0 {
                break;
            }
        }
        if m > best.0 {
            best = (m, p);
        }
    }
    best
}
