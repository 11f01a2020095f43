//! The bottleneck property.
//!
//! On vertices: for vertices `v, w` and any midpoint `c` of a geodesic
//! `[vw]` (a vertex when `d(v, w)` is even, an edge midpoint when odd), every
//! vw-path meets `N_Δ'(c)`. A path between vertices traverses whole edges,
//! so it meets that ball exactly when it visits a vertex within `Δ'` of `c`
//! (or, for `Δ' = 0` and an edge midpoint, uses that edge). Each midpoint's
//! ball is removed once and every pair having it as midpoint is answered by
//! a component lookup. Witnesses prefer vertex midpoints, then the smallest
//! pair, then the smallest centre.
//!
//! On points: the same test runs on the 4-subdivision, with endpoints on the
//! half grid and midpoints on the quarter grid. The complement of a closed
//! ball is connected through grid points outside the ball and sub-edges with
//! both ends outside (the distance to the centre is concave on a sub-edge).

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Grid, PointRef};
use crate::Length;

/// A pair, a midpoint, and a path between the pair avoiding the ball.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BpWitness {
    pub v: PointRef,
    pub w: PointRef,
    pub c: PointRef,
    #[serde(with = "crate::serde_length")]
    pub radius: Length,
    /// Vertices of the avoiding path (grid points for the point check).
    pub path: Vec<PointRef>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BpVerdict {
    pub holds: bool,
    pub witness: Option<BpWitness>,
}

/// Half-unit `delta_prime` as twice its value.
fn half_units(x: Length) -> Result<u32> {
    let twice = x * 2;
    if x < Length::from_integer(0) || !twice.is_integer() {
        return Err(Error::InvalidParams(format!(
            "{x} is not a non-negative multiple of 1/2"
        )));
    }
    Ok(*twice.numer() as u32)
}

/// BP on vertices with constant `delta_prime` (a multiple of 1/2).
pub fn bp_check_vertices(g: &Graph, delta_prime: Length) -> Result<BpVerdict> {
    let dp = half_units(delta_prime)?;
    let n = g.n();
    // midpoints: vertices, then edges
    let centers: Vec<Center> = (0..n)
        .map(Center::Vertex)
        .chain(g.edges().iter().map(|&(x, y)| Center::Edge(x, y)))
        .collect();
    // vertex midpoints before edge midpoints, then smallest pair, then centre
    let found = centers
        .par_iter()
        .enumerate()
        .filter_map(|(i, &c)| {
            vertex_bp_at(g, c, dp, delta_prime).map(|(v, w, wit)| ((i >= n, v, w, i), wit))
        })
        .min_by_key(|(key, _)| *key)
        .map(|(_, wit)| wit);
    Ok(BpVerdict {
        holds: found.is_none(),
        witness: found,
    })
}

#[derive(Debug, Clone, Copy)]
enum Center {
    Vertex(usize),
    Edge(usize, usize),
}

impl Center {
    /// Twice the distance from the centre to vertex `u`.
    fn half_dist(self, g: &Graph, u: usize) -> u32 {
        match self {
            Center::Vertex(c) => g.dist_half(c, u),
            Center::Edge(x, y) => 1 + g.dist_half(x, u).min(g.dist_half(y, u)),
        }
    }

    fn point(self) -> PointRef {
        match self {
            Center::Vertex(c) => PointRef::Vertex(c),
            Center::Edge(x, y) => PointRef::midpoint(x, y),
        }
    }
}

fn vertex_bp_at(
    g: &Graph,
    c: Center,
    dp: u32,
    radius: Length,
) -> Option<(usize, usize, BpWitness)> {
    let n = g.n();
    let hd: Vec<u32> = (0..n).map(|u| c.half_dist(g, u)).collect();
    let removed: Vec<bool> = hd.iter().map(|&d| d <= dp).collect();
    let comp = match c {
        Center::Edge(x, y) if dp == 0 => components_without_edge(g, x, y),
        _ => g.components_without(&removed),
    };
    // pairs (v, w) with c as midpoint: both at half-distance h, 2h apart
    let mut by_h: Vec<Vec<usize>> = Vec::new();
    for u in 0..n {
        if !removed[u] {
            let h = hd[u] as usize;
            if by_h.len() <= h {
                by_h.resize(h + 1, Vec::new());
            }
            by_h[h].push(u);
        }
    }
    let (v, w) = min_pair(&by_h, |v, w, h| {
        g.dist_half(v, w) as usize == 2 * h && comp[v] == comp[w]
    })?;
    let path = match c {
        Center::Edge(x, y) if dp == 0 => path_without_edge(g, v, w, x, y),
        _ => g.path_avoiding(v, w, &removed),
    }
    .expect("same component");
    let wit = BpWitness {
        v: PointRef::Vertex(v),
        w: PointRef::Vertex(w),
        c: c.point(),
        radius,
        path: path.into_iter().map(PointRef::Vertex).collect(),
    };
    Some((v, w, wit))
}

/// Lexicographically smallest pair within one layer accepted by `ok`.
fn min_pair(
    by_h: &[Vec<usize>],
    ok: impl Fn(usize, usize, usize) -> bool,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (h, layer) in by_h.iter().enumerate() {
        for (i, &v) in layer.iter().enumerate() {
            if best.is_some_and(|(bv, _)| bv < v) {
                break;
            }
            for &w in &layer[i + 1..] {
                if ok(v, w, h) {
                    best = best.min(Some((v, w))).or(Some((v, w)));
                    break;
                }
            }
        }
    }
    best
}

fn components_without_edge(g: &Graph, x: usize, y: usize) -> Vec<usize> {
    let n = g.n();
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = next;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if (v.min(w), v.max(w)) == (x.min(y), x.max(y)) {
                    continue;
                }
                if comp[w] == usize::MAX {
                    comp[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    comp
}

fn path_without_edge(g: &Graph, a: usize, b: usize, x: usize, y: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    parent[a] = a;
    let mut queue = std::collections::VecDeque::from([a]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if (v.min(w), v.max(w)) == (x.min(y), x.max(y)) || parent[w] != usize::MAX {
                continue;
            }
            parent[w] = v;
            queue.push_back(w);
        }
    }
    if parent[b] == usize::MAX {
        return None;
    }
    let mut path = vec![b];
    while *path.last().unwrap() != a {
        path.push(parent[*path.last().unwrap()]);
    }
    path.reverse();
    Some(path)
}

/// Minimal `Δ'` for BP on vertices and the point-level bound `Δ' + 3/2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BpReport {
    #[serde(with = "crate::serde_length")]
    pub delta_prime: Length,
    /// Upper bound for the point-level constant.
    #[serde(with = "crate::serde_length")]
    pub delta: Length,
    /// Violation at `delta_prime - 1/2`, when `delta_prime > 0`.
    pub witness: Option<BpWitness>,
    pub holds: bool,
}

pub fn bp_delta(g: &Graph) -> BpReport {
    let mut last_fail = None;
    for dp in 0..=2 * g.diameter() {
        let x = Length::new(dp as i64, 2);
        let v = bp_check_vertices(g, x).expect("grid value");
        if v.holds {
            return BpReport {
                delta_prime: x,
                delta: x + Length::new(3, 2),
                witness: last_fail,
                holds: true,
            };
        }
        last_fail = v.witness;
    }
    unreachable!("BP holds at the diameter: every ball then contains the endpoints")
}

/// BP on points: endpoints on the half grid, midpoints on the quarter grid,
/// closed balls of radius `delta` (a multiple of 1/4).
pub fn bp_check_points(g: &Graph, delta: Length) -> Result<BpVerdict> {
    let grid = Grid::new(g, 4)?;
    bp_check_points_on(&grid, delta)
}

/// As [`bp_check_points`] on a prebuilt 4-grid.
pub fn bp_check_points_on(grid: &Grid, delta: Length) -> Result<BpVerdict> {
    let q = delta * 4;
    if delta < Length::from_integer(0) || !q.is_integer() {
        return Err(Error::InvalidParams(format!(
            "{delta} is not a non-negative multiple of 1/4"
        )));
    }
    if grid.resolution() != 4 {
        return Err(Error::InvalidParams("point BP runs on the 4-grid".into()));
    }
    let q = *q.numer() as u32;
    let sub = grid.graph();
    let ends = grid.coarse_points(2);
    let found = (0..grid.len())
        .into_par_iter()
        .filter_map(|z| {
            let removed: Vec<bool> = (0..grid.len()).map(|p| grid.dist(z, p) <= q).collect();
            let mut by_h: Vec<Vec<usize>> = Vec::new();
            for &x in &ends {
                if !removed[x] {
                    let h = grid.dist(z, x) as usize;
                    if by_h.len() <= h {
                        by_h.resize(h + 1, Vec::new());
                    }
                    by_h[h].push(x);
                }
            }
            if by_h.iter().all(|l| l.len() < 2) {
                return None;
            }
            let comp = sub.components_without(&removed);
            let (x, y) = min_pair(&by_h, |x, y, h| {
                grid.dist(x, y) as usize == 2 * h && comp[x] == comp[y]
            })?;
            let path = sub.path_avoiding(x, y, &removed).expect("same component");
            let wit = BpWitness {
                v: grid.point(x),
                w: grid.point(y),
                c: grid.point(z),
                radius: delta,
                path: path.into_iter().map(|p| grid.point(p)).collect(),
            };
            Some(((x, y, z), wit))
        })
        .min_by_key(|(key, _)| *key)
        .map(|(_, wit)| wit);
    Ok(BpVerdict {
        holds: found.is_none(),
        witness: found,
    })
}

/// Smallest quarter-grid `Δ` for which [`bp_check_points`] holds.
pub fn bp_point_delta(g: &Graph) -> Length {
    let grid = Grid::new(g, 4).expect("positive resolution");
    // BP holds once Δ reaches the diameter of the metric graph
    let top = 4 * (g.diameter() + 1);
    let (mut lo, mut hi) = (0u32, top);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if bp_check_points_on(&grid, Length::new(mid as i64, 4))
            .expect("grid value")
            .holds
        {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Length::new(lo as i64, 4)
}

/// Geodesic from `a` to `b` none of whose interior vertices is an
/// ab-N_Δ''-separator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterizationWitness {
    pub a: usize,
    pub b: usize,
    pub delta2: u32,
    pub geodesic: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterizationVerdict {
    pub holds: bool,
    /// No pair was far enough apart to be tested.
    pub vacuous: bool,
    pub witness: Option<CharacterizationWitness>,
}

/// For all `a, b` with `d(a, b) >= 2Δ'' + 2` and every geodesic `[ab]`,
/// some interior vertex `c` of `[ab]` has `a, b` outside `N_Δ''(c)` and in
/// different components of `G - N_Δ''(c)`.
pub fn neighbor_separator_characterization(
    g: &Graph,
    delta2: u32,
) -> Result<CharacterizationVerdict> {
    if delta2 < 1 {
        return Err(Error::Precondition("Δ'' must be >= 1".into()));
    }
    let n = g.n();
    let comps: Vec<Vec<usize>> = (0..n)
        .into_par_iter()
        .map(|c| g.components_without(&g.closed_neighborhood(&[c], delta2)))
        .collect();
    let good = |c: usize, a: usize, b: usize| {
        g.dist(c, a) > delta2 && g.dist(c, b) > delta2 && comps[c][a] != comps[c][b]
    };
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| g.dist(a, b) >= 2 * delta2 + 2)
        .collect();
    let found = pairs.par_iter().find_map_first(|&(a, b)| {
        // BFS along the geodesic DAG through interior vertices that are not good
        let d = g.dist(a, b);
        let mut parent = vec![usize::MAX; n];
        parent[a] = a;
        let mut frontier = vec![a];
        for _ in 0..d {
            let mut next = Vec::new();
            for &v in &frontier {
                for &w in g.neighbors(v) {
                    if parent[w] != usize::MAX
                        || g.dist(a, w) != g.dist(a, v) + 1
                        || g.dist(w, b) + g.dist(a, w) != d
                    {
                        continue;
                    }
                    if w != b && good(w, a, b) {
                        continue;
                    }
                    parent[w] = v;
                    next.push(w);
                }
            }
            frontier = next;
        }
        if parent[b] == usize::MAX {
            return None;
        }
        let mut path = vec![b];
        while *path.last().unwrap() != a {
            path.push(parent[*path.last().unwrap()]);
        }
        path.reverse();
        Some(CharacterizationWitness {
            a,
            b,
            delta2,
            geodesic: path,
        })
    });
    Ok(CharacterizationVerdict {
        holds: found.is_none(),
        vacuous: pairs.is_empty(),
        witness: found,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphSpec;
    use crate::len;

    fn build(s: &str) -> Graph {
        GraphSpec::parse(s).unwrap().build(Some(2)).unwrap()
    }

    #[test]
    fn c8_vertices() {
        let c8 = build("cycle:8");
        assert!(bp_check_vertices(&c8, len(2, 1)).unwrap().holds);
        let fail = bp_check_vertices(&c8, len(1, 1)).unwrap();
        assert!(!fail.holds);
        let w = fail.witness.unwrap();
        assert_eq!(
            (w.v, w.w, w.c),
            (
                PointRef::Vertex(0),
                PointRef::Vertex(4),
                PointRef::Vertex(2)
            )
        );
        assert!(w.path.contains(&PointRef::Vertex(6)));
        let r = bp_delta(&c8);
        assert_eq!((r.delta_prime, r.delta), (len(2, 1), len(7, 2)));
        assert!(bp_check_vertices(&c8, len(1, 3)).is_err());
    }

    #[test]
    fn trees() {
        let t = build("random_tree:25");
        let r = bp_delta(&t);
        assert_eq!((r.delta_prime, r.delta), (len(0, 1), len(3, 2)));
        assert!(bp_check_points(&t, len(0, 1)).unwrap().holds);
        assert!(neighbor_separator_characterization(&t, 1).unwrap().holds);
    }

    #[test]
    fn edge_midpoint_at_zero() {
        // the midpoint of 1-2 cuts the path 0-1-2-3 but not the hexagon
        let p4 = build("path:4");
        assert!(bp_check_vertices(&p4, len(0, 1)).unwrap().holds);
        let c6 = build("cycle:6");
        let w = bp_check_vertices(&c6, len(0, 1)).unwrap().witness.unwrap();
        assert_eq!(
            (w.v, w.w, w.c),
            (
                PointRef::Vertex(0),
                PointRef::Vertex(2),
                PointRef::Vertex(1)
            )
        );
    }

    #[test]
    fn characterization() {
        let c8 = build("cycle:8");
        let v = neighbor_separator_characterization(&c8, 1).unwrap();
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert_eq!(w.geodesic.len(), 5);
        let v = neighbor_separator_characterization(&c8, 3).unwrap();
        assert!(v.holds && v.vacuous);
    }

    #[test]
    fn point_bp_c8() {
        let c8 = build("cycle:8");
        let d = bp_point_delta(&c8);
        assert!(bp_check_points(&c8, d).unwrap().holds);
        assert!(d <= len(7, 2));
        assert!(!bp_check_points(&c8, d - len(1, 4)).unwrap().holds);
    }
}
