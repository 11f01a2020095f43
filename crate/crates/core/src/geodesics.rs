//! Geodesics, Hausdorff distance and the stability constant of geodesics.
//!
//! Geodesics are enumerated on the subdivision whose grid contains both
//! endpoints, by walking the shortest-path DAG in ascending id order, so the
//! output is lexicographic and deterministic.
//!
//! For a point `x` and a path `P`, `d(x, P)` is the minimum of `d(x, y)` over
//! the stops of `P` (its vertices and endpoints) unless `x` lies on `P`. Two
//! paths with endpoints on the `1/t` grid therefore have their exact
//! Hausdorff distance attained on the `1/2t` grid, which is what
//! [`path_hausdorff`] samples.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Grid, PointRef};
use crate::Length;

/// Default number of geodesics enumerated per endpoint pair.
pub const DEFAULT_GEODESIC_CAP: usize = 10_000;

/// A geodesic sampled on the `1/resolution` grid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeodesicPath {
    pub endpoints: (PointRef, PointRef),
    pub resolution: usize,
    /// Consecutive points are `1/resolution` apart.
    pub points: Vec<PointRef>,
    #[serde(with = "crate::serde_length")]
    pub length: Length,
}

impl GeodesicPath {
    /// A geodesic between two vertices given by its vertex sequence.
    pub fn from_vertices(g: &Graph, vertices: &[usize]) -> Result<GeodesicPath> {
        let (&a, &b) = match (vertices.first(), vertices.last()) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(Error::InvalidGeodesic("empty vertex sequence".into())),
        };
        let path = GeodesicPath {
            endpoints: (PointRef::Vertex(a), PointRef::Vertex(b)),
            resolution: 1,
            points: vertices.iter().map(|&v| PointRef::Vertex(v)).collect(),
            length: Length::from_integer(vertices.len() as i64 - 1),
        };
        path.validate(g)?;
        Ok(path)
    }

    fn from_grid(grid: &Grid, ids: &[usize]) -> GeodesicPath {
        let points: Vec<_> = ids.iter().map(|&p| grid.point(p)).collect();
        GeodesicPath {
            endpoints: (points[0], *points.last().unwrap()),
            resolution: grid.resolution(),
            length: grid.to_length(ids.len() as u32 - 1),
            points,
        }
    }

    /// Original vertices on the path, in order.
    pub fn vertices(&self) -> Vec<usize> {
        self.points.iter().filter_map(PointRef::as_vertex).collect()
    }

    /// Re-checks every invariant against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidGeodesic(m));
        if self.points.is_empty() || self.resolution == 0 {
            return bad("empty path".into());
        }
        for p in &self.points {
            p.validate(g)?;
            if self.resolution as i64 % p.resolution() != 0 {
                return bad(format!("{p:?} is off the 1/{} grid", self.resolution));
            }
        }
        if (self.points[0], *self.points.last().unwrap()) != self.endpoints {
            return bad("endpoints do not match the point sequence".into());
        }
        let step = Length::new(1, self.resolution as i64);
        for w in self.points.windows(2) {
            if w[0].distance(g, &w[1]) != step {
                return bad(format!("{:?} and {:?} are not consecutive", w[0], w[1]));
            }
        }
        let mut seen = self.points.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != self.points.len() {
            return bad("repeated point".into());
        }
        let d = self.endpoints.0.distance(g, &self.endpoints.1);
        if self.length != step * (self.points.len() as i64 - 1) || self.length != d {
            return bad(format!(
                "length {} but the endpoints are {} apart",
                self.length, d
            ));
        }
        Ok(())
    }

    /// The path's points on the `1/t` grid, where `t` is a multiple of
    /// [`GeodesicPath::resolution`].
    pub fn sample(&self, t: usize) -> Vec<PointRef> {
        assert!(
            t % self.resolution == 0,
            "{t} is not a multiple of {}",
            self.resolution
        );
        let k = t / self.resolution;
        let mut out = Vec::with_capacity((self.points.len() - 1) * k + 1);
        for w in self.points.windows(2) {
            out.push(w[0]);
            let (x, y) = (w[0], w[1]);
            for i in 1..k {
                out.push(interpolate(&x, &y, Length::new(i as i64, t as i64)));
            }
        }
        out.push(*self.points.last().unwrap());
        out
    }
}

/// Point at distance `s` from `x` towards `y`, for grid neighbours `x`, `y`
/// on a common edge.
fn interpolate(x: &PointRef, y: &PointRef, s: Length) -> PointRef {
    let (u, v, from) = match (*x, *y) {
        (PointRef::Vertex(a), PointRef::Vertex(b)) => (a, b, Length::from_integer(0)),
        (PointRef::Vertex(a), PointRef::Edge { u, v, .. }) => {
            if a == u {
                (u, v, Length::from_integer(0))
            } else {
                (v, u, Length::from_integer(0))
            }
        }
        (PointRef::Edge { u, v, at }, PointRef::Vertex(b)) => {
            if b == v {
                (u, v, at)
            } else {
                (v, u, Length::from_integer(1) - at)
            }
        }
        (PointRef::Edge { u, v, at }, PointRef::Edge { at: at2, .. }) => {
            if at2 > at {
                (u, v, at)
            } else {
                (v, u, Length::from_integer(1) - at)
            }
        }
    };
    PointRef::on_edge(u, v, from + s).expect("interpolated point stays on the edge")
}

/// Geodesics between two points, with a truncation flag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Geodesics {
    pub paths: Vec<GeodesicPath>,
    pub truncated: bool,
}

/// All geodesics from `a` to `b` in `g`, as id sequences, in lexicographic
/// order; at most `cap` of them.
pub fn dag_paths(g: &Graph, a: usize, b: usize, cap: usize) -> (Vec<Vec<usize>>, bool) {
    let mut out = Vec::new();
    let mut stack = vec![a];
    let truncated = dag_walk(g, b, cap, &mut stack, &mut out);
    (out, truncated)
}

fn dag_walk(
    g: &Graph,
    b: usize,
    cap: usize,
    stack: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) -> bool {
    let v = *stack.last().unwrap();
    if v == b {
        if out.len() == cap {
            return true;
        }
        out.push(stack.clone());
        return false;
    }
    let rest = g.dist(v, b);
    for &w in g.neighbors(v) {
        if g.dist(w, b) + 1 == rest {
            stack.push(w);
            let hit = dag_walk(g, b, cap, stack, out);
            stack.pop();
            if hit {
                return true;
            }
        }
    }
    false
}

/// Number of geodesics between two vertices, by dynamic programming over
/// distance layers (saturating).
pub fn count_geodesics(g: &Graph, a: usize, b: usize) -> u128 {
    let mut order: Vec<usize> = (0..g.n())
        .filter(|&v| g.dist(a, v) + g.dist(v, b) == g.dist(a, b))
        .collect();
    order.sort_by_key(|&v| g.dist(a, v));
    let mut count = vec![0u128; g.n()];
    count[a] = 1;
    for &v in &order {
        for &w in g.neighbors(v) {
            if g.dist(a, w) + 1 == g.dist(a, v) && g.dist(a, w) + g.dist(w, b) == g.dist(a, b) {
                count[v] = count[v].saturating_add(count[w]);
            }
        }
    }
    count[b]
}

/// All geodesics from `a` to `b` (up to `cap`), sampled on the coarsest grid
/// containing both endpoints.
pub fn enumerate_geodesics(g: &Graph, a: &PointRef, b: &PointRef, cap: usize) -> Result<Geodesics> {
    a.validate(g)?;
    b.validate(g)?;
    if a == b {
        return Err(Error::Precondition("geodesic endpoints must differ".into()));
    }
    let t = lcm(a.resolution(), b.resolution()) as usize;
    let grid = Grid::new(g, t)?;
    let ia = grid.id(a).expect("endpoint is on its own grid");
    let ib = grid.id(b).expect("endpoint is on its own grid");
    let (ids, truncated) = dag_paths(grid.graph(), ia, ib, cap);
    Ok(Geodesics {
        paths: ids
            .iter()
            .map(|p| GeodesicPath::from_grid(&grid, p))
            .collect(),
        truncated,
    })
}

fn lcm(a: i64, b: i64) -> i64 {
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// Hausdorff distance between two finite point sets.
pub fn hausdorff_distance(g: &Graph, a: &[PointRef], b: &[PointRef]) -> Result<Length> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    for p in a.iter().chain(b) {
        p.validate(g)?;
    }
    let one_way = |xs: &[PointRef], ys: &[PointRef]| {
        xs.iter()
            .map(|x| ys.iter().map(|y| x.distance(g, y)).min().unwrap())
            .max()
            .unwrap()
    };
    Ok(one_way(a, b).max(one_way(b, a)))
}

/// Hausdorff distance between two paths seen as continuous curves.
pub fn path_hausdorff(g: &Graph, p: &GeodesicPath, q: &GeodesicPath) -> Length {
    let t = 2 * lcm(p.resolution as i64, q.resolution as i64) as usize;
    hausdorff_distance(g, &p.sample(t), &q.sample(t)).expect("paths are non-empty")
}

/// Hausdorff distance between two id sequences of a grid, in grid units.
pub(crate) fn grid_hausdorff(grid: &Grid, p: &[usize], q: &[usize]) -> u32 {
    let one_way = |xs: &[usize], ys: &[usize]| {
        xs.iter()
            .map(|&x| ys.iter().map(|&y| grid.dist(x, y)).min().unwrap())
            .max()
            .unwrap()
    };
    one_way(p, q).max(one_way(q, p))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StabilityMode {
    /// Endpoints range over vertices.
    Vertices,
    /// Endpoints range over vertices and edge midpoints.
    GridPoints,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityReport {
    pub mode: StabilityMode,
    /// Smallest `R` such that all examined geodesics with common endpoints
    /// are within Hausdorff distance `R`.
    #[serde(with = "crate::serde_length")]
    pub r: Length,
    pub witness: Option<(GeodesicPath, GeodesicPath)>,
    pub caps_hit: bool,
}

/// The stability constant of geodesics, maximised over endpoint pairs and
/// pairs of geodesics between them.
pub fn stability_constant(g: &Graph, mode: StabilityMode, cap: usize) -> StabilityReport {
    let t_end = match mode {
        StabilityMode::Vertices => 1,
        StabilityMode::GridPoints => 2,
    };
    let grid = Grid::new(g, 2 * t_end).expect("resolution is positive");
    let ends = grid.coarse_points(t_end);
    let pairs: Vec<(usize, usize)> = ends
        .iter()
        .enumerate()
        .flat_map(|(i, &x)| ends[i + 1..].iter().map(move |&y| (x, y)))
        .collect();
    let per_pair: Vec<(u32, Option<(Vec<usize>, Vec<usize>)>, bool)> = pairs
        .par_iter()
        .map(|&(x, y)| {
            let (paths, truncated) = dag_paths(grid.graph(), x, y, cap);
            let mut best = (0, None);
            for i in 0..paths.len() {
                for j in i + 1..paths.len() {
                    let h = grid_hausdorff(&grid, &paths[i], &paths[j]);
                    if h > best.0 {
                        best = (h, Some((paths[i].clone(), paths[j].clone())));
                    }
                }
            }
            (best.0, best.1, truncated)
        })
        .collect();
    let caps_hit = per_pair.iter().any(|r| r.2);
    let mut best: (u32, Option<(Vec<usize>, Vec<usize>)>) = (0, None);
    for (h, w, _) in per_pair {
        if h > best.0 {
            best = (h, w);
        }
    }
    StabilityReport {
        mode,
        r: grid.to_length(best.0),
        witness: best
            .1
            .map(|(p, q)| (coarsen(&grid, &p, t_end), coarsen(&grid, &q, t_end))),
        caps_hit,
    }
}

/// Converts a fine grid path to a [`GeodesicPath`] on the `1/t` grid.
fn coarsen(grid: &Grid, ids: &[usize], t: usize) -> GeodesicPath {
    let k = grid.resolution() / t;
    let points: Vec<_> = ids.iter().step_by(k).map(|&p| grid.point(p)).collect();
    GeodesicPath {
        endpoints: (points[0], *points.last().unwrap()),
        resolution: t,
        length: grid.to_length(ids.len() as u32 - 1),
        points,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphSpec;
    use crate::len;

    fn build(s: &str) -> Graph {
        GraphSpec::parse(s).unwrap().build(Some(3)).unwrap()
    }

    fn v(i: usize) -> PointRef {
        PointRef::Vertex(i)
    }

    #[test]
    fn geodesic_counts() {
        let c6 = build("cycle:6");
        let gs = enumerate_geodesics(&c6, &v(0), &v(3), 100).unwrap();
        assert_eq!(gs.paths.len(), 2);
        assert_eq!(gs.paths[0].vertices(), vec![0, 1, 2, 3]);
        assert_eq!(
            enumerate_geodesics(&build("path:4"), &v(0), &v(3), 100)
                .unwrap()
                .paths
                .len(),
            1
        );
        assert_eq!(
            enumerate_geodesics(&build("complete:4"), &v(0), &v(1), 100)
                .unwrap()
                .paths
                .len(),
            1
        );
        assert!(enumerate_geodesics(&c6, &v(0), &v(0), 100).is_err());
    }

    #[test]
    fn truncation_is_flagged() {
        let g = build("grid:4,4");
        let (paths, truncated) = dag_paths(&g, 0, 15, 5);
        assert_eq!(paths.len(), 5);
        assert!(truncated);
        assert_eq!(count_geodesics(&g, 0, 15), 20);
        let (all, t) = dag_paths(&g, 0, 15, 20);
        assert_eq!((all.len(), t), (20, false));
    }

    #[test]
    fn midpoint_geodesics() {
        let c5 = build("cycle:5");
        let m = PointRef::midpoint(2, 3);
        let gs = enumerate_geodesics(&c5, &v(0), &m, 10).unwrap();
        assert_eq!(gs.paths.len(), 2);
        for p in &gs.paths {
            p.validate(&c5).unwrap();
            assert_eq!(p.length, len(5, 2));
        }
    }

    #[test]
    fn hausdorff_examples() {
        let c4 = build("cycle:4");
        let s1 = GeodesicPath::from_vertices(&c4, &[0, 1, 2]).unwrap();
        let s2 = GeodesicPath::from_vertices(&c4, &[0, 3, 2]).unwrap();
        assert_eq!(
            hausdorff_distance(&c4, &s1.sample(2), &s2.sample(2)).unwrap(),
            len(1, 1)
        );
        assert_eq!(
            hausdorff_distance(&c4, &s1.sample(2), &s1.sample(2)).unwrap(),
            len(0, 1)
        );
        assert_eq!(
            hausdorff_distance(&c4, &[], &s1.points),
            Err(Error::EmptyPointSet)
        );
        assert_eq!(path_hausdorff(&c4, &s1, &s2), len(1, 1));
    }

    #[test]
    fn stability_small() {
        let c6 = build("cycle:6");
        let r = stability_constant(&c6, StabilityMode::Vertices, DEFAULT_GEODESIC_CAP);
        // the midpoint of 1-2 is 3/2 away from the arc 0-5-4-3
        assert_eq!(r.r, len(3, 2));
        let (p, q) = r.witness.unwrap();
        assert_eq!(path_hausdorff(&c6, &p, &q), r.r);
        let tree = build("random_tree:12");
        for mode in [StabilityMode::Vertices, StabilityMode::GridPoints] {
            assert_eq!(stability_constant(&tree, mode, 100).r, len(0, 1));
        }
    }
}
