use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};
use crate::Length;

/// A point of the metric graph: a vertex, or a point strictly inside an edge.
///
/// Edge points are stored with `u < v` and `at` the distance from `u`, so two
/// equal points always compare equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PointRef {
    Vertex(usize),
    Edge {
        u: usize,
        v: usize,
        #[serde(with = "crate::serde_length")]
        at: Length,
    },
}

impl std::fmt::Display for PointRef {
    /// `v` for a vertex, `u-v@t` for the point at distance `t` from `u`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PointRef::Vertex(v) => write!(f, "{v}"),
            PointRef::Edge { u, v, at } => write!(f, "{u}-{v}@{at}"),
        }
    }
}

impl PointRef {
    /// The point at distance `at` from `u` on edge `uv`. Endpoints collapse
    /// to vertices; anything outside `[0, 1]` is rejected.
    pub fn on_edge(u: usize, v: usize, at: Length) -> Result<PointRef> {
        let zero = Length::from_integer(0);
        let one = Length::from_integer(1);
        if at < zero || at > one {
            return Err(Error::InvalidPoint(format!(
                "offset {at} outside [0, 1] on {u}-{v}"
            )));
        }
        Ok(if at == zero {
            PointRef::Vertex(u)
        } else if at == one {
            PointRef::Vertex(v)
        } else if u < v {
            PointRef::Edge { u, v, at }
        } else {
            PointRef::Edge {
                u: v,
                v: u,
                at: one - at,
            }
        })
    }

    pub fn midpoint(u: usize, v: usize) -> PointRef {
        Self::on_edge(u, v, crate::len(1, 2)).expect("1/2 is inside the edge")
    }

    pub fn as_vertex(&self) -> Option<usize> {
        match *self {
            PointRef::Vertex(id) => Some(id),
            PointRef::Edge { .. } => None,
        }
    }

    /// Checks that the point exists in `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        match *self {
            PointRef::Vertex(id) => {
                if id >= g.n() {
                    return Err(Error::VertexOutOfRange {
                        vertex: id,
                        n: g.n(),
                    });
                }
            }
            PointRef::Edge { u, v, at } => {
                for x in [u, v] {
                    if x >= g.n() {
                        return Err(Error::VertexOutOfRange {
                            vertex: x,
                            n: g.n(),
                        });
                    }
                }
                if !g.has_edge(u, v) {
                    return Err(Error::NotAnEdge { u, v });
                }
                if at <= Length::from_integer(0) || at >= Length::from_integer(1) {
                    return Err(Error::InvalidPoint(format!(
                        "offset {at} not strictly inside {u}-{v}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Smallest `t` such that the point lies on the `1/t` grid.
    pub fn resolution(&self) -> i64 {
        match *self {
            PointRef::Vertex(_) => 1,
            PointRef::Edge { at, .. } => *at.denom(),
        }
    }

    pub fn distance_to_vertex(&self, g: &Graph, w: usize) -> Length {
        match *self {
            PointRef::Vertex(id) => Length::from_integer(g.dist(id, w) as i64),
            PointRef::Edge { u, v, at } => {
                let via_u = at + g.dist(u, w) as i64;
                let via_v = (Length::from_integer(1) - at) + g.dist(v, w) as i64;
                via_u.min(via_v)
            }
        }
    }

    /// Distance in the metric graph.
    pub fn distance(&self, g: &Graph, other: &PointRef) -> Length {
        match *other {
            PointRef::Vertex(id) => self.distance_to_vertex(g, id),
            PointRef::Edge { u, v, at } => {
                let mut best = (self.distance_to_vertex(g, u) + at)
                    .min(self.distance_to_vertex(g, v) + (Length::from_integer(1) - at));
                if let PointRef::Edge {
                    u: u2,
                    v: v2,
                    at: at2,
                } = *self
                {
                    if (u2, v2) == (u, v) {
                        best = best.min(if at > at2 { at - at2 } else { at2 - at });
                    }
                }
                best
            }
        }
    }
}

/// Identifier of a point of a [`Grid`] (a vertex of the subdivided graph).
pub type GridPoint = usize;

/// All points of `g` on the `1/t` grid, with their exact metric.
///
/// The grid is the `t`-subdivision of `g`; distances between grid points in
/// the metric graph are exactly `1/t` times the subdivision distances, so all
/// arithmetic stays in integers (units of `1/t`).
#[derive(Debug, Clone)]
pub struct Grid {
    t: usize,
    base_n: usize,
    sub: Graph,
    base_edges: Vec<(usize, usize)>,
}

impl Grid {
    pub fn new(g: &Graph, t: usize) -> Result<Grid> {
        Ok(Grid {
            t,
            base_n: g.n(),
            sub: g.subdivide(t)?,
            base_edges: g.edges().to_vec(),
        })
    }

    pub fn resolution(&self) -> usize {
        self.t
    }

    /// The subdivided graph whose vertices are the grid points.
    pub fn graph(&self) -> &Graph {
        &self.sub
    }

    pub fn len(&self) -> usize {
        self.sub.n()
    }

    pub fn is_empty(&self) -> bool {
        self.sub.n() == 0
    }

    /// Distance in units of `1/t`.
    #[inline]
    pub fn dist(&self, p: GridPoint, q: GridPoint) -> u32 {
        self.sub.dist(p, q)
    }

    pub fn to_length(&self, units: u32) -> Length {
        Length::new(units as i64, self.t as i64)
    }

    pub fn is_vertex(&self, p: GridPoint) -> bool {
        p < self.base_n
    }

    pub fn point(&self, p: GridPoint) -> PointRef {
        if p < self.base_n {
            return PointRef::Vertex(p);
        }
        let inner = self.t - 1;
        let k = p - self.base_n;
        let (u, v) = self.base_edges[k / inner];
        let step = (k % inner + 1) as i64;
        PointRef::on_edge(u, v, Length::new(step, self.t as i64))
            .expect("grid offsets are interior")
    }

    /// Grid id of a point, if it lies on this grid.
    pub fn id(&self, p: &PointRef) -> Option<GridPoint> {
        match *p {
            PointRef::Vertex(id) => (id < self.base_n).then_some(id),
            PointRef::Edge { u, v, at } => {
                let scaled = at * self.t as i64;
                if !scaled.is_integer() {
                    return None;
                }
                let e = self.base_edges.binary_search(&(u, v)).ok()?;
                Some(self.base_n + e * (self.t - 1) + (*scaled.numer() as usize - 1))
            }
        }
    }

    /// Grid points whose coordinate is a multiple of `1/s` (`s` divides `t`).
    pub fn coarse_points(&self, s: usize) -> Vec<GridPoint> {
        assert!(
            s > 0 && self.t % s == 0,
            "resolution {s} does not divide {}",
            self.t
        );
        let step = self.t / s;
        (0..self.len())
            .filter(|&p| {
                if p < self.base_n {
                    return true;
                }
                let k = (p - self.base_n) % (self.t - 1) + 1;
                k % step == 0
            })
            .collect()
    }

    /// Grid points strictly inside base edge `e` plus its endpoints, ordered
    /// from the smaller endpoint.
    pub fn edge_points(&self, e: usize) -> Vec<GridPoint> {
        let (u, v) = self.base_edges[e];
        let base = self.base_n + e * (self.t - 1);
        std::iter::once(u)
            .chain(base..base + self.t - 1)
            .chain(std::iter::once(v))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphSpec;
    use crate::len;

    #[test]
    fn on_edge_normalizes() {
        assert_eq!(
            PointRef::on_edge(3, 1, len(1, 4)).unwrap(),
            PointRef::on_edge(1, 3, len(3, 4)).unwrap()
        );
        assert_eq!(
            PointRef::on_edge(3, 1, len(0, 1)).unwrap(),
            PointRef::Vertex(3)
        );
        assert!(PointRef::on_edge(0, 1, len(5, 4)).is_err());
    }

    #[test]
    fn validate_rejects_non_edges() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            PointRef::midpoint(0, 2).validate(&g),
            Err(Error::NotAnEdge { u: 0, v: 2 })
        );
        assert!(PointRef::Vertex(9).validate(&g).is_err());
    }

    #[test]
    fn grid_distances_match_point_formula() {
        let g = GraphSpec::parse("example_6_9:2")
            .unwrap()
            .build(None)
            .unwrap();
        let grid = Grid::new(&g, 4).unwrap();
        for p in 0..grid.len() {
            let pp = grid.point(p);
            assert_eq!(grid.id(&pp), Some(p));
            for q in 0..grid.len() {
                let qq = grid.point(q);
                assert_eq!(
                    grid.to_length(grid.dist(p, q)),
                    pp.distance(&g, &qq),
                    "{pp:?} {qq:?}"
                );
            }
        }
        assert_eq!(grid.coarse_points(2).len(), g.n() + g.edge_count());
        assert_eq!(grid.coarse_points(1).len(), g.n());
    }

    #[test]
    fn same_edge_distance() {
        let c5 = GraphSpec::parse("cycle:5").unwrap().build(None).unwrap();
        let a = PointRef::on_edge(0, 1, len(1, 4)).unwrap();
        let b = PointRef::on_edge(0, 1, len(3, 4)).unwrap();
        assert_eq!(a.distance(&c5, &b), len(1, 2));
        assert_eq!(b.distance(&c5, &a), len(1, 2));
    }
}
