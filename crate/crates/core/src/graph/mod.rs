//! Finite, simple, connected, undirected graphs with unit edge lengths.
//!
//! The all-pairs distance matrix is computed once at construction by a
//! breadth-first search from every vertex and stored in half-units, so the
//! distance between two original vertices is always even in storage.

mod generate;
mod point;

pub use generate::{example_2_9_rims, example_3_14_labels, example_6_9_cycle, Family, GraphSpec};
pub use point::{Grid, GridPoint, PointRef};

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::Length;

/// Distance stored for pairs that have not been reached yet.
const UNREACHED: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    /// Half-unit distances, row-major `n * n`.
    dist: Vec<u32>,
}

/// Which vertex set [`Graph::neighborhood`] returns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BallKind {
    /// `d(v, w) = eps`
    Sphere,
    /// `d(v, w) < eps`
    Open,
    /// `d(v, w) <= eps`
    Closed,
}

impl Graph {
    /// Builds a validated graph on vertices `0..n`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        Self::build(n, edges.iter().map(|&(u, v)| (u, v, None)))
    }

    fn build(
        n: usize,
        edges: impl Iterator<Item = (usize, usize, Option<usize>)>,
    ) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        let mut adj = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for (u, v, line) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { line, vertex: u });
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::DuplicateEdge { line, u, v });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        let mut g = Graph {
            adj,
            edges: seen.into_iter().collect(),
            dist: vec![UNREACHED; n * n],
        };
        for s in 0..n {
            g.bfs_fill(s);
        }
        if let Some(unreachable) = (0..n).find(|&v| g.dist[v] == UNREACHED) {
            return Err(Error::Disconnected {
                unreachable,
                components: g.component_count(),
            });
        }
        Ok(g)
    }

    fn bfs_fill(&mut self, s: usize) {
        let n = self.n();
        let row = s * n;
        self.dist[row + s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let dv = self.dist[row + v];
            for &w in &self.adj[v] {
                if self.dist[row + w] == UNREACHED {
                    self.dist[row + w] = dv + 2;
                    queue.push_back(w);
                }
            }
        }
    }

    fn component_count(&self) -> usize {
        let n = self.n();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        count
    }

    /// Parses the edge-list text format: one `u v` pair per line, `#` starts
    /// a comment, blank lines are ignored. The vertex count is one more than
    /// the largest id, so unused ids make the graph disconnected.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut edges = Vec::new();
        let mut n = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let mut it = body.split_whitespace();
            let parse = |tok: Option<&str>| tok.and_then(|t| t.parse::<usize>().ok());
            let (u, v) = match (parse(it.next()), parse(it.next()), it.next()) {
                (Some(u), Some(v), None) => (u, v),
                _ => {
                    return Err(Error::Parse {
                        line,
                        text: raw.to_string(),
                    })
                }
            };
            n = n.max(u + 1).max(v + 1);
            edges.push((u, v, Some(line)));
        }
        if edges.is_empty() {
            return Err(Error::EmptyInput);
        }
        Self::build(n, edges.into_iter())
    }

    /// Canonical edge-list text: sorted `u v` lines with `u < v`.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Index of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// Graph distance between two vertices in whole edges.
    #[inline]
    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n() + v] / 2
    }

    /// Stored half-unit distance (always even between vertices).
    #[inline]
    pub fn dist_half(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n() + v]
    }

    pub fn diameter(&self) -> u32 {
        self.dist.iter().copied().max().unwrap_or(0) / 2
    }

    /// Maximum degree; a finite graph is always uniform with this constant.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.n()
    }

    /// Distance from a vertex to a vertex set (`None` for an empty set).
    pub fn dist_to_set(&self, v: usize, set: &[usize]) -> Option<u32> {
        set.iter().map(|&s| self.dist(v, s)).min()
    }

    /// Maximum pairwise distance inside a vertex set, measured in `G`.
    pub fn set_diameter(&self, set: &[usize]) -> u32 {
        let mut best = 0;
        for (i, &x) in set.iter().enumerate() {
            for &y in &set[i + 1..] {
                best = best.max(self.dist(x, y));
            }
        }
        best
    }

    /// Closed r-neighborhood of a vertex set, `{x : d(x, S) <= r}`.
    pub fn closed_neighborhood(&self, set: &[usize], r: u32) -> Vec<bool> {
        (0..self.n())
            .map(|x| set.iter().any(|&s| self.dist(x, s) <= r))
            .collect()
    }

    /// Sphere, open ball or closed ball of radius `eps` around a point.
    /// Distances from edge points are measured in the metric graph.
    pub fn neighborhood(
        &self,
        center: &PointRef,
        eps: Length,
        kind: BallKind,
    ) -> Result<BTreeSet<usize>> {
        if eps < Length::from_integer(0) {
            return Err(Error::InvalidParams(format!("negative radius {eps}")));
        }
        center.validate(self)?;
        let mut out = BTreeSet::new();
        for w in 0..self.n() {
            let d = center.distance_to_vertex(self, w);
            let keep = match kind {
                BallKind::Sphere => d == eps,
                BallKind::Open => d < eps,
                BallKind::Closed => d <= eps,
            };
            if keep {
                out.insert(w);
            }
        }
        Ok(out)
    }

    /// Replaces each edge by a path of `t` edges. Original vertices keep their
    /// ids; the `t - 1` inner vertices of edge `i` (in [`Graph::edges`] order)
    /// get ids `n + i * (t - 1) ..`, ordered from the smaller endpoint.
    pub fn subdivide(&self, t: usize) -> Result<Graph> {
        if t == 0 {
            return Err(Error::InvalidParams(
                "subdivision factor must be >= 1".into(),
            ));
        }
        let n = self.n();
        let inner = t - 1;
        let mut edges = Vec::with_capacity(self.edges.len() * t);
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            let base = n + i * inner;
            let chain: Vec<usize> = std::iter::once(u)
                .chain(base..base + inner)
                .chain(std::iter::once(v))
                .collect();
            edges.extend(chain.windows(2).map(|w| (w[0], w[1])));
        }
        Graph::from_edges(n + self.edges.len() * inner, &edges)
    }

    /// Connected components of `G` minus the vertices marked in `removed`.
    /// Removed vertices get `usize::MAX`.
    pub fn components_without(&self, removed: &[bool]) -> Vec<usize> {
        let n = self.n();
        let mut comp = vec![usize::MAX; n];
        let mut next = 0;
        for s in 0..n {
            if removed[s] || comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if !removed[w] && comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// Shortest path from `a` to `b` avoiding the vertices marked in
    /// `removed`, if one exists.
    pub fn path_avoiding(&self, a: usize, b: usize, removed: &[bool]) -> Option<Vec<usize>> {
        if removed[a] || removed[b] {
            return None;
        }
        let n = self.n();
        let mut parent = vec![usize::MAX; n];
        parent[a] = a;
        let mut queue = VecDeque::from([a]);
        while let Some(v) = queue.pop_front() {
            if v == b {
                break;
            }
            for &w in &self.adj[v] {
                if !removed[w] && parent[w] == usize::MAX {
                    parent[w] = v;
                    queue.push_back(w);
                }
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

    /// Whether `path` is a walk along edges with no repeated vertex.
    pub fn is_simple_path(&self, path: &[usize]) -> bool {
        let mut seen = BTreeSet::new();
        path.iter().all(|&v| v < self.n() && seen.insert(v))
            && path.windows(2).all(|w| self.has_edge(w[0], w[1]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn floyd_warshall(g: &Graph) -> Vec<u32> {
        let n = g.n();
        let inf = u32::MAX / 4;
        let mut d = vec![inf; n * n];
        for v in 0..n {
            d[v * n + v] = 0;
        }
        for &(u, v) in g.edges() {
            d[u * n + v] = 1;
            d[v * n + u] = 1;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let via = d[i * n + k] + d[k * n + j];
                    if via < d[i * n + j] {
                        d[i * n + j] = via;
                    }
                }
            }
        }
        d
    }

    #[test]
    fn parses_path() {
        let g = Graph::parse_edge_list("0 1\n1 2").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.dist(0, 2), 2);
        assert_eq!(g.dist_half(0, 2), 4);
    }

    #[test]
    fn parse_errors_are_distinct() {
        assert_eq!(
            Graph::parse_edge_list("0 0"),
            Err(Error::SelfLoop {
                line: Some(1),
                vertex: 0
            })
        );
        assert!(matches!(
            Graph::parse_edge_list("0 1\n2 3"),
            Err(Error::Disconnected { components: 2, .. })
        ));
        assert_eq!(
            Graph::parse_edge_list("0 1\n# dup\n1 0"),
            Err(Error::DuplicateEdge {
                line: Some(3),
                u: 1,
                v: 0
            })
        );
        assert_eq!(
            Graph::parse_edge_list("# nothing\n\n"),
            Err(Error::EmptyInput)
        );
        assert!(matches!(
            Graph::parse_edge_list("0 x"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("0 1 2"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn comments_and_round_trip() {
        let g = Graph::parse_edge_list("# header\n2 1 # trailing\n0 1\n").unwrap();
        let again = Graph::parse_edge_list(&g.to_edge_list()).unwrap();
        assert_eq!(g, again);
        assert_eq!(g.to_edge_list(), "0 1\n1 2\n");
    }

    #[test]
    fn bfs_matches_floyd_warshall() {
        for spec in [
            "grid:3,4",
            "complete:5",
            "cycle:7",
            "example_2_9:5",
            "example_6_9:3",
        ] {
            let g = GraphSpec::parse(spec).unwrap().build(None).unwrap();
            let fw = floyd_warshall(&g);
            let n = g.n();
            for u in 0..n {
                for v in 0..n {
                    assert_eq!(g.dist(u, v), fw[u * n + v], "{spec} {u} {v}");
                    assert_eq!(g.dist_half(u, v) % 2, 0);
                }
            }
        }
    }

    #[test]
    fn neighborhoods() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let one = Length::from_integer(1);
        let sphere = k4
            .neighborhood(&PointRef::Vertex(0), one, BallKind::Sphere)
            .unwrap();
        assert_eq!(sphere.into_iter().collect::<Vec<_>>(), vec![1, 2, 3]);

        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let two = Length::from_integer(2);
        let s = p4
            .neighborhood(&PointRef::Vertex(0), two, BallKind::Sphere)
            .unwrap();
        assert_eq!(s.into_iter().collect::<Vec<_>>(), vec![2]);
        let open = p4
            .neighborhood(&PointRef::Vertex(1), one, BallKind::Open)
            .unwrap();
        assert_eq!(open.into_iter().collect::<Vec<_>>(), vec![1]);
        let closed = p4
            .neighborhood(&PointRef::Vertex(1), one, BallKind::Closed)
            .unwrap();
        assert_eq!(closed.into_iter().collect::<Vec<_>>(), vec![0, 1, 2]);

        // around the midpoint of edge 1-2: vertices 1 and 2 at 1/2
        let mid = PointRef::midpoint(1, 2);
        let half = crate::len(1, 2);
        let s = p4.neighborhood(&mid, half, BallKind::Sphere).unwrap();
        assert_eq!(s.into_iter().collect::<Vec<_>>(), vec![1, 2]);
        assert!(p4
            .neighborhood(&PointRef::Vertex(0), crate::len(-1, 1), BallKind::Open)
            .is_err());
    }

    #[test]
    fn subdivision() {
        let edge = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let s = edge.subdivide(2).unwrap();
        assert_eq!((s.n(), s.edge_count()), (3, 2));
        assert_eq!(s.dist(0, 1), 2);

        let c3 = GraphSpec::parse("cycle:3").unwrap().build(None).unwrap();
        let c6 = c3.subdivide(2).unwrap();
        assert_eq!((c6.n(), c6.edge_count()), (6, 6));
        assert!(c6.neighbors(0).len() == 2 && c6.diameter() == 3);

        let g = GraphSpec::parse("grid:2,3").unwrap().build(None).unwrap();
        assert_eq!(g.subdivide(1).unwrap(), g);
        let t3 = g.subdivide(3).unwrap();
        for u in 0..g.n() {
            for v in 0..g.n() {
                assert_eq!(t3.dist(u, v), 3 * g.dist(u, v));
            }
        }
        assert!(g.subdivide(0).is_err());
    }
}
