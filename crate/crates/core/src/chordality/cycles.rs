use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Grid};

/// A simple cycle, stored in canonical form: the rotation and direction that
/// make the vertex sequence lexicographically smallest.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    /// Validates and canonicalises a cyclic vertex sequence.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Cycle> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::InvalidCycle(format!("length {n} < 3")));
        }
        let mut seen = vertices.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != n {
            return Err(Error::InvalidCycle("repeated vertex".into()));
        }
        for i in 0..n {
            let (u, v) = (vertices[i], vertices[(i + 1) % n]);
            if u >= g.n() || v >= g.n() {
                return Err(Error::VertexOutOfRange {
                    vertex: u.max(v),
                    n: g.n(),
                });
            }
            if !g.has_edge(u, v) {
                return Err(Error::NotAnEdge { u, v });
            }
        }
        Ok(Cycle::canonical(vertices))
    }

    fn canonical(vertices: Vec<usize>) -> Cycle {
        let n = vertices.len();
        let start = (0..n).min_by_key(|&i| vertices[i]).unwrap();
        let fwd: Vec<usize> = (0..n).map(|i| vertices[(start + i) % n]).collect();
        let bwd: Vec<usize> = (0..n).map(|i| vertices[(start + n - i) % n]).collect();
        Cycle {
            vertices: fwd.min(bwd),
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Length `L`, equal to the number of vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Position of `v` in [`Cycle::vertices`].
    pub fn position(&self, v: usize) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v)
    }

    /// Arc metric between positions `i` and `j`.
    pub fn arc(&self, i: usize, j: usize) -> usize {
        let d = i.abs_diff(j);
        d.min(self.len() - d)
    }

    /// Arc metric between two cycle vertices.
    pub fn d_c(&self, p: usize, q: usize) -> Result<usize> {
        let i = self.position(p).ok_or(Error::NotOnCycle(p))?;
        let j = self.position(q).ok_or(Error::NotOnCycle(q))?;
        Ok(self.arc(i, j))
    }

    /// Membership mask over the vertices of `g`.
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &v in &self.vertices {
            m[v] = true;
        }
        m
    }

    /// Grid ids around the cycle on `grid`, starting at the first vertex;
    /// `len() * t` entries.
    pub fn grid_ids(&self, g: &Graph, grid: &Grid) -> Vec<usize> {
        let n = self.len();
        let mut out = Vec::with_capacity(n * grid.resolution());
        for i in 0..n {
            let (u, v) = (self.vertices[i], self.vertices[(i + 1) % n]);
            let mut pts = grid.edge_points(g.edge_index(u, v).expect("cycle edges exist"));
            if pts[0] != u {
                pts.reverse();
            }
            out.extend_from_slice(&pts[..pts.len() - 1]);
        }
        out
    }
}

/// Result of [`enumerate_cycles`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleList {
    pub cycles: Vec<Cycle>,
    pub truncated: bool,
}

/// All simple cycles of length `3..=lmax`, each once, sorted canonically.
/// At most `cap` cycles are kept; `truncated` is set when more exist.
pub fn enumerate_cycles(g: &Graph, lmax: usize, cap: usize) -> CycleList {
    let n = g.n();
    let mut out = Vec::new();
    let mut on_path = vec![false; n];
    let mut path = Vec::new();
    let mut truncated = false;
    'outer: for s in 0..n {
        path.push(s);
        on_path[s] = true;
        if extend(g, s, lmax, cap, &mut path, &mut on_path, &mut out) {
            truncated = true;
            break 'outer;
        }
        on_path[s] = false;
        path.pop();
    }
    let mut cycles: Vec<Cycle> = out.into_iter().map(Cycle::canonical).collect();
    cycles.sort();
    CycleList { cycles, truncated }
}

/// Depth-first extension of a path starting at its minimum vertex `s`.
/// Returns true when the cap is exceeded.
fn extend(
    g: &Graph,
    s: usize,
    lmax: usize,
    cap: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) -> bool {
    let v = *path.last().unwrap();
    for &w in g.neighbors(v) {
        if w == s && path.len() >= 3 && path[1] < v {
            if out.len() == cap {
                return true;
            }
            out.push(path.clone());
        }
        if w > s && !on_path[w] && path.len() < lmax {
            // prune: w must be able to close back to s within the budget
            if path.len() + g.dist(w, s) as usize > lmax {
                continue;
            }
            on_path[w] = true;
            path.push(w);
            let hit = extend(g, s, lmax, cap, path, on_path, out);
            path.pop();
            on_path[w] = false;
            if hit {
                return true;
            }
        }
    }
    false
}
