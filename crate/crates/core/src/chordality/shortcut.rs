use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::Cycle;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::Length;

/// A path `sigma` between two cycle vertices that is shorter than their arc
/// distance. Strict shortcuts meet the cycle only at their endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShortcutCert {
    pub p: usize,
    pub q: usize,
    pub path: Vec<usize>,
    pub length: usize,
    pub strict: bool,
}

impl ShortcutCert {
    pub fn validate(&self, g: &Graph, c: &Cycle) -> Result<()> {
        let bad = |m: &str| {
            Err(Error::Consistency(format!(
                "shortcut {}-{}: {m}",
                self.p, self.q
            )))
        };
        if self.path.first() != Some(&self.p) || self.path.last() != Some(&self.q) {
            return bad("path does not join p and q");
        }
        if !g.is_simple_path(&self.path) || self.path.len() != self.length + 1 {
            return bad("not a simple path of the stated length");
        }
        if self.length >= c.d_c(self.p, self.q)? {
            return bad("not shorter than the arc distance");
        }
        if self.strict {
            let on = c.mask(g.n());
            if self.path[1..self.path.len() - 1].iter().any(|&v| on[v]) {
                return bad("interior meets the cycle");
            }
        }
        Ok(())
    }
}

/// Shortest shortcut between `p` and `q`, if any. The strict version only
/// walks through vertices off the cycle (chords are allowed).
pub fn min_shortcut(
    g: &Graph,
    c: &Cycle,
    p: usize,
    q: usize,
    strict: bool,
) -> Result<Option<ShortcutCert>> {
    if p == q {
        return Err(Error::Precondition("shortcut endpoints must differ".into()));
    }
    let arc = c.d_c(p, q)?;
    let path = if strict {
        let mut removed = c.mask(g.n());
        removed[p] = false;
        removed[q] = false;
        g.path_avoiding(p, q, &removed)
    } else {
        g.path_avoiding(p, q, &vec![false; g.n()])
    };
    Ok(path
        .filter(|path| path.len() - 1 < arc)
        .map(|path| ShortcutCert {
            p,
            q,
            length: path.len() - 1,
            path,
            strict,
        }))
}

/// For each position `i` of the cycle, the length of the shortest strict
/// shortcut with an endpoint at `c[i]` (`None` if there is none).
pub fn strict_shortcut_lengths(g: &Graph, c: &Cycle) -> Vec<Option<u32>> {
    let n = g.n();
    let len = c.len();
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in c.vertices().iter().enumerate() {
        pos[v] = i;
    }
    let mut dist = vec![u32::MAX; n];
    let mut touched = Vec::new();
    let mut out = vec![None; len];
    for (i, &p) in c.vertices().iter().enumerate() {
        for &v in &touched {
            dist[v] = u32::MAX;
        }
        touched.clear();
        dist[p] = 0;
        touched.push(p);
        let mut queue = VecDeque::from([p]);
        let mut best: Option<u32> = None;
        while let Some(v) = queue.pop_front() {
            let dv = dist[v];
            if best.is_some_and(|b| dv + 1 > b) {
                break;
            }
            for &w in g.neighbors(v) {
                if dist[w] != u32::MAX {
                    continue;
                }
                dist[w] = dv + 1;
                touched.push(w);
                if pos[w] != usize::MAX {
                    // cycle vertex: a target, never expanded
                    if ((dv + 1) as usize) < c.arc(i, pos[w]) {
                        best = Some(best.map_or(dv + 1, |b| b.min(dv + 1)));
                    }
                } else {
                    queue.push_back(w);
                }
            }
        }
        out[i] = best;
    }
    out
}

/// Cycle vertices that are endpoints of a strict shortcut of length `<= m`.
pub fn shortcut_vertices(g: &Graph, c: &Cycle, m: usize) -> Vec<usize> {
    let s = strict_shortcut_lengths(g, c);
    let mut out: Vec<usize> = c
        .vertices()
        .iter()
        .zip(&s)
        .filter(|(_, s)| s.is_some_and(|s| s as usize <= m))
        .map(|(&v, _)| v)
        .collect();
    out.sort_unstable();
    out
}

/// Shortest non-strict shortcut on the cycle, as a length.
pub fn min_shortcut_length(g: &Graph, c: &Cycle) -> Option<u32> {
    let v = c.vertices();
    let mut best: Option<u32> = None;
    for i in 0..v.len() {
        for j in i + 2..v.len() {
            let d = g.dist(v[i], v[j]);
            if (d as usize) < c.arc(i, j) {
                best = Some(best.map_or(d, |b| b.min(d)));
            }
        }
    }
    best
}

/// Half the largest cyclic gap between consecutive members of `x`: the
/// distance from `x` to the farthest point of the cycle. `x` is then
/// `eps`-dense in the arc metric exactly for `eps` above this value.
/// `None` stands for an empty set (never dense).
pub fn density_radius(c: &Cycle, x: &[usize]) -> Result<Option<Length>> {
    let mut positions = Vec::with_capacity(x.len());
    for &v in x {
        positions.push(c.position(v).ok_or(Error::NotOnCycle(v))?);
    }
    Ok(radius_of_positions(c.len(), &mut positions))
}

pub(crate) fn radius_of_positions(len: usize, positions: &mut [usize]) -> Option<Length> {
    if positions.is_empty() {
        return None;
    }
    positions.sort_unstable();
    let mut gap = positions[0] + len - positions[positions.len() - 1];
    for w in positions.windows(2) {
        gap = gap.max(w[1] - w[0]);
    }
    Some(Length::new(gap as i64, 2))
}

/// Largest half-integer strictly below `x`: converts "dense for `eps = x`"
/// into a closed bound on the density radius.
pub fn strict_to_closed(x: Length) -> Length {
    let twice = x * 2;
    let floor = twice.floor();
    let below = if floor == twice { floor - 1 } else { floor };
    below / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordality::enumerate_cycles;
    use crate::graph::GraphSpec;
    use crate::len;

    fn build(s: &str) -> Graph {
        GraphSpec::parse(s).unwrap().build(None).unwrap()
    }

    #[test]
    fn k4_chord() {
        let k4 = build("complete:4");
        let c = Cycle::new(&k4, vec![0, 1, 2, 3]).unwrap();
        let s = min_shortcut(&k4, &c, 0, 2, true).unwrap().unwrap();
        assert_eq!(s.length, 1);
        s.validate(&k4, &c).unwrap();
        assert_eq!(shortcut_vertices(&k4, &c, 1), vec![0, 1, 2, 3]);
    }

    #[test]
    fn plain_cycles_have_none() {
        let c5 = build("cycle:5");
        let c = enumerate_cycles(&c5, 5, 10).cycles.remove(0);
        for p in 0..5 {
            for q in 0..5 {
                if p != q {
                    assert!(min_shortcut(&c5, &c, p, q, true).unwrap().is_none());
                    assert!(min_shortcut(&c5, &c, p, q, false).unwrap().is_none());
                }
            }
        }
        let c8 = build("cycle:8");
        let c = enumerate_cycles(&c8, 8, 10).cycles.remove(0);
        assert!(shortcut_vertices(&c8, &c, 8).is_empty());
    }

    #[test]
    fn hub_cycle_of_example_2_9() {
        let g = build("example_2_9:8");
        let rim = crate::graph::example_2_9_rims(8)[4].clone();
        assert_eq!(rim.len(), 7);
        let c = Cycle::new(&g, rim.clone()).unwrap();
        let (p, q) = (rim[0], rim[3]);
        let s = min_shortcut(&g, &c, p, q, true).unwrap().unwrap();
        assert_eq!((s.length, s.path[1]), (2, 4));
        assert_eq!(shortcut_vertices(&g, &c, 2).len(), 7);
        assert!(shortcut_vertices(&g, &c, 1).is_empty());
    }

    #[test]
    fn radii() {
        let c10 = build("cycle:10");
        let c = enumerate_cycles(&c10, 10, 10).cycles.remove(0);
        assert_eq!(density_radius(&c, &[0, 2, 5]).unwrap(), Some(len(5, 2)));
        assert_eq!(
            density_radius(&c, &(0..10).collect::<Vec<_>>()).unwrap(),
            Some(len(1, 2))
        );
        assert_eq!(density_radius(&c, &[]).unwrap(), None);
        assert!(density_radius(
            &Cycle::new(&build("complete:4"), vec![0, 1, 2]).unwrap(),
            &[3]
        )
        .is_err());
    }

    #[test]
    fn strict_conversion() {
        assert_eq!(strict_to_closed(len(3, 2)), len(1, 1));
        assert_eq!(strict_to_closed(len(7, 4)), len(3, 2));
        assert_eq!(strict_to_closed(len(2, 1)), len(3, 2));
    }
}
