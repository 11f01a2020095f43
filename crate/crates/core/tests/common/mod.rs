//! Brute-force reference implementations sharing no code with the library
//! beyond the `Graph` adjacency lists.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use chordsep::graph::GraphSpec;
use chordsep::{Graph, Length};

pub fn build(spec: &str, seed: Option<u64>) -> Graph {
    GraphSpec::parse(spec).unwrap().build(seed).unwrap()
}

/// Connected random graphs on `lo..=hi` vertices, one per seed.
pub fn random_graphs(count: u64, lo: u64, hi: u64, p: f64) -> Vec<(String, Graph)> {
    (0..count)
        .map(|seed| {
            let n = lo + seed % (hi - lo + 1);
            let spec = format!("erdos_renyi:{n},{p}");
            let g = build(&spec, Some(seed));
            (format!("{spec}@{seed}"), g)
        })
        .collect()
}

pub fn bfs(g: &Graph, s: usize) -> Vec<u32> {
    let mut d = vec![u32::MAX; g.n()];
    d[s] = 0;
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        for &w in g.neighbors(u) {
            if d[w] == u32::MAX {
                d[w] = d[u] + 1;
                q.push_back(w);
            }
        }
    }
    d
}

pub fn all_distances(g: &Graph) -> Vec<Vec<u32>> {
    (0..g.n()).map(|s| bfs(g, s)).collect()
}

/// Vertices reachable from `s` without entering `mask`.
fn reach(g: &Graph, s: usize, mask: u64) -> u64 {
    let mut seen = 1u64 << s;
    let mut stack = vec![s];
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if mask >> w & 1 == 0 && seen >> w & 1 == 0 {
                seen |= 1 << w;
                stack.push(w);
            }
        }
    }
    seen
}

fn bits(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

/// Whether removing `mask` leaves `a` and `b` in components at pairwise
/// distance above `r`.
pub fn r_separates(g: &Graph, dist: &[Vec<u32>], mask: u64, a: usize, b: usize, r: u32) -> bool {
    let ga = reach(g, a, mask);
    if ga >> b & 1 == 1 {
        return false;
    }
    let gb = reach(g, b, mask);
    bits(ga)
        .iter()
        .all(|&x| bits(gb).iter().all(|&y| dist[x][y] > r))
}

/// Every inclusion-minimal ab-r-separator, found by testing all subsets of
/// `V - {a, b}` and discarding those with a separating proper subset.
pub fn brute_minimal_separators(g: &Graph, a: usize, b: usize, r: u32) -> BTreeSet<Vec<usize>> {
    let dist = all_distances(g);
    let n = g.n();
    let free: u64 = ((1u64 << n) - 1) & !(1 << a) & !(1 << b);
    let mut separating = Vec::new();
    let mut s = free;
    loop {
        if r_separates(g, &dist, s, a, b, r) {
            separating.push(s);
        }
        if s == 0 {
            break;
        }
        s = (s - 1) & free;
    }
    separating
        .iter()
        .filter(|&&s| !separating.iter().any(|&t| t != s && t & s == t))
        .map(|&s| bits(s))
        .collect()
}

/// Every simple path from `a` to `b`, as vertex lists.
pub fn simple_paths(g: &Graph, a: usize, b: usize) -> Vec<Vec<usize>> {
    fn go(g: &Graph, b: usize, path: &mut Vec<usize>, on: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let u = *path.last().unwrap();
        if u == b {
            out.push(path.clone());
            return;
        }
        for &w in g.neighbors(u) {
            if !on[w] {
                on[w] = true;
                path.push(w);
                go(g, b, path, on, out);
                path.pop();
                on[w] = false;
            }
        }
    }
    let mut on = vec![false; g.n()];
    on[a] = true;
    let mut out = Vec::new();
    go(g, b, &mut vec![a], &mut on, &mut out);
    out
}

/// A midpoint of a vertex geodesic: a vertex, or the middle of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Mid {
    Vertex(usize),
    Edge(usize, usize),
}

/// Distance from a midpoint to the point at fraction `s` along edge `x-y`.
fn mid_to_point(dist: &[Vec<u32>], c: Mid, x: usize, y: usize, s: Length) -> Length {
    let one = Length::from_integer(1);
    let abs = |x: Length| if x < Length::from_integer(0) { -x } else { x };
    let to_vertex = |v: usize| match c {
        Mid::Vertex(u) => Length::from_integer(dist[u][v] as i64),
        Mid::Edge(p, q) => {
            Length::new(1, 2) + Length::from_integer(dist[p][v].min(dist[q][v]) as i64)
        }
    };
    if let Mid::Edge(p, q) = c {
        if (p, q) == (x, y) {
            return abs(s - Length::new(1, 2));
        }
        if (p, q) == (y, x) {
            return abs(one - s - Length::new(1, 2));
        }
    }
    (to_vertex(x) + s).min(to_vertex(y) + one - s)
}

/// Whether the path, as a subset of the metric graph, meets the closed
/// ball of radius `radius` around `c`. Each edge is sampled at eighths,
/// which contains every local minimum of the distance to `c`.
pub fn path_meets_ball(dist: &[Vec<u32>], path: &[usize], c: Mid, radius: Length) -> bool {
    path.windows(2)
        .any(|e| (0..=8).any(|j| mid_to_point(dist, c, e[0], e[1], Length::new(j, 8)) <= radius))
}

/// Midpoints of every geodesic between `v` and `w`.
pub fn geodesic_midpoints(g: &Graph, dist: &[Vec<u32>], v: usize, w: usize) -> BTreeSet<Mid> {
    let d = dist[v][w];
    let mut out = BTreeSet::new();
    for x in 0..g.n() {
        if d.is_multiple_of(2) && 2 * dist[v][x] == d && 2 * dist[x][w] == d {
            out.insert(Mid::Vertex(x));
        }
        if d % 2 == 1 {
            for &y in g.neighbors(x) {
                if 2 * dist[v][x] + 1 == d
                    && dist[v][y] == dist[v][x] + 1
                    && dist[y][w] + dist[v][y] == d
                {
                    out.insert(Mid::Edge(x, y));
                }
            }
        }
    }
    out
}

/// The bottleneck property on vertices, checked path by path.
pub fn literal_bp(g: &Graph, radius: Length) -> bool {
    let dist = all_distances(g);
    for v in 0..g.n() {
        for w in v + 1..g.n() {
            let paths = simple_paths(g, v, w);
            for c in geodesic_midpoints(g, &dist, v, w) {
                if !paths.iter().all(|p| path_meets_ball(&dist, p, c, radius)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Largest thinness over all geodesic triangles of `C_n` with corners on the
/// quarter grid. Positions are in eighths of an edge, so every breakpoint of
/// the distance to a union of arcs is an integer position.
pub fn cycle_delta_brute(n: usize) -> Length {
    let len = 8 * n as i64;
    let circ = |x: i64, y: i64| {
        let d = (x - y).rem_euclid(len);
        d.min(len - d)
    };
    // geodesic arcs from x to y as (start, length) going forward
    let arcs = |x: i64, y: i64| -> Vec<(i64, i64)> {
        let fwd = (y - x).rem_euclid(len);
        let bwd = len - fwd;
        let mut out = Vec::new();
        if fwd <= bwd {
            out.push((x, fwd));
        }
        if bwd <= fwd {
            out.push((y, bwd));
        }
        out
    };
    let dist_to_arc = |p: i64, (s, l): (i64, i64)| {
        let off = (p - s).rem_euclid(len);
        if off <= l {
            0
        } else {
            circ(p, s).min(circ(p, s + l))
        }
    };
    let corners: Vec<i64> = (0..len).step_by(2).collect();
    let mut best = 0;
    for (i, &x) in corners.iter().enumerate() {
        for (j, &y) in corners.iter().enumerate().skip(i) {
            for &z in &corners[j..] {
                for s1 in arcs(x, y) {
                    for s2 in arcs(y, z) {
                        for s3 in arcs(z, x) {
                            let sides = [s1, s2, s3];
                            for k in 0..3 {
                                let (s, l) = sides[k];
                                for off in 0..=l {
                                    let p = s + off;
                                    let d = (0..3)
                                        .filter(|&o| o != k)
                                        .map(|o| dist_to_arc(p, sides[o]))
                                        .min()
                                        .unwrap();
                                    best = best.max(d);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Length::new(best, 8)
}

pub mod props {
    //! Invariant checks shared by the property tests and the acceptance run.

    use proptest::prelude::*;

    use chordsep::bottleneck::bp_check_vertices;
    use chordsep::chordality::{density_radius, ChordalityQuery, Cycle, CycleCatalog, CycleFamily};
    use chordsep::{len, Caps, Graph, Length};

    use super::build;

    pub fn graph() -> impl Strategy<Value = Graph> {
        (4u64..=9, 0.2f64..0.6, any::<u64>()).prop_map(|(n, p, seed)| {
            let p = (p * 100.0).round() / 100.0;
            build(&format!("erdos_renyi:{n},{p}"), Some(seed))
        })
    }

    pub fn family() -> impl Strategy<Value = CycleFamily> {
        prop::sample::select(CycleFamily::ALL.to_vec())
    }

    /// Families contained in `f`.
    fn subfamilies(f: CycleFamily) -> &'static [CycleFamily] {
        match f {
            CycleFamily::All => &CycleFamily::ALL,
            CycleFamily::Triangles => &[CycleFamily::Triangles],
            CycleFamily::Bigons => &[CycleFamily::Bigons, CycleFamily::VertexBigons],
            CycleFamily::VertexBigons => &[CycleFamily::VertexBigons],
        }
    }

    fn holds(
        c: &CycleCatalog,
        k: usize,
        m: Option<usize>,
        rho: Option<Length>,
        family: CycleFamily,
    ) -> bool {
        c.check(&ChordalityQuery { k, m, rho, family })
            .unwrap()
            .status
            .holds()
    }

    /// `(g, k, m, rho in halves, use rho, family)`.
    pub type ChordalityCase = (Graph, usize, usize, i64, bool, CycleFamily);

    pub fn chordality_case() -> impl Strategy<Value = ChordalityCase> {
        (
            graph(),
            4usize..=9,
            1usize..=4,
            0i64..=6,
            any::<bool>(),
            family(),
        )
    }

    /// Loosening any parameter or shrinking the family keeps a pass.
    pub fn chordality_monotone(
        (g, k, m, halves, use_rho, f): ChordalityCase,
    ) -> Result<(), TestCaseError> {
        let m = m.min(k / 2);
        let rho = use_rho.then(|| len(halves, 2));
        let catalog = CycleCatalog::full(&g, &Caps::default()).unwrap();
        if holds(&catalog, k, Some(m), rho, f) {
            prop_assert!(holds(&catalog, k + 1, Some(m), rho, f));
            if k >= 2 * (m + 1) {
                prop_assert!(holds(&catalog, k, Some(m + 1), rho, f));
            }
            if let Some(r) = rho {
                prop_assert!(holds(&catalog, k, Some(m), Some(r + len(1, 2)), f));
                prop_assert!(holds(&catalog, k, Some(m), None, f));
            }
            for &sub in subfamilies(f) {
                prop_assert!(holds(&catalog, k, Some(m), rho, sub));
            }
            // a bounded shortcut is in particular a shortcut
            prop_assert!(holds(&catalog, k, None, None, f));
        }
        Ok(())
    }

    pub fn bp_case() -> impl Strategy<Value = (Graph, i64)> {
        (graph(), 0i64..=8)
    }

    pub fn bp_monotone((g, halves): (Graph, i64)) -> Result<(), TestCaseError> {
        let d = len(halves, 2);
        if bp_check_vertices(&g, d).unwrap().holds {
            prop_assert!(bp_check_vertices(&g, d + len(1, 2)).unwrap().holds);
        }
        Ok(())
    }

    /// `(n, members, extra)` indexing positions of `C_n`.
    pub type DensityCase = (usize, Vec<prop::sample::Index>, prop::sample::Index);

    pub fn density_case() -> impl Strategy<Value = DensityCase> {
        (
            3usize..=20,
            prop::collection::vec(any::<prop::sample::Index>(), 1..6),
            any::<prop::sample::Index>(),
        )
    }

    pub fn density_antitone((n, members, extra): DensityCase) -> Result<(), TestCaseError> {
        let g = build(&format!("cycle:{n}"), None);
        let c = Cycle::new(&g, (0..n).collect()).unwrap();
        let x: Vec<usize> = members.iter().map(|i| i.index(n)).collect();
        let mut y = x.clone();
        y.push(extra.index(n));
        let rx = density_radius(&c, &x).unwrap().unwrap();
        let ry = density_radius(&c, &y).unwrap().unwrap();
        prop_assert!(ry <= rx);
        Ok(())
    }
}
