//! Vertex separators: plain and r-separation, minimality, the sphere
//! constructions, neighbor separators and obstructing sets.
//!
//! `r = 1` is plain separation. For `r >= 2`, `S` r-separates `a` and `b`
//! when they lie in different components `G_a`, `G_b` of `G - S` with every
//! cross pair more than `r` apart. r-separation is preserved by supersets,
//! so a separator is inclusion-minimal as soon as no single vertex can be
//! dropped.
//!
//! Minimal ab-separators for `r = 1` are generated by closing sets under
//! `A -> N(C_b(A))`, where `C_b(A)` is the component of `b` in `G - N[A]`.
//! For `r >= 2` subsets are searched by increasing size within a budget.
//!
//! Diameters of separators are measured in the metric of `G`.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geodesics::GeodesicPath;
use crate::graph::Graph;
use crate::Caps;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparatorCert {
    pub set: Vec<usize>,
    pub a: usize,
    pub b: usize,
    pub r: u32,
    /// Component of `a` in `G - S`.
    pub comp_a: Vec<usize>,
    /// Component of `b` in `G - S`.
    pub comp_b: Vec<usize>,
    pub minimal: bool,
    pub diameter: u32,
}

fn mask_of(n: usize, set: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in set {
        m[v] = true;
    }
    m
}

/// Components of `a` and `b` in `G - removed` if `removed` r-separates them.
fn separated_components(
    g: &Graph,
    removed: &[bool],
    a: usize,
    b: usize,
    r: u32,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let comp = g.components_without(removed);
    if comp[a] == comp[b] {
        return None;
    }
    let ga: Vec<usize> = (0..g.n()).filter(|&v| comp[v] == comp[a]).collect();
    let gb: Vec<usize> = (0..g.n()).filter(|&v| comp[v] == comp[b]).collect();
    if r >= 2 && ga.iter().any(|&v| gb.iter().any(|&w| g.dist(v, w) <= r)) {
        return None;
    }
    Some((ga, gb))
}

/// Whether the vertices marked in `removed` r-separate `a` and `b`.
pub fn r_separates(g: &Graph, removed: &[bool], a: usize, b: usize, r: u32) -> bool {
    separated_components(g, removed, a, b, r).is_some()
}

fn check_vertices(g: &Graph, vs: impl IntoIterator<Item = usize>) -> Result<()> {
    for v in vs {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: g.n(),
            });
        }
    }
    Ok(())
}

/// Certifies that `s` r-separates `a` and `b`, or returns `None`.
pub fn check_separation(
    g: &Graph,
    s: &[usize],
    a: usize,
    b: usize,
    r: u32,
) -> Result<Option<SeparatorCert>> {
    check_vertices(g, s.iter().copied().chain([a, b]))?;
    if r == 0 {
        return Err(Error::Precondition("separation radius must be >= 1".into()));
    }
    let mut set: Vec<usize> = s.to_vec();
    set.sort_unstable();
    set.dedup();
    for x in [a, b] {
        if set.binary_search(&x).is_ok() {
            return Err(Error::EndpointInSeparator(x));
        }
    }
    let mut removed = mask_of(g.n(), &set);
    let Some((comp_a, comp_b)) = separated_components(g, &removed, a, b, r) else {
        return Ok(None);
    };
    let mut minimal = true;
    for &v in &set {
        removed[v] = false;
        let still = r_separates(g, &removed, a, b, r);
        removed[v] = true;
        if still {
            minimal = false;
            break;
        }
    }
    Ok(Some(SeparatorCert {
        diameter: g.set_diameter(&set),
        set,
        a,
        b,
        r,
        comp_a,
        comp_b,
        minimal,
    }))
}

/// Drops vertices of `s` in ascending id order while the rest still
/// r-separates `a` and `b`; vertices in `keep` are never dropped.
pub fn minimalize(
    g: &Graph,
    s: &[usize],
    a: usize,
    b: usize,
    r: u32,
    keep: &[usize],
) -> Result<Vec<usize>> {
    if check_separation(g, s, a, b, r)?.is_none() {
        return Err(Error::NotSeparating(format!("{s:?}")));
    }
    let mut set: Vec<usize> = s.to_vec();
    set.sort_unstable();
    set.dedup();
    let mut removed = mask_of(g.n(), &set);
    for &v in &set {
        if keep.contains(&v) {
            continue;
        }
        removed[v] = false;
        if !r_separates(g, &removed, a, b, r) {
            removed[v] = true;
        }
    }
    Ok((0..g.n()).filter(|&v| removed[v]).collect())
}

/// Anchor vertices of the sphere construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Anchors {
    /// One interior vertex; builds a minimal separator (`r = 1`).
    Single(usize),
    /// Two interior vertices at distance `r - 1`, `v1` closer to `a`.
    Pair(usize, usize),
}

/// Builds `S(a, eps)` (or `S(a, eps1) ∪ S(b, eps2)`) from the anchors on a
/// geodesic and minimalizes it keeping the anchors.
pub fn sphere_separator(
    g: &Graph,
    geodesic: &GeodesicPath,
    anchors: Anchors,
) -> Result<SeparatorCert> {
    geodesic.validate(g)?;
    let path = geodesic.vertices();
    let (a, b) = match (
        geodesic.endpoints.0.as_vertex(),
        geodesic.endpoints.1.as_vertex(),
    ) {
        (Some(a), Some(b)) if path.len() == geodesic.points.len() => (a, b),
        _ => {
            return Err(Error::InvalidGeodesic(
                "sphere separators need a geodesic between vertices".into(),
            ))
        }
    };
    let interior = |v: usize| -> Result<usize> {
        match path.iter().position(|&x| x == v) {
            Some(i) if i > 0 && i + 1 < path.len() => Ok(i),
            _ => Err(Error::Precondition(format!(
                "anchor {v} is not an interior vertex of the geodesic"
            ))),
        }
    };
    let sphere = |c: usize, eps: u32| (0..g.n()).filter(move |&w| g.dist(c, w) == eps);
    let (s0, r, keep) = match anchors {
        Anchors::Single(v0) => {
            interior(v0)?;
            let s0: Vec<usize> = sphere(a, g.dist(a, v0)).collect();
            (s0, 1, vec![v0])
        }
        Anchors::Pair(v1, v2) => {
            let (i, j) = (interior(v1)?, interior(v2)?);
            if i > j {
                return Err(Error::Precondition(format!(
                    "anchor {v1} must precede {v2} on the geodesic"
                )));
            }
            let r = g.dist(v1, v2) + 1;
            if r < 2 {
                return Err(Error::Precondition(
                    "anchor pair must be distinct (r >= 2)".into(),
                ));
            }
            let mut s0: BTreeSet<usize> = sphere(a, g.dist(a, v1)).collect();
            s0.extend(sphere(b, g.dist(b, v2)));
            (s0.into_iter().collect(), r, vec![v1, v2])
        }
    };
    let set = minimalize(g, &s0, a, b, r, &keep)?;
    check_separation(g, &set, a, b, r)?
        .ok_or_else(|| Error::Consistency("minimalized sphere set stopped separating".into()))
}

/// Minimal ab-separators with a truncation flag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparatorList {
    pub certs: Vec<SeparatorCert>,
    pub truncated: bool,
}

/// All inclusion-minimal ab-r-separators, sorted by vertex set.
pub fn enumerate_minimal_ab_separators(
    g: &Graph,
    a: usize,
    b: usize,
    r: u32,
    caps: &Caps,
) -> Result<SeparatorList> {
    check_vertices(g, [a, b])?;
    if a == b || r == 0 {
        return Err(Error::Precondition("need a != b and r >= 1".into()));
    }
    let (sets, truncated) = if r == 1 {
        (close_generation(g, a, b), false)
    } else {
        subset_search(g, a, b, r, caps.separator_subsets)
    };
    let mut certs = Vec::with_capacity(sets.len());
    for s in sets {
        let cert = check_separation(g, &s, a, b, r)?
            .ok_or_else(|| Error::Consistency(format!("generated set {s:?} does not separate")))?;
        if !cert.minimal {
            return Err(Error::Consistency(format!(
                "generated set {s:?} is not minimal"
            )));
        }
        certs.push(cert);
    }
    certs.sort_by(|x, y| x.set.cmp(&y.set));
    Ok(SeparatorList { certs, truncated })
}

/// `N(C)` where `C` is the component of `b` in `G - N[A]`, if `b` survives.
fn close(g: &Graph, in_a: &[bool], b: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut blocked = in_a.to_vec();
    for v in 0..n {
        if in_a[v] {
            for &w in g.neighbors(v) {
                blocked[w] = true;
            }
        }
    }
    if blocked[b] {
        return None;
    }
    let comp = g.components_without(&blocked);
    let cb: Vec<usize> = (0..n).filter(|&v| comp[v] == comp[b]).collect();
    let mut nb = BTreeSet::new();
    for &v in &cb {
        for &w in g.neighbors(v) {
            if comp[w] != comp[b] {
                nb.insert(w);
            }
        }
    }
    Some(nb.into_iter().collect())
}

fn close_generation(g: &Graph, a: usize, b: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut start = vec![false; n];
    start[a] = true;
    let Some(s0) = close(g, &start, b) else {
        return Vec::new();
    };
    let mut found = BTreeSet::from([s0.clone()]);
    let mut queue = VecDeque::from([s0]);
    while let Some(s) = queue.pop_front() {
        let removed = mask_of(n, &s);
        let comp = g.components_without(&removed);
        let ca: Vec<bool> = (0..n).map(|v| comp[v] == comp[a] && !removed[v]).collect();
        for &x in &s {
            if g.has_edge(x, b) {
                continue;
            }
            let mut grown = ca.clone();
            grown[x] = true;
            if let Some(t) = close(g, &grown, b) {
                if found.insert(t.clone()) {
                    queue.push_back(t);
                }
            }
        }
    }
    found.into_iter().collect()
}

/// Subsets of `V - {a, b}` by increasing size, skipping supersets of sets
/// already found. Returns the sets and whether the budget ran out.
fn subset_search(g: &Graph, a: usize, b: usize, r: u32, budget: usize) -> (Vec<Vec<usize>>, bool) {
    if g.dist(a, b) <= r {
        return (Vec::new(), false);
    }
    let universe: Vec<usize> = (0..g.n()).filter(|&v| v != a && v != b).collect();
    let u = universe.len();
    if u > 63 {
        return (Vec::new(), true);
    }
    let mut found: Vec<u64> = Vec::new();
    let mut examined = 0usize;
    let mut removed = vec![false; g.n()];
    for size in 1..=u {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let mask = combo.iter().fold(0u64, |m, &i| m | 1 << i);
            if !found.iter().any(|&f| f & mask == f) {
                examined += 1;
                if examined > budget {
                    return (masks_to_sets(&found, &universe), true);
                }
                for &i in &combo {
                    removed[universe[i]] = true;
                }
                if r_separates(g, &removed, a, b, r) {
                    found.push(mask);
                }
                for &i in &combo {
                    removed[universe[i]] = false;
                }
            }
            if !next_combination(&mut combo, u) {
                break;
            }
        }
    }
    (masks_to_sets(&found, &universe), false)
}

fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn masks_to_sets(masks: &[u64], universe: &[usize]) -> Vec<Vec<usize>> {
    masks
        .iter()
        .map(|&m| {
            (0..universe.len())
                .filter(|&i| m >> i & 1 == 1)
                .map(|i| universe[i])
                .collect()
        })
        .collect()
}

/// Largest diameter over all minimal vertex r-separators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiameterProfile {
    pub r: u32,
    /// `None` when the graph has no minimal r-separator at all.
    pub max_diameter: Option<u32>,
    pub witness: Option<SeparatorCert>,
    /// For `r >= 2`: the largest `min(diam S_a, diam S_b)`.
    pub max_split_diameter: Option<u32>,
    pub split_witness: Option<SeparatorCert>,
    pub separators: usize,
    pub truncated: bool,
}

/// Every pair `a < b` that can be r-separated at all.
pub fn separable_pairs(g: &Graph, r: u32) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..g.n() {
        for b in a + 1..g.n() {
            if g.dist(a, b) > r.max(1) {
                out.push((a, b));
            }
        }
    }
    out
}

pub fn separator_diameter_profile(g: &Graph, r: u32, caps: &Caps) -> Result<DiameterProfile> {
    let mut p = DiameterProfile {
        r,
        max_diameter: None,
        witness: None,
        max_split_diameter: None,
        split_witness: None,
        separators: 0,
        truncated: false,
    };
    for (a, b) in separable_pairs(g, r) {
        let list = enumerate_minimal_ab_separators(g, a, b, r, caps)?;
        p.truncated |= list.truncated;
        for cert in list.certs {
            p.separators += 1;
            if p.max_diameter.map_or(true, |m| cert.diameter > m) {
                p.max_diameter = Some(cert.diameter);
                p.witness = Some(cert.clone());
            }
            if r >= 2 {
                let split = split_sa_sb(g, &cert)?;
                let d = g.set_diameter(&split.sa).min(g.set_diameter(&split.sb));
                if p.max_split_diameter.map_or(true, |m| d > m) {
                    p.max_split_diameter = Some(d);
                    p.split_witness = Some(cert);
                }
            }
        }
    }
    Ok(p)
}

/// `S = S_a ∪ S_b` split by adjacency to `G_a` and `G_b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitSeparator {
    pub sa: Vec<usize>,
    pub sb: Vec<usize>,
    /// Whether `d(v, S_b) = r - 1` for every `v` in `S_a` (and symmetrically).
    /// Only `>= r - 1` is guaranteed in general.
    pub exact: bool,
}

pub fn split_sa_sb(g: &Graph, cert: &SeparatorCert) -> Result<SplitSeparator> {
    if cert.r < 2 {
        return Err(Error::Precondition(
            "the S_a / S_b split needs r >= 2".into(),
        ));
    }
    if !cert.minimal {
        return Err(Error::NotMinimal);
    }
    let in_a = mask_of(g.n(), &cert.comp_a);
    let in_b = mask_of(g.n(), &cert.comp_b);
    let (mut sa, mut sb) = (Vec::new(), Vec::new());
    for &v in &cert.set {
        let to_a = g.neighbors(v).iter().any(|&w| in_a[w]);
        let to_b = g.neighbors(v).iter().any(|&w| in_b[w]);
        match (to_a, to_b) {
            (true, false) => sa.push(v),
            (false, true) => sb.push(v),
            (true, true) => {
                return Err(Error::Consistency(format!(
                    "{v} is adjacent to both sides of an r-separator"
                )))
            }
            (false, false) => {
                return Err(Error::Consistency(format!(
                    "{v} is adjacent to neither side of a minimal separator"
                )))
            }
        }
    }
    let mut exact = true;
    for (from, to) in [(&sa, &sb), (&sb, &sa)] {
        for &v in from.iter() {
            match g.dist_to_set(v, to) {
                Some(d) if d < cert.r - 1 => {
                    return Err(Error::Consistency(format!(
                        "d({v}, other side) = {d} < r - 1"
                    )))
                }
                Some(d) if d == cert.r - 1 => {}
                _ => exact = false,
            }
        }
    }
    Ok(SplitSeparator { sa, sb, exact })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NeighborMode {
    /// `a` and `b` lie in different components of `G - N_r(S)`.
    Separator,
    /// Every ab-geodesic meets `N_r(S)`.
    Obstructing,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeighborVerdict {
    pub holds: bool,
    /// A path from `a` to `b` avoiding `N_r(S)` (a geodesic in obstructing
    /// mode) when the property fails.
    pub witness: Option<Vec<usize>>,
}

/// Checks the N_r-separator or N_r-obstructing property of a vertex set.
pub fn check_neighbor_separation(
    g: &Graph,
    s: &[usize],
    a: usize,
    b: usize,
    r: u32,
    mode: NeighborMode,
) -> Result<NeighborVerdict> {
    check_vertices(g, s.iter().copied().chain([a, b]))?;
    let ball = g.closed_neighborhood(s, r);
    neighbor_verdict(g, &ball, a, b, mode)
}

/// As [`check_neighbor_separation`] with `N_r(S)` given as a mask.
pub fn neighbor_verdict(
    g: &Graph,
    ball: &[bool],
    a: usize,
    b: usize,
    mode: NeighborMode,
) -> Result<NeighborVerdict> {
    match mode {
        NeighborMode::Separator => {
            for x in [a, b] {
                if ball[x] {
                    return Err(Error::EndpointInSeparator(x));
                }
            }
            let path = g.path_avoiding(a, b, ball);
            Ok(NeighborVerdict {
                holds: path.is_none(),
                witness: path,
            })
        }
        NeighborMode::Obstructing => {
            if ball[a] || ball[b] {
                return Ok(NeighborVerdict {
                    holds: true,
                    witness: None,
                });
            }
            let path = g
                .path_avoiding(a, b, ball)
                .filter(|p| p.len() - 1 == g.dist(a, b) as usize);
            Ok(NeighborVerdict {
                holds: path.is_none(),
                witness: path,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphSpec;

    fn build(s: &str) -> Graph {
        GraphSpec::parse(s).unwrap().build(None).unwrap()
    }

    #[test]
    fn check_separation_examples() {
        let p6 = build("path:6");
        let c = check_separation(&p6, &[2, 3], 0, 5, 2).unwrap().unwrap();
        assert!(c.minimal);
        assert!(check_separation(&p6, &[2, 3], 0, 5, 3).unwrap().is_none());
        assert_eq!(
            check_separation(&p6, &[0, 3], 0, 5, 1),
            Err(Error::EndpointInSeparator(0))
        );

        let c8 = build("cycle:8");
        let c = check_separation(&c8, &[2, 6], 0, 4, 1).unwrap().unwrap();
        assert!(c.minimal);
        assert_eq!(c.diameter, 4);
    }

    #[test]
    fn minimalize_examples() {
        let p5 = build("path:5");
        assert_eq!(minimalize(&p5, &[1, 2, 3], 0, 4, 1, &[]).unwrap(), vec![3]);
        assert_eq!(minimalize(&p5, &[1, 2, 3], 0, 4, 1, &[2]).unwrap(), vec![2]);
        let c4 = build("cycle:4");
        assert_eq!(minimalize(&c4, &[1, 3], 0, 2, 1, &[]).unwrap(), vec![1, 3]);
        assert!(minimalize(&c4, &[1], 0, 2, 1, &[]).is_err());
    }

    #[test]
    fn sphere_examples() {
        let p5 = build("path:5");
        let geo = GeodesicPath::from_vertices(&p5, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(
            sphere_separator(&p5, &geo, Anchors::Single(2)).unwrap().set,
            vec![2]
        );
        let c8 = build("cycle:8");
        let geo = GeodesicPath::from_vertices(&c8, &[0, 1, 2, 3, 4]).unwrap();
        let cert = sphere_separator(&c8, &geo, Anchors::Single(2)).unwrap();
        assert_eq!(cert.set, vec![2, 6]);
        assert!(cert.minimal);
        let p6 = build("path:6");
        let geo = GeodesicPath::from_vertices(&p6, &[0, 1, 2, 3, 4, 5]).unwrap();
        let cert = sphere_separator(&p6, &geo, Anchors::Pair(2, 3)).unwrap();
        assert_eq!((cert.set.clone(), cert.r), (vec![2, 3], 2));
        assert!(sphere_separator(&p6, &geo, Anchors::Single(0)).is_err());
        assert!(sphere_separator(&p6, &geo, Anchors::Pair(3, 2)).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let caps = Caps::default();
        let p4 = build("path:4");
        let sets: Vec<_> = enumerate_minimal_ab_separators(&p4, 0, 3, 1, &caps)
            .unwrap()
            .certs
            .into_iter()
            .map(|c| c.set)
            .collect();
        assert_eq!(sets, vec![vec![1], vec![2]]);
        let c4 = build("cycle:4");
        let l = enumerate_minimal_ab_separators(&c4, 0, 2, 1, &caps).unwrap();
        assert_eq!(l.certs.len(), 1);
        assert_eq!(l.certs[0].set, vec![1, 3]);
        let k5 = build("complete:5");
        assert!(enumerate_minimal_ab_separators(&k5, 0, 1, 1, &caps)
            .unwrap()
            .certs
            .is_empty());
    }

    #[test]
    fn split_examples() {
        let p6 = build("path:6");
        let cert = check_separation(&p6, &[2, 3], 0, 5, 2).unwrap().unwrap();
        let s = split_sa_sb(&p6, &cert).unwrap();
        assert_eq!((s.sa, s.sb, s.exact), (vec![2], vec![3], true));
        let p8 = build("path:8");
        let cert = check_separation(&p8, &[3, 4], 0, 7, 2).unwrap().unwrap();
        let s = split_sa_sb(&p8, &cert).unwrap();
        assert_eq!((s.sa, s.sb), (vec![3], vec![4]));

        // a-v-h-t-b with S = {v, t}: minimal for r = 2 yet d(v, t) = 2
        let p5 = build("path:5");
        let cert = check_separation(&p5, &[1, 3], 0, 4, 2).unwrap().unwrap();
        assert!(cert.minimal);
        assert!(!split_sa_sb(&p5, &cert).unwrap().exact);
    }

    #[test]
    fn neighbor_examples() {
        let p5 = build("path:5");
        assert!(
            check_neighbor_separation(&p5, &[2], 0, 4, 1, NeighborMode::Separator)
                .unwrap()
                .holds
        );
        let c8 = build("cycle:8");
        let v = check_neighbor_separation(&c8, &[2], 0, 4, 1, NeighborMode::Obstructing).unwrap();
        assert!(!v.holds);
        assert_eq!(v.witness.unwrap(), vec![0, 7, 6, 5, 4]);
        assert!(
            check_neighbor_separation(&c8, &[2], 0, 4, 3, NeighborMode::Obstructing)
                .unwrap()
                .holds
        );
        assert!(check_neighbor_separation(&c8, &[2], 0, 4, 3, NeighborMode::Separator).is_err());
    }

    #[test]
    fn no_minimal_separator_through_x1() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 2)]).unwrap();
        let l = enumerate_minimal_ab_separators(&g, 0, 3, 1, &Caps::default()).unwrap();
        assert_eq!(l.certs.len(), 1);
        assert!(l.certs.iter().all(|c| !c.set.contains(&1)));
    }
}
