//! Named graph families.
//!
//! Canonical numbering of the truncated infinite examples:
//!
//! * `example_2_9:N` has hubs `3..=N` with ids `0..=N-3` forming a path
//!   (hub `h` has id `h - 3`). Then, for `n = 3..=N` in order, the cycle `C_n`
//!   takes the next `n` consecutive ids in cyclic order, and every one of its
//!   vertices is adjacent to hub `n`. See [`example_2_9_rims`].
//! * `example_3_14:A` keeps the pairs `(a, b)` with `a <= A`. The base row
//!   `(a, 0)` gets id `a`. The block vertices `(a, b)` with
//!   `4n+1 <= a <= 4n+3` and `1 <= b <= n` follow in lexicographic order of
//!   `(a, b)`. See [`example_3_14_labels`].
//! * `example_6_9:K` (alias `odd_cycle_wedge:K`) has the shared vertex `v = 0`.
//!   For `k = 1..=K` the cycle `C_{2k+1}` adds ids `1 + k(k-1) ..` in cyclic
//!   order after `v`, so the graph has `1 + K(K+1)` vertices.
//!
//! `random_tree:n` attaches vertex `i` to a uniform earlier vertex, and
//! `erdos_renyi:n,p` resamples until connected. Both need a seed.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};

/// Attempts before a connected Erdős–Rényi sample is given up on.
const ER_ATTEMPTS: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Grid(usize, usize),
    RandomTree(usize),
    ErdosRenyi(usize, f64),
    Example2_9(usize),
    Example3_14(usize),
    Example6_9(usize),
}

/// A generator selected by name, e.g. `cycle:8`, `grid:2,4` or
/// `erdos_renyi:10,0.3`.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphSpec {
    pub family: Family,
}

impl GraphSpec {
    pub fn parse(s: &str) -> Result<GraphSpec> {
        s.parse()
    }

    pub fn is_random(&self) -> bool {
        matches!(self.family, Family::RandomTree(_) | Family::ErdosRenyi(..))
    }

    /// Builds the graph. Random families require `seed`; the others ignore it.
    pub fn build(&self, seed: Option<u64>) -> Result<Graph> {
        let need_seed = || {
            seed.ok_or_else(|| Error::InvalidParams(format!("{self} is random and needs a seed")))
        };
        match self.family {
            Family::Path(n) => path(n),
            Family::Cycle(n) => cycle(n),
            Family::Complete(n) => complete(n),
            Family::Grid(r, c) => grid(r, c),
            Family::RandomTree(n) => random_tree(n, need_seed()?),
            Family::ErdosRenyi(n, p) => erdos_renyi(n, p, need_seed()?),
            Family::Example2_9(n) => example_2_9(n),
            Family::Example3_14(a) => example_3_14(a),
            Family::Example6_9(k) => example_6_9(k),
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Grid(r, c) => write!(f, "grid:{r},{c}"),
            Family::RandomTree(n) => write!(f, "random_tree:{n}"),
            Family::ErdosRenyi(n, p) => write!(f, "erdos_renyi:{n},{p}"),
            Family::Example2_9(n) => write!(f, "example_2_9:{n}"),
            Family::Example3_14(a) => write!(f, "example_3_14:{a}"),
            Family::Example6_9(k) => write!(f, "example_6_9:{k}"),
        }
    }
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<GraphSpec> {
        let (name, args) = s.split_once(':').unwrap_or((s, ""));
        let args: Vec<&str> = if args.is_empty() {
            Vec::new()
        } else {
            args.split(',').map(str::trim).collect()
        };
        let bad = || Error::InvalidParams(format!("cannot parse parameters of {s:?}"));
        let int = |i: usize| -> Result<usize> {
            args.get(i).and_then(|a| a.parse().ok()).ok_or_else(bad)
        };
        let arity = |k: usize| -> Result<()> {
            if args.len() == k {
                Ok(())
            } else {
                Err(bad())
            }
        };
        let family = match name.trim() {
            "path" => {
                arity(1)?;
                Family::Path(int(0)?)
            }
            "cycle" => {
                arity(1)?;
                Family::Cycle(int(0)?)
            }
            "complete" => {
                arity(1)?;
                Family::Complete(int(0)?)
            }
            "grid" => {
                arity(2)?;
                Family::Grid(int(0)?, int(1)?)
            }
            "random_tree" => {
                arity(1)?;
                Family::RandomTree(int(0)?)
            }
            "erdos_renyi" => {
                arity(2)?;
                let p: f64 = args[1].parse().map_err(|_| bad())?;
                Family::ErdosRenyi(int(0)?, p)
            }
            "example_2_9" => {
                arity(1)?;
                Family::Example2_9(int(0)?)
            }
            "example_3_14" => {
                arity(1)?;
                Family::Example3_14(int(0)?)
            }
            "example_6_9" | "odd_cycle_wedge" => {
                arity(1)?;
                Family::Example6_9(int(0)?)
            }
            other => return Err(Error::UnknownFamily(other.to_string())),
        };
        Ok(GraphSpec { family })
    }
}

fn at_least(what: &str, value: usize, min: usize) -> Result<()> {
    if value < min {
        return Err(Error::InvalidParams(format!(
            "{what} must be >= {min}, got {value}"
        )));
    }
    Ok(())
}

pub fn path(n: usize) -> Result<Graph> {
    at_least("path length", n, 1)?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    at_least("cycle length", n, 3)?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    at_least("complete graph order", n, 1)?;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// `rows x cols` grid; vertex `(i, j)` has id `i * cols + j`.
pub fn grid(rows: usize, cols: usize) -> Result<Graph> {
    at_least("grid rows", rows, 1)?;
    at_least("grid columns", cols, 1)?;
    let id = |i: usize, j: usize| i * cols + j;
    let mut edges = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            if j + 1 < cols {
                edges.push((id(i, j), id(i, j + 1)));
            }
            if i + 1 < rows {
                edges.push((id(i, j), id(i + 1, j)));
            }
        }
    }
    Graph::from_edges(rows * cols, &edges)
}

pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    at_least("tree order", n, 1)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<_> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    Graph::from_edges(n, &edges)
}

/// `G(n, p)` conditioned on connectivity by resampling.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph> {
    at_least("graph order", n, 1)?;
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::InvalidParams(format!(
            "edge probability must be in (0, 1], got {p}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ER_ATTEMPTS {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        match Graph::from_edges(n, &edges) {
            Ok(g) => return Ok(g),
            Err(Error::Disconnected { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::InvalidParams(format!(
        "no connected G({n}, {p}) sample in {ER_ATTEMPTS} attempts"
    )))
}

/// Rim ids of each cycle of `example_2_9:N`, indexed by `n - 3`.
pub fn example_2_9_rims(big_n: usize) -> Vec<Vec<usize>> {
    let mut next = big_n.saturating_sub(2);
    (3..=big_n)
        .map(|n| {
            let rim: Vec<usize> = (next..next + n).collect();
            next += n;
            rim
        })
        .collect()
}

pub fn example_2_9(big_n: usize) -> Result<Graph> {
    at_least("N", big_n, 3)?;
    let hubs = big_n - 2;
    let mut edges: Vec<_> = (1..hubs).map(|i| (i - 1, i)).collect();
    let rims = example_2_9_rims(big_n);
    for (i, rim) in rims.iter().enumerate() {
        for (j, &x) in rim.iter().enumerate() {
            edges.push((x, rim[(j + 1) % rim.len()]));
            edges.push((i, x));
        }
    }
    let n = hubs + rims.iter().map(Vec::len).sum::<usize>();
    Graph::from_edges(n, &edges)
}

/// The `(a, b)` label of every vertex of `example_3_14:A`, indexed by id.
pub fn example_3_14_labels(big_a: usize) -> Vec<(usize, usize)> {
    let mut labels: Vec<_> = (0..=big_a).map(|a| (a, 0)).collect();
    let mut block = Vec::new();
    let mut n = 1;
    while 4 * n + 1 <= big_a {
        for a in 4 * n + 1..=(4 * n + 3).min(big_a) {
            for b in 1..=n {
                block.push((a, b));
            }
        }
        n += 1;
    }
    block.sort_unstable();
    labels.extend(block);
    labels
}

pub fn example_3_14(big_a: usize) -> Result<Graph> {
    at_least("A", big_a, 5)?;
    let labels = example_3_14_labels(big_a);
    let index: std::collections::HashMap<_, _> =
        labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let mut edges = Vec::new();
    for (i, &(a, b)) in labels.iter().enumerate() {
        for nb in [(a + 1, b), (a, b + 1)] {
            if let Some(&j) = index.get(&nb) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(labels.len(), &edges)
}

/// Ids of the cycle `C_{2k+1}` of `example_6_9`, starting and ending next
/// to the shared vertex `0` (which is not included).
pub fn example_6_9_cycle(k: usize) -> Vec<usize> {
    let start = 1 + k * (k - 1);
    (start..start + 2 * k).collect()
}

pub fn example_6_9(big_k: usize) -> Result<Graph> {
    at_least("K", big_k, 1)?;
    let mut edges = Vec::new();
    for k in 1..=big_k {
        let ring: Vec<usize> = std::iter::once(0).chain(example_6_9_cycle(k)).collect();
        for j in 0..ring.len() {
            edges.push((ring[j], ring[(j + 1) % ring.len()]));
        }
    }
    Graph::from_edges(1 + big_k * (big_k + 1), &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(s: &str) -> Graph {
        GraphSpec::parse(s).unwrap().build(Some(7)).unwrap()
    }

    #[test]
    fn sizes() {
        let c5 = build("cycle:5");
        assert_eq!((c5.n(), c5.edge_count()), (5, 5));
        let w = build("odd_cycle_wedge:2");
        assert_eq!((w.n(), w.edge_count()), (7, 8));
        assert_eq!(build("example_2_9:5").n(), 3 + 3 + 4 + 5);
        assert_eq!(build("example_6_9:4").n(), 21);
        assert_eq!(build("grid:2,4").edge_count(), 10);
        assert_eq!(build("complete:4").edge_count(), 6);
        // 13 base vertices, blocks n=1 (3 vertices) and n=2 (6 vertices)
        assert_eq!(build("example_3_14:12").n(), 22);
    }

    #[test]
    fn example_2_9_structure() {
        let g = build("example_2_9:8");
        let rims = example_2_9_rims(8);
        for (i, rim) in rims.iter().enumerate() {
            assert_eq!(rim.len(), i + 3);
            for &x in rim {
                assert!(g.has_edge(i, x));
                assert_eq!(g.neighbors(x).len(), 3);
            }
        }
        assert!(g.has_edge(0, 1) && !g.has_edge(0, 2));
    }

    #[test]
    fn example_3_14_structure() {
        let labels = example_3_14_labels(12);
        let g = build("example_3_14:12");
        let id = |l| labels.iter().position(|&x| x == l).unwrap();
        assert!(g.has_edge(id((5, 0)), id((5, 1))));
        assert!(g.has_edge(id((9, 1)), id((9, 2))));
        assert!(g.has_edge(id((10, 2)), id((11, 2))));
        assert!(!g.has_edge(id((8, 0)), id((9, 1))));
        assert_eq!(g.dist(id((8, 0)), id((12, 0))), 4);
    }

    #[test]
    fn spec_round_trip_and_errors() {
        for s in ["path:4", "grid:2,3", "erdos_renyi:8,0.3", "example_6_9:3"] {
            assert_eq!(GraphSpec::parse(s).unwrap().to_string(), s);
        }
        assert!(matches!(
            GraphSpec::parse("wheel:5"),
            Err(Error::UnknownFamily(_))
        ));
        assert!(GraphSpec::parse("cycle:2").unwrap().build(None).is_err());
        assert!(GraphSpec::parse("example_3_14:4")
            .unwrap()
            .build(None)
            .is_err());
        assert!(GraphSpec::parse("grid:3").is_err());
        assert!(GraphSpec::parse("erdos_renyi:8,0.0")
            .unwrap()
            .build(Some(1))
            .is_err());
        assert!(GraphSpec::parse("random_tree:8")
            .unwrap()
            .build(None)
            .is_err());
    }

    #[test]
    fn seeded_families_are_reproducible() {
        assert_eq!(build("erdos_renyi:10,0.3"), build("erdos_renyi:10,0.3"));
        assert!(build("random_tree:20").is_tree());
    }
}
