//! Counterexample certificates and their independent re-checking.

use serde::{Deserialize, Serialize};

use crate::bottleneck::{bp_delta, BpWitness, CharacterizationWitness};
use crate::chordality::{ChordalityQuery, Cycle, CycleInfo};
use crate::error::{Error, Result};
use crate::geodesics::{path_hausdorff, GeodesicPath};
use crate::graph::{Graph, Grid};
use crate::hyperbolicity::delta_hat;
use crate::separators::{
    check_neighbor_separation, check_separation, split_sa_sb, NeighborMode, SeparatorCert,
};
use crate::{Caps, Length};

/// Evidence attached to a failing check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A cycle of the queried family and length violating the predicate.
    Cycle {
        cycle: Cycle,
        query: ChordalityQuery,
    },
    /// A minimal separator whose diameter (or smaller split diameter when
    /// `split`) exceeds `bound`.
    Separator {
        cert: SeparatorCert,
        bound: u32,
        split: bool,
    },
    /// A pair, a midpoint and a path avoiding the closed ball around it.
    Bottleneck { witness: BpWitness },
    /// `delta_hat` above a proved bound.
    Hyperbolicity {
        #[serde(with = "crate::serde_length")]
        delta_hat: Length,
        #[serde(with = "crate::serde_length")]
        bound: Length,
        resolution: usize,
    },
    /// Two geodesics with common endpoints, farther apart than `bound`
    /// (or exactly `bound` apart when `strict`).
    Stability {
        first: GeodesicPath,
        second: GeodesicPath,
        #[serde(with = "crate::serde_length")]
        bound: Length,
        strict: bool,
    },
    /// A path from `a` to `b` avoiding `N_r(set)`; a geodesic in
    /// obstructing mode.
    Neighbor {
        a: usize,
        b: usize,
        set: Vec<usize>,
        r: u32,
        mode: NeighborMode,
        path: Vec<usize>,
    },
    /// A geodesic none of whose interior vertices is an N-separator.
    Characterization { witness: CharacterizationWitness },
    /// The reported point-level constant differs from `Δ' + 3/2`.
    BpOffset {
        #[serde(with = "crate::serde_length")]
        delta_prime: Length,
        #[serde(with = "crate::serde_length")]
        delta: Length,
    },
}

/// Re-checks a witness from scratch. `Ok(true)` means the violation is
/// reproduced.
pub fn replay(g: &Graph, w: &Witness) -> Result<bool> {
    match w {
        Witness::Cycle { cycle, query } => {
            let cycle = Cycle::new(g, cycle.vertices().to_vec())?;
            let info = CycleInfo::new(g, &Grid::new(g, 2)?, cycle);
            Ok(info.cycle.len() >= query.k
                && query.family.contains(info.tags)
                && !info.satisfies(query.m, query.rho))
        }
        Witness::Separator { cert, bound, split } => {
            let Some(fresh) = check_separation(g, &cert.set, cert.a, cert.b, cert.r)? else {
                return Ok(false);
            };
            if !fresh.minimal {
                return Ok(false);
            }
            let value = if *split {
                let s = split_sa_sb(g, &fresh)?;
                g.set_diameter(&s.sa).min(g.set_diameter(&s.sb))
            } else {
                fresh.diameter
            };
            Ok(value > *bound)
        }
        Witness::Bottleneck { witness } => replay_bottleneck(g, witness),
        Witness::Hyperbolicity {
            bound, resolution, ..
        } => {
            let r = delta_hat(g, *resolution, &Caps::default())?;
            Ok(r.delta_hat > *bound)
        }
        Witness::Stability {
            first,
            second,
            bound,
            strict,
        } => {
            first.validate(g)?;
            second.validate(g)?;
            let same = first.endpoints == second.endpoints
                || first.endpoints == (second.endpoints.1, second.endpoints.0);
            if !same {
                return Ok(false);
            }
            let h = path_hausdorff(g, first, second);
            Ok(if *strict { h >= *bound } else { h > *bound })
        }
        Witness::Neighbor {
            a,
            b,
            set,
            r,
            mode,
            path,
        } => {
            let ball = g.closed_neighborhood(set, *r);
            let avoids = path.first() == Some(a)
                && path.last() == Some(b)
                && g.is_simple_path(path)
                && path.iter().all(|&v| !ball[v])
                && (*mode == NeighborMode::Separator || path.len() - 1 == g.dist(*a, *b) as usize);
            Ok(avoids && !check_neighbor_separation(g, set, *a, *b, *r, *mode)?.holds)
        }
        Witness::Characterization { witness } => replay_characterization(g, witness),
        Witness::BpOffset { .. } => {
            let r = bp_delta(g);
            Ok(r.delta != r.delta_prime + Length::new(3, 2))
        }
    }
}

fn replay_bottleneck(g: &Graph, w: &BpWitness) -> Result<bool> {
    for p in [&w.v, &w.w, &w.c] {
        p.validate(g)?;
    }
    let d = w.v.distance(g, &w.w);
    let half = d / 2;
    if w.v.distance(g, &w.c) != half
        || w.c.distance(g, &w.w) != half
        || d == Length::from_integer(0)
    {
        return Ok(false);
    }
    if w.path.first() != Some(&w.v) || w.path.last() != Some(&w.w) {
        return Ok(false);
    }
    // walk the path on the 4-grid, expanding whole edges
    let grid = Grid::new(g, 4)?;
    let ids: Option<Vec<usize>> = w.path.iter().map(|p| grid.id(p)).collect();
    let Some(ids) = ids else {
        return Err(Error::InvalidPoint(
            "bottleneck path leaves the quarter grid".into(),
        ));
    };
    let mut walk = vec![ids[0]];
    for pair in ids.windows(2) {
        let (p, q) = (pair[0], pair[1]);
        if grid.graph().has_edge(p, q) {
            walk.push(q);
        } else if let (Some(x), Some(y)) = (grid.point(p).as_vertex(), grid.point(q).as_vertex()) {
            let Some(e) = g.edge_index(x, y) else {
                return Ok(false);
            };
            let mut pts = grid.edge_points(e);
            if pts[0] != p {
                pts.reverse();
            }
            walk.extend(&pts[1..]);
        } else {
            return Ok(false);
        }
    }
    let c = grid
        .id(&w.c)
        .ok_or_else(|| Error::InvalidPoint("midpoint off the quarter grid".into()))?;
    let r4 = w.radius * 4;
    Ok(walk
        .iter()
        .all(|&p| Length::from_integer(grid.dist(c, p) as i64) > r4))
}

fn replay_characterization(g: &Graph, w: &CharacterizationWitness) -> Result<bool> {
    let path = &w.geodesic;
    let (Some(&a), Some(&b)) = (path.first(), path.last()) else {
        return Ok(false);
    };
    if (a, b) != (w.a, w.b) || !g.is_simple_path(path) || path.len() - 1 != g.dist(a, b) as usize {
        return Ok(false);
    }
    if g.dist(a, b) < 2 * w.delta2 + 2 {
        return Ok(false);
    }
    for &c in &path[1..path.len() - 1] {
        let ball = g.closed_neighborhood(&[c], w.delta2);
        if !ball[a] && !ball[b] && g.path_avoiding(a, b, &ball).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bottleneck::bp_check_vertices;
    use crate::chordality::CycleFamily;
    use crate::graph::GraphSpec;
    use crate::len;

    #[test]
    fn replays_round_trip_through_json() {
        let c8 = GraphSpec::parse("cycle:8").unwrap().build(None).unwrap();
        let bp = bp_check_vertices(&c8, len(1, 1)).unwrap().witness.unwrap();
        let cycle = Cycle::new(&c8, (0..8).collect()).unwrap();
        let query = ChordalityQuery {
            k: 8,
            m: None,
            rho: None,
            family: CycleFamily::All,
        };
        let witnesses = [
            Witness::Bottleneck { witness: bp },
            Witness::Cycle { cycle, query },
            Witness::Neighbor {
                a: 0,
                b: 4,
                set: vec![2],
                r: 1,
                mode: NeighborMode::Obstructing,
                path: vec![0, 7, 6, 5, 4],
            },
        ];
        for w in witnesses {
            let back: Witness = serde_json::from_str(&serde_json::to_string(&w).unwrap()).unwrap();
            assert!(replay(&c8, &back).unwrap(), "{back:?}");
        }
        let pass = Witness::Neighbor {
            a: 0,
            b: 4,
            set: vec![2],
            r: 2,
            mode: NeighborMode::Obstructing,
            path: vec![0, 7, 6, 5, 4],
        };
        assert!(!replay(&c8, &pass).unwrap());
    }
}
