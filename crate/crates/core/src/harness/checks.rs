//! The checks. Each derives the extreme admissible hypothesis parameters
//! from the graph and tests the conclusion they promise.
//!
//! Density bounds of the form "dense for every ε > x" become closed radii
//! `<= x`; bounds "dense with ε = x" become `< x`, i.e. the largest half
//! integer below `x` (density radii are half integers).

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use super::{Analysis, Outcome, Witness};
use crate::bottleneck::{
    bp_check_points_on, bp_check_vertices, neighbor_separator_characterization,
};
use crate::chordality::{strict_to_closed, Bound, ChordalityQuery, CycleCatalog, CycleFamily};
use crate::error::Result;
use crate::geodesics::{dag_paths, StabilityMode, StabilityReport};
use crate::separators::NeighborMode;
use crate::{len, to_f64, Length, Status};

pub(crate) type CheckFn = fn(&Analysis) -> Result<Outcome>;

pub(crate) fn lookup(id: &str) -> Option<CheckFn> {
    let f: CheckFn = match id {
        "prop_2_8" => prop_2_8,
        "thm_2_16" => thm_2_16,
        "thm_2_17" => thm_2_17,
        "thm_2_18" => thm_2_18,
        "cor_2_19" => cor_2_19,
        "cor_2_20" => cor_2_20,
        "prop_3_4" => prop_3_4,
        "thm_3_7_fwd" => thm_3_7_fwd,
        "thm_3_7_bwd" => thm_3_7_bwd,
        "thm_3_11_fwd" => thm_3_11_fwd,
        "thm_3_11_bwd" => thm_3_11_bwd,
        "thm_3_13" => thm_3_13,
        "thm_3_16" => thm_3_16,
        "thm_4_6" => thm_4_6,
        "thm_4_7" => thm_4_7,
        "cor_4_9" => cor_4_9,
        "cor_4_10" => cor_4_10,
        "thm_5_2" => thm_5_2,
        "prop_5_4" => prop_5_4,
        "prop_5_6" => prop_5_6,
        "prop_5_7" => prop_5_7,
        "thm_6_4_fwd" => thm_6_4_fwd,
        "thm_6_4_bwd" => thm_6_4_bwd,
        "prop_6_6" => prop_6_6,
        "prop_6_7" => prop_6_7,
        "thm_6_8_fwd" => thm_6_8_fwd,
        "thm_6_8_bwd" => thm_6_8_bwd,
        "prop_6_10" => prop_6_10,
        _ => return None,
    };
    Some(f)
}

// ---- outcome plumbing ----

impl Outcome {
    fn param(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.params.insert(
            key.to_string(),
            serde_json::to_value(value).expect("serializable"),
        );
        self
    }

    fn length(&mut self, key: &str, value: Length) -> &mut Self {
        self.param(key, to_f64(value))
    }

    fn note(&mut self, note: &str) {
        self.note.get_or_insert_with(|| note.to_string());
    }

    fn vacuous(mut self, note: &str) -> Result<Outcome> {
        self.merge(Status::Vacuous, None);
        self.note(note);
        Ok(self)
    }

    fn inconclusive(mut self, note: &str) -> Result<Outcome> {
        self.merge(Status::Inconclusive, None);
        self.note(note);
        Ok(self)
    }

    /// Folds in one more verdict: fail beats inconclusive beats pass beats
    /// vacuous. The first failing witness is kept.
    fn merge(&mut self, s: Status, w: Option<Witness>) {
        let rank = |s: Status| match s {
            Status::Vacuous => 0,
            Status::Pass => 1,
            Status::Inconclusive => 2,
            Status::Fail => 3,
        };
        if self.status.map_or(true, |cur| rank(s) > rank(cur)) {
            self.status = Some(s);
        }
        if s == Status::Fail && self.witness.is_none() {
            self.witness = w;
        }
    }
}

// ---- shared derivations ----

/// Smallest `k` with a non-vacuous `(k, 1)`-chordality pass.
fn k_star(cat: &CycleCatalog) -> Option<usize> {
    (4..=cat.max_len()).find(|&k| matches!(cat.min_m(k, CycleFamily::All), Bound::Finite(1)))
}

/// All `(k, m, ρ*)` with a non-vacuous densely chordal pass on `family`,
/// where `ρ*` is the smallest closed density radius.
fn passing_triples(cat: &CycleCatalog, family: CycleFamily) -> Vec<(usize, usize, Length)> {
    let mut out = Vec::new();
    for k in 4..=cat.max_len() {
        for m in 1..=k / 2 {
            if let Bound::Finite(rho) = cat.min_rho(k, m, family) {
                out.push((k, m, rho));
            }
        }
    }
    out
}

/// The triple minimising `bound`.
fn best_triple(
    triples: &[(usize, usize, Length)],
    bound: impl Fn(usize, usize, Length) -> Length,
) -> Option<((usize, usize, Length), Length)> {
    triples
        .iter()
        .map(|&(k, m, rho)| ((k, m, rho), bound(k, m, rho)))
        .min_by(|x, y| x.1.cmp(&y.1))
}

fn lint(x: usize) -> Length {
    Length::from_integer(x as i64)
}

fn floor_len(x: Length) -> usize {
    x.floor().to_integer().max(0) as usize
}

fn ceil_len(x: Length) -> usize {
    x.ceil().to_integer().max(0) as usize
}

/// Evaluates a chordality query on the catalog.
fn chordal(out: &mut Outcome, cat: &CycleCatalog, q: ChordalityQuery) -> Result<()> {
    let v = cat.check(&q)?;
    let w = v.witness.map(|cycle| Witness::Cycle { cycle, query: q });
    out.merge(v.status, w);
    if v.status == Status::Inconclusive {
        out.note("cycle enumeration truncated");
    }
    Ok(())
}

/// A query whose shortcut bound is `m = 0`: no qualifying cycle may exist.
fn no_cycles(out: &mut Outcome, cat: &CycleCatalog, k: usize, rho: Length, family: CycleFamily) {
    let first = cat
        .infos
        .iter()
        .find(|i| i.cycle.len() >= k && family.contains(i.tags));
    match first {
        Some(info) => {
            let query = ChordalityQuery {
                k,
                m: Some(0),
                rho: Some(rho),
                family,
            };
            out.merge(
                Status::Fail,
                Some(Witness::Cycle {
                    cycle: info.cycle.clone(),
                    query,
                }),
            );
        }
        None if cat.truncated => out.merge(Status::Inconclusive, None),
        None => out.merge(Status::Vacuous, None),
    }
}

/// `delta_hat <= bound`.
fn hyperbolic_within(out: &mut Outcome, a: &Analysis, bound: Length) -> Result<()> {
    let h = a.hyperbolicity()?;
    out.length("delta_hat", h.delta_hat)
        .length("delta_bound", bound);
    if h.delta_hat > bound {
        let w = Witness::Hyperbolicity {
            delta_hat: h.delta_hat,
            bound,
            resolution: h.resolution,
        };
        out.merge(Status::Fail, Some(w));
    } else if !h.complete {
        out.merge(Status::Inconclusive, None);
        out.note("triangle enumeration truncated");
    } else {
        out.merge(Status::Pass, None);
    }
    Ok(())
}

/// Point-level bottleneck property at `delta` (a multiple of 1/4).
fn point_bp(out: &mut Outcome, a: &Analysis, delta: Length) -> Result<()> {
    out.length("bp_delta", delta);
    let v = bp_check_points_on(a.grid4(), delta)?;
    let status = if v.holds { Status::Pass } else { Status::Fail };
    out.merge(
        status,
        v.witness.map(|witness| Witness::Bottleneck { witness }),
    );
    Ok(())
}

/// Stability constant `R <= bound` (or `< bound` when `strict`).
fn stable_within(out: &mut Outcome, rep: &StabilityReport, bound: Length, strict: bool) {
    out.length("stability_bound", bound);
    let bad = if strict {
        rep.r >= bound
    } else {
        rep.r > bound
    };
    if bad {
        let (first, second) = rep
            .witness
            .clone()
            .expect("a positive constant has a witness");
        out.merge(
            Status::Fail,
            Some(Witness::Stability {
                first,
                second,
                bound,
                strict,
            }),
        );
    } else if rep.caps_hit {
        out.merge(Status::Inconclusive, None);
        out.note("geodesic enumeration truncated");
    } else {
        out.merge(Status::Pass, None);
    }
}

/// Scan over vertex pairs `a < b` with `d(a, b) >= min_d`, their geodesics,
/// and the subsegments of `s` edges whose ends are at distance `>= margin`
/// from `a` and `b`: does `N_r(segment)` separate (or obstruct) `a` from `b`?
/// With `s = 0` the segments are the interval vertices, enumerated without
/// listing geodesics.
struct Scan {
    tested: usize,
    truncated: bool,
    witness: Option<Witness>,
}

fn segment_scan(a: &Analysis, min_d: u32, margin: u32, s: u32, r: u32, mode: NeighborMode) -> Scan {
    let g = a.g;
    let n = g.n();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .filter(|&(x, y)| {
            let d = g.dist(x, y);
            d >= min_d && d >= 2 * margin + s
        })
        .collect();
    let per_pair: Vec<Scan> = pairs
        .par_iter()
        .map(|&(x, y)| {
            let d = g.dist(x, y);
            let mut scan = Scan {
                tested: 0,
                truncated: false,
                witness: None,
            };
            let segments: Vec<Vec<usize>> = if s == 0 {
                (0..n)
                    .filter(|&v| {
                        g.dist(x, v) + g.dist(v, y) == d && g.dist(x, v).min(g.dist(v, y)) >= margin
                    })
                    .map(|v| vec![v])
                    .collect()
            } else {
                let (paths, truncated) = dag_paths(g, x, y, a.caps.geodesics);
                scan.truncated = truncated;
                let mut seen = HashSet::new();
                for p in &paths {
                    for i in margin as usize..=(d - margin - s) as usize {
                        let seg = p[i..=i + s as usize].to_vec();
                        seen.insert(seg);
                    }
                }
                let mut segs: Vec<Vec<usize>> = seen.into_iter().collect();
                segs.sort();
                segs
            };
            for seg in segments {
                scan.tested += 1;
                let ball = g.closed_neighborhood(&seg, r);
                if ball[x] || ball[y] {
                    continue;
                }
                let path = g.path_avoiding(x, y, &ball);
                let bad = match mode {
                    NeighborMode::Separator => path,
                    NeighborMode::Obstructing => path.filter(|p| p.len() - 1 == d as usize),
                };
                if let Some(path) = bad {
                    scan.witness = Some(Witness::Neighbor {
                        a: x,
                        b: y,
                        set: seg,
                        r,
                        mode,
                        path,
                    });
                    break;
                }
            }
            scan
        })
        .collect();
    let mut out = Scan {
        tested: 0,
        truncated: false,
        witness: None,
    };
    for s in per_pair {
        out.tested += s.tested;
        out.truncated |= s.truncated;
        if out.witness.is_none() {
            out.witness = s.witness;
        }
    }
    out
}

fn merge_scan(out: &mut Outcome, scan: Scan) {
    if scan.witness.is_some() {
        out.merge(Status::Fail, scan.witness);
    } else if scan.truncated {
        out.merge(Status::Inconclusive, None);
        out.note("geodesic enumeration truncated");
    } else if scan.tested == 0 {
        out.merge(Status::Vacuous, None);
    } else {
        out.merge(Status::Pass, None);
    }
}

/// Largest minimal-separator diameter, guarded for the `m >= 1` theorems.
fn separator_m(out: &mut Outcome, a: &Analysis) -> Result<Option<usize>> {
    let p = a.separators(1)?;
    match p.max_diameter {
        None => {
            out.note("no minimal vertex separator");
            Ok(None)
        }
        Some(0) => {
            out.param("m", 0);
            out.note("m = 0 violates k >= 2m, k >= 4");
            Ok(None)
        }
        Some(m) => {
            out.param("m", m);
            Ok(Some(m as usize))
        }
    }
}

// ---- section 2: separators and chordality ----

fn prop_2_8(a: &Analysis) -> Result<Outcome> {
    let mut out = Outcome::default();
    let cat = a.catalog()?;
    if cat.truncated {
        return out.inconclusive("cycle enumeration truncated");
    }
    let Some(k) = k_star(cat) else {
        return out.vacuous("no k with a non-vacuous (k,1)-chordality pass");
    };
    out.param("k", k);
    let p = a.separators(1)?;
    let Some(d) = p.max_diameter else {
        return out.vacuous("no minimal vertex separator");
    };
    out.param("max_separator_diameter", d);
    if 2 * d as usize >= k {
        let cert = p.witness.clone().expect("diameter has a witness");
        out.merge(
            Status::Fail,
            Some(Witness::Separator {
                cert,
                bound: (k as u32 - 1) / 2,
                split: false,
            }),
        );
    } else {
        out.merge(Status::Pass, None);
    }
    Ok(out)
}

fn thm_2_16(a: &Analysis) -> Result<Outcome> {
    let mut out = Outcome::default();
    let Some(m) = separator_m(&mut out, a)? else {
        return out.vacuous("no admissible m");
    };
    let q = ChordalityQuery {
        k: 4 * m,
        m: Some(2 * m - 1),
        rho: Some(lint(m) + len(1, 2)),
        family: CycleFamily::All,
    };
    out.param("query", q);
    chordal(&mut out, a.catalog()?, q)?;
    Ok(out)
}

fn thm_2_17(a: &Analysis) -> Result<Outcome> {
    let mut out = Outcome::default();
    let Some(m) = separator_m(&mut out, a)? else {
        return out.vacuous("no admissible m");
    };
    let q = ChordalityQuery {
        k: 2 * m + 2,
        m: Some(m),
        rho: Some(lint(m) + len(1, 2)),
        family: CycleFamily::All,
    };
    out.param("query", q);
    chordal(&mut out, a.catalog()?, q)?;
    Ok(out)
}

/// `delta_hat` against the best `max{k/4, ρ + m}` over passes on `family`.
fn hyperbolicity_from_chordality(a: &Analysis, family: CycleFamily) -> Result<Outcome> {
    let mut out = Outcome::default();
    let cat = a.catalog()?;
    if cat.truncated {
        return out.inconclusive("cycle enumeration truncated");
    }
    let triples = passing_triples(cat, family);
    let Some(((k, m, rho), bound)) =
        best_triple(&triples, |k, m, rho| (len(k as i64, 4)).max(rho + lint(m)))
    else {
        return out.vacuous("no non-vacuous densely chordal pass");
    };
    out.param("k", k).param("m", m).length("rho", rho);
    hyperbolic_within(&mut out, a, bound)?;
    Ok(out)
}

fn thm_2_18(a: &Analysis) -> Result<Outcome> {
    hyperbolicity_from_chordality(a, CycleFamily::All)
}

fn cor_2_19(a: &Analysis) -> Result<Outcome> {
    let mut out = Outcome::default();
    let Some(m) = separator_m(&mut out, a)? else {
        return out.vacuous("no admissible m");
    };
    hyperbolic_within(&mut out, a, lint(3 * m) - len(1, 2))?;
    Ok(out)
}

fn cor_2_20(a: &Analysis) -> Result<Outcome> {
    let mut out = Outcome::default();
    let Some(m) = separator_m(&mut out, a)? else {
        return out.vacuous("no admissible m");
    };
    hyperbolic_within(&mut out, a, lint(2 * m) + len(1, 2))?;
    Ok(out)
}

// ---- section 3: bottleneck property ----

fn prop_3_4(a: &Analysis) -> Result<Outcome> {
    let mut out = Outcome::default();
    let bp = a.bp();
    out.length("delta_prime", bp.delta_prime);
    if bp.delta != bp.delta_prime + len(3, 2) {
        let w = Witness::BpOffset {
            delta_prime: bp.delta_prime,
            delta: bp.delta,
        };
        out.merge(Status::Fail, Some(w));
        return Ok(out);
    }
    point_bp(&mut out, a, bp.delta)?;
    Ok(out)
}

fn thm_3_7_fwd(a: &Analysis) -> Result<Outcome> {
    let mut out = Outcome::default();
    let d = ceil_len(a.bp().delta);
    out.param("delta", d);
    let q = ChordalityQuery {
        k: 4 * d + 4,
        m: Some(2 * d + 1),
        rho: Some(lint(d) + len(3, 2)),
        family: CycleFamily::All,
    };
    out.param("query", q);
    chordal(&mut out, a.catalog()?, q)?;
    Ok(out)
}

fn thm_3_7_bwd(a: &Analysis) -> Result<Outcome> {
    let mut out = Outcome::default();
    let cat = a.catalog()?;
    if cat.truncated {
        return out.inconclusive("cycle enumeration truncated");
    }
    let triples = passing_triples(cat, CycleFamily::All);
    let Some(((k, m, rho), delta)) =
        best_triple(&triples, |k, m, rho| len(k as i64, 4).max(rho + lint(m)))
    else {
        return out.vacuous("no non-vacuous densely chordal pass");
    };
    out.param("k", k).param("m", m).length("rho", rho);
    point_bp(&mut out, a, delta)?;
    Ok(out)
}

fn thm_3_11_fwd(a: &Analysis) -> Result<Outcome> {
    let mut out = Outcome::default();
    let h = a.hyperbolicity()?;
    if !h.complete {
        return out.inconclusive("triangle enumeration truncated");
    }
    let delta = h.delta_hat;
    out.length("delta", delta);
    if delta == Length::from_integer(0) {
        return out.vacuous("delta = 0");
    }
    let k = ceil_len(delta * 9);
    let m = floor_len(delta);
    let rho = strict_to_closed(delta * 3 + 1);
    out.param("k", k).param("m", m).length("rho", rho);
    if k < 4 {
        return out.vacuous("k < 4");
    }
    let cat = a.catalog()?;
    if m == 0 {
        no_cycles(&mut out, cat, k, rho, CycleFamily::Triangles);
    } else {
        chordal(
            &mut out,
            cat,
            ChordalityQuery {
                k,
                m: Some(m),
                rho: Some(rho),
                family: CycleFamily::Triangles,
            },
        )?;
    }
    Ok(out)
}

fn thm_3_11_bwd(a: &Analysis) -> Result<Outcome> {
    hyperbolicity_from_chordality(a, CycleFamily::Triangles)
}

fn thm_3_13(a: &Analysis) -> Result<Outcome> {
    let mut out = Outcome::default();
    let Some(m) = a.separators(1)?.max_diameter else {
        return out.vacuous("no minimal vertex separator");
    };
    out.param("m", m);
    point_bp(&mut out, a, Length::from_integer(m as i64 + 2))?;
    Ok(out)
}

fn thm_3_16(a: &Analysis) -> Result<Outcome> {
    let mut out = Outcome::default();
    let cat = a.catalog()?;
    if cat.truncated {
        return out.inconclusive("cycle enumeration truncated");
    }
    let Some(k) = k_star(cat) else {
        return out.vacuous("no k with a non-vacuous (k,1)-chordality pass");
    };
    out.param("k", k);
    point_bp(&mut out, a, len(k as i64, 4) + len(5, 2))?;
    Ok(out)
}

// ---- section 4: r-separators ----

/// Runs `f(r, m)` for `r` in {2, 3}, where `m` is the largest diameter
/// (`split`: the largest smaller side) of a minimal r-separator.
fn for_r_separators(
    a: &Analysis,
    split: bool,
    mut f: impl FnMut(&mut Outcome, u32, usize) -> Result<()>,
) -> Result<Outcome> {
    let mut out = Outcome::default();
    for r in [2u32, 3] {
        let p = a.separators(r)?;
        if p.truncated {
            out.merge(Status::Inconclusive, None);
            out.note("separator search budget exhausted");
            continue;
        }
        let m = if split {
            p.max_split_diameter
        } else {
            p.max_diameter
        }
        .unwrap_or(0) as usize;
        out.param(&format!("m_{r}"), m);
        f(&mut out, r, m)?;
    }
    Ok(out)
}

fn thm_4_6(a: &Analysis) -> Result<Outcome> {
    let cat = a.catalog()?;
    for_r_separators(a, false, |out, r, m| {
        if m > r as usize {
            out.merge(Status::Vacuous, None);
            return Ok(());
        }
        let r = r as usize;
        let q = ChordalityQuery {
            k: 2 * r + 2,
            m: Some(r),
            rho: Some(lint(r)),
            family: CycleFamily::All,
        };
        chordal(out, cat, q)
    })
}

fn thm_4_7(a: &Analysis) -> Result<Outcome> {
    let cat = a.catalog()?;
    for_r_separators(a, true, |out, r, m| {
        let k = 2 * m + 2 * r as usize + 2;
        let eps = (len(m as i64 + 1, 2) + lint(r as usize)).max(lint(m) + len(1, 2));
        let q = ChordalityQuery {
            k,
            m: Some(k / 2),
            rho: Some(strict_to_closed(eps)),
            family: CycleFamily::All,
        };
        chordal(out, cat, q)
    })
}

fn cor_4_9(a: &Analysis) -> Result<Outcome> {
    for_r_separators(a, false, |out, r, m| {
        if m > r as usize {
            out.merge(Status::Vacuous, None);
            return Ok(());
        }
        hyperbolic_within(out, a, Length::from_integer(2 * r as i64) + len(1, 2))
    })
}

fn cor_4_10(a: &Analysis) -> Result<Outcome> {
    for_r_separators(a, true, |out, r, m| {
        let (m, r) = (m as i64, r as i64);
        let bound = (len(3 * m + 3, 2) + 2 * r).max(Length::from_integer(2 * m + r) + len(3, 2));
        hyperbolic_within(out, a, bound)
    })
}

// ---- section 5: neighbor separators ----

fn thm_5_2(a: &Analysis) -> Result<Outcome> {
    let mut out = Outcome::default();
    let g = a.g;
    let bp = a.bp();
    // BP on vertices at Δ' gives the characterization at ⌈Δ' + 1/2⌉
    let fwd = ceil_len(bp.delta_prime + len(1, 2)).max(1) as u32;
    out.param("forward_delta2", fwd);
    let v = neighbor_separator_characterization(g, fwd)?;
    let status = match (v.holds, v.vacuous) {
        (false, _) => Status::Fail,
        (true, true) => Status::Vacuous,
        (true, false) => Status::Pass,
    };
    out.merge(
        status,
        v.witness
            .map(|witness| Witness::Characterization { witness }),
    );
    // smallest Δ'' with the characterization gives BP at 2Δ'' (vertices)
    // and 2Δ'' + 3/2 (points)
    let (d2, vac) = (1..)
        .find_map(|d| {
            let v = neighbor_separator_characterization(g, d).expect("d >= 1");
            v.holds.then_some((d, v.vacuous))
        })
        .expect("holds once pairs are too close");
    out.param("backward_delta2", d2);
    if vac {
        out.merge(Status::Vacuous, None);
        return Ok(out);
    }
    let dp = Length::from_integer(2 * d2 as i64);
    if bp.delta_prime > dp {
        let w = bp_check_vertices(g, dp)?
            .witness
            .map(|witness| Witness::Bottleneck { witness });
        out.merge(Status::Fail, w);
    }
    point_bp(&mut out, a, dp + len(3, 2))?;
    Ok(out)
}

fn prop_5_4(a: &Analysis) -> Result<Outcome> {
    let mut out = Outcome::default();
    let cat = a.catalog()?;
    if cat.truncated {
        return out.inconclusive("cycle enumeration truncated");
    }
    let Some(k) = k_star(cat) else {
        return out.vacuous("no k with a non-vacuous (k,1)-chordality pass");
    };
    let k = k as u32;
    out.param("k", k);
    // d(a,b) >= k/2 + 2, ends 2 away from a and b, d(a',b') >= k/2 - 2
    let scan = segment_scan(
        a,
        (k + 1) / 2 + 2,
        2,
        (k - 3) / 2,
        1,
        NeighborMode::Separator,
    );
    merge_scan(&mut out, scan);
    Ok(out)
}

fn prop_5_6(a: &Analysis) -> Result<Outcome> {
    let mut out = Outcome::default();
    let cat = a.catalog()?;
    if cat.truncated {
        return out.inconclusive("cycle enumeration truncated");
    }
    let Some(k) = k_star(cat) else {
        return out.vacuous("no k with a non-vacuous (k,1)-chordality pass");
    };
    out.param("k", k);
    let g = a.g;
    let cap = a.caps.chordal_paths;
    let per_start: Vec<Scan> = (0..g.n())
        .into_par_iter()
        .map(|start| {
            let mut scan = Scan {
                tested: 0,
                truncated: false,
                witness: None,
            };
            // induced paths from `start`, depth first
            let mut path = vec![start];
            let mut on_path = vec![false; g.n()];
            on_path[start] = true;
            let mut stack: Vec<usize> = vec![0];
            let mut visited = 0usize;
            while let Some(&idx) = stack.last() {
                let last = *path.last().unwrap();
                let nbrs = g.neighbors(last);
                if idx >= nbrs.len() || scan.witness.is_some() {
                    stack.pop();
                    on_path[path.pop().unwrap()] = false;
                    continue;
                }
                *stack.last_mut().unwrap() += 1;
                let w = nbrs[idx];
                // induced: w is adjacent to no path vertex but the last
                if on_path[w] || path[..path.len() - 1].iter().any(|&u| g.has_edge(u, w)) {
                    continue;
                }
                visited += 1;
                if visited > cap {
                    scan.truncated = true;
                    break;
                }
                path.push(w);
                on_path[w] = true;
                stack.push(0);
                let l = path.len() - 1;
                if l >= k && start < w {
                    // σ' = σ[i..=i+k-4] with both ends 2 away from the ends of σ
                    let s = k - 4;
                    for i in 2..=(l - 2).saturating_sub(s) {
                        scan.tested += 1;
                        let seg = path[i..=i + s].to_vec();
                        let ball = g.closed_neighborhood(&seg, 1);
                        if let Some(p) = g.path_avoiding(start, w, &ball) {
                            scan.witness = Some(Witness::Neighbor {
                                a: start,
                                b: w,
                                set: seg,
                                r: 1,
                                mode: NeighborMode::Separator,
                                path: p,
                            });
                            break;
                        }
                    }
                }
            }
            scan
        })
        .collect();
    let mut total = Scan {
        tested: 0,
        truncated: false,
        witness: None,
    };
    for s in per_start {
        total.tested += s.tested;
        total.truncated |= s.truncated;
        if total.witness.is_none() {
            total.witness = s.witness;
        }
    }
    if total.truncated && total.witness.is_none() {
        out.note("induced path enumeration truncated");
    }
    merge_scan(&mut out, total);
    Ok(out)
}

fn prop_5_7(a: &Analysis) -> Result<Outcome> {
    let mut out = Outcome::default();
    let cat = a.catalog()?;
    let diam = a.g.diameter();
    let mut found = Vec::new();
    let mut m = 1u32;
    while 4 * m + 2 <= diam {
        for k in 4 * m..=diam - 2 {
            let scan = segment_scan(a, k + 2, m + 1, k - 2 * m, m, NeighborMode::Separator);
            if scan.truncated {
                out.merge(Status::Inconclusive, None);
                out.note("geodesic enumeration truncated");
                break;
            }
            if scan.tested == 0 {
                break;
            }
            if scan.witness.is_none() {
                let k = k as usize;
                let q = ChordalityQuery {
                    k: 2 * k + 4,
                    m: Some(k + 1),
                    rho: Some(len(k as i64 + 3, 2)),
                    family: CycleFamily::All,
                };
                found.push((m, k));
                chordal(&mut out, cat, q)?;
                break;
            }
        }
        m += 1;
    }
    out.param("hypotheses", &found);
    if found.is_empty() {
        out.merge(Status::Vacuous, None);
        out.note("no (k, m) with a non-vacuous separator hypothesis");
    }
    Ok(out)
}

// ---- section 6: stability and obstructors ----

/// `R = m`-style derivation shared by the forward stability theorems.
fn chordality_from_stability(
    a: &Analysis,
    mode: StabilityMode,
    family: CycleFamily,
) -> Result<Outcome> {
    let mut out = Outcome::default();
    let rep = a.stability(mode);
    if rep.caps_hit {
        return out.inconclusive("geodesic enumeration truncated");
    }
    let r = rep.r;
    let k = ceil_len(r * 4 + 4);
    let m = floor_len(r);
    let rho = strict_to_closed(r * 2 + 1);
    out.length("R", r)
        .param("k", k)
        .param("m", m)
        .length("rho", rho);
    let cat = a.catalog()?;
    if m == 0 {
        no_cycles(&mut out, cat, k, rho, family);
    } else {
        chordal(
            &mut out,
            cat,
            ChordalityQuery {
                k,
                m: Some(m),
                rho: Some(rho),
                family,
            },
        )?;
    }
    Ok(out)
}

fn stability_from_chordality(
    a: &Analysis,
    mode: StabilityMode,
    family: CycleFamily,
    bound: impl Fn(usize, usize, Length) -> Length,
) -> Result<Outcome> {
    let mut out = Outcome::default();
    let cat = a.catalog()?;
    if cat.truncated {
        return out.inconclusive("cycle enumeration truncated");
    }
    let triples = passing_triples(cat, family);
    let Some(((k, m, rho), b)) = best_triple(&triples, bound) else {
        return out.vacuous("no non-vacuous densely chordal pass");
    };
    out.param("k", k).param("m", m).length("rho", rho);
    let rep = a.stability(mode);
    out.length("R", rep.r);
    stable_within(&mut out, rep, b, false);
    Ok(out)
}

fn thm_6_4_fwd(a: &Analysis) -> Result<Outcome> {
    chordality_from_stability(a, StabilityMode::GridPoints, CycleFamily::Bigons)
}

fn thm_6_4_bwd(a: &Analysis) -> Result<Outcome> {
    stability_from_chordality(
        a,
        StabilityMode::GridPoints,
        CycleFamily::Bigons,
        |k, m, rho| len(k as i64, 2).max(rho + lint(m)),
    )
}

fn thm_6_8_fwd(a: &Analysis) -> Result<Outcome> {
    chordality_from_stability(a, StabilityMode::Vertices, CycleFamily::VertexBigons)
}

fn thm_6_8_bwd(a: &Analysis) -> Result<Outcome> {
    stability_from_chordality(
        a,
        StabilityMode::Vertices,
        CycleFamily::VertexBigons,
        |k, _, rho| rho.max(len(k as i64, 4)) + 2,
    )
}

fn prop_6_6(a: &Analysis) -> Result<Outcome> {
    let mut out = Outcome::default();
    let rep = a.stability(StabilityMode::Vertices);
    if rep.caps_hit {
        return out.inconclusive("geodesic enumeration truncated");
    }
    // stable with R: interior vertices farther than ⌈R⌉ from the ends obstruct
    let k = ceil_len(rep.r) as u32;
    out.length("R", rep.r).param("forward_k", k);
    merge_scan(
        &mut out,
        segment_scan(a, 2 * k + 2, k + 1, 0, k, NeighborMode::Obstructing),
    );
    // the smallest k with obstructing vertices bounds R below k + 1
    let (k, scan) = (0..)
        .map(|k| {
            (
                k,
                segment_scan(a, 2 * k + 2, k + 1, 0, k, NeighborMode::Obstructing),
            )
        })
        .find(|(_, s)| s.witness.is_none())
        .expect("vacuous once pairs are too close");
    out.param("backward_k", k);
    if scan.tested == 0 {
        out.merge(Status::Vacuous, None);
    }
    stable_within(&mut out, rep, Length::from_integer(k as i64 + 1), true);
    Ok(out)
}

fn prop_6_7(a: &Analysis) -> Result<Outcome> {
    let mut out = Outcome::default();
    let cat = a.catalog()?;
    if cat.truncated {
        return out.inconclusive("cycle enumeration truncated");
    }
    // smallest k with a (k/4)-dense (k, m) pass on vertex bigons
    let hit = (4..=cat.max_len()).find_map(|k| {
        (1..=k / 2).find_map(|m| match cat.min_rho(k, m, CycleFamily::VertexBigons) {
            Bound::Finite(rho) if rho < len(k as i64, 4) => Some((k, m, rho)),
            _ => None,
        })
    });
    let Some((k, m, rho)) = hit else {
        return out.vacuous("no non-vacuous (k/4)-dense pass on vertex bigons");
    };
    out.param("k", k).param("m", m).length("rho", rho);
    let k = k as u32;
    merge_scan(
        &mut out,
        segment_scan(
            a,
            (k + 1) / 2 + 4,
            (k + 7) / 4,
            0,
            k,
            NeighborMode::Obstructing,
        ),
    );
    Ok(out)
}

fn prop_6_10(a: &Analysis) -> Result<Outcome> {
    let mut out = Outcome::default();
    let cat = a.catalog()?;
    if cat.truncated {
        return out.inconclusive("cycle enumeration truncated");
    }
    let mut found = Vec::new();
    for m in 1..=cat.max_len() / 4 {
        let hit = (4 * m + 1..=cat.max_len()).find(|&k| {
            match cat.min_rho(k, m, CycleFamily::VertexBigons) {
                Bound::Finite(rho) => rho < len(k as i64, 4) - lint(m),
                _ => false,
            }
        });
        let Some(k) = hit else { continue };
        found.push((m, k));
        let (k, m) = (k as u32, m as u32);
        merge_scan(
            &mut out,
            segment_scan(
                a,
                (k + 1) / 2 + 2,
                m + 1,
                (k + 1) / 2 - 2 * m,
                m,
                NeighborMode::Obstructing,
            ),
        );
    }
    out.param("hypotheses", &found);
    if found.is_empty() {
        return out.vacuous("no non-vacuous (k/4 - m)-dense pass on vertex bigons");
    }
    Ok(out)
}
