//! Shortcuts, density radii and the chordality profile of a graph.
//!
//!     cargo run --example chordality_profile [SPEC]

use chordsep::chordality::{
    density_radius, min_shortcut, shortcut_vertices, Bound, ChordalityProfile, ChordalityQuery,
    Cycle, CycleCatalog, CycleFamily,
};
use chordsep::graph::{example_2_9_rims, GraphSpec};
use chordsep::{len, Caps};

fn main() -> chordsep::Result<()> {
    // the rim of the 7-cycle in the hub example has no 1-shortcut
    let g = GraphSpec::parse("example_2_9:7")?.build(None)?;
    let rim = example_2_9_rims(7)[4].clone();
    let c = Cycle::new(&g, rim.clone())?;
    let s =
        min_shortcut(&g, &c, rim[0], rim[3], true)?.expect("the hub joins any two rim vertices");
    println!("strict shortcut {:?} of length {}", s.path, s.length);
    let xs = shortcut_vertices(&g, &c, 2);
    if let Some(r) = density_radius(&c, &xs)? {
        println!("2-shortcut vertices: {xs:?}, density radius {r}");
    }

    let spec = std::env::args().nth(1).unwrap_or_else(|| "grid:3,4".into());
    let g = GraphSpec::parse(&spec)?.build(Some(3))?;
    let catalog = CycleCatalog::full(&g, &Caps::from_env())?;
    println!(
        "\n{spec}: {} cycles, longest {}",
        catalog.infos.len(),
        catalog.max_len()
    );

    for k in [4, 6] {
        let q = ChordalityQuery {
            k,
            m: Some(1),
            rho: None,
            family: CycleFamily::All,
        };
        println!("({k},1)-chordal: {}", catalog.check(&q)?.status);
    }
    let dense = ChordalityQuery {
        k: 6,
        m: Some(2),
        rho: Some(len(1, 1)),
        family: CycleFamily::Triangles,
    };
    println!(
        "triangles, (6,2) with density radius 1: {}",
        catalog.check(&dense)?.status
    );

    let profile = ChordalityProfile::from_catalog(&catalog);
    for e in profile
        .entries
        .iter()
        .filter(|e| e.family == CycleFamily::All)
    {
        let m = match e.min_m {
            Bound::Finite(m) => m.to_string(),
            Bound::Infinite => "none".into(),
            Bound::Vacuous => "any".into(),
        };
        println!("k = {:>2}: smallest m = {m}", e.k);
    }
    Ok(())
}
