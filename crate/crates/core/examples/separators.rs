//! Minimal vertex separators, r-separators, the sphere construction and
//! neighbourhood separators.
//!
//!     cargo run --example separators

use chordsep::geodesics::GeodesicPath;
use chordsep::graph::GraphSpec;
use chordsep::separators::{
    check_neighbor_separation, enumerate_minimal_ab_separators, separator_diameter_profile,
    sphere_separator, split_sa_sb, Anchors, NeighborMode,
};
use chordsep::Caps;

fn main() -> chordsep::Result<()> {
    let caps = Caps::from_env();
    let g = GraphSpec::parse("grid:3,4")?.build(None)?;

    let list = enumerate_minimal_ab_separators(&g, 0, 11, 1, &caps)?;
    println!(
        "grid 3x4: {} minimal separators between opposite corners",
        list.certs.len()
    );
    for c in list.certs.iter().take(4) {
        println!("  {:?} (diameter {})", c.set, c.diameter);
    }

    let two = enumerate_minimal_ab_separators(&g, 0, 11, 2, &caps)?;
    if let Some(c) = two.certs.first() {
        let split = split_sa_sb(&g, c)?;
        println!(
            "a 2-separator {:?} splits into S_a = {:?}, S_b = {:?}",
            c.set, split.sa, split.sb
        );
    }

    // a sphere around an interior vertex of a geodesic, then minimalized
    let geo = GeodesicPath::from_vertices(&g, &[0, 1, 2, 3, 7, 11])?;
    let sphere = sphere_separator(&g, &geo, Anchors::Single(2))?;
    println!("sphere separator through 2: {:?}", sphere.set);

    for r in 1..=3 {
        let p = separator_diameter_profile(&g, r, &caps)?;
        println!(
            "r = {r}: {} minimal separators, largest diameter {:?}",
            p.separators, p.max_diameter
        );
    }

    let c8 = GraphSpec::parse("cycle:8")?.build(None)?;
    for r in [1, 2] {
        let v = check_neighbor_separation(&c8, &[2], 0, 4, r, NeighborMode::Obstructing)?;
        println!("C_8: N_{r}({{2}}) meets every 0-4 geodesic: {}", v.holds);
    }
    Ok(())
}
