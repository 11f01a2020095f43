//! Enumerate geodesics between points, compare them in the Hausdorff
//! metric, and compute the geodesic stability constant.
//!
//!     cargo run --example geodesics_and_stability

use chordsep::geodesics::{
    count_geodesics, enumerate_geodesics, path_hausdorff, stability_constant, StabilityMode,
};
use chordsep::graph::GraphSpec;
use chordsep::{Caps, PointRef};

fn main() -> chordsep::Result<()> {
    let grid = GraphSpec::parse("grid:3,3")?.build(None)?;
    println!(
        "grid 3x3: {} geodesics between opposite corners",
        count_geodesics(&grid, 0, 8)
    );

    let c6 = GraphSpec::parse("cycle:6")?.build(None)?;
    let geos = enumerate_geodesics(&c6, &PointRef::Vertex(0), &PointRef::Vertex(3), 16)?;
    for p in &geos.paths {
        println!("C_6 geodesic 0 -> 3: {:?}", p.vertices());
    }
    println!(
        "their Hausdorff distance: {}",
        path_hausdorff(&c6, &geos.paths[0], &geos.paths[1])
    );

    // geodesics may start or end inside an edge
    let c5 = GraphSpec::parse("cycle:5")?.build(None)?;
    let to_mid = enumerate_geodesics(&c5, &PointRef::Vertex(0), &PointRef::midpoint(2, 3), 16)?;
    println!(
        "C_5: {} geodesics from 0 to the middle of 2-3, length {}",
        to_mid.paths.len(),
        to_mid.paths[0].length
    );

    let cap = Caps::from_env().geodesics;
    for spec in [
        "cycle:6",
        "cycle:7",
        "grid:3,3",
        "odd_cycle_wedge:3",
        "random_tree:15",
    ] {
        let g = GraphSpec::parse(spec)?.build(Some(2))?;
        let v = stability_constant(&g, StabilityMode::Vertices, cap);
        let p = stability_constant(&g, StabilityMode::GridPoints, cap);
        println!("{spec:<18} R(vertices) = {:<4} R(points) = {}", v.r, p.r);
    }
    Ok(())
}
