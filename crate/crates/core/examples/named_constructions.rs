//! The three named constructions: a hub path with wheels, a staircase of
//! growing blocks, and odd cycles wedged at a vertex.
//!
//!     cargo run --example named_constructions

use chordsep::bottleneck::bp_delta;
use chordsep::chordality::{CycleCatalog, CycleFamily};
use chordsep::geodesics::{enumerate_geodesics, path_hausdorff, stability_constant, StabilityMode};
use chordsep::graph::{example_3_14_labels, example_6_9_cycle, GraphSpec};
use chordsep::separators::{check_separation, separator_diameter_profile};
use chordsep::{Caps, PointRef};

fn main() -> chordsep::Result<()> {
    let caps = Caps::from_env();

    // wheels C_3..C_8 hanging off a hub path
    let g = GraphSpec::parse("example_2_9:8")?.build(None)?;
    let catalog = CycleCatalog::full(&g, &caps)?;
    for k in [4, 8, 9] {
        match catalog.min_m(k, CycleFamily::All).finite() {
            Some(m) => {
                println!("example_2_9:8 cycles of length >= {k} have shortcuts of length <= {m}")
            }
            None => println!("example_2_9:8 some cycle of length >= {k} has no shortcut"),
        }
    }
    let p = separator_diameter_profile(&g, 1, &caps)?;
    println!(
        "largest minimal separator diameter {:?}, e.g. {:?}",
        p.max_diameter,
        p.witness.map(|c| c.set)
    );

    // columns (4n+2, 0..=n) separate (4n, 0) from (4n+4, 0)
    let big_a = 16;
    let g = GraphSpec::parse(&format!("example_3_14:{big_a}"))?.build(None)?;
    let labels = example_3_14_labels(big_a);
    let id = |l: (usize, usize)| labels.iter().position(|&x| x == l).expect("label exists");
    for n in 1..=3 {
        let set: Vec<usize> = (0..=n).map(|j| id((4 * n + 2, j))).collect();
        let cert =
            check_separation(&g, &set, id((4 * n, 0)), id((4 * n + 4, 0)), 1)?.expect("separates");
        println!(
            "example_3_14:{big_a} n = {n}: minimal {} diameter {}",
            cert.minimal, cert.diameter
        );
    }
    println!(
        "example_3_14:{big_a} vertex bottleneck constant {}",
        bp_delta(&g).delta_prime
    );

    // odd cycles C_3..C_9 sharing one vertex
    let g = GraphSpec::parse("example_6_9:4")?.build(None)?;
    let r = stability_constant(&g, StabilityMode::Vertices, caps.geodesics);
    println!("example_6_9:4 stability between vertices: {}", r.r);
    for k in 1..=4 {
        let ring: Vec<usize> = std::iter::once(0).chain(example_6_9_cycle(k)).collect();
        let far = PointRef::midpoint(ring[k], ring[k + 1]);
        let geos = enumerate_geodesics(&g, &PointRef::Vertex(0), &far, 4)?;
        println!(
            "  C_{}: bigon Hausdorff distance {}",
            2 * k + 1,
            path_hausdorff(&g, &geos.paths[0], &geos.paths[1])
        );
    }
    println!(
        "example_6_9:4 stability over points: {}",
        stability_constant(&g, StabilityMode::GridPoints, caps.geodesics).r
    );
    Ok(())
}
