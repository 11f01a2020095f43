//! The bottleneck property on vertices and on points, its minimal
//! constants, and the neighbour-separator characterization.
//!
//!     cargo run --example bottleneck

use chordsep::bottleneck::{
    bp_check_points, bp_check_vertices, bp_delta, bp_point_delta,
    neighbor_separator_characterization,
};
use chordsep::graph::GraphSpec;
use chordsep::len;

fn main() -> chordsep::Result<()> {
    let c8 = GraphSpec::parse("cycle:8")?.build(None)?;
    for d in [len(1, 1), len(3, 2), len(2, 1)] {
        let v = bp_check_vertices(&c8, d)?;
        match v.witness {
            Some(w) => println!(
                "C_8 at {d}: fails, a path from {} to {} avoids the ball around {}",
                w.v, w.w, w.c
            ),
            None => println!("C_8 at {d}: holds"),
        }
    }
    let r = bp_delta(&c8);
    println!(
        "C_8: vertex constant {}, point constant at most {}",
        r.delta_prime, r.delta
    );
    println!("C_8: point constant {}", bp_point_delta(&c8));
    println!(
        "C_8 on points at 7/2: {}",
        bp_check_points(&c8, len(7, 2))?.holds
    );

    for delta2 in 1..=3 {
        let v = neighbor_separator_characterization(&c8, delta2)?;
        println!(
            "C_8 neighbour separators at {delta2}: holds {} (vacuous {})",
            v.holds, v.vacuous
        );
    }

    for spec in [
        "random_tree:25",
        "grid:3,5",
        "example_3_14:12",
        "complete:7",
    ] {
        let g = GraphSpec::parse(spec)?.build(Some(9))?;
        let r = bp_delta(&g);
        println!("{spec:<16} vertex constant {}", r.delta_prime);
    }
    Ok(())
}
