//! The hyperbolicity constant estimated over geodesic triangles with
//! corners on a fine grid.
//!
//!     cargo run --example hyperbolicity

use chordsep::graph::GraphSpec;
use chordsep::hyperbolicity::delta_hat;
use chordsep::Caps;

fn main() -> chordsep::Result<()> {
    let caps = Caps::from_env();
    for n in 4..=9 {
        let g = GraphSpec::parse(&format!("cycle:{n}"))?.build(None)?;
        println!("C_{n}: delta_hat = {}", delta_hat(&g, 4, &caps)?.delta_hat);
    }
    for spec in [
        "grid:3,3",
        "grid:4,4",
        "complete:6",
        "random_tree:20",
        "example_3_14:9",
    ] {
        let g = GraphSpec::parse(spec)?.build(Some(4))?;
        let r = delta_hat(&g, 4, &caps)?;
        print!(
            "{spec:<16} delta_hat = {:<4} ({} triangles)",
            r.delta_hat, r.triangles
        );
        if let Some(w) = r.witness {
            print!(" fattest side starts at {}", w.corners[w.side]);
        }
        println!();
    }
    // a finer corner grid can only raise the estimate
    let g = GraphSpec::parse("grid:3,4")?.build(None)?;
    for t in [2, 4, 8] {
        println!(
            "grid 3x4 at resolution {t}: {}",
            delta_hat(&g, t, &caps)?.delta_hat
        );
    }
    Ok(())
}
