//! Build graphs from generator specs and edge lists, and measure distances
//! between points of the metric graph.
//!
//!     cargo run --example metric_and_generators

use chordsep::graph::{BallKind, GraphSpec, Grid};
use chordsep::{len, Graph, PointRef};

fn main() -> chordsep::Result<()> {
    for spec in [
        "path:6",
        "cycle:7",
        "grid:3,4",
        "complete:5",
        "random_tree:12",
        "example_2_9:5",
    ] {
        let g = GraphSpec::parse(spec)?.build(Some(1))?;
        println!(
            "{spec:<16} |V| = {:>3}  |E| = {:>3}  diameter {}  max degree {}",
            g.n(),
            g.edge_count(),
            g.diameter(),
            g.max_degree()
        );
    }

    // random families are reproducible from their seed
    let er = GraphSpec::parse("erdos_renyi:10,0.3")?;
    assert_eq!(
        er.build(Some(42))?.to_edge_list(),
        er.build(Some(42))?.to_edge_list()
    );

    // edge lists round-trip exactly
    let g = Graph::parse_edge_list("0 1\n1 2\n2 3\n3 0\n")?;
    assert_eq!(Graph::parse_edge_list(&g.to_edge_list())?, g);

    // points inside edges are first-class
    let p = PointRef::on_edge(0, 1, len(1, 4))?;
    let q = PointRef::midpoint(2, 3);
    println!(
        "C_4: quarter of the way along 0-1 to the middle of 2-3: {}",
        p.distance(&g, &q)
    );
    let ball = g.neighborhood(&q, len(3, 2), BallKind::Closed)?;
    println!("C_4: vertices within 3/2 of the midpoint of 2-3: {ball:?}");

    // the t-subdivision exposes those points as vertices
    let grid = Grid::new(&g, 4)?;
    println!(
        "C_4 on the quarter grid: {} points, {} edges",
        grid.len(),
        grid.graph().edge_count()
    );

    // malformed input is reported, not panicked on
    match Graph::parse_edge_list("0 1\n2 3\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
