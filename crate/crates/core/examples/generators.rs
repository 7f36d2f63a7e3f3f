//! Seeded instance families, written as edge lists.

use lpt::generators::{
    gen_chordal, gen_circular_arc, gen_class_filtered, gen_hgraph, gen_interval, SplitMix64,
};
use lpt::graph::{parse_edge_list, write_edge_list};
use lpt::recognizers::patterns;
use lpt::Graph;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = SplitMix64::new(42);
    println!("first draws: {} {}", rng.next_u64(), rng.below(10));

    let chordal = gen_chordal(1, 8, 0.4).graph;
    let interval = gen_interval(1, 8);
    let arcs = gen_circular_arc(1, 8);
    let paw = Graph::from_edge_list(4, &[(0, 1), (0, 2), (1, 2), (2, 3)])?;
    let on_paw = gen_hgraph(1, &paw, 8, 3);
    let claw_free = gen_class_filtered(1, 8, 0.5, &[patterns::claw()], 10_000)?;
    for (name, g) in [
        ("chordal", &chordal),
        ("interval", &interval.graph),
        ("circular-arc", &arcs.graph),
        ("paw-graph", &on_paw.graph),
        ("claw-free", &claw_free.graph),
    ] {
        let text = write_edge_list(g);
        assert_eq!(&parse_edge_list(&text)?, g);
        println!("{name}: n={} m={}", g.n(), g.edge_count());
    }
    print!("{}", write_edge_list(&interval.graph));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
