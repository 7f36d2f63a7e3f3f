//! Exact longest paths and the smallest transversal of a small graph.

use lpt::generators::fixture_walther_zamfirescu;
use lpt::oracle::{enumerate_longest_paths, exact_lpt, is_transversal, longest_path_length};
use lpt::{Graph, VertexSet};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let c5 = Graph::cycle(5);
    let report = enumerate_longest_paths(&c5)?;
    println!("C5: length {} with {} longest paths", report.length, report.paths.len());
    for p in &report.paths {
        println!("  {:?}", p.vertices());
    }
    assert_eq!(report.paths.len(), 5);

    // every vertex of this graph is missed by some longest path,
    // yet two vertices suffice to meet them all
    let g = fixture_walther_zamfirescu();
    println!("fixture: n={} m={} longest path {}", g.n(), g.edge_count(), longest_path_length(&g)?);
    for v in 0..g.n() {
        assert!(!is_transversal(&g, &VertexSet::singleton(v))?);
    }
    let (size, witness) = exact_lpt(&g)?;
    println!("fixture: lpt = {size}, witness {witness}");
    assert_eq!(size, 2);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
