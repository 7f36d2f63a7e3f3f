//! Chordal graphs: a transversal clique, then a refinement below the
//! matched clique index.

use lpt::generators::{gen_chordal, gen_interval};
use lpt::pipelines::{chordal_clique_transversal, chordal_refined_transversal};
use lpt::recognizers::{is_chordal, matched_clique_index};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let inst = gen_chordal(5, 13, 0.35);
    let g = &inst.graph;
    let peo = is_chordal(g).ok_or("generator produced a non-chordal graph")?;
    println!("chordal n={} m={} elimination order {peo:?}", g.n(), g.edge_count());
    let clique = chordal_clique_transversal(g)?;
    let refined = chordal_refined_transversal(g)?;
    println!(
        "clique {} refined to {} (index {})",
        clique.transversal,
        refined.transversal,
        matched_clique_index(g)
    );
    assert!(refined.size() < matched_clique_index(g));

    let iv = gen_interval(9, 12);
    let cert = chordal_refined_transversal(&iv.graph)?;
    println!("interval graph from {:?}: {}", iv.intervals, cert.transversal);
    assert!(cert.size() <= 2);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
