//! Turning a transversal `M` into a smaller one `D ∪ S`.

use lpt::refine::{cds_transversal, component_profiles, refine_transversal, RefinementInput};
use lpt::{Graph, VertexSet};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p6 = Graph::path(6);
    let m = VertexSet::from([2, 3]);
    for prof in component_profiles(&p6, &m)? {
        println!(
            "component {} boundary {} longest anchored path {:?}",
            prof.component, prof.boundary, prof.t_value
        );
    }

    // K4 with a pendant vertex 4 on 0
    let g = Graph::from_edge_list(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4)])?;
    let input = RefinementInput::new(
        &g,
        VertexSet::from([0, 1, 2, 3]),
        VertexSet::from([0]),
        VertexSet::from([0]),
    )?;
    let cert = refine_transversal(&input)?;
    println!("refined: {} via {} (verified {})", cert.transversal, cert.method, cert.verified);
    assert_eq!(cert.transversal, VertexSet::from([0]));

    // a failed hypothesis comes back as an error
    let bad = RefinementInput::new(&g, VertexSet::from([1]), VertexSet::from([1]), VertexSet::new());
    println!("rejected: {}", bad.unwrap_err());

    let cds = cds_transversal(&Graph::cycle(6), &VertexSet::from([0, 1, 2, 3]))?;
    println!("connected dominating set on C6: {}", cds.transversal);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
