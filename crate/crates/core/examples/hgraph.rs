//! Extraction on an H-graph: decomposition, Helly bag, intermediate graph,
//! and the set `Q` with its size checks.

use lpt::generators::gen_circular_arc;
use lpt::hgraph::{decompose, extract_q, realize, verify_claims, HRepresentation, TreeDecomposition};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let inst = gen_circular_arc(11, 9);
    let json = inst.rep.to_json();
    let rep = HRepresentation::from_json(&json)?;
    let g = realize(&rep)?;
    assert_eq!(g, inst.graph);

    let td = decompose(&rep);
    let pace = td.to_pace(rep.h_phi().n());
    assert_eq!(TreeDecomposition::from_pace(&pace)?, td);
    println!("subdivision has {} vertices, width {}", rep.h_phi().n(), td.width());

    let (cert, trace) = extract_q(&rep, &td)?;
    let bag: Vec<String> = trace.x_bag.iter().map(|x| rep.label(x)).collect();
    println!("Helly bag at node {}: {bag:?}", trace.helly_node);
    println!(
        "intermediate graph {} vertices, {} edges",
        trace.intermediate.graph.n(),
        trace.intermediate.graph.edge_count()
    );
    println!("Q = {} (verified {})", cert.transversal, cert.verified);
    let claims = verify_claims(&trace, &g);
    assert!(claims.all_pass(), "{:?}", claims.failures());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
