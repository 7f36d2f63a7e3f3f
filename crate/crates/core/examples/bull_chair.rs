//! The bull- and chair-free construction and its three branches.

use lpt::generators::gen_blowup;
use lpt::pipelines::bullchair_transversal;
use lpt::Graph;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        ("C5", Graph::cycle(5)),
        ("P6", Graph::path(6)),
        ("P8", Graph::path(8)),
        ("fat C7", gen_blowup(3, &Graph::cycle(7), 2)),
    ];
    for (name, g) in &cases {
        let cert = bullchair_transversal(g)?;
        println!("{name:>6}: {} via {} (n={})", cert.transversal, cert.method, g.n());
        assert!(cert.verified && cert.size() <= 5);
    }
    // the bull itself is outside the class
    let bull = lpt::recognizers::patterns::bull();
    println!("bull: {}", bullchair_transversal(&bull).unwrap_err());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
