//! Transversals of size `t - 2` for `P5`- and `P6`-free graphs.

use lpt::generators::gen_class_filtered;
use lpt::pipelines::ptfree_transversal;
use lpt::recognizers::{find_monitor_path, patterns};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for t in [5, 6] {
        let sample = gen_class_filtered(7, 10, 0.6, &[patterns::path(t)], 20_000)?;
        let g = &sample.graph;
        let x = find_monitor_path(g, t)?;
        let cert = ptfree_transversal(g, t)?;
        println!(
            "P{t}-free, n={} after {} draws: monitor path {:?}, transversal {} (bound {:?})",
            g.n(),
            sample.attempts,
            x.vertices(),
            cert.transversal,
            cert.bound_claimed
        );
        assert!(cert.verified && cert.size() <= t - 2);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
