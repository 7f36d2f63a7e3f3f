//! Randomized certification suites and the reports they produce.

use lpt::commands::{pipeline_report, Class};
use lpt::generators::fixture_walther_zamfirescu;
use lpt::graph::write_edge_list;
use lpt::suites::{run_suite, Suite};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for suite in Suite::ALL {
        let report = run_suite(suite, 12, 1);
        print!("{}", report.render());
        assert!(report.is_clean());
    }
    let text = write_edge_list(&fixture_walther_zamfirescu());
    match pipeline_report(Class::Chordal, &text) {
        Ok(r) => print!("{}", r.to_text()),
        Err(e) => println!("fixture is not chordal: {e}"),
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
