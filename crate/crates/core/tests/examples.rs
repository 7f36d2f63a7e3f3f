//! Every example runs to completion.

#[allow(dead_code)]
#[path = "../examples/oracle.rs"]
mod oracle;

#[allow(dead_code)]
#[path = "../examples/refinement.rs"]
mod refinement;

#[allow(dead_code)]
#[path = "../examples/path_free.rs"]
mod path_free;

#[allow(dead_code)]
#[path = "../examples/bull_chair.rs"]
mod bull_chair;

#[allow(dead_code)]
#[path = "../examples/chordal.rs"]
mod chordal;

#[allow(dead_code)]
#[path = "../examples/hgraph.rs"]
mod hgraph;

#[allow(dead_code)]
#[path = "../examples/generators.rs"]
mod generators;

#[allow(dead_code)]
#[path = "../examples/suites.rs"]
mod suites;

#[test]
fn oracle_example_runs() {
    oracle::run_example().unwrap();
}

#[test]
fn refinement_example_runs() {
    refinement::run_example().unwrap();
}

#[test]
fn path_free_example_runs() {
    path_free::run_example().unwrap();
}

#[test]
fn bull_chair_example_runs() {
    bull_chair::run_example().unwrap();
}

#[test]
fn chordal_example_runs() {
    chordal::run_example().unwrap();
}

#[test]
fn hgraph_example_runs() {
    hgraph::run_example().unwrap();
}

#[test]
fn generators_example_runs() {
    generators::run_example().unwrap();
}

#[test]
fn suites_example_runs() {
    suites::run_example().unwrap();
}
