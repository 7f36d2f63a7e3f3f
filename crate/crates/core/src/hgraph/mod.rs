//! Intersection graphs of connected subsets of a subdivided host graph.
//!
//! A nice representation together with a tree decomposition of the
//! subdivision yields a small transversal: the segments meeting one bag
//! already hit every longest path, and per bag vertex and per edge of the
//! intermediate graph a single furthest-reaching segment suffices.

mod extract;
mod normalize;
mod rep;
mod treedec;

pub use extract::{
    extract_q, helly_bag, intermediate_graph, reach, verify_claims, ClaimsReport, ExtractionTrace,
    Intermediate, Selection, SizeCheck,
};
pub use normalize::normalize_nice;
pub use rep::{realize, HRepresentation};
pub use treedec::{
    decompose, decomposition_from_order, exact_decomposition, exact_treewidth, TreeDecomposition,
    EXACT_LIMIT,
};
