//! Small longest path transversals for hereditary graph classes.
//!
//! A longest path transversal of a connected graph is a vertex set meeting
//! every path of maximum length. This crate builds such sets for
//! `P5`-free, `P6`-free, bull- and chair-free and chordal graphs, and for
//! intersection graphs of connected subsets of a subdivided host graph,
//! and certifies each one against an exact oracle.
//!
//! ```
//! use lpt::{generators, oracle};
//!
//! let g = generators::fixture_walther_zamfirescu();
//! let (size, witness) = oracle::exact_lpt(&g).unwrap();
//! assert_eq!(size, 2);
//! assert!(oracle::is_transversal(&g, &witness).unwrap());
//! ```

pub mod commands;
pub mod error;
pub mod generators;
pub mod graph;
pub mod hgraph;
pub mod oracle;
pub mod pipelines;
pub mod recognizers;
pub mod refine;
pub mod report;
pub mod suites;

pub use error::{Error, Result};
pub use graph::{Graph, Path, VertexSet};
pub use oracle::{Method, Oracle, TransversalCertificate};
