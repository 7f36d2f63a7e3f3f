//! Class membership and structured-subgraph searches.

mod chordal;
mod induced;
mod paths;
pub mod patterns;

pub use chordal::{
    is_chordal, is_perfect_elimination_ordering, lex_bfs, matched_clique_index, maximal_cliques,
};
pub use induced::{contains_induced, is_free_of};
pub use paths::{
    find_monitor_path, induced_paths, is_maximal_induced_path, is_monitor, maximal_induced_path,
    monitor_vertex,
};
