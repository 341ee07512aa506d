//! Hypergraph Lagrangians over the standard simplex, colexicographic
//! constructions, maximum cliques, and exhaustive small-instance
//! verification campaigns for Motzkin-Straus-type statements.

pub mod binom;
pub mod clique;
pub mod error;
pub mod hypergraph;
pub mod lab;
pub mod lagrangian;
pub mod rset;

pub use clique::{has_clique_of_order, max_clique_order, CliqueResult};
pub use error::{HgError, Result};
pub use hypergraph::{make_colex_graph, make_complete, Hypergraph};
pub use lagrangian::{
    complete_lagrangian, evaluate, growth_step, link_value, maximize, maximize_seeded,
    oracle_maximize, remark_gap_check, OptResult, SolverOptions, Weighting,
};
pub use rset::{colex_compare, colex_rank, colex_unrank, DescendantRelation, RSet};
