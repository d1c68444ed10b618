//! Order dimension of the lattice of closed sets and the related graph
//! parameters.

mod analysis;
mod brute;
mod cdim;
mod coloring;
mod critical;
mod cycles;
mod digraph;
mod dot;
mod graph;
mod order;
mod verify;

pub use analysis::{analyze, analyze_points, Analysis, AnalysisOptions, AnalysisReport, Witnesses};
pub use brute::{
    brute_force_dimension, Poset, BRUTE_MAX_DIMENSION, BRUTE_MAX_ELEMENTS, BRUTE_MAX_EXTENSIONS,
};
pub use cdim::{
    convex_dimension, max_antichain, verify_chain_cover, ChainCover, ANTICHAIN_CHECK_LIMIT,
};
pub use coloring::{chromatic_number, greedy_clique, is_proper, max_clique, Coloring, Hypergraph};
pub use critical::{
    critical_pairs, critical_pairs_definitional, critical_pairs_from_copoints, same_pairs,
    CriticalPair, DEFINITIONAL_SCAN_LIMIT,
};
pub use cycles::{minimal_cycles, CycleHypergraph};
pub use digraph::CriticalDigraph;
pub use dot::{copoint_graph_dot, copoint_poset_dot, critical_digraph_dot};
pub use graph::{matches_mutual_edges, CopointGraph};
pub use order::{
    is_reversible, linear_extension_reversing, order_dimension, order_dimension_unchecked,
    partition_dimension, verify_realizer, OrderDimension, Realizer, REALIZER_PAIRWISE_LIMIT,
};
pub use verify::*;
