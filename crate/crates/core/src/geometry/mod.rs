//! Exact rational planar geometry.

mod circular;
mod compose;
mod copoints;
pub mod fixtures;
mod point;
mod predicates;
mod random;

pub use circular::{
    circular_local_sequence, circular_local_sequence_by_label, CircularSequence, Event,
};
pub use compose::{
    check_composition, compose, es, es_guarded, xes, xes_guarded, ES_MAX_ORDER, XES_MAX_K,
};
pub use copoints::planar_copoints;
pub use point::{
    format_rational, int, parse_rational, ratio, CompositionTree, Point, PointSet, Rational,
};
pub use predicates::{
    collinear_triple, cross, is_general_position, orientation, planar_closure,
    require_general_position, Orientation, PlanarClosure,
};
pub use random::random_general_position;
