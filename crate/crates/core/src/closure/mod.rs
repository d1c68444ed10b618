//! Abstract finite convex geometries and their lattices of closed sets.

mod copoint;
mod elemset;
mod family;
pub mod fixtures;
mod geometry;
mod ground;
mod independence;
mod lattice;
mod shelling;

pub use copoint::{
    copoints, extreme_points, is_atomic, meet_irreducibles, Copoint, TwoEdgeConnectivity,
};
pub use elemset::ElemSet;
pub use family::{
    is_anti_exchange, validate_alignment, AlignmentViolation, AntiExchangeWitness, ClosedSetFamily,
};
pub use geometry::{enumerate_closed_sets, ConvexGeometry};
pub use ground::GroundSet;
pub use independence::{independence_number, is_independent};
pub use lattice::Lattice;
pub use shelling::{from_shelling_orders, random_geometry};

/// Largest ground set accepted anywhere in the crate.
pub const MAX_ELEMENTS: usize = 20;

/// A closure operator on the subsets of `0..ground_size()`.
pub trait ClosureOperator {
    fn ground_size(&self) -> usize;
    fn close(&self, set: ElemSet) -> ElemSet;
}
