//! Abstract geometries used throughout the tests and examples.

use super::{validate_alignment, ClosedSetFamily, ConvexGeometry, GroundSet};

/// The non-atomic, 2-edge-connected geometry on `{1, 2, 3, 4}` whose closed
/// sets are `∅, 1, 2, 3, 12, 23, 24, 123, 234, 1234`.
pub fn nonatomic_bridgeless() -> ClosedSetFamily {
    let ground = GroundSet::from_strs(&["1", "2", "3", "4"]).expect("valid ground");
    let lists: [&[&str]; 10] = [
        &[],
        &["1"],
        &["2"],
        &["3"],
        &["1", "2"],
        &["2", "3"],
        &["2", "4"],
        &["1", "2", "3"],
        &["2", "3", "4"],
        &["1", "2", "3", "4"],
    ];
    let sets = lists
        .iter()
        .map(|l| ground.set_of(l).expect("known labels"))
        .collect();
    validate_alignment(ground, sets).expect("valid alignment")
}

pub fn nonatomic_bridgeless_geometry() -> ConvexGeometry {
    ConvexGeometry::from_family(nonatomic_bridgeless()).expect("valid convex geometry")
}
