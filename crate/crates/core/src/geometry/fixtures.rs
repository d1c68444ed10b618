//! Point sets used throughout the tests and examples.

use super::point::{Point, PointSet};

/// The six-point set `x, y, z, w, v, u` whose copoint poset is three
/// four-node trees.
pub fn three_trees() -> PointSet {
    let coords = [
        ("x", "0", "0"),
        ("y", "1", "2/5"),
        ("z", "2", "2"),
        ("w", "21/10", "3"),
        ("v", "3", "21/50"),
        ("u", "4", "1/50"),
    ];
    PointSet::new(
        coords
            .iter()
            .map(|(l, x, y)| Point::parse(l, x, y).expect("valid literal"))
            .collect(),
    )
    .expect("valid fixture")
}

/// A non-degenerate triangle `a, b, c`.
pub fn triangle() -> PointSet {
    PointSet::new(vec![
        Point::parse("a", "0", "0").unwrap(),
        Point::parse("b", "4", "0").unwrap(),
        Point::parse("c", "1", "3").unwrap(),
    ])
    .expect("valid fixture")
}
