use rand::Rng;

use super::point::{int, Point, PointSet};
use super::predicates::{orientation, Orientation};

/// Rejection-samples `n` points with integer coordinates in `[0, 4n²]²`, no two
/// equal and no three collinear. Labels are `p0..`.
pub fn random_general_position<R: Rng + ?Sized>(n: usize, rng: &mut R) -> PointSet {
    let side = 4 * (n as i64).pow(2).max(1);
    let mut points: Vec<Point> = Vec::with_capacity(n);
    while points.len() < n {
        let candidate = Point::new(
            format!("p{}", points.len()),
            int(rng.gen_range(0..=side)),
            int(rng.gen_range(0..=side)),
        );
        let clash = points.iter().any(|p| p.same_position(&candidate))
            || points.iter().enumerate().any(|(i, a)| {
                points[i + 1..]
                    .iter()
                    .any(|b| orientation(a, b, &candidate) == Orientation::Collinear)
            });
        if !clash {
            points.push(candidate);
        }
    }
    PointSet::new(points).expect("sampled points are distinct")
}
