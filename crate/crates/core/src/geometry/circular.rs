use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};

use super::point::{PointSet, Rational};
use super::predicates::require_general_position;
use crate::{Error, Result};

/// A point met by the rotating line: by the head (`+q`) or by the tail (`-q`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Event {
    pub point: usize,
    pub head: bool,
}

/// Circular local sequence of one point: the `2n - 2` head/tail events met by
/// a directed line rotating clockwise around it, starting from "up".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircularSequence {
    pub center: usize,
    pub events: Vec<Event>,
}

impl CircularSequence {
    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    /// Cyclically adjacent `(+q, -r)` places, as `(q, r)`.
    pub fn head_tail_places(&self) -> Vec<(usize, usize)> {
        let n = self.events.len();
        (0..n)
            .filter_map(|i| {
                let cur = self.events[i];
                let next = self.events[(i + 1) % n];
                (cur.head && !next.head).then_some((cur.point, next.point))
            })
            .collect()
    }

    /// Whether `block` appears as a contiguous run of head events and as a
    /// contiguous run of tail events.
    pub fn has_block(&self, block: &[usize]) -> bool {
        [true, false].iter().all(|&head| {
            self.is_contiguous(|e| e.head == head && block.contains(&e.point), block.len())
        })
    }

    fn is_contiguous(&self, member: impl Fn(&Event) -> bool, expected: usize) -> bool {
        let n = self.events.len();
        let hits: Vec<usize> = (0..n).filter(|&i| member(&self.events[i])).collect();
        if hits.len() != expected {
            return false;
        }
        if hits.is_empty() || hits.len() == n {
            return true;
        }
        // contiguous on a cycle iff exactly one member is preceded by a non-member
        hits.iter()
            .filter(|&&i| !member(&self.events[(i + n - 1) % n]))
            .count()
            == 1
    }

    pub fn display(&self, set: &PointSet) -> String {
        let labels: Vec<String> = self
            .events
            .iter()
            .map(|e| {
                let label = &set.points()[e.point].label;
                if e.head {
                    label.clone()
                } else {
                    format!("-{label}")
                }
            })
            .collect();
        format!("({})", labels.join(", "))
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.head {
            write!(f, "+{}", self.point)
        } else {
            write!(f, "-{}", self.point)
        }
    }
}

/// 0 for clockwise angles from "up" in `[0, π)`, 1 for `[π, 2π)`.
fn half(dx: &Rational, dy: &Rational) -> u8 {
    if dx.is_positive() || (dx.is_zero() && dy.is_positive()) {
        0
    } else {
        1
    }
}

/// Compares directions by clockwise angle from the positive y axis.
fn clockwise_cmp(u: &(Rational, Rational), v: &(Rational, Rational)) -> Ordering {
    half(&u.0, &u.1).cmp(&half(&v.0, &v.1)).then_with(|| {
        // within a half-turn, u comes first iff v is clockwise of u
        let cross = &u.0 * &v.1 - &u.1 * &v.0;
        if cross.is_negative() {
            Ordering::Less
        } else if cross.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

pub fn circular_local_sequence(set: &PointSet, center: usize) -> Result<CircularSequence> {
    if set.len() < 2 {
        return Err(Error::TooFewPoints {
            needed: 2,
            got: set.len(),
        });
    }
    if center >= set.len() {
        return Err(Error::UnknownLabel(format!("#{center}")));
    }
    require_general_position(set)?;
    Ok(sequence_unchecked(set, center))
}

pub(crate) fn sequence_unchecked(set: &PointSet, center: usize) -> CircularSequence {
    let pts = set.points();
    let c = &pts[center];
    let mut events: Vec<((Rational, Rational), Event)> = Vec::with_capacity(2 * pts.len());
    for (i, q) in pts.iter().enumerate() {
        if i == center {
            continue;
        }
        let dx = &q.x - &c.x;
        let dy = &q.y - &c.y;
        events.push((
            (-dx.clone(), -dy.clone()),
            Event {
                point: i,
                head: false,
            },
        ));
        events.push((
            (dx, dy),
            Event {
                point: i,
                head: true,
            },
        ));
    }
    events.sort_by(|a, b| clockwise_cmp(&a.0, &b.0));
    CircularSequence {
        center,
        events: events.into_iter().map(|(_, e)| e).collect(),
    }
}

pub fn circular_local_sequence_by_label(set: &PointSet, label: &str) -> Result<CircularSequence> {
    circular_local_sequence(set, set.index_of(label)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::fixtures::three_trees;
    use crate::geometry::point::{int, Point};

    #[test]
    fn right_angle_example() {
        let set = PointSet::new(vec![
            Point::new("a", int(0), int(0)),
            Point::new("b", int(1), int(0)),
            Point::new("c", int(0), int(1)),
        ])
        .unwrap();
        let seq = circular_local_sequence_by_label(&set, "a").unwrap();
        assert_eq!(seq.display(&set), "(c, b, -c, -b)");
    }

    #[test]
    fn structure_on_three_trees() {
        let fig = three_trees();
        let n = fig.len();
        for p in 0..n {
            let seq = circular_local_sequence(&fig, p).unwrap();
            assert_eq!(seq.len(), 2 * n - 2);
            for (i, e) in seq.events.iter().enumerate() {
                let anti = seq.events[(i + n - 1) % seq.len()];
                assert_eq!(anti.point, e.point);
                assert_ne!(anti.head, e.head);
            }
            assert!(!seq.head_tail_places().is_empty());
        }
    }

    #[test]
    fn rejects_bad_input() {
        let fig = three_trees();
        assert!(matches!(
            circular_local_sequence_by_label(&fig, "nope"),
            Err(Error::UnknownLabel(_))
        ));
        let collinear = PointSet::new(vec![
            Point::new("a", int(0), int(0)),
            Point::new("b", int(1), int(1)),
            Point::new("c", int(2), int(2)),
        ])
        .unwrap();
        assert!(matches!(
            circular_local_sequence(&collinear, 0),
            Err(Error::NotGeneralPosition(..))
        ));
        let single = PointSet::new(vec![Point::new("a", int(0), int(0))]).unwrap();
        assert!(circular_local_sequence(&single, 0).is_err());
    }
}
