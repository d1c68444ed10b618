use std::collections::BTreeSet;

use super::circular::sequence_unchecked;
use super::point::PointSet;
use super::predicates::{orientation, require_general_position};
use crate::closure::{Copoint, ElemSet, MAX_ELEMENTS};
use crate::{Error, Result};

/// Copoints of a general-position planar set read off the circular local
/// sequences.
///
/// Each place where `+q` is immediately followed by `-r` in the sequence of
/// `p` yields the copoint `{q} ∪ {x : x on the side of line pq that holds r}`
/// attached to `p`. Results are deduplicated and sorted canonically.
pub fn planar_copoints(set: &PointSet) -> Result<Vec<Copoint>> {
    if set.len() < 2 {
        return Err(Error::TooFewPoints {
            needed: 2,
            got: set.len(),
        });
    }
    if set.len() > MAX_ELEMENTS {
        return Err(Error::SizeGuard(format!(
            "{} points exceeds the limit of {MAX_ELEMENTS}",
            set.len()
        )));
    }
    require_general_position(set)?;
    let pts = set.points();
    let mut found = BTreeSet::new();
    for p in 0..pts.len() {
        let seq = sequence_unchecked(set, p);
        for (q, r) in seq.head_tail_places() {
            let side = orientation(&pts[p], &pts[q], &pts[r]);
            let mut members = ElemSet::singleton(q);
            for x in 0..pts.len() {
                if x != p && x != q && orientation(&pts[p], &pts[q], &pts[x]) == side {
                    members = members.with(x);
                }
            }
            found.insert(Copoint {
                set: members,
                attach: p,
            });
        }
    }
    let mut copoints: Vec<Copoint> = found.into_iter().collect();
    copoints.sort();
    Ok(copoints)
}
