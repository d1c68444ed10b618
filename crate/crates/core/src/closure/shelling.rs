use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use super::{ClosedSetFamily, ConvexGeometry, ElemSet, GroundSet};
use crate::{Error, Result};

/// The convex geometry whose open sets are the unions of prefixes of the
/// given orders.
///
/// Unions of prefixes are union-closed and accessible, i.e. an antimatroid,
/// so their complements always satisfy alignment and anti-exchange. Every
/// order must be a permutation of the ground set.
pub fn from_shelling_orders(ground: GroundSet, orders: &[Vec<usize>]) -> Result<ConvexGeometry> {
    let n = ground.len();
    let mut open: HashSet<ElemSet> = HashSet::new();
    open.insert(ElemSet::EMPTY);
    for order in orders {
        let mut sorted = order.clone();
        sorted.sort_unstable();
        if sorted != (0..n).collect::<Vec<usize>>() {
            return Err(Error::InvalidInput(format!(
                "{order:?} is not a permutation of 0..{n}"
            )));
        }
        let mut prefix = ElemSet::EMPTY;
        for &e in order {
            prefix = prefix.with(e);
            open.insert(prefix);
        }
    }
    let mut frontier: Vec<ElemSet> = open.iter().copied().collect();
    while let Some(a) = frontier.pop() {
        let fresh: Vec<ElemSet> = open
            .iter()
            .map(|&b| a.union(b))
            .filter(|u| !open.contains(u))
            .collect();
        for u in fresh {
            if open.insert(u) {
                frontier.push(u);
            }
        }
    }
    let full = ground.full();
    let closed: Vec<ElemSet> = open.iter().map(|&o| full.difference(o)).collect();
    let family = ClosedSetFamily::new_unchecked(ground, closed);
    ConvexGeometry::from_family(family)
}

/// Random geometry on `n` elements labelled `e0..` from `orders` random
/// shelling orders.
pub fn random_geometry<R: Rng + ?Sized>(
    n: usize,
    orders: usize,
    rng: &mut R,
) -> Result<ConvexGeometry> {
    let ground = GroundSet::new((0..n).map(|i| format!("e{i}")).collect())?;
    let words: Vec<Vec<usize>> = (0..orders.max(1))
        .map(|_| {
            let mut w: Vec<usize> = (0..n).collect();
            w.shuffle(rng);
            w
        })
        .collect();
    from_shelling_orders(ground, &words)
}
