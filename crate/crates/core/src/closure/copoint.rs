use std::cmp::Ordering;

use super::{ClosureOperator, ConvexGeometry, ElemSet, Lattice};
use crate::{Error, Result};

/// A closed set with exactly one single-element closed extension; `attach` is
/// the element that extends it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Copoint {
    pub set: ElemSet,
    pub attach: usize,
}

impl Ord for Copoint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.set
            .canonical_cmp(other.set)
            .then_with(|| self.attach.cmp(&other.attach))
    }
}

impl PartialOrd for Copoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Copoint {
    /// `{a,b,c}@d`
    pub fn render(&self, g: &ConvexGeometry) -> String {
        format!("{}@{}", g.render(self.set), g.ground().label(self.attach))
    }
}

/// Definitional scan: every closed `A` with exactly one `e ∉ A` such that
/// `A ∪ {e}` is closed. Sorted canonically.
pub fn copoints(g: &ConvexGeometry) -> Vec<Copoint> {
    let full = g.full();
    let mut out: Vec<Copoint> = g
        .family()
        .sets()
        .iter()
        .filter_map(|&a| {
            let mut ext = full
                .difference(a)
                .iter()
                .filter(|&e| g.is_closed(a.with(e)));
            match (ext.next(), ext.next()) {
                (Some(attach), None) => Some(Copoint { set: a, attach }),
                _ => None,
            }
        })
        .collect();
    out.sort();
    out
}

/// Nodes of the lattice with exactly one upper cover.
pub fn meet_irreducibles(lattice: &Lattice) -> Vec<usize> {
    (0..lattice.len())
        .filter(|&i| lattice.upper_covers(i).len() == 1)
        .collect()
}

pub fn is_atomic(g: &ConvexGeometry) -> bool {
    (0..g.n()).all(|e| g.is_closed(ElemSet::singleton(e)))
}

/// Extreme points `{p : p ∉ ℓ(X ∖ p)}`.
pub fn extreme_points(g: &ConvexGeometry) -> ElemSet {
    let full = g.full();
    ElemSet::from_elems((0..g.n()).filter(|&p| !g.close(full.without(p)).contains(p)))
}

/// 2-edge-connectivity computed two independent ways.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoEdgeConnectivity {
    /// Cut edges of the Hasse diagram, as `(lower, upper)` closed sets.
    pub bridges: Vec<(ElemSet, ElemSet)>,
    /// Copoints comparable with the closure of their attach element.
    pub comparable_copoints: Vec<Copoint>,
}

impl TwoEdgeConnectivity {
    pub fn by_bridges(&self) -> bool {
        self.bridges.is_empty()
    }

    pub fn by_copoints(&self) -> bool {
        self.comparable_copoints.is_empty()
    }
}

impl ConvexGeometry {
    pub fn two_edge_connectivity(&self) -> TwoEdgeConnectivity {
        let lattice = self.lattice();
        let bridges = lattice
            .bridges()
            .into_iter()
            .map(|(a, b)| (lattice.node(a), lattice.node(b)))
            .collect();
        let comparable_copoints = copoints(self)
            .into_iter()
            .filter(|c| c.set.comparable(self.close(ElemSet::singleton(c.attach))))
            .collect();
        TwoEdgeConnectivity {
            bridges,
            comparable_copoints,
        }
    }

    /// Errors if the bridge search and the copoint criterion disagree.
    pub fn is_two_edge_connected(&self) -> Result<bool> {
        let t = self.two_edge_connectivity();
        if t.by_bridges() != t.by_copoints() {
            return Err(Error::Inconsistency(format!(
                "bridge search says {}, copoint criterion says {}",
                t.by_bridges(),
                t.by_copoints()
            )));
        }
        Ok(t.by_bridges())
    }
}
