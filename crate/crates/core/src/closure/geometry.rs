use std::collections::HashSet;

use super::family::anti_exchange_with;
use super::{ClosedSetFamily, ClosureOperator, ElemSet, GroundSet, Lattice};
use crate::geometry::{PlanarClosure, PointSet};
use crate::{Error, Result};

/// Families up to this size get the full pairwise intersection self-check
/// when they were generated from a closure operator.
const ALIGNMENT_SELF_CHECK_LIMIT: usize = 8_000;

/// Breadth-first generation of every closed set: start from `ℓ(∅)`, repeatedly
/// add one element and close.
///
/// Every produced set is checked to be a fixed point containing its
/// generator, so a closure that is not extensive or not idempotent is
/// reported rather than silently enumerated.
pub fn enumerate_closed_sets<C: ClosureOperator + ?Sized>(
    ground: &GroundSet,
    closure: &C,
) -> Result<ClosedSetFamily> {
    if closure.ground_size() != ground.len() {
        return Err(Error::InconsistentClosure("ground size mismatch".into()));
    }
    let full = ground.full();
    let check = |from: ElemSet, got: ElemSet| -> Result<()> {
        if !from.is_subset(got) || !got.is_subset(full) {
            return Err(Error::InconsistentClosure(format!(
                "closure of {from:?} is {got:?}, not a superset"
            )));
        }
        let again = closure.close(got);
        if again != got {
            return Err(Error::InconsistentClosure(format!(
                "closure of {got:?} is {again:?}, not idempotent"
            )));
        }
        Ok(())
    };
    let start = closure.close(ElemSet::EMPTY);
    check(ElemSet::EMPTY, start)?;
    let mut seen: HashSet<ElemSet> = HashSet::from([start]);
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for set in frontier {
            for e in full.difference(set).iter() {
                let from = set.with(e);
                let closed = closure.close(from);
                if seen.insert(closed) {
                    check(from, closed)?;
                    next.push(closed);
                }
            }
        }
        frontier = next;
    }
    Ok(ClosedSetFamily::new_unchecked(
        ground.clone(),
        seen.into_iter().collect(),
    ))
}

/// A finite convex geometry: a validated alignment with the anti-exchange
/// property, together with its lattice of closed sets.
#[derive(Clone, Debug)]
pub struct ConvexGeometry {
    family: ClosedSetFamily,
    lattice: Lattice,
    planar: Option<PlanarClosure>,
}

impl ConvexGeometry {
    /// Validates anti-exchange on an alignment.
    pub fn from_family(family: ClosedSetFamily) -> Result<Self> {
        family.check_alignment().map_err(Error::Alignment)?;
        anti_exchange_with(&family, &family).map_err(Error::AntiExchange)?;
        let lattice = Lattice::build(&family, &family)?;
        Ok(ConvexGeometry {
            family,
            lattice,
            planar: None,
        })
    }

    /// Parses label lists into a family and validates both axioms.
    pub fn from_labelled_sets<S: AsRef<str>>(ground: GroundSet, sets: &[Vec<S>]) -> Result<Self> {
        let sets = sets
            .iter()
            .map(|s| ground.set_of(s))
            .collect::<Result<Vec<_>>>()?;
        let family = super::validate_alignment(ground, sets).map_err(Error::Alignment)?;
        ConvexGeometry::from_family(family)
    }

    /// Geometry of the closure `A ↦ conv(A) ∩ X`. Collinear sets are
    /// accepted; only circular-sequence machinery needs general position.
    pub fn from_planar(set: &PointSet) -> Result<Self> {
        let closure = PlanarClosure::new(set)?;
        let ground = GroundSet::new(set.labels())?;
        let family = enumerate_closed_sets(&ground, &closure)?;
        ConvexGeometry::from_closure_family(family, closure)
    }

    fn from_closure_family(family: ClosedSetFamily, closure: PlanarClosure) -> Result<Self> {
        if family.len() <= ALIGNMENT_SELF_CHECK_LIMIT {
            family.check_alignment().map_err(Error::Alignment)?;
        } else if !family.is_closed(ElemSet::EMPTY) || !family.is_closed(family.ground().full()) {
            return Err(Error::Inconsistency("generated family lacks ∅ or X".into()));
        }
        anti_exchange_with(&family, &closure).map_err(Error::AntiExchange)?;
        let lattice = Lattice::build(&family, &closure)?;
        Ok(ConvexGeometry {
            family,
            lattice,
            planar: Some(closure),
        })
    }

    pub fn ground(&self) -> &GroundSet {
        self.family.ground()
    }

    pub fn n(&self) -> usize {
        self.family.ground().len()
    }

    pub fn family(&self) -> &ClosedSetFamily {
        &self.family
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn is_planar(&self) -> bool {
        self.planar.is_some()
    }

    pub fn is_closed(&self, set: ElemSet) -> bool {
        self.family.is_closed(set)
    }

    pub fn full(&self) -> ElemSet {
        self.family.ground().full()
    }

    pub fn render(&self, set: ElemSet) -> String {
        self.ground().render(set)
    }
}

impl ClosureOperator for ConvexGeometry {
    fn ground_size(&self) -> usize {
        self.n()
    }

    fn close(&self, set: ElemSet) -> ElemSet {
        match &self.planar {
            Some(planar) => planar.close(set),
            None => self.family.close(set),
        }
    }
}
