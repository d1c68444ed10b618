use std::collections::HashMap;
use std::fmt;

use super::{ClosureOperator, ElemSet, GroundSet};

/// First violated alignment axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlignmentViolation {
    MissingEmpty,
    MissingGround,
    MissingIntersection {
        left: Vec<String>,
        right: Vec<String>,
        meet: Vec<String>,
    },
}

impl fmt::Display for AlignmentViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlignmentViolation::MissingEmpty => write!(f, "the empty set is not closed"),
            AlignmentViolation::MissingGround => write!(f, "the ground set is not closed"),
            AlignmentViolation::MissingIntersection { left, right, meet } => write!(
                f,
                "{{{}}} ∩ {{{}}} = {{{}}} is missing",
                left.join(","),
                right.join(","),
                meet.join(",")
            ),
        }
    }
}

/// Closed set `C` and distinct `p, q ∉ C` with `q ∈ ℓ(C ∪ p)` and `p ∈ ℓ(C ∪ q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntiExchangeWitness {
    pub closed: Vec<String>,
    pub p: String,
    pub q: String,
}

impl fmt::Display for AntiExchangeWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "C = {{{}}}: {} ∈ ℓ(C ∪ {}) and {} ∈ ℓ(C ∪ {})",
            self.closed.join(","),
            self.q,
            self.p,
            self.p,
            self.q
        )
    }
}

/// A validated alignment: contains `∅` and `X` and is closed under
/// intersection. Sets are kept in canonical order (size, then lexicographic).
#[derive(Clone, Debug)]
pub struct ClosedSetFamily {
    ground: GroundSet,
    sets: Vec<ElemSet>,
    index: HashMap<ElemSet, usize>,
}

impl ClosedSetFamily {
    /// Builds the family without checking the alignment axioms.
    pub(crate) fn new_unchecked(ground: GroundSet, mut sets: Vec<ElemSet>) -> Self {
        sets.sort_by(|a, b| a.canonical_cmp(*b));
        sets.dedup();
        let index = sets.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        ClosedSetFamily {
            ground,
            sets,
            index,
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn sets(&self) -> &[ElemSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn is_closed(&self, set: ElemSet) -> bool {
        self.index.contains_key(&set)
    }

    pub fn id_of(&self, set: ElemSet) -> Option<usize> {
        self.index.get(&set).copied()
    }

    pub(crate) fn check_alignment(&self) -> Result<(), AlignmentViolation> {
        if !self.is_closed(ElemSet::EMPTY) {
            return Err(AlignmentViolation::MissingEmpty);
        }
        if !self.is_closed(self.ground.full()) {
            return Err(AlignmentViolation::MissingGround);
        }
        for (i, &a) in self.sets.iter().enumerate() {
            for &b in &self.sets[i + 1..] {
                let meet = a.intersection(b);
                if !self.is_closed(meet) {
                    return Err(AlignmentViolation::MissingIntersection {
                        left: self.ground.labels_of(a),
                        right: self.ground.labels_of(b),
                        meet: self.ground.labels_of(meet),
                    });
                }
            }
        }
        Ok(())
    }
}

impl ClosureOperator for ClosedSetFamily {
    fn ground_size(&self) -> usize {
        self.ground.len()
    }

    /// Smallest member containing `set`; members are sorted by size so the
    /// first superset met is the intersection of all of them.
    fn close(&self, set: ElemSet) -> ElemSet {
        if self.is_closed(set) {
            return set;
        }
        self.sets
            .iter()
            .copied()
            .find(|s| set.is_subset(*s))
            .unwrap_or_else(|| self.ground.full())
    }
}

/// Checks the alignment axioms, returning the first violation.
pub fn validate_alignment(
    ground: GroundSet,
    sets: Vec<ElemSet>,
) -> Result<ClosedSetFamily, AlignmentViolation> {
    let family = ClosedSetFamily::new_unchecked(ground, sets);
    family.check_alignment()?;
    Ok(family)
}

/// Scans every closed `C` and distinct `p, q ∉ C`.
pub fn is_anti_exchange(family: &ClosedSetFamily) -> Result<(), AntiExchangeWitness> {
    anti_exchange_with(family, family)
}

pub(crate) fn anti_exchange_with<C: ClosureOperator + ?Sized>(
    family: &ClosedSetFamily,
    closure: &C,
) -> Result<(), AntiExchangeWitness> {
    let n = family.ground.len();
    let full = family.ground.full();
    let mut extended = vec![ElemSet::EMPTY; n];
    for &c in &family.sets {
        let outside = full.difference(c);
        for p in outside.iter() {
            extended[p] = closure.close(c.with(p));
        }
        for p in outside.iter() {
            for q in outside.iter().filter(|&q| q > p) {
                if extended[p].contains(q) && extended[q].contains(p) {
                    return Err(AntiExchangeWitness {
                        closed: family.ground.labels_of(c),
                        p: family.ground.label(p).to_string(),
                        q: family.ground.label(q).to_string(),
                    });
                }
            }
        }
    }
    Ok(())
}
