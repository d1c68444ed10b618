use std::cmp::Ordering;
use std::fmt;

/// Subset of a ground set of at most 32 elements, stored as a bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ElemSet(pub u32);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn full(n: usize) -> Self {
        if n >= 32 {
            ElemSet(u32::MAX)
        } else {
            ElemSet((1u32 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Self {
        ElemSet(1 << e)
    }

    pub fn from_elems<I: IntoIterator<Item = usize>>(elems: I) -> Self {
        elems.into_iter().fold(ElemSet::EMPTY, |s, e| s.with(e))
    }

    #[inline]
    pub fn contains(self, e: usize) -> bool {
        self.0 >> e & 1 == 1
    }

    #[inline]
    pub fn with(self, e: usize) -> Self {
        ElemSet(self.0 | 1 << e)
    }

    #[inline]
    pub fn without(self, e: usize) -> Self {
        ElemSet(self.0 & !(1 << e))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn is_subset(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_proper_subset(self, other: ElemSet) -> bool {
        self != other && self.is_subset(other)
    }

    #[inline]
    pub fn comparable(self, other: ElemSet) -> bool {
        self.is_subset(other) || other.is_subset(self)
    }

    #[inline]
    pub fn union(self, other: ElemSet) -> Self {
        ElemSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: ElemSet) -> Self {
        ElemSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: ElemSet) -> Self {
        ElemSet(self.0 & !other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(e)
            }
        })
    }

    pub fn elems(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Canonical order: by size, then lexicographically on the sorted element
    /// indices.
    pub fn canonical_cmp(self, other: ElemSet) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a = ElemSet::from_elems([0, 2, 5]);
        assert_eq!(a.len(), 3);
        assert!(a.contains(2) && !a.contains(1));
        assert_eq!(a.elems(), vec![0, 2, 5]);
        assert!(ElemSet::from_elems([0, 5]).is_proper_subset(a));
        assert_eq!(a.without(2).with(1), ElemSet::from_elems([0, 1, 5]));
        assert_eq!(ElemSet::full(3), ElemSet::from_elems([0, 1, 2]));
    }

    #[test]
    fn canonical_order_is_size_then_lex() {
        let mut sets = vec![
            ElemSet::from_elems([1, 2]),
            ElemSet::from_elems([3]),
            ElemSet::from_elems([0, 3]),
            ElemSet::EMPTY,
            ElemSet::from_elems([0]),
        ];
        sets.sort_by(|a, b| a.canonical_cmp(*b));
        assert_eq!(
            sets,
            vec![
                ElemSet::EMPTY,
                ElemSet::from_elems([0]),
                ElemSet::from_elems([3]),
                ElemSet::from_elems([0, 3]),
                ElemSet::from_elems([1, 2]),
            ]
        );
    }
}
