use fixedbitset::FixedBitSet;

use super::CriticalPair;
use crate::closure::Lattice;

/// Digraph on critical pairs with `i → j` whenever the closure side of `j`
/// lies below the copoint side of `i`.
#[derive(Clone, Debug)]
pub struct CriticalDigraph {
    pairs: Vec<CriticalPair>,
    out: Vec<FixedBitSet>,
}

impl CriticalDigraph {
    pub fn new(lattice: &Lattice, pairs: &[CriticalPair]) -> Self {
        let m = pairs.len();
        let out = pairs
            .iter()
            .map(|from| {
                let upper = lattice.node(from.copoint_node);
                let mut row = FixedBitSet::with_capacity(m);
                for (j, to) in pairs.iter().enumerate() {
                    if lattice.node(to.closure_node).is_subset(upper) {
                        row.insert(j);
                    }
                }
                row
            })
            .collect();
        CriticalDigraph {
            pairs: pairs.to_vec(),
            out,
        }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[CriticalPair] {
        &self.pairs
    }

    #[inline]
    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        self.out[from].contains(to)
    }

    pub fn out(&self, from: usize) -> &FixedBitSet {
        &self.out[from]
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.ones().map(move |j| (i, j)))
    }

    /// Unordered pairs `{i, j}` with edges both ways.
    pub fn mutual_edges(&self) -> Vec<(usize, usize)> {
        self.edges()
            .filter(|&(i, j)| i < j && self.has_edge(j, i))
            .collect()
    }
}
