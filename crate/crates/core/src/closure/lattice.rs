use std::collections::HashMap;

use super::{ClosedSetFamily, ClosureOperator, ElemSet};
use crate::{Error, Result};

/// The lattice of closed sets ordered by inclusion, with its Hasse diagram.
///
/// Node ids follow the family's canonical order, so `0` is `∅` and the last
/// node is the ground set.
#[derive(Clone, Debug)]
pub struct Lattice {
    nodes: Vec<ElemSet>,
    index: HashMap<ElemSet, usize>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
}

impl Lattice {
    /// Builds the covers and checks that every cover adds exactly one
    /// element, i.e. that every maximal chain has length `|X|`.
    pub(crate) fn build<C: ClosureOperator + ?Sized>(
        family: &ClosedSetFamily,
        closure: &C,
    ) -> Result<Self> {
        let nodes = family.sets().to_vec();
        let index: HashMap<ElemSet, usize> =
            nodes.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let full = family.ground().full();
        let mut upper = vec![Vec::new(); nodes.len()];
        let mut lower = vec![Vec::new(); nodes.len()];
        for (i, &a) in nodes.iter().enumerate() {
            let outside = full.difference(a);
            let steps: Vec<usize> = outside
                .iter()
                .filter_map(|e| index.get(&a.with(e)).copied())
                .collect();
            for e in outside.iter() {
                let above = closure.close(a.with(e));
                let reached = steps.iter().any(|&s| nodes[s].is_subset(above));
                if !reached {
                    return Err(Error::Inconsistency(format!(
                        "cover of {:?} towards {:?} adds more than one element",
                        a, above
                    )));
                }
            }
            for &s in &steps {
                upper[i].push(s);
                lower[s].push(i);
            }
        }
        Ok(Lattice {
            nodes,
            index,
            upper,
            lower,
        })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[ElemSet] {
        &self.nodes
    }

    pub fn node(&self, id: usize) -> ElemSet {
        self.nodes[id]
    }

    pub fn id_of(&self, set: ElemSet) -> Option<usize> {
        self.index.get(&set).copied()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn upper_covers(&self, id: usize) -> &[usize] {
        &self.upper[id]
    }

    pub fn lower_covers(&self, id: usize) -> &[usize] {
        &self.lower[id]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.nodes[a].is_subset(self.nodes[b])
    }

    pub fn cover_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.upper
            .iter()
            .enumerate()
            .flat_map(|(i, ups)| ups.iter().map(move |&j| (i, j)))
    }

    /// Cut edges of the Hasse diagram viewed as an undirected graph, as
    /// `(lower, upper)` pairs.
    pub fn bridges(&self) -> Vec<(usize, usize)> {
        let n = self.nodes.len();
        let neighbours: Vec<Vec<usize>> = (0..n)
            .map(|i| {
                self.upper[i]
                    .iter()
                    .chain(&self.lower[i])
                    .copied()
                    .collect()
            })
            .collect();
        let mut order = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut counter = 0;
        let mut bridges = Vec::new();
        for root in 0..n {
            if order[root] != usize::MAX {
                continue;
            }
            // (node, parent, next neighbour position)
            let mut stack = vec![(root, usize::MAX, 0usize)];
            order[root] = counter;
            low[root] = counter;
            counter += 1;
            while let Some(&mut (v, parent, ref mut pos)) = stack.last_mut() {
                if *pos < neighbours[v].len() {
                    let w = neighbours[v][*pos];
                    *pos += 1;
                    if w == parent {
                        continue;
                    }
                    if order[w] == usize::MAX {
                        order[w] = counter;
                        low[w] = counter;
                        counter += 1;
                        stack.push((w, v, 0));
                    } else {
                        low[v] = low[v].min(order[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] > order[parent] {
                            let edge = if self.leq(parent, v) {
                                (parent, v)
                            } else {
                                (v, parent)
                            };
                            bridges.push(edge);
                        }
                    }
                }
            }
        }
        bridges.sort_unstable();
        bridges
    }
}
