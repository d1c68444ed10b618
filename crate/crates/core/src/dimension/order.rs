use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use super::coloring::{chromatic_number, Coloring, Hypergraph};
use super::{CriticalPair, CycleHypergraph};
use crate::closure::Lattice;
use crate::{Error, Result};

/// Lattices up to this many nodes get the full pairwise intersection check in
/// [`verify_realizer`].
pub const REALIZER_PAIRWISE_LIMIT: usize = 6_000;

/// Whether some linear extension puts `B` below `A` for every pair in `pairs`.
///
/// The order is augmented with `B → A` for each pair and tested for a cycle.
/// Any cycle passes through added edges, and between two of them it climbs
/// the order from some `A` to some `B`, so it suffices to work on the
/// sub-order spanned by the pairs' own nodes.
pub fn is_reversible(lattice: &Lattice, pairs: &[CriticalPair]) -> bool {
    let mut local: HashMap<usize, usize> = HashMap::new();
    let mut nodes = Vec::new();
    for p in pairs {
        for id in [p.closure_node, p.copoint_node] {
            local.entry(id).or_insert_with(|| {
                nodes.push(id);
                nodes.len() - 1
            });
        }
    }
    let m = nodes.len();
    let mut succ = vec![Vec::new(); m];
    for (i, &a) in nodes.iter().enumerate() {
        for (j, &b) in nodes.iter().enumerate() {
            if i != j && lattice.leq(a, b) {
                succ[i].push(j);
            }
        }
    }
    for p in pairs {
        succ[local[&p.copoint_node]].push(local[&p.closure_node]);
    }
    let mut indegree = vec![0usize; m];
    for s in &succ {
        for &j in s {
            indegree[j] += 1;
        }
    }
    let mut ready: Vec<usize> = (0..m).filter(|&i| indegree[i] == 0).collect();
    let mut seen = 0;
    while let Some(i) = ready.pop() {
        seen += 1;
        for &j in &succ[i] {
            indegree[j] -= 1;
            if indegree[j] == 0 {
                ready.push(j);
            }
        }
    }
    seen == m
}

/// A family of linear extensions, each a list of lattice nodes from bottom
/// to top.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realizer {
    pub extensions: Vec<Vec<usize>>,
}

/// Smallest-id-first topological order of the lattice with `B` forced below
/// `A` for every pair given.
pub fn linear_extension_reversing(lattice: &Lattice, pairs: &[CriticalPair]) -> Option<Vec<usize>> {
    let n = lattice.len();
    let mut extra: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut indegree: Vec<usize> = (0..n).map(|i| lattice.lower_covers(i).len()).collect();
    for p in pairs {
        extra[p.copoint_node].push(p.closure_node);
        indegree[p.closure_node] += 1;
    }
    let mut heap: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&i| indegree[i] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(i)) = heap.pop() {
        order.push(i);
        for &j in lattice.upper_covers(i).iter().chain(&extra[i]) {
            indegree[j] -= 1;
            if indegree[j] == 0 {
                heap.push(Reverse(j));
            }
        }
    }
    (order.len() == n).then_some(order)
}

/// Checks that every extension is a linear extension, that every critical
/// pair is reversed somewhere, and (up to [`REALIZER_PAIRWISE_LIMIT`] nodes)
/// that every incomparable pair appears in both orders, i.e. the
/// intersection of the extensions is exactly the lattice order.
pub fn verify_realizer(
    lattice: &Lattice,
    realizer: &Realizer,
    pairs: &[CriticalPair],
) -> std::result::Result<(), String> {
    let n = lattice.len();
    let mut positions = Vec::with_capacity(realizer.extensions.len());
    for (k, ext) in realizer.extensions.iter().enumerate() {
        let mut pos = vec![usize::MAX; n];
        for (i, &node) in ext.iter().enumerate() {
            if node >= n || pos[node] != usize::MAX {
                return Err(format!("extension {k} is not a permutation of the lattice"));
            }
            pos[node] = i;
        }
        if ext.len() != n {
            return Err(format!("extension {k} misses nodes"));
        }
        if let Some((a, b)) = lattice.cover_edges().find(|&(a, b)| pos[a] > pos[b]) {
            return Err(format!(
                "extension {k} puts node {b} below node {a} against the order"
            ));
        }
        positions.push(pos);
    }
    for p in pairs {
        if !positions
            .iter()
            .any(|pos| pos[p.copoint_node] < pos[p.closure_node])
        {
            return Err(format!(
                "critical pair ({}, {}) is never reversed",
                p.closure_node, p.copoint_node
            ));
        }
    }
    if n <= REALIZER_PAIRWISE_LIMIT {
        for a in 0..n {
            for b in a + 1..n {
                if lattice.leq(a, b) || lattice.leq(b, a) {
                    continue;
                }
                let ab = positions.iter().any(|pos| pos[a] < pos[b]);
                let ba = positions.iter().any(|pos| pos[b] < pos[a]);
                if !(ab && ba) {
                    return Err(format!(
                        "incomparable nodes {a}, {b} appear in one order only"
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Minimum number of reversible classes covering the critical pairs, with the
/// class of each pair. Backtracking, starting from `lower_bound`.
pub fn partition_dimension(
    lattice: &Lattice,
    pairs: &[CriticalPair],
    lower_bound: usize,
) -> (usize, Vec<usize>) {
    let m = pairs.len();
    if m == 0 {
        return (1, Vec::new());
    }
    // pairs in more irreversible couples first
    let conflicts: Vec<usize> = (0..m)
        .map(|i| {
            (0..m)
                .filter(|&j| j != i && !is_reversible(lattice, &[pairs[i], pairs[j]]))
                .count()
        })
        .collect();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&i| (Reverse(conflicts[i]), i));
    for t in lower_bound.max(1)..=m {
        let mut classes: Vec<Vec<CriticalPair>> = Vec::new();
        let mut assignment = vec![usize::MAX; m];
        if assign(lattice, pairs, &order, 0, t, &mut classes, &mut assignment) {
            return (t, assignment);
        }
    }
    unreachable!("singleton classes are always reversible")
}

fn assign(
    lattice: &Lattice,
    pairs: &[CriticalPair],
    order: &[usize],
    depth: usize,
    t: usize,
    classes: &mut Vec<Vec<CriticalPair>>,
    assignment: &mut Vec<usize>,
) -> bool {
    let Some(&i) = order.get(depth) else {
        return true;
    };
    for c in 0..classes.len() {
        classes[c].push(pairs[i]);
        if is_reversible(lattice, &classes[c]) {
            assignment[i] = c;
            if assign(lattice, pairs, order, depth + 1, t, classes, assignment) {
                return true;
            }
        }
        classes[c].pop();
    }
    if classes.len() < t {
        classes.push(vec![pairs[i]]);
        assignment[i] = classes.len() - 1;
        if assign(lattice, pairs, order, depth + 1, t, classes, assignment) {
            return true;
        }
        classes.pop();
    }
    assignment[i] = usize::MAX;
    false
}

/// Order dimension computed by both routes, plus a realizer.
#[derive(Clone, Debug)]
pub struct OrderDimension {
    /// Minimum partition of the critical pairs into reversible classes.
    pub by_partition: usize,
    /// Chromatic number of the cycle hypergraph (1 when there are no pairs).
    pub by_hypergraph: usize,
    pub classes: Vec<usize>,
    pub hypergraph_coloring: Coloring,
    pub realizer: Realizer,
}

impl OrderDimension {
    pub fn agree(&self) -> bool {
        self.by_partition == self.by_hypergraph
    }

    pub fn value(&self) -> usize {
        self.by_partition
    }
}

/// Both routes without asserting agreement; callers that want the
/// assertion use [`order_dimension`].
pub fn order_dimension_unchecked(
    lattice: &Lattice,
    pairs: &[CriticalPair],
    hypergraph: &CycleHypergraph,
    graph_chromatic: usize,
) -> Result<OrderDimension> {
    if !hypergraph.complete {
        return Err(Error::IncompleteHypergraph {
            lower: graph_chromatic.max(1),
            upper: pairs.len().max(1),
        });
    }
    let (by_partition, classes) = partition_dimension(lattice, pairs, graph_chromatic);
    let coloring = chromatic_number(&Hypergraph::new(pairs.len(), hypergraph.hyperedges.clone()));
    let by_hypergraph = coloring.count.max(1);
    let extensions = if pairs.is_empty() {
        vec![linear_extension_reversing(lattice, &[]).expect("lattice is acyclic")]
    } else {
        (0..by_partition)
            .map(|c| {
                let class: Vec<CriticalPair> = (0..pairs.len())
                    .filter(|&i| classes[i] == c)
                    .map(|i| pairs[i])
                    .collect();
                linear_extension_reversing(lattice, &class).expect("class is reversible")
            })
            .collect()
    };
    Ok(OrderDimension {
        by_partition,
        by_hypergraph,
        classes,
        hypergraph_coloring: coloring,
        realizer: Realizer { extensions },
    })
}

/// Order dimension with both routes asserted equal and the realizer verified.
pub fn order_dimension(
    lattice: &Lattice,
    pairs: &[CriticalPair],
    hypergraph: &CycleHypergraph,
    graph_chromatic: usize,
) -> Result<OrderDimension> {
    let dim = order_dimension_unchecked(lattice, pairs, hypergraph, graph_chromatic)?;
    if !dim.agree() {
        return Err(Error::Inconsistency(format!(
            "reversible partition gives {}, hypergraph colouring gives {}",
            dim.by_partition, dim.by_hypergraph
        )));
    }
    verify_realizer(lattice, &dim.realizer, pairs).map_err(Error::Inconsistency)?;
    Ok(dim)
}
