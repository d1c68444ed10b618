use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;

use super::CriticalDigraph;

/// Hypergraph whose hyperedges are the vertex sets of the chord-free cycles of
/// the critical digraph.
#[derive(Clone, Debug)]
pub struct CycleHypergraph {
    pub vertex_count: usize,
    /// Every chord-free cycle, as vertices in digraph order starting from
    /// its smallest vertex.
    pub cycles: Vec<Vec<usize>>,
    /// Distinct sorted vertex sets of `cycles`.
    pub hyperedges: Vec<Vec<usize>>,
    /// False when a length cap cut the enumeration short.
    pub complete: bool,
}

impl CycleHypergraph {
    pub fn large_hyperedges(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.hyperedges.iter().filter(|e| e.len() > 2)
    }

    pub fn graph_edges(&self) -> Vec<(usize, usize)> {
        self.hyperedges
            .iter()
            .filter(|e| e.len() == 2)
            .map(|e| (e[0], e[1]))
            .collect()
    }
}

/// Enumerates every cyclic sequence `v1 → v2 → ... → vl → v1` (`l ≥ 2`) of the
/// digraph with no chord, i.e. no edge `vi → vj` for `j` other than the
/// cyclic successor of `i`.
///
/// Depth-first from each start vertex over larger vertices only, so each
/// cycle is produced once, rotated to start at its smallest vertex. A path is
/// extended by `w` only if no earlier path vertex points at `w` and `w`
/// points at no path vertex except possibly the start; reaching the start
/// closes the cycle.
pub fn minimal_cycles(digraph: &CriticalDigraph, max_len: Option<usize>) -> CycleHypergraph {
    let m = digraph.len();
    let cap = max_len.unwrap_or(usize::MAX);
    let mut search = Search {
        digraph,
        cap,
        path: Vec::new(),
        on_path: FixedBitSet::with_capacity(m),
        cycles: Vec::new(),
        truncated: false,
    };
    for start in 0..m {
        search.path.push(start);
        search.on_path.insert(start);
        let forbidden = FixedBitSet::with_capacity(m);
        search.extend(start, &forbidden);
        search.on_path.set(start, false);
        search.path.pop();
    }
    let Search {
        cycles, truncated, ..
    } = search;
    let hyperedges: BTreeSet<Vec<usize>> = cycles
        .iter()
        .map(|c| {
            let mut s = c.clone();
            s.sort_unstable();
            s
        })
        .collect();
    CycleHypergraph {
        vertex_count: m,
        cycles,
        hyperedges: hyperedges.into_iter().collect(),
        complete: !truncated,
    }
}

struct Search<'a> {
    digraph: &'a CriticalDigraph,
    cap: usize,
    path: Vec<usize>,
    on_path: FixedBitSet,
    cycles: Vec<Vec<usize>>,
    truncated: bool,
}

impl Search<'_> {
    /// `forbidden` holds the out-neighbours of every path vertex but the last.
    fn extend(&mut self, start: usize, forbidden: &FixedBitSet) {
        let last = *self.path.last().expect("non-empty path");
        let candidates: Vec<usize> = self
            .digraph
            .out(last)
            .ones()
            .filter(|&w| w > start && !self.on_path.contains(w) && !forbidden.contains(w))
            .collect();
        if candidates.is_empty() {
            return;
        }
        if self.path.len() >= self.cap {
            self.truncated = true;
            return;
        }
        let mut next_forbidden = forbidden.clone();
        next_forbidden.union_with(self.digraph.out(last));
        for w in candidates {
            let back = self.digraph.out(w);
            if self.path[1..].iter().any(|&v| back.contains(v)) {
                continue;
            }
            self.path.push(w);
            if back.contains(start) {
                self.cycles.push(self.path.clone());
            } else {
                self.on_path.insert(w);
                self.extend(start, &next_forbidden);
                self.on_path.set(w, false);
            }
            self.path.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::ConvexGeometry;
    use crate::dimension::{critical_pairs, CriticalPair};
    use crate::geometry::fixtures::three_trees;

    /// Every cyclic sequence of distinct vertices, filtered by the chord-free
    /// condition. Exponential; tiny digraphs only.
    fn brute_force(d: &CriticalDigraph) -> BTreeSet<Vec<usize>> {
        fn rec(d: &CriticalDigraph, path: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
            let l = path.len();
            if l >= 2 {
                let chord_free = (0..l).all(|i| {
                    (0..l).all(|j| {
                        let succ = (i + 1) % l;
                        if j == succ {
                            d.has_edge(path[i], path[j])
                        } else {
                            !d.has_edge(path[i], path[j])
                        }
                    })
                });
                if chord_free {
                    out.insert(path.clone());
                }
            }
            for w in path[0] + 1..d.len() {
                if !path.contains(&w) {
                    path.push(w);
                    rec(d, path, out);
                    path.pop();
                }
            }
        }
        let mut out = BTreeSet::new();
        for s in 0..d.len() {
            rec(d, &mut vec![s], &mut out);
        }
        out
    }

    fn three_trees_digraph() -> (ConvexGeometry, Vec<CriticalPair>, CriticalDigraph) {
        let g = ConvexGeometry::from_planar(&three_trees()).unwrap();
        let pairs = critical_pairs(&g).unwrap();
        let d = CriticalDigraph::new(g.lattice(), &pairs);
        (g, pairs, d)
    }

    fn labelled(g: &ConvexGeometry, pairs: &[CriticalPair], cycle: &[usize]) -> BTreeSet<String> {
        cycle.iter().map(|&i| pairs[i].render(g)).collect()
    }

    #[test]
    fn three_trees_three_cycles() {
        let (g, pairs, d) = three_trees_digraph();
        let h = minimal_cycles(&d, None);
        assert!(h.complete);
        let triples: Vec<BTreeSet<String>> = h
            .large_hyperedges()
            .map(|e| labelled(&g, &pairs, e))
            .collect();
        let first: BTreeSet<String> = ["(z, {w,v,u})", "(v, {x,y,u})", "(y, {x,z,w})"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let second: BTreeSet<String> = ["(z, {x,y,w})", "(y, {x,v,u})", "(v, {z,w,u})"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert!(triples.contains(&first), "{triples:?}");
        assert!(triples.contains(&second), "{triples:?}");
    }

    #[test]
    fn matches_brute_force_on_three_trees() {
        let (_, _, d) = three_trees_digraph();
        let h = minimal_cycles(&d, None);
        let got: BTreeSet<Vec<usize>> = h.cycles.iter().cloned().collect();
        assert_eq!(got.len(), h.cycles.len());
        assert_eq!(got, brute_force(&d));
    }

    #[test]
    fn cap_clears_complete_flag() {
        let (_, _, d) = three_trees_digraph();
        let capped = minimal_cycles(&d, Some(2));
        assert!(!capped.complete);
        assert!(capped.hyperedges.iter().all(|e| e.len() == 2));
        assert!(minimal_cycles(&d, Some(d.len())).complete);
    }

    #[test]
    fn mutual_edge_is_a_two_cycle() {
        let (_, _, d) = three_trees_digraph();
        let h = minimal_cycles(&d, None);
        let two: BTreeSet<(usize, usize)> = h.graph_edges().into_iter().collect();
        let mutual: BTreeSet<(usize, usize)> = d.mutual_edges().into_iter().collect();
        assert_eq!(two, mutual);
    }
}
