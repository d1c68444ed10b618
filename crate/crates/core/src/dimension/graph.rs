use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;

use super::coloring::{chromatic_number, max_clique, Coloring, Hypergraph};
use super::{CriticalDigraph, CriticalPair};
use crate::closure::Copoint;

/// Graph on copoints: `A ~ B` when each contains the other's attach element.
#[derive(Clone, Debug)]
pub struct CopointGraph {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
}

impl CopointGraph {
    pub fn new(copoints: &[Copoint]) -> Self {
        let m = copoints.len();
        let mut edges = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                if copoints[j].set.contains(copoints[i].attach)
                    && copoints[i].set.contains(copoints[j].attach)
                {
                    edges.push((i, j));
                }
            }
        }
        CopointGraph {
            vertex_count: m,
            edges,
        }
    }

    pub fn adjacency(&self) -> Vec<FixedBitSet> {
        self.as_hypergraph().adjacency()
    }

    pub fn as_hypergraph(&self) -> Hypergraph {
        Hypergraph::graph(self.vertex_count, &self.edges)
    }

    pub fn chromatic(&self) -> Coloring {
        chromatic_number(&self.as_hypergraph())
    }

    pub fn max_clique(&self) -> Vec<usize> {
        max_clique(&self.adjacency())
    }
}

/// Whether mapping each critical pair to its copoint is an isomorphism from
/// the mutual-edge graph of the critical digraph onto the copoint graph.
/// Needs every copoint to give a critical pair.
pub fn matches_mutual_edges(graph: &CopointGraph, digraph: &CriticalDigraph) -> Result<(), String> {
    let pairs: &[CriticalPair] = digraph.pairs();
    if pairs.len() != graph.vertex_count {
        return Err(format!(
            "{} critical pairs for {} copoints",
            pairs.len(),
            graph.vertex_count
        ));
    }
    let mapped: BTreeSet<(usize, usize)> = digraph
        .mutual_edges()
        .into_iter()
        .map(|(i, j)| {
            let (a, b) = (pairs[i].copoint, pairs[j].copoint);
            (a.min(b), a.max(b))
        })
        .collect();
    let own: BTreeSet<(usize, usize)> = graph.edges.iter().copied().collect();
    if mapped == own {
        Ok(())
    } else {
        Err(format!(
            "mutual edges give {} copoint adjacencies, the copoint graph has {}",
            mapped.len(),
            own.len()
        ))
    }
}
