use serde::{Deserialize, Serialize};

use super::cdim::{convex_dimension, ChainCover};
use super::coloring::{chromatic_number, Coloring, Hypergraph};
use super::graph::CopointGraph;
use super::order::{order_dimension_unchecked, OrderDimension};
use super::verify::{verify_suite, LawOutcome};
use super::{
    critical_pairs_definitional, critical_pairs_from_copoints, minimal_cycles, CriticalDigraph,
    CriticalPair, CycleHypergraph, DEFINITIONAL_SCAN_LIMIT,
};
use crate::closure::{
    copoints, independence_number, is_atomic, ConvexGeometry, Copoint, ElemSet, TwoEdgeConnectivity,
};
use crate::geometry::{is_general_position, planar_copoints, PointSet};
use crate::{Error, Result};

#[derive(Clone, Debug, Default)]
pub struct AnalysisOptions {
    /// Longest cycle to enumerate; any cap that bites leaves `dim` unknown.
    pub cycle_cap: Option<usize>,
}

/// Everything computed about one geometry.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub geometry: ConvexGeometry,
    pub points: Option<PointSet>,
    pub copoints: Vec<Copoint>,
    /// Copoints read off circular sequences; planar general-position input only.
    pub planar_copoints: Option<Vec<Copoint>>,
    pub atomic: bool,
    pub two_edge: TwoEdgeConnectivity,
    pub pairs: Vec<CriticalPair>,
    /// `None` above [`DEFINITIONAL_SCAN_LIMIT`] closed sets.
    pub definitional_pairs: Option<Vec<(usize, usize)>>,
    pub digraph: CriticalDigraph,
    pub hypergraph: CycleHypergraph,
    pub graph: CopointGraph,
    pub graph_coloring: Coloring,
    pub max_clique: Vec<usize>,
    /// Chromatic number of the mutual-edge graph on critical pairs.
    pub pair_graph_chromatic: usize,
    /// `None` when the cycle enumeration was capped.
    pub dimension: Option<OrderDimension>,
    pub chain_cover: ChainCover,
    pub independence: (usize, ElemSet),
}

impl Analysis {
    pub fn n(&self) -> usize {
        self.geometry.n()
    }

    pub fn dim(&self) -> Option<usize> {
        self.dimension.as_ref().map(OrderDimension::value)
    }

    pub fn chi_g(&self) -> usize {
        self.graph_coloring.count
    }

    pub fn chi_h(&self) -> Option<usize> {
        self.dimension.as_ref().map(|d| d.by_hypergraph)
    }

    pub fn omega_g(&self) -> usize {
        self.max_clique.len()
    }

    pub fn b(&self) -> usize {
        self.independence.0
    }

    pub fn cdim(&self) -> usize {
        self.chain_cover.width
    }

    pub fn large_hyperedges(&self) -> Vec<&Vec<usize>> {
        self.hypergraph.large_hyperedges().collect()
    }

    pub fn report(&self) -> AnalysisReport {
        AnalysisReport::new(self, &verify_suite(self))
    }
}

/// Runs the whole pipeline. Disagreements between independent routes are left
/// for [`verify_suite`] to report rather than raised here.
pub fn analyze(
    geometry: ConvexGeometry,
    points: Option<PointSet>,
    options: &AnalysisOptions,
) -> Result<Analysis> {
    let cps = copoints(&geometry);
    let planar = match &points {
        Some(p) if p.len() >= 2 && is_general_position(p) => Some(planar_copoints(p)?),
        _ => None,
    };
    let pairs = critical_pairs_from_copoints(&geometry, &cps);
    let definitional = (geometry.lattice().len() <= DEFINITIONAL_SCAN_LIMIT)
        .then(|| critical_pairs_definitional(geometry.lattice()));
    let digraph = CriticalDigraph::new(geometry.lattice(), &pairs);
    let hypergraph = minimal_cycles(&digraph, options.cycle_cap);
    let graph = CopointGraph::new(&cps);
    let graph_coloring = graph.chromatic();
    let max_clique = graph.max_clique();
    let pair_graph_chromatic =
        chromatic_number(&Hypergraph::graph(pairs.len(), &hypergraph.graph_edges())).count;
    let dimension = match order_dimension_unchecked(
        geometry.lattice(),
        &pairs,
        &hypergraph,
        pair_graph_chromatic,
    ) {
        Ok(d) => Some(d),
        Err(Error::IncompleteHypergraph { .. }) => None,
        Err(e) => return Err(e),
    };
    let chain_cover = convex_dimension(&cps);
    let independence = independence_number(&geometry);
    Ok(Analysis {
        atomic: is_atomic(&geometry),
        two_edge: geometry.two_edge_connectivity(),
        geometry,
        points,
        copoints: cps,
        planar_copoints: planar,
        pairs,
        definitional_pairs: definitional,
        digraph,
        hypergraph,
        graph,
        graph_coloring,
        max_clique,
        pair_graph_chromatic,
        dimension,
        chain_cover,
        independence,
    })
}

/// Planar entry point.
pub fn analyze_points(points: &PointSet, options: &AnalysisOptions) -> Result<Analysis> {
    let g = ConvexGeometry::from_planar(points)?;
    analyze(g, Some(points.clone()), options)
}

/// Serializable summary with witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub closed_sets: usize,
    pub copoints: usize,
    pub critical_pairs: usize,
    pub atomic: bool,
    pub two_edge_connected: bool,
    pub hypergraph_complete: bool,
    pub hyperedges: usize,
    pub large_hyperedges: usize,
    /// `None` when the cycle enumeration was capped; see the bounds.
    pub dim: Option<usize>,
    pub dim_lower: usize,
    pub dim_upper: usize,
    pub dim_partition: Option<usize>,
    pub dim_hypergraph: Option<usize>,
    pub cdim: usize,
    pub b: usize,
    #[serde(rename = "chiG")]
    pub chi_g: usize,
    #[serde(rename = "chiH")]
    pub chi_h: Option<usize>,
    #[serde(rename = "omegaG")]
    pub omega_g: usize,
    pub witnesses: Witnesses,
    pub laws: Vec<LawOutcome>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    pub copoints: Vec<String>,
    pub critical_pairs: Vec<String>,
    pub large_hyperedges: Vec<Vec<String>>,
    /// Each extension as closed sets from bottom to top.
    pub realizer: Vec<Vec<String>>,
    /// Colour per copoint, in copoint order.
    pub graph_coloring: Vec<usize>,
    /// Colour per critical pair, in pair order.
    pub hypergraph_coloring: Vec<usize>,
    pub chain_cover: Vec<Vec<String>>,
    pub max_antichain: Vec<String>,
    pub max_clique: Vec<String>,
    pub max_independent_set: Vec<String>,
}

impl AnalysisReport {
    pub fn new(a: &Analysis, laws: &[LawOutcome]) -> Self {
        let g = &a.geometry;
        let lattice = g.lattice();
        let copoint = |i: usize| a.copoints[i].render(g);
        let dim = a.dimension.as_ref();
        AnalysisReport {
            n: a.n(),
            closed_sets: lattice.len(),
            copoints: a.copoints.len(),
            critical_pairs: a.pairs.len(),
            atomic: a.atomic,
            two_edge_connected: a.two_edge.by_bridges(),
            hypergraph_complete: a.hypergraph.complete,
            hyperedges: a.hypergraph.hyperedges.len(),
            large_hyperedges: a.large_hyperedges().len(),
            dim: dim.map(OrderDimension::value),
            dim_lower: dim.map_or(a.pair_graph_chromatic.max(1), OrderDimension::value),
            dim_upper: dim.map_or(a.pairs.len().max(1), OrderDimension::value),
            dim_partition: dim.map(|d| d.by_partition),
            dim_hypergraph: dim.map(|d| d.by_hypergraph),
            cdim: a.cdim(),
            b: a.b(),
            chi_g: a.chi_g(),
            chi_h: a.chi_h(),
            omega_g: a.omega_g(),
            witnesses: Witnesses {
                copoints: (0..a.copoints.len()).map(copoint).collect(),
                critical_pairs: a.pairs.iter().map(|p| p.render(g)).collect(),
                large_hyperedges: a
                    .large_hyperedges()
                    .iter()
                    .map(|e| e.iter().map(|&i| a.pairs[i].render(g)).collect())
                    .collect(),
                realizer: dim
                    .map(|d| {
                        d.realizer
                            .extensions
                            .iter()
                            .map(|ext| ext.iter().map(|&id| g.render(lattice.node(id))).collect())
                            .collect()
                    })
                    .unwrap_or_default(),
                graph_coloring: a.graph_coloring.colors.clone(),
                hypergraph_coloring: dim
                    .map(|d| d.hypergraph_coloring.colors.clone())
                    .unwrap_or_default(),
                chain_cover: a
                    .chain_cover
                    .chains
                    .iter()
                    .map(|c| c.iter().map(|&i| copoint(i)).collect())
                    .collect(),
                max_antichain: a
                    .chain_cover
                    .antichain
                    .iter()
                    .map(|&i| copoint(i))
                    .collect(),
                max_clique: a.max_clique.iter().map(|&i| copoint(i)).collect(),
                max_independent_set: g.ground().labels_of(a.independence.1),
            },
            laws: laws.to_vec(),
        }
    }
}
