use convexdim::closure::fixtures::nonatomic_bridgeless_geometry;
use convexdim::closure::{copoints, ConvexGeometry, GroundSet};
use convexdim::dimension::{
    analyze, analyze_points, critical_pairs, is_reversible, AnalysisOptions, CopointGraph,
    CriticalDigraph, CriticalPair,
};
use convexdim::geometry::fixtures::three_trees;
use convexdim::geometry::{circular_local_sequence_by_label, es, xes};

fn edge(g: &ConvexGeometry, a: &str, b: &str) -> bool {
    let cps = copoints(g);
    let graph = CopointGraph::new(&cps);
    let find = |r: &str| {
        cps.iter()
            .position(|c| c.render(g) == r)
            .unwrap_or_else(|| panic!("{r}"))
    };
    let (i, j) = (find(a), find(b));
    graph.edges.contains(&(i.min(j), i.max(j)))
}

#[test]
fn copoint_graph_edges() {
    let g = ConvexGeometry::from_planar(&three_trees()).unwrap();
    assert!(edge(&g, "{x,y,v,u}@z", "{z,w,v,u}@y"));
    let f = nonatomic_bridgeless_geometry();
    assert!(edge(&f, "{1,2}@3", "{3}@2"));
}

#[test]
fn three_trees_cycle_is_not_reversible() {
    let g = ConvexGeometry::from_planar(&three_trees()).unwrap();
    let pairs = critical_pairs(&g).unwrap();
    let pick = |r: &str| -> CriticalPair { *pairs.iter().find(|p| p.render(&g) == r).unwrap() };
    let cycle = [
        pick("(z, {w,v,u})"),
        pick("(v, {x,y,u})"),
        pick("(y, {x,z,w})"),
    ];
    assert!(!is_reversible(g.lattice(), &cycle));
    assert!(is_reversible(g.lattice(), &cycle[..2]));
    let d = CriticalDigraph::new(g.lattice(), &pairs);
    let index = |p: &CriticalPair| pairs.iter().position(|q| q == p).unwrap();
    assert!(d.has_edge(index(&cycle[0]), index(&cycle[1])));
}

#[test]
fn chain_has_empty_digraph_and_dimension_one() {
    let ground = GroundSet::from_strs(&["a", "b"]).unwrap();
    let sets: Vec<Vec<&str>> = vec![vec![], vec!["a"], vec!["a", "b"]];
    let g = ConvexGeometry::from_labelled_sets(ground, &sets).unwrap();
    let a = analyze(g, None, &AnalysisOptions::default()).unwrap();
    assert!(a.digraph.is_empty());
    assert_eq!(a.dim(), Some(1));
    assert_eq!(a.chi_h(), Some(1));
}

#[test]
fn xes_has_no_large_hyperedges() {
    for k in 1..=4 {
        let a = analyze_points(&xes(k).unwrap(), &AnalysisOptions::default()).unwrap();
        assert!(a.large_hyperedges().is_empty(), "k = {k}");
        assert_eq!(a.dim(), Some(k + 1), "k = {k}");
        assert_eq!(a.b(), k + 1, "k = {k}");
    }
}

#[test]
fn degenerate_es_is_a_singleton() {
    assert_eq!(es(0, 7).unwrap().len(), 1);
    assert_eq!(es(7, 0).unwrap().len(), 1);
}

#[test]
fn composition_blocks_in_xes() {
    // in xes(2) = p0 ∘ (p1 ∘ p2) ∘ p3, the middle pair is a block around p0
    let set = xes(2).unwrap();
    let seq = circular_local_sequence_by_label(&set, "p0").unwrap();
    let p1 = set.index_of("p1").unwrap();
    let p2 = set.index_of("p2").unwrap();
    assert!(seq.has_block(&[p1, p2]));
}
