use std::fmt;

use serde::{Deserialize, Serialize};

use super::analysis::Analysis;
use super::cdim::{max_antichain, verify_chain_cover, ANTICHAIN_CHECK_LIMIT};
use super::graph::matches_mutual_edges;
use super::order::verify_realizer;
use super::same_pairs;
use crate::closure::{extreme_points, ClosureOperator, ElemSet};
use crate::geometry::{
    check_composition, circular_local_sequence, is_general_position, CompositionTree, PointSet,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LawStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawOutcome {
    pub law: String,
    pub status: LawStatus,
    /// Witness on failure, reason when skipped.
    pub detail: String,
}

impl LawOutcome {
    fn new(law: &str, result: Result<(), String>) -> Self {
        let (status, detail) = match result {
            Ok(()) => (LawStatus::Pass, String::new()),
            Err(w) => (LawStatus::Fail, w),
        };
        LawOutcome {
            law: law.to_string(),
            status,
            detail,
        }
    }

    fn skipped(law: &str, reason: &str) -> Self {
        LawOutcome {
            law: law.to_string(),
            status: LawStatus::Skipped,
            detail: reason.to_string(),
        }
    }

    pub fn failed(&self) -> bool {
        self.status == LawStatus::Fail
    }
}

impl fmt::Display for LawOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            LawStatus::Pass => "PASS",
            LawStatus::Fail => "FAIL",
            LawStatus::Skipped => "SKIP",
        };
        write!(f, "{status}  {}", self.law)?;
        if !self.detail.is_empty() {
            write!(f, "  ({})", self.detail)?;
        }
        Ok(())
    }
}

pub const LAW_PAIRS: &str = "critical pairs via copoints equal the definitional scan";
pub const LAW_TWO_EDGE: &str =
    "bridge search agrees with the copoint criterion for 2-edge-connectivity";
pub const LAW_ATOMIC: &str =
    "atomic geometry: 2-edge-connected, one critical pair per copoint, closure side a singleton";
pub const LAW_GRAPH: &str = "copoint graph matches the mutual edges of the critical digraph";
pub const LAW_DIM_ROUTES: &str =
    "reversible partition and hypergraph colouring give the same dimension";
pub const LAW_DIM_GRAPH: &str = "dimension is at least the chromatic number of the pair graph";
pub const LAW_REALIZER: &str = "realizer intersects to the lattice order";
pub const LAW_CYCLE_DISTINCT: &str = "long cycle attach points are distinct";
pub const LAW_CYCLE_CHORDS: &str = "long cycles are chord-free";
pub const LAW_CYCLE_INCOMPARABLE: &str = "long cycle copoints are pairwise incomparable";
pub const LAW_CYCLE_EXTREME: &str = "long cycle attach points are not extreme";
pub const LAW_CONVEX_POSITION: &str = "attach points of long cycles are in convex position";
pub const LAW_PLANAR_COPOINTS: &str = "circular-sequence copoints equal the definitional copoints";
pub const LAW_COMPOSITION: &str = "composition slope and abscissa conditions";
pub const LAW_BLOCKS: &str = "sibling parts are blocks of circular sequences";
pub const LAW_SPLIT_CONTAINMENT: &str = "copoint reaching into a sibling part contains all of it";
pub const LAW_LEAF_CONTAINMENT: &str = "copoint reaching into another leaf contains all of it";
pub const LAW_LEAF_HYPEREDGES: &str = "large hyperedges attach inside one leaf";
pub const LAW_SINGLETONS: &str = "composition of singletons has no large hyperedges";
pub const LAW_SIZE_BOUND: &str = "point count at most 2^(dim-1)";
pub const LAW_CHAIN: &str = "cdim >= dim >= b";
pub const LAW_CLIQUE: &str = "clique number of the copoint graph equals b";
pub const LAW_DILWORTH: &str = "chain cover and antichain certify the width";

/// Evaluates every applicable law. Composition laws need a point set with a
/// tree, planar laws a general-position point set.
pub fn verify_suite(a: &Analysis) -> Vec<LawOutcome> {
    let mut out = Vec::new();
    let g = &a.geometry;
    let lattice = g.lattice();

    out.push(match &a.definitional_pairs {
        Some(def) => LawOutcome::new(
            LAW_PAIRS,
            check(same_pairs(&a.pairs, def), || {
                format!(
                    "{} via copoints, {} by definition",
                    a.pairs.len(),
                    def.len()
                )
            }),
        ),
        None => LawOutcome::skipped(LAW_PAIRS, "lattice too large for the definitional scan"),
    });

    let two_edge = a.two_edge.by_bridges();
    out.push(LawOutcome::new(
        LAW_TWO_EDGE,
        check(two_edge == a.two_edge.by_copoints(), || {
            format!(
                "{} bridges, {} copoints comparable with their attach closure",
                a.two_edge.bridges.len(),
                a.two_edge.comparable_copoints.len()
            )
        }),
    ));

    out.push(if !a.atomic {
        LawOutcome::skipped(LAW_ATOMIC, "not atomic")
    } else if a.n() < 2 {
        LawOutcome::skipped(LAW_ATOMIC, "needs at least two elements")
    } else {
        LawOutcome::new(LAW_ATOMIC, atomic_law(a))
    });

    out.push(if two_edge {
        LawOutcome::new(LAW_GRAPH, matches_mutual_edges(&a.graph, &a.digraph))
    } else {
        LawOutcome::skipped(LAW_GRAPH, "not 2-edge-connected")
    });

    match &a.dimension {
        Some(d) => {
            out.push(LawOutcome::new(
                LAW_DIM_ROUTES,
                check(d.agree(), || {
                    format!(
                        "partition {}, colouring {}",
                        d.by_partition, d.by_hypergraph
                    )
                }),
            ));
            out.push(LawOutcome::new(
                LAW_DIM_GRAPH,
                check(d.value() >= a.pair_graph_chromatic, || {
                    format!("dim {} < {}", d.value(), a.pair_graph_chromatic)
                }),
            ));
            out.push(LawOutcome::new(
                LAW_REALIZER,
                verify_realizer(lattice, &d.realizer, &a.pairs),
            ));
        }
        None => {
            for law in [LAW_DIM_ROUTES, LAW_DIM_GRAPH, LAW_REALIZER] {
                out.push(LawOutcome::skipped(law, "cycle enumeration was capped"));
            }
        }
    }

    cycle_laws(a, &mut out);

    let planar = a
        .points
        .as_ref()
        .filter(|p| p.len() >= 2 && is_general_position(p));
    match planar {
        Some(points) => {
            out.push(LawOutcome::new(LAW_CONVEX_POSITION, convex_position(a)));
            out.push(match &a.planar_copoints {
                Some(pc) => LawOutcome::new(
                    LAW_PLANAR_COPOINTS,
                    check(pc == &a.copoints, || {
                        format!(
                            "{} from sequences, {} by definition",
                            pc.len(),
                            a.copoints.len()
                        )
                    }),
                ),
                None => LawOutcome::skipped(LAW_PLANAR_COPOINTS, "no planar copoints computed"),
            });
            out.push(match a.dim() {
                Some(dim) => LawOutcome::new(
                    LAW_SIZE_BOUND,
                    check(
                        dim >= 64 || points.len() as u128 <= 1u128 << (dim - 1),
                        || format!("{} points, dim {dim}", points.len()),
                    ),
                ),
                None => LawOutcome::skipped(LAW_SIZE_BOUND, "dimension unknown"),
            });
            match points.tree() {
                Some(tree) => composition_laws(a, points, tree, &mut out),
                None => {
                    for law in [
                        LAW_COMPOSITION,
                        LAW_BLOCKS,
                        LAW_SPLIT_CONTAINMENT,
                        LAW_LEAF_CONTAINMENT,
                        LAW_LEAF_HYPEREDGES,
                        LAW_SINGLETONS,
                    ] {
                        out.push(LawOutcome::skipped(law, "no composition tree"));
                    }
                }
            }
        }
        None => {
            for law in [
                LAW_CONVEX_POSITION,
                LAW_PLANAR_COPOINTS,
                LAW_SIZE_BOUND,
                LAW_COMPOSITION,
                LAW_BLOCKS,
                LAW_SPLIT_CONTAINMENT,
                LAW_LEAF_CONTAINMENT,
                LAW_LEAF_HYPEREDGES,
                LAW_SINGLETONS,
            ] {
                out.push(LawOutcome::skipped(law, "not a general-position point set"));
            }
        }
    }

    out.push(LawOutcome::new(
        LAW_CHAIN,
        match a.dim() {
            Some(dim) => check(a.cdim() >= dim && dim >= a.b(), || {
                format!("cdim {}, dim {dim}, b {}", a.cdim(), a.b())
            }),
            None => check(a.cdim() >= a.b(), || {
                format!("cdim {} < b {}", a.cdim(), a.b())
            }),
        },
    ));
    out.push(LawOutcome::new(
        LAW_CLIQUE,
        check(a.omega_g() == a.b(), || {
            format!("omega {}, b {}", a.omega_g(), a.b())
        }),
    ));
    out.push(LawOutcome::new(LAW_DILWORTH, dilworth(a)));
    out
}

fn check(ok: bool, witness: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(witness())
    }
}

fn atomic_law(a: &Analysis) -> Result<(), String> {
    let g = &a.geometry;
    if !a.two_edge.by_bridges() {
        return Err(format!(
            "{} bridges in an atomic geometry",
            a.two_edge.bridges.len()
        ));
    }
    if a.pairs.len() != a.copoints.len() {
        return Err(format!(
            "{} pairs for {} copoints",
            a.pairs.len(),
            a.copoints.len()
        ));
    }
    for p in &a.pairs {
        if g.lattice().node(p.closure_node) != ElemSet::singleton(p.attach) {
            return Err(format!(
                "{} has a closure side larger than its attach point",
                p.render(g)
            ));
        }
    }
    for i in 0..a.pairs.len() {
        for j in 0..a.pairs.len() {
            let member = g
                .lattice()
                .node(a.pairs[i].copoint_node)
                .contains(a.pairs[j].attach);
            if a.digraph.has_edge(i, j) != member {
                return Err(format!(
                    "edge {} -> {} disagrees with attach membership",
                    a.pairs[i].render(g),
                    a.pairs[j].render(g)
                ));
            }
        }
    }
    Ok(())
}

fn render_cycle(a: &Analysis, cycle: &[usize]) -> String {
    let parts: Vec<String> = cycle
        .iter()
        .map(|&i| a.pairs[i].render(&a.geometry))
        .collect();
    parts.join(" -> ")
}

fn cycle_laws(a: &Analysis, out: &mut Vec<LawOutcome>) {
    let g = &a.geometry;
    let extreme = extreme_points(g);
    let mut distinct = Ok(());
    let mut chords = Ok(());
    let mut incomparable = Ok(());
    let mut not_extreme = Ok(());
    // the observations concern cycles of length at least 3
    for cycle in a.hypergraph.cycles.iter().filter(|c| c.len() > 2) {
        let l = cycle.len();
        let attach: Vec<usize> = cycle.iter().map(|&i| a.pairs[i].attach).collect();
        let sets: Vec<ElemSet> = cycle
            .iter()
            .map(|&i| g.lattice().node(a.pairs[i].copoint_node))
            .collect();
        if distinct.is_ok() && ElemSet::from_elems(attach.iter().copied()).len() != l {
            distinct = Err(render_cycle(a, cycle));
        }
        if chords.is_ok() {
            let bad = (0..l).any(|i| {
                (0..l).any(|j| {
                    let step = j == (i + 1) % l;
                    // the digraph edge and the attach-membership form must both hold
                    a.digraph.has_edge(cycle[i], cycle[j]) != step
                        || (!step && sets[i].contains(attach[j]))
                })
            });
            if bad {
                chords = Err(render_cycle(a, cycle));
            }
        }
        if incomparable.is_ok()
            && (0..l).any(|i| (0..l).any(|j| i != j && sets[i].is_subset(sets[j])))
        {
            incomparable = Err(render_cycle(a, cycle));
        }
        if not_extreme.is_ok() && attach.iter().any(|&p| extreme.contains(p)) {
            not_extreme = Err(render_cycle(a, cycle));
        }
    }
    out.push(LawOutcome::new(LAW_CYCLE_DISTINCT, distinct));
    out.push(LawOutcome::new(LAW_CYCLE_CHORDS, chords));
    out.push(LawOutcome::new(LAW_CYCLE_INCOMPARABLE, incomparable));
    out.push(LawOutcome::new(LAW_CYCLE_EXTREME, not_extreme));
}

/// Every attach point of a cycle of length at least 3 lies outside the hull
/// of the others.
fn convex_position(a: &Analysis) -> Result<(), String> {
    let g = &a.geometry;
    for cycle in a.hypergraph.cycles.iter().filter(|c| c.len() >= 3) {
        let attach = ElemSet::from_elems(cycle.iter().map(|&i| a.pairs[i].attach));
        if let Some(p) = attach
            .iter()
            .find(|&p| g.close(attach.without(p)).contains(p))
        {
            return Err(format!(
                "{} lies in the hull of {}",
                g.ground().label(p),
                g.render(attach.without(p))
            ));
        }
    }
    Ok(())
}

fn composition_laws(
    a: &Analysis,
    points: &PointSet,
    tree: &CompositionTree,
    out: &mut Vec<LawOutcome>,
) {
    let g = &a.geometry;
    let splits = tree.splits();
    let leaves = tree.leaves();

    let conditions = splits
        .iter()
        .try_for_each(|(l, r)| check_composition(points, l, r));
    out.push(LawOutcome::new(LAW_COMPOSITION, conditions));

    let mut blocks = Ok(());
    'outer: for p in 0..points.len() {
        let seq = match circular_local_sequence(points, p) {
            Ok(s) => s,
            Err(e) => {
                blocks = Err(e.to_string());
                break;
            }
        };
        for (l, r) in &splits {
            let sibling = if l.contains(&p) {
                r
            } else if r.contains(&p) {
                l
            } else {
                continue;
            };
            if !seq.has_block(sibling) {
                let labels: Vec<&str> = sibling
                    .iter()
                    .map(|&i| points.points()[i].label.as_str())
                    .collect();
                blocks = Err(format!(
                    "{{{}}} is not a block around {}",
                    labels.join(","),
                    points.points()[p].label
                ));
                break 'outer;
            }
        }
    }
    out.push(LawOutcome::new(LAW_BLOCKS, blocks));

    let part = |members: &[usize]| ElemSet::from_elems(members.iter().copied());
    let crossing = |parts: &[(ElemSet, ElemSet)]| -> Result<(), String> {
        for c in &a.copoints {
            for &(home, other) in parts {
                if home.contains(c.attach)
                    && !c.set.intersection(other).is_empty()
                    && !other.is_subset(c.set)
                {
                    return Err(format!(
                        "{} meets {} without containing it",
                        c.render(g),
                        g.render(other)
                    ));
                }
            }
        }
        Ok(())
    };
    let split_parts: Vec<(ElemSet, ElemSet)> = splits
        .iter()
        .flat_map(|(l, r)| [(part(l), part(r)), (part(r), part(l))])
        .collect();
    out.push(LawOutcome::new(
        LAW_SPLIT_CONTAINMENT,
        crossing(&split_parts),
    ));
    let leaf_sets: Vec<ElemSet> = leaves.iter().map(|l| part(l)).collect();
    let leaf_parts: Vec<(ElemSet, ElemSet)> = leaf_sets
        .iter()
        .enumerate()
        .flat_map(|(i, &home)| {
            leaf_sets
                .iter()
                .enumerate()
                .filter(move |&(j, _)| j != i)
                .map(move |(_, &other)| (home, other))
        })
        .collect();
    out.push(LawOutcome::new(LAW_LEAF_CONTAINMENT, crossing(&leaf_parts)));

    let large = a.large_hyperedges();
    let inside = large.iter().try_for_each(|e| {
        let attach = ElemSet::from_elems(e.iter().map(|&i| a.pairs[i].attach));
        check(leaf_sets.iter().any(|&l| attach.is_subset(l)), || {
            format!("attach points {} span several leaves", g.render(attach))
        })
    });
    out.push(LawOutcome::new(LAW_LEAF_HYPEREDGES, inside));

    out.push(if leaves.iter().all(|l| l.len() == 1) {
        LawOutcome::new(
            LAW_SINGLETONS,
            check(large.is_empty(), || render_cycle(a, large[0])),
        )
    } else {
        LawOutcome::skipped(LAW_SINGLETONS, "some leaf has more than one point")
    });
}

fn dilworth(a: &Analysis) -> Result<(), String> {
    verify_chain_cover(&a.copoints, &a.chain_cover)?;
    if a.copoints.len() <= ANTICHAIN_CHECK_LIMIT {
        let exact = max_antichain(&a.copoints).len();
        if exact != a.chain_cover.width {
            return Err(format!(
                "exact antichain {exact}, chain cover {}",
                a.chain_cover.width
            ));
        }
    }
    Ok(())
}
