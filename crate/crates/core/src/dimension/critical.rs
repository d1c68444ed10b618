use std::collections::BTreeSet;

use crate::closure::{copoints, ClosureOperator, ConvexGeometry, Copoint, ElemSet, Lattice};
use crate::{Error, Result};

/// Lattices above this size skip the definitional cross-check in
/// [`critical_pairs`]; the scan is quadratic in the number of closed sets.
pub const DEFINITIONAL_SCAN_LIMIT: usize = 20_000;

/// Critical pair `(ℓ(p), B)` of the lattice of closed sets, where `B` is a
/// copoint attached to `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CriticalPair {
    /// Lattice node of `ℓ(attach)`.
    pub closure_node: usize,
    /// Lattice node of the copoint.
    pub copoint_node: usize,
    pub attach: usize,
    /// Position of the copoint in the canonical copoint list.
    pub copoint: usize,
}

impl CriticalPair {
    pub fn nodes(&self) -> (usize, usize) {
        (self.closure_node, self.copoint_node)
    }

    /// `(p, {copoint})`-style rendering.
    pub fn render(&self, g: &ConvexGeometry) -> String {
        format!(
            "({}, {})",
            g.ground().label(self.attach),
            g.render(g.lattice().node(self.copoint_node))
        )
    }
}

/// Every incomparable ordered pair `(A, B)` with `U > B ⇒ U > A` and
/// `D < A ⇒ D < B`, straight from the definition of a critical pair.
///
/// The quantifiers over `U` and `D` only need the covers: every `U > B` lies
/// above an upper cover of `B`, and every `D < A` below a lower cover of `A`.
/// Returned as sorted `(A node, B node)` pairs.
pub fn critical_pairs_definitional(lattice: &Lattice) -> Vec<(usize, usize)> {
    let n = lattice.len();
    let up_meet: Vec<ElemSet> = (0..n)
        .map(|b| {
            lattice
                .upper_covers(b)
                .iter()
                .fold(ElemSet(u32::MAX), |acc, &u| {
                    acc.intersection(lattice.node(u))
                })
        })
        .collect();
    let down_join: Vec<ElemSet> = (0..n)
        .map(|a| {
            lattice
                .lower_covers(a)
                .iter()
                .fold(ElemSet::EMPTY, |acc, &d| acc.union(lattice.node(d)))
        })
        .collect();
    let mut out = Vec::new();
    for (a, below) in down_join.iter().enumerate() {
        let aset = lattice.node(a);
        for (b, above) in up_meet.iter().enumerate() {
            let bset = lattice.node(b);
            if aset.comparable(bset) {
                continue;
            }
            if aset.is_subset(*above) && below.is_subset(bset) {
                out.push((a, b));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Critical pairs through copoints: `(ℓ(α(B)), B)` for every copoint `B`
/// incomparable with the closure of its attach element. Ordered by copoint.
pub fn critical_pairs_from_copoints(g: &ConvexGeometry, copoints: &[Copoint]) -> Vec<CriticalPair> {
    let lattice = g.lattice();
    copoints
        .iter()
        .enumerate()
        .filter_map(|(i, c)| {
            let closure = g.close(ElemSet::singleton(c.attach));
            (!closure.comparable(c.set)).then(|| CriticalPair {
                closure_node: lattice.id_of(closure).expect("closure is closed"),
                copoint_node: lattice.id_of(c.set).expect("copoint is closed"),
                attach: c.attach,
                copoint: i,
            })
        })
        .collect()
}

/// Whether the copoint route and the definitional scan give the same pairs.
pub fn same_pairs(pairs: &[CriticalPair], definitional: &[(usize, usize)]) -> bool {
    let a: BTreeSet<(usize, usize)> = pairs.iter().map(CriticalPair::nodes).collect();
    let b: BTreeSet<(usize, usize)> = definitional.iter().copied().collect();
    a.len() == pairs.len() && a == b
}

/// Critical pairs via copoints, cross-checked against the definitional scan
/// when the lattice is at most [`DEFINITIONAL_SCAN_LIMIT`] nodes.
pub fn critical_pairs(g: &ConvexGeometry) -> Result<Vec<CriticalPair>> {
    let pairs = critical_pairs_from_copoints(g, &copoints(g));
    if g.lattice().len() <= DEFINITIONAL_SCAN_LIMIT {
        let definitional = critical_pairs_definitional(g.lattice());
        if !same_pairs(&pairs, &definitional) {
            return Err(Error::Inconsistency(format!(
                "copoint route found {} critical pairs, definitional scan {}",
                pairs.len(),
                definitional.len()
            )));
        }
    }
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::fixtures::nonatomic_bridgeless_geometry;
    use crate::closure::GroundSet;
    use crate::geometry::fixtures::three_trees;

    fn render_nodes(g: &ConvexGeometry, pairs: &[(usize, usize)]) -> BTreeSet<(String, String)> {
        pairs
            .iter()
            .map(|&(a, b)| (g.render(g.lattice().node(a)), g.render(g.lattice().node(b))))
            .collect()
    }

    #[test]
    fn chain_has_no_critical_pairs() {
        let ground = GroundSet::from_strs(&["a", "b", "c"]).unwrap();
        let sets: Vec<Vec<&str>> = vec![vec![], vec!["a"], vec!["a", "b"], vec!["a", "b", "c"]];
        let g = ConvexGeometry::from_labelled_sets(ground, &sets).unwrap();
        assert!(critical_pairs_definitional(g.lattice()).is_empty());
        assert!(critical_pairs(&g).unwrap().is_empty());
    }

    #[test]
    fn nonatomic_bridgeless_pairs_both_routes() {
        let g = nonatomic_bridgeless_geometry();
        let def = critical_pairs_definitional(g.lattice());
        let want: BTreeSet<(String, String)> = [
            ("{2,4}", "{1,2,3}"),
            ("{1}", "{2,3,4}"),
            ("{3}", "{1,2}"),
            ("{3}", "{2,4}"),
            ("{2}", "{1}"),
            ("{2}", "{3}"),
        ]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
        assert_eq!(render_nodes(&g, &def), want);
        let pairs = critical_pairs(&g).unwrap();
        assert_eq!(pairs.len(), 6);
        assert!(same_pairs(&pairs, &def));
    }

    #[test]
    fn three_trees_has_one_pair_per_copoint() {
        let g = ConvexGeometry::from_planar(&three_trees()).unwrap();
        let pairs = critical_pairs(&g).unwrap();
        assert_eq!(pairs.len(), copoints(&g).len());
        let rendered: Vec<String> = pairs.iter().map(|p| p.render(&g)).collect();
        assert!(
            rendered.contains(&"(z, {w,v,u})".to_string()),
            "{rendered:?}"
        );
        for p in &pairs {
            assert_eq!(
                g.lattice().node(p.closure_node),
                ElemSet::singleton(p.attach)
            );
        }
    }
}
