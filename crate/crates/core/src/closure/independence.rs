use super::{ClosureOperator, ConvexGeometry, ElemSet};

/// `B` is independent when no `p ∈ B` lies in `ℓ(B ∖ p)`.
pub fn is_independent<C: ClosureOperator + ?Sized>(closure: &C, set: ElemSet) -> bool {
    set.iter()
        .all(|p| !closure.close(set.without(p)).contains(p))
}

/// Size of a largest independent set, with one witness.
///
/// Depth-first over subsets in increasing element order. Dependence is
/// inherited by supersets (`ℓ` is monotone), so a dependent set prunes its
/// whole subtree; a size bound prunes the rest.
pub fn independence_number(g: &ConvexGeometry) -> (usize, ElemSet) {
    let mut best = ElemSet::EMPTY;
    search(g, ElemSet::EMPTY, 0, &mut best);
    (best.len(), best)
}

fn search(g: &ConvexGeometry, current: ElemSet, next: usize, best: &mut ElemSet) {
    if current.len() > best.len() {
        *best = current;
    }
    let n = g.n();
    for e in next..n {
        if current.len() + (n - e) <= best.len() {
            return;
        }
        let candidate = current.with(e);
        if is_independent(g, candidate) {
            search(g, candidate, e + 1, best);
        }
    }
}
