use fixedbitset::FixedBitSet;

use super::coloring::max_clique;
use crate::closure::Copoint;

/// Copoint counts up to this size also get the clique-based antichain check.
pub const ANTICHAIN_CHECK_LIMIT: usize = 40;

/// Minimum chain cover of the copoints under inclusion, with an antichain of
/// the same size as a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainCover {
    pub width: usize,
    /// Copoint indices, each chain from smallest to largest.
    pub chains: Vec<Vec<usize>>,
    pub antichain: Vec<usize>,
}

/// Convex dimension: width of the copoint poset.
///
/// Chains come from a maximum matching of `i → j` (`C_i ⊂ C_j`) and the
/// antichain from König's construction on the same matching.
pub fn convex_dimension(copoints: &[Copoint]) -> ChainCover {
    let m = copoints.len();
    let below: Vec<Vec<usize>> = (0..m)
        .map(|i| {
            (0..m)
                .filter(|&j| copoints[i].set.is_proper_subset(copoints[j].set))
                .collect()
        })
        .collect();
    let mut match_right: Vec<Option<usize>> = vec![None; m];
    for i in 0..m {
        let mut seen = vec![false; m];
        augment(i, &below, &mut match_right, &mut seen);
    }
    let mut next: Vec<Option<usize>> = vec![None; m];
    let mut has_prev = vec![false; m];
    for (j, left) in match_right.iter().enumerate() {
        if let Some(i) = *left {
            next[i] = Some(j);
            has_prev[j] = true;
        }
    }
    let chains: Vec<Vec<usize>> = (0..m)
        .filter(|&i| !has_prev[i])
        .map(|start| {
            let mut chain = vec![start];
            while let Some(j) = next[*chain.last().expect("non-empty")] {
                chain.push(j);
            }
            chain
        })
        .collect();

    // alternating reachability from unmatched left vertices
    let mut matched_left = vec![false; m];
    for i in match_right.iter().flatten() {
        matched_left[*i] = true;
    }
    let mut left_seen = vec![false; m];
    let mut right_seen = vec![false; m];
    let mut stack: Vec<usize> = (0..m).filter(|&i| !matched_left[i]).collect();
    for &i in &stack {
        left_seen[i] = true;
    }
    while let Some(i) = stack.pop() {
        for &j in &below[i] {
            if !right_seen[j] {
                right_seen[j] = true;
                if let Some(k) = match_right[j] {
                    if !left_seen[k] {
                        left_seen[k] = true;
                        stack.push(k);
                    }
                }
            }
        }
    }
    let antichain: Vec<usize> = (0..m).filter(|&i| left_seen[i] && !right_seen[i]).collect();
    debug_assert_eq!(antichain.len(), chains.len());
    ChainCover {
        width: chains.len(),
        chains,
        antichain,
    }
}

fn augment(
    i: usize,
    below: &[Vec<usize>],
    match_right: &mut [Option<usize>],
    seen: &mut [bool],
) -> bool {
    for &j in &below[i] {
        if seen[j] {
            continue;
        }
        seen[j] = true;
        if match_right[j].is_none_or(|k| augment(k, below, match_right, seen)) {
            match_right[j] = Some(i);
            return true;
        }
    }
    false
}

/// Checks the cover partitions the copoints into chains, the antichain is
/// one, and both have the stated size; i.e. Dilworth's equality holds.
pub fn verify_chain_cover(copoints: &[Copoint], cover: &ChainCover) -> Result<(), String> {
    let m = copoints.len();
    let mut used = vec![false; m];
    for chain in &cover.chains {
        for w in chain.windows(2) {
            if !copoints[w[0]].set.is_proper_subset(copoints[w[1]].set) {
                return Err(format!(
                    "copoints {} and {} are not a chain step",
                    w[0], w[1]
                ));
            }
        }
        for &i in chain {
            if std::mem::replace(&mut used[i], true) {
                return Err(format!("copoint {i} is in two chains"));
            }
        }
    }
    if used.iter().any(|u| !u) {
        return Err("chains miss a copoint".into());
    }
    for (x, &a) in cover.antichain.iter().enumerate() {
        for &b in &cover.antichain[x + 1..] {
            if copoints[a].set.comparable(copoints[b].set) {
                return Err(format!("antichain members {a} and {b} are comparable"));
            }
        }
    }
    if cover.chains.len() != cover.width || cover.antichain.len() != cover.width {
        return Err(format!(
            "{} chains and an antichain of {} for width {}",
            cover.chains.len(),
            cover.antichain.len(),
            cover.width
        ));
    }
    Ok(())
}

/// Largest antichain by exact maximum clique in the incomparability graph.
pub fn max_antichain(copoints: &[Copoint]) -> Vec<usize> {
    let m = copoints.len();
    let adj: Vec<FixedBitSet> = (0..m)
        .map(|i| {
            let mut row = FixedBitSet::with_capacity(m);
            for j in (0..m).filter(|&j| j != i && !copoints[i].set.comparable(copoints[j].set)) {
                row.insert(j);
            }
            row
        })
        .collect();
    max_clique(&adj)
}
