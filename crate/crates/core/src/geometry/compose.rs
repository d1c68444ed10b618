use std::collections::HashSet;

use num_traits::{One, Zero};

use super::point::{CompositionTree, Point, PointSet, Rational};
use super::predicates::require_general_position;
use crate::{Error, Result};

/// Largest `i + j` accepted by [`es`] unless the guard is lifted.
pub const ES_MAX_ORDER: usize = 12;
/// Largest `k` accepted by [`xes`] unless the guard is lifted.
pub const XES_MAX_K: usize = 5;

fn slope(a: &Point, b: &Point) -> Rational {
    (&b.y - &a.y) / (&b.x - &a.x)
}

/// Every pair within `set`, with its slope. Errors on a vertical pair.
fn internal_slopes(set: &PointSet) -> Result<Vec<Rational>> {
    let pts = set.points();
    let mut out = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if pts[i].x == pts[j].x {
                return Err(Error::VerticalPair(
                    pts[i].label.clone(),
                    pts[j].label.clone(),
                ));
            }
            out.push(slope(&pts[i], &pts[j]));
        }
    }
    Ok(out)
}

fn min_max<'a>(values: impl Iterator<Item = &'a Rational>) -> (Rational, Rational) {
    let mut lo: Option<&Rational> = None;
    let mut hi: Option<&Rational> = None;
    for v in values {
        if lo.is_none_or(|l| v < l) {
            lo = Some(v);
        }
        if hi.is_none_or(|h| v > h) {
            hi = Some(v);
        }
    }
    (
        lo.expect("non-empty").clone(),
        hi.expect("non-empty").clone(),
    )
}

fn fresh_label(label: &str, taken: &HashSet<String>) -> Result<String> {
    if !taken.contains(label) {
        return Ok(label.to_string());
    }
    for suffix in 1..=taken.len() + 1 {
        let candidate = format!("{label}'{suffix}");
        if !taken.contains(&candidate) {
            return Ok(candidate);
        }
    }
    Err(Error::DuplicateLabel(label.to_string()))
}

/// Composition of `left` and `right`: `left` together with a translate of
/// `right` lying strictly to its right, such that every slope between the two
/// parts exceeds every slope inside either part.
///
/// The translation is explicit: `right` is shifted so that its leftmost point
/// sits one unit right of the rightmost point of `left`, then raised by
/// `max_y(left) - min_y(right) + S·D + 1`, where `S` is the largest internal
/// slope (clamped at zero) and `D` the horizontal extent of the result.
pub fn compose(left: &PointSet, right: &PointSet) -> Result<PointSet> {
    for part in [left, right] {
        if part.is_empty() {
            return Err(Error::TooFewPoints { needed: 1, got: 0 });
        }
        require_general_position(part)?;
    }
    let mut slopes = internal_slopes(left)?;
    slopes.extend(internal_slopes(right)?);
    let max_slope = slopes
        .into_iter()
        .max()
        .unwrap_or_else(Rational::zero)
        .max(Rational::zero());

    let (left_min_x, left_max_x) = min_max(left.points().iter().map(|p| &p.x));
    let (_, left_max_y) = min_max(left.points().iter().map(|p| &p.y));
    let (right_min_x, right_max_x) = min_max(right.points().iter().map(|p| &p.x));
    let (right_min_y, _) = min_max(right.points().iter().map(|p| &p.y));

    let dx = &left_max_x + Rational::one() - &right_min_x;
    let extent = &right_max_x + &dx - &left_min_x;
    let dy = &left_max_y - &right_min_y + &max_slope * &extent + Rational::one();

    let mut taken: HashSet<String> = left.labels().into_iter().collect();
    taken.extend(right.labels());
    let mut points = left.points().to_vec();
    for p in right.points() {
        let label = if left.index_of(&p.label).is_ok() {
            fresh_label(&p.label, &taken)?
        } else {
            p.label.clone()
        };
        taken.insert(label.clone());
        points.push(Point::new(label, &p.x + &dx, &p.y + &dy));
    }

    let left_tree = left
        .tree()
        .cloned()
        .unwrap_or_else(|| CompositionTree::leaf((0..left.len()).collect()));
    let right_tree = right
        .tree()
        .cloned()
        .unwrap_or_else(|| CompositionTree::leaf((0..right.len()).collect()))
        .shifted(left.len());
    PointSet::new(points)?.with_tree(CompositionTree::node(left_tree, right_tree))
}

/// Checks both composition conditions over every pair of points, returning a
/// description of the first violation.
pub fn check_composition(
    set: &PointSet,
    left: &[usize],
    right: &[usize],
) -> std::result::Result<(), String> {
    let pts = set.points();
    let left_max_x = left.iter().map(|&i| &pts[i].x).max();
    let right_min_x = right.iter().map(|&i| &pts[i].x).min();
    if let (Some(lx), Some(rx)) = (left_max_x, right_min_x) {
        if rx <= lx {
            return Err("a right-hand point is not strictly right of every left-hand point".into());
        }
    }
    let mut internal_max: Option<(Rational, (usize, usize))> = None;
    for part in [left, right] {
        for (a, &i) in part.iter().enumerate() {
            for &j in &part[a + 1..] {
                if pts[i].x == pts[j].x {
                    return Err(format!(
                        "{} and {} are vertical",
                        pts[i].label, pts[j].label
                    ));
                }
                let s = slope(&pts[i], &pts[j]);
                if internal_max.as_ref().is_none_or(|(m, _)| &s > m) {
                    internal_max = Some((s, (i, j)));
                }
            }
        }
    }
    if let Some((max, (a, b))) = internal_max {
        for &i in left {
            for &j in right {
                if slope(&pts[i], &pts[j]) <= max {
                    return Err(format!(
                        "cross slope {}-{} does not exceed internal slope {}-{}",
                        pts[i].label, pts[j].label, pts[a].label, pts[b].label
                    ));
                }
            }
        }
    }
    Ok(())
}

fn singleton() -> PointSet {
    PointSet::new(vec![Point::new("p", Rational::zero(), Rational::zero())])
        .expect("valid singleton")
        .with_tree(CompositionTree::leaf(vec![0]))
        .expect("valid tree")
}

/// Relabels points `p0, p1, ...` in index order, keeping the tree.
fn relabel(set: PointSet) -> PointSet {
    let tree = set.tree().cloned();
    let points = set
        .points()
        .iter()
        .enumerate()
        .map(|(i, p)| Point::new(format!("p{i}"), p.x.clone(), p.y.clone()))
        .collect();
    let out = PointSet::new(points).expect("fresh labels are unique");
    match tree {
        Some(t) => out.with_tree(t).expect("tree unchanged"),
        None => out,
    }
}

fn es_raw(i: usize, j: usize) -> Result<PointSet> {
    if i == 0 || j == 0 {
        return Ok(singleton());
    }
    compose(&es_raw(i - 1, j)?, &es_raw(i, j - 1)?)
}

/// The Erdős–Szekeres set `ES(i, j)` with `C(i + j, i)` points, labelled
/// `p0..` from left to right.
pub fn es(i: usize, j: usize) -> Result<PointSet> {
    es_guarded(i, j, true)
}

pub fn es_guarded(i: usize, j: usize, guard: bool) -> Result<PointSet> {
    if guard && i + j > ES_MAX_ORDER {
        return Err(Error::SizeGuard(format!(
            "es({i}, {j}): i + j must be at most {ES_MAX_ORDER}"
        )));
    }
    es_raw(i, j).map(relabel)
}

/// `XES(k)`: the left-to-right composition of `ES(0, k), ES(1, k - 1), ...,
/// ES(k, 0)`; it has `2^k` points.
pub fn xes(k: usize) -> Result<PointSet> {
    xes_guarded(k, true)
}

pub fn xes_guarded(k: usize, guard: bool) -> Result<PointSet> {
    if k == 0 {
        return Err(Error::SizeGuard("xes(k) needs k >= 1".into()));
    }
    if guard && k > XES_MAX_K {
        return Err(Error::SizeGuard(format!(
            "xes({k}): k must be at most {XES_MAX_K}"
        )));
    }
    let mut acc = es_raw(0, k)?;
    for i in 1..=k {
        acc = relabel(compose(&acc, &es_raw(i, k - i)?)?);
    }
    Ok(relabel(acc))
}
