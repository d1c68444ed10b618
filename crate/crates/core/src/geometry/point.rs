use std::collections::{HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Exact rational number; always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Parses `"p/q"` or an integer string into a canonical rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::InvalidRational(text.to_string());
    let trimmed = text.trim();
    let (num, den) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Canonical string form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub label: String,
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(label: impl Into<String>, x: Rational, y: Rational) -> Self {
        Point {
            label: label.into(),
            x,
            y,
        }
    }

    /// Convenience constructor from string coordinates, e.g. `("y", "1", "2/5")`.
    pub fn parse(label: &str, x: &str, y: &str) -> Result<Self> {
        Ok(Point::new(label, parse_rational(x)?, parse_rational(y)?))
    }

    pub fn same_position(&self, other: &Point) -> bool {
        self.x == other.x && self.y == other.y
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({}, {})",
            self.label,
            format_rational(&self.x),
            format_rational(&self.y)
        )
    }
}

/// Rooted full binary tree recording how a point set was composed. Every node
/// carries the sorted indices of the points below it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompositionTree {
    Leaf(Vec<usize>),
    Node {
        left: Box<CompositionTree>,
        right: Box<CompositionTree>,
        members: Vec<usize>,
    },
}

impl CompositionTree {
    pub fn leaf(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        CompositionTree::Leaf(members)
    }

    pub fn node(left: CompositionTree, right: CompositionTree) -> Self {
        let mut members: Vec<usize> = left
            .members()
            .iter()
            .chain(right.members())
            .copied()
            .collect();
        members.sort_unstable();
        CompositionTree::Node {
            left: Box::new(left),
            right: Box::new(right),
            members,
        }
    }

    pub fn members(&self) -> &[usize] {
        match self {
            CompositionTree::Leaf(members) => members,
            CompositionTree::Node { members, .. } => members,
        }
    }

    /// Shifts every index by `offset`.
    pub fn shifted(&self, offset: usize) -> Self {
        match self {
            CompositionTree::Leaf(members) => {
                CompositionTree::Leaf(members.iter().map(|i| i + offset).collect())
            }
            CompositionTree::Node { left, right, .. } => {
                CompositionTree::node(left.shifted(offset), right.shifted(offset))
            }
        }
    }

    /// Leaf blocks from left to right.
    pub fn leaves(&self) -> Vec<&[usize]> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a [usize]>) {
        match self {
            CompositionTree::Leaf(members) => out.push(members),
            CompositionTree::Node { left, right, .. } => {
                left.collect_leaves(out);
                right.collect_leaves(out);
            }
        }
    }

    /// Every internal node as a `(left members, right members)` split.
    pub fn splits(&self) -> Vec<(&[usize], &[usize])> {
        let mut out = Vec::new();
        self.collect_splits(&mut out);
        out
    }

    fn collect_splits<'a>(&'a self, out: &mut Vec<(&'a [usize], &'a [usize])>) {
        if let CompositionTree::Node { left, right, .. } = self {
            out.push((left.members(), right.members()));
            left.collect_splits(out);
            right.collect_splits(out);
        }
    }

    fn validate(&self, n: usize) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidTree(msg.to_string()));
        match self {
            CompositionTree::Leaf(members) => {
                if members.is_empty() {
                    return bad("empty leaf");
                }
                if members.windows(2).any(|w| w[0] >= w[1]) {
                    return bad("leaf indices not sorted and distinct");
                }
                if members.iter().any(|&i| i >= n) {
                    return bad("leaf index out of range");
                }
            }
            CompositionTree::Node {
                left,
                right,
                members,
            } => {
                left.validate(n)?;
                right.validate(n)?;
                let l: HashSet<usize> = left.members().iter().copied().collect();
                if right.members().iter().any(|i| l.contains(i)) {
                    return bad("children overlap");
                }
                let mut union: Vec<usize> = left
                    .members()
                    .iter()
                    .chain(right.members())
                    .copied()
                    .collect();
                union.sort_unstable();
                if &union != members {
                    return bad("node members differ from the union of its children");
                }
            }
        }
        Ok(())
    }
}

/// Labelled planar points with exact coordinates and an optional composition
/// tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<Point>,
    tree: Option<CompositionTree>,
}

impl PointSet {
    /// Checks labels (non-empty, unique) and that no two points coincide.
    pub fn new(points: Vec<Point>) -> Result<Self> {
        let mut seen = HashSet::new();
        for p in &points {
            if p.label.is_empty() || p.label.chars().any(char::is_whitespace) {
                return Err(Error::InvalidLabel(p.label.clone()));
            }
            if !seen.insert(p.label.as_str()) {
                return Err(Error::DuplicateLabel(p.label.clone()));
            }
        }
        let mut positions: HashMap<(&Rational, &Rational), &str> = HashMap::new();
        for p in &points {
            if let Some(other) = positions.insert((&p.x, &p.y), &p.label) {
                return Err(Error::DuplicatePoint(other.to_string(), p.label.clone()));
            }
        }
        Ok(PointSet { points, tree: None })
    }

    pub fn with_tree(mut self, tree: CompositionTree) -> Result<Self> {
        tree.validate(self.len())?;
        if tree.members().len() != self.len() {
            return Err(Error::InvalidTree("root does not cover every point".into()));
        }
        self.tree = Some(tree);
        Ok(self)
    }

    pub fn without_tree(mut self) -> Self {
        self.tree = None;
        self
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn tree(&self) -> Option<&CompositionTree> {
        self.tree.as_ref()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn labels(&self) -> Vec<String> {
        self.points.iter().map(|p| p.label.clone()).collect()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.points
            .iter()
            .position(|p| p.label == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn point(&self, label: &str) -> Result<&Point> {
        self.index_of(label).map(|i| &self.points[i])
    }
}
