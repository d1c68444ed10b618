use num_traits::Signed;

use super::point::{Point, PointSet, Rational};
use crate::closure::{ClosureOperator, ElemSet, MAX_ELEMENTS};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    CounterClockwise,
    Clockwise,
    Collinear,
}

impl Orientation {
    pub fn sign(self) -> i8 {
        match self {
            Orientation::CounterClockwise => 1,
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
        }
    }
}

/// Cross product `(q - p) x (r - p)`.
pub fn cross(p: &Point, q: &Point, r: &Point) -> Rational {
    (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x)
}

pub fn orientation(p: &Point, q: &Point, r: &Point) -> Orientation {
    let det = cross(p, q, r);
    if det.is_positive() {
        Orientation::CounterClockwise
    } else if det.is_negative() {
        Orientation::Clockwise
    } else {
        Orientation::Collinear
    }
}

/// First collinear triple in index order, if any.
pub fn collinear_triple(set: &PointSet) -> Option<(usize, usize, usize)> {
    let pts = set.points();
    let n = pts.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if orientation(&pts[i], &pts[j], &pts[k]) == Orientation::Collinear {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

pub fn is_general_position(set: &PointSet) -> bool {
    collinear_triple(set).is_none()
}

pub fn require_general_position(set: &PointSet) -> Result<()> {
    match collinear_triple(set) {
        None => Ok(()),
        Some((i, j, k)) => {
            let pts = set.points();
            Err(Error::NotGeneralPosition(
                pts[i].label.clone(),
                pts[j].label.clone(),
                pts[k].label.clone(),
            ))
        }
    }
}

fn between(a: &Rational, b: &Rational, c: &Rational, v: &Rational) -> bool {
    let lo = a.min(b).min(c);
    let hi = a.max(b).max(c);
    lo <= v && v <= hi
}

/// Whether `p` lies in the closed convex hull of `a`, `b`, `c` (any of which
/// may coincide).
fn in_hull3(p: &Point, a: &Point, b: &Point, c: &Point) -> bool {
    let abc = orientation(a, b, c);
    if abc == Orientation::Collinear {
        // degenerate hull: a segment (or a point) spanned by the extremes
        return orientation(a, b, p) == Orientation::Collinear
            && orientation(a, c, p) == Orientation::Collinear
            && orientation(b, c, p) == Orientation::Collinear
            && between(&a.x, &b.x, &c.x, &p.x)
            && between(&a.y, &b.y, &c.y, &p.y);
    }
    let signs = [
        orientation(a, b, p).sign(),
        orientation(b, c, p).sign(),
        orientation(c, a, p).sign(),
    ];
    !(signs.contains(&1) && signs.contains(&-1))
}

/// Closure `A -> conv(A) ∩ X` of a planar point set.
///
/// Membership is decided once per triple of points up front, so closing a set
/// afterwards is pure bit arithmetic.
#[derive(Clone, Debug)]
pub struct PlanarClosure {
    n: usize,
    // hull[(e * n + a) * n + b]: points of X inside conv{e, a, b}
    hull: Vec<u32>,
}

impl PlanarClosure {
    pub fn new(set: &PointSet) -> Result<Self> {
        let n = set.len();
        if n == 0 {
            return Err(Error::EmptyGround);
        }
        if n > MAX_ELEMENTS {
            return Err(Error::SizeGuard(format!(
                "{n} points exceeds the limit of {MAX_ELEMENTS}"
            )));
        }
        let pts = set.points();
        let mut hull = vec![0u32; n * n * n];
        for e in 0..n {
            for a in e..n {
                for b in a..n {
                    let mut mask = 0u32;
                    for (p, point) in pts.iter().enumerate() {
                        if in_hull3(point, &pts[e], &pts[a], &pts[b]) {
                            mask |= 1 << p;
                        }
                    }
                    for (x, y, z) in [
                        (e, a, b),
                        (e, b, a),
                        (a, e, b),
                        (a, b, e),
                        (b, e, a),
                        (b, a, e),
                    ] {
                        hull[(x * n + y) * n + z] = mask;
                    }
                }
            }
        }
        Ok(PlanarClosure { n, hull })
    }

    #[inline]
    fn hull3(&self, e: usize, a: usize, b: usize) -> u32 {
        self.hull[(e * self.n + a) * self.n + b]
    }

    /// Closure of `closed ∪ {e}` where `closed` is already closed.
    pub fn extend(&self, closed: ElemSet, e: usize) -> ElemSet {
        let mut mask = closed.0 | self.hull3(e, e, e);
        let elems = closed.elems();
        for (i, &a) in elems.iter().enumerate() {
            for &b in &elems[i..] {
                mask |= self.hull3(e, a, b);
            }
        }
        ElemSet(mask)
    }
}

impl ClosureOperator for PlanarClosure {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn close(&self, set: ElemSet) -> ElemSet {
        // conv(C ∪ e) is covered by C and the triangles through e (Carathéodory)
        set.iter().fold(ElemSet::EMPTY, |closed, e| {
            if closed.contains(e) {
                closed
            } else {
                self.extend(closed, e)
            }
        })
    }
}

/// `conv(A) ∩ X` by label, returned in point order.
pub fn planar_closure(set: &PointSet, labels: &[&str]) -> Result<Vec<String>> {
    let indices = labels
        .iter()
        .map(|l| set.index_of(l))
        .collect::<Result<Vec<_>>>()?;
    if indices.is_empty() {
        return Ok(Vec::new());
    }
    let closure = PlanarClosure::new(set)?;
    let closed = closure.close(ElemSet::from_elems(indices));
    Ok(closed
        .iter()
        .map(|i| set.points()[i].label.clone())
        .collect())
}
