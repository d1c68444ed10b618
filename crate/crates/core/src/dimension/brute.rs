use crate::closure::Lattice;
use crate::{Error, Result};

pub const BRUTE_MAX_ELEMENTS: usize = 12;
pub const BRUTE_MAX_EXTENSIONS: usize = 2_000;
pub const BRUTE_MAX_DIMENSION: usize = 4;

/// Finite poset as a reflexive `≤` matrix.
#[derive(Clone, Debug)]
pub struct Poset {
    n: usize,
    leq: Vec<Vec<bool>>,
}

impl Poset {
    /// `leq` must be reflexive, antisymmetric and transitive.
    pub fn new(leq: Vec<Vec<bool>>) -> Result<Self> {
        let n = leq.len();
        if leq.iter().any(|row| row.len() != n) {
            return Err(Error::Inconsistency("order matrix is not square".into()));
        }
        for a in 0..n {
            if !leq[a][a] {
                return Err(Error::Inconsistency(format!("{a} ≤ {a} fails")));
            }
            for b in 0..n {
                if a != b && leq[a][b] && leq[b][a] {
                    return Err(Error::Inconsistency(format!("{a} and {b} are equal")));
                }
                for c in 0..n {
                    if leq[a][b] && leq[b][c] && !leq[a][c] {
                        return Err(Error::Inconsistency(format!(
                            "{a} ≤ {b} ≤ {c} is not transitive"
                        )));
                    }
                }
            }
        }
        Ok(Poset { n, leq })
    }

    pub fn from_lattice(lattice: &Lattice) -> Self {
        let n = lattice.len();
        let leq = (0..n)
            .map(|a| (0..n).map(|b| lattice.leq(a, b)).collect())
            .collect();
        Poset { n, leq }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    /// Every linear extension, or `None` past `cap`.
    pub fn linear_extensions(&self, cap: usize) -> Option<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        let mut placed = vec![false; self.n];
        let mut prefix = Vec::with_capacity(self.n);
        self.extend(&mut prefix, &mut placed, &mut out, cap)
            .then_some(out)
    }

    fn extend(
        &self,
        prefix: &mut Vec<usize>,
        placed: &mut [bool],
        out: &mut Vec<Vec<usize>>,
        cap: usize,
    ) -> bool {
        if prefix.len() == self.n {
            out.push(prefix.clone());
            return out.len() <= cap;
        }
        for v in 0..self.n {
            if placed[v] || (0..self.n).any(|u| u != v && !placed[u] && self.leq[u][v]) {
                continue;
            }
            placed[v] = true;
            prefix.push(v);
            let ok = self.extend(prefix, placed, out, cap);
            prefix.pop();
            placed[v] = false;
            if !ok {
                return false;
            }
        }
        true
    }
}

/// Order dimension by exhaustive search over sets of linear extensions.
///
/// Every ordered incomparable pair `(a, b)` must have `a` before `b` in some
/// chosen extension. Refuses posets over [`BRUTE_MAX_ELEMENTS`] elements, with
/// more than [`BRUTE_MAX_EXTENSIONS`] extensions, or of dimension above
/// [`BRUTE_MAX_DIMENSION`].
pub fn brute_force_dimension(poset: &Poset) -> Result<usize> {
    let n = poset.len();
    if n > BRUTE_MAX_ELEMENTS {
        return Err(Error::OracleCap(format!(
            "{n} elements exceed {BRUTE_MAX_ELEMENTS}"
        )));
    }
    if n == 0 {
        return Ok(0);
    }
    let extensions = poset
        .linear_extensions(BRUTE_MAX_EXTENSIONS)
        .ok_or_else(|| {
            Error::OracleCap(format!(
                "more than {BRUTE_MAX_EXTENSIONS} linear extensions"
            ))
        })?;
    let mut targets = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a != b && !poset.leq(a, b) && !poset.leq(b, a) {
                targets.push((a, b));
            }
        }
    }
    if targets.is_empty() {
        return Ok(1);
    }
    // bit k of covers[e] is set when extension e puts targets[k] in order
    let words = targets.len().div_ceil(64);
    let covers: Vec<Vec<u64>> = extensions
        .iter()
        .map(|ext| {
            let mut pos = vec![0; n];
            for (i, &v) in ext.iter().enumerate() {
                pos[v] = i;
            }
            let mut bits = vec![0u64; words];
            for (k, &(a, b)) in targets.iter().enumerate() {
                if pos[a] < pos[b] {
                    bits[k / 64] |= 1 << (k % 64);
                }
            }
            bits
        })
        .collect();
    for t in 2..=BRUTE_MAX_DIMENSION {
        if cover_search(&covers, &vec![0u64; words], targets.len(), t) {
            return Ok(t);
        }
    }
    Err(Error::OracleCap(format!(
        "dimension exceeds {BRUTE_MAX_DIMENSION}"
    )))
}

fn cover_search(covers: &[Vec<u64>], covered: &[u64], total: usize, left: usize) -> bool {
    let Some(k) = (0..total).find(|&k| covered[k / 64] & (1 << (k % 64)) == 0) else {
        return true;
    };
    if left == 0 {
        return false;
    }
    for c in covers.iter().filter(|c| c[k / 64] & (1 << (k % 64)) != 0) {
        let next: Vec<u64> = covered.iter().zip(c).map(|(a, b)| a | b).collect();
        if cover_search(covers, &next, total, left - 1) {
            return true;
        }
    }
    false
}
