use fixedbitset::FixedBitSet;

/// Hypergraph on `0..vertex_count`; edges of size 2 are ordinary graph edges.
#[derive(Clone, Debug, Default)]
pub struct Hypergraph {
    vertex_count: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Edges must have at least two distinct vertices.
    pub fn new(vertex_count: usize, edges: Vec<Vec<usize>>) -> Self {
        let edges = edges
            .into_iter()
            .map(|mut e| {
                e.sort_unstable();
                e.dedup();
                assert!(e.len() >= 2, "hyperedge with fewer than two vertices");
                assert!(
                    e.iter().all(|&v| v < vertex_count),
                    "hyperedge vertex out of range"
                );
                e
            })
            .collect();
        Hypergraph {
            vertex_count,
            edges,
        }
    }

    pub fn graph(vertex_count: usize, edges: &[(usize, usize)]) -> Self {
        Hypergraph::new(
            vertex_count,
            edges.iter().map(|&(a, b)| vec![a, b]).collect(),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Adjacency through edges of size 2 only.
    pub fn adjacency(&self) -> Vec<FixedBitSet> {
        let mut adj = vec![FixedBitSet::with_capacity(self.vertex_count); self.vertex_count];
        for e in self.edges.iter().filter(|e| e.len() == 2) {
            adj[e[0]].insert(e[1]);
            adj[e[1]].insert(e[0]);
        }
        adj
    }
}

/// A proper colouring: no edge has all its vertices the same colour.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub count: usize,
    pub colors: Vec<usize>,
}

pub fn is_proper(h: &Hypergraph, colors: &[usize]) -> bool {
    colors.len() == h.vertex_count
        && h.edges
            .iter()
            .all(|e| e.iter().any(|&v| colors[v] != colors[e[0]]))
}

/// Exact chromatic number with a verified witness.
///
/// Bounds come from a greedy clique (below) and a DSATUR colouring (above);
/// each count in between is tried by DSATUR-ordered backtracking, so the
/// first success is optimal.
pub fn chromatic_number(h: &Hypergraph) -> Coloring {
    let n = h.vertex_count;
    if n == 0 {
        return Coloring {
            count: 0,
            colors: Vec::new(),
        };
    }
    let solver = Solver::new(h);
    let lower = greedy_clique(&solver.adj).len().max(1);
    let mut best = solver.dsatur_greedy();
    for k in lower..best.count {
        if let Some(colors) = solver.color_with(k) {
            best = Coloring { count: k, colors };
            break;
        }
    }
    assert!(
        is_proper(h, &best.colors),
        "colouring witness failed verification"
    );
    best
}

struct Solver<'a> {
    h: &'a Hypergraph,
    adj: Vec<FixedBitSet>,
    degree: Vec<usize>,
    /// Edges of size > 2 through each vertex.
    large: Vec<Vec<usize>>,
}

impl<'a> Solver<'a> {
    fn new(h: &'a Hypergraph) -> Self {
        let n = h.vertex_count;
        let adj = h.adjacency();
        let mut large = vec![Vec::new(); n];
        let mut degree: Vec<usize> = adj.iter().map(|row| row.count_ones(..)).collect();
        for (i, e) in h.edges.iter().enumerate().filter(|(_, e)| e.len() > 2) {
            for &v in e {
                large[v].push(i);
                degree[v] += 1;
            }
        }
        Solver {
            h,
            adj,
            degree,
            large,
        }
    }

    fn allowed(&self, v: usize, color: usize, colors: &[Option<usize>]) -> bool {
        if self.adj[v].ones().any(|u| colors[u] == Some(color)) {
            return false;
        }
        self.large[v].iter().all(|&e| {
            self.h.edges[e]
                .iter()
                .any(|&u| u != v && colors[u] != Some(color))
        })
    }

    /// Uncoloured vertex with the most distinct neighbour colours, then the
    /// highest degree, then the lowest index.
    fn pick(&self, colors: &[Option<usize>]) -> Option<usize> {
        let mut best: Option<(usize, usize, usize)> = None;
        for v in (0..colors.len()).filter(|&v| colors[v].is_none()) {
            let mut seen: Vec<usize> = self.adj[v].ones().filter_map(|u| colors[u]).collect();
            seen.sort_unstable();
            seen.dedup();
            let key = (seen.len(), self.degree[v]);
            if best.is_none_or(|(s, d, _)| key > (s, d)) {
                best = Some((key.0, key.1, v));
            }
        }
        best.map(|(_, _, v)| v)
    }

    fn dsatur_greedy(&self) -> Coloring {
        let n = self.h.vertex_count;
        let mut colors: Vec<Option<usize>> = vec![None; n];
        let mut count = 0;
        while let Some(v) = self.pick(&colors) {
            let c = (0..)
                .find(|&c| self.allowed(v, c, &colors))
                .expect("some colour fits");
            colors[v] = Some(c);
            count = count.max(c + 1);
        }
        Coloring {
            count,
            colors: colors
                .into_iter()
                .map(|c| c.expect("all coloured"))
                .collect(),
        }
    }

    fn color_with(&self, k: usize) -> Option<Vec<usize>> {
        let mut colors: Vec<Option<usize>> = vec![None; self.h.vertex_count];
        if self.backtrack(k, 0, &mut colors) {
            Some(
                colors
                    .into_iter()
                    .map(|c| c.expect("all coloured"))
                    .collect(),
            )
        } else {
            None
        }
    }

    fn backtrack(&self, k: usize, used: usize, colors: &mut Vec<Option<usize>>) -> bool {
        let Some(v) = self.pick(colors) else {
            return true;
        };
        // a fresh colour is interchangeable with any other fresh colour
        for c in 0..k.min(used + 1) {
            if self.allowed(v, c, colors) {
                colors[v] = Some(c);
                if self.backtrack(k, used.max(c + 1), colors) {
                    return true;
                }
                colors[v] = None;
            }
        }
        false
    }
}

/// Greedy clique: repeatedly take the candidate of highest degree.
pub fn greedy_clique(adj: &[FixedBitSet]) -> Vec<usize> {
    let n = adj.len();
    let mut candidates = FixedBitSet::with_capacity(n);
    candidates.insert_range(..);
    let mut clique = Vec::new();
    while let Some(v) = candidates
        .ones()
        .max_by_key(|&v| (adj[v].count_ones(..), std::cmp::Reverse(v)))
    {
        clique.push(v);
        candidates.intersect_with(&adj[v]);
    }
    clique
}

/// Exact maximum clique (Bron–Kerbosch with pivoting), sorted.
pub fn max_clique(adj: &[FixedBitSet]) -> Vec<usize> {
    let n = adj.len();
    let mut best = greedy_clique(adj);
    let mut candidates = FixedBitSet::with_capacity(n);
    candidates.insert_range(..);
    let mut current = Vec::new();
    expand(
        adj,
        &mut current,
        candidates,
        FixedBitSet::with_capacity(n),
        &mut best,
    );
    best.sort_unstable();
    best
}

fn expand(
    adj: &[FixedBitSet],
    current: &mut Vec<usize>,
    mut candidates: FixedBitSet,
    mut excluded: FixedBitSet,
    best: &mut Vec<usize>,
) {
    if candidates.count_ones(..) == 0 {
        if excluded.count_ones(..) == 0 && current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    if current.len() + candidates.count_ones(..) <= best.len() {
        return;
    }
    let pivot = candidates
        .ones()
        .chain(excluded.ones())
        .max_by_key(|&u| adj[u].intersection(&candidates).count())
        .expect("non-empty");
    let branch: Vec<usize> = candidates
        .ones()
        .filter(|&v| !adj[pivot].contains(v))
        .collect();
    for v in branch {
        current.push(v);
        let mut next_c = candidates.clone();
        next_c.intersect_with(&adj[v]);
        let mut next_x = excluded.clone();
        next_x.intersect_with(&adj[v]);
        expand(adj, current, next_c, next_x, best);
        current.pop();
        candidates.set(v, false);
        excluded.insert(v);
    }
}
