//! Hop distances, geodesic intervals and geodetic closure.

use crate::graph::{Graph, GraphError};
use crate::vertex_set::VertexSet;

/// All-pairs hop distances. Vertices in different components are at [`DistanceMatrix::INFINITY`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub const INFINITY: u32 = u32::MAX;

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    #[inline]
    pub fn is_reachable(&self, u: usize, v: usize) -> bool {
        self.get(u, v) != Self::INFINITY
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }
}

/// Breadth-first search from every vertex.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.vertex_count();
    let mut d = vec![DistanceMatrix::INFINITY; n * n];
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        row[s] = 0;
        let mut seen = VertexSet::singleton(s);
        let mut frontier = seen;
        let mut depth = 0;
        while !frontier.is_empty() {
            depth += 1;
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= g.neighbors(v);
            }
            next -= seen;
            for v in next {
                row[v] = depth;
            }
            seen |= next;
            frontier = next;
        }
    }
    DistanceMatrix { n, d }
}

/// `I(u, v)` for every ordered pair: the vertices on at least one shortest `u`–`v` path.
/// Cross-component entries are empty.
#[derive(Clone, Debug)]
pub struct IntervalTable {
    n: usize,
    sets: Vec<VertexSet>,
}

impl IntervalTable {
    pub fn new(dm: &DistanceMatrix) -> Self {
        let n = dm.vertex_count();
        let mut sets = vec![VertexSet::EMPTY; n * n];
        for u in 0..n {
            for v in u..n {
                if !dm.is_reachable(u, v) {
                    continue;
                }
                let duv = dm.get(u, v);
                let set: VertexSet = (0..n)
                    .filter(|&w| {
                        dm.is_reachable(u, w) && dm.get(u, w) + dm.get(w, v) == duv
                    })
                    .collect();
                sets[u * n + v] = set;
                sets[v * n + u] = set;
            }
        }
        IntervalTable { n, sets }
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> VertexSet {
        self.sets[u * self.n + v]
    }

    /// Geodetic closure: union of `I(u, v)` over all pairs of `s` (including `u = v`).
    pub fn closure(&self, s: VertexSet) -> VertexSet {
        let mut acc = s;
        let mut rest = s;
        while let Some(u) = rest.first() {
            rest.remove(u);
            for v in rest {
                acc |= self.get(u, v);
            }
        }
        acc
    }

    /// Closure of `s ∪ {v}` given `closure_of_s`, without recomputing old pairs.
    #[inline]
    pub fn extend_closure(&self, closure_of_s: VertexSet, s: VertexSet, v: usize) -> VertexSet {
        let mut acc = closure_of_s.with(v);
        for u in s {
            acc |= self.get(u, v);
        }
        acc
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }
}

/// `I(u, v)` computed straight from the distance matrix.
pub fn interval(g: &Graph, dm: &DistanceMatrix, u: usize, v: usize) -> Result<VertexSet, GraphError> {
    let n = g.vertex_count();
    for x in [u, v] {
        if x >= n {
            return Err(GraphError::VertexOutOfRange { vertex: x, n });
        }
    }
    if !dm.is_reachable(u, v) {
        return Err(GraphError::DifferentComponents(u, v));
    }
    let duv = dm.get(u, v);
    Ok((0..n)
        .filter(|&w| dm.is_reachable(u, w) && dm.get(u, w) + dm.get(w, v) == duv)
        .collect())
}

/// Geodetic closure of `s` using a precomputed interval table.
pub fn closure(it: &IntervalTable, s: VertexSet) -> VertexSet {
    it.closure(s)
}

/// A graph bundled with its distance matrix and interval table, shared read-only by the solvers.
#[derive(Clone, Debug)]
pub struct Geodesics {
    graph: Graph,
    distances: DistanceMatrix,
    intervals: IntervalTable,
}

impl Geodesics {
    pub fn new(graph: Graph) -> Self {
        let distances = all_pairs_distances(&graph);
        let intervals = IntervalTable::new(&distances);
        Geodesics { graph, distances, intervals }
    }

    #[inline]
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    #[inline]
    pub fn distances(&self) -> &DistanceMatrix {
        &self.distances
    }

    #[inline]
    pub fn intervals(&self) -> &IntervalTable {
        &self.intervals
    }

    #[inline]
    pub fn interval(&self, u: usize, v: usize) -> VertexSet {
        self.intervals.get(u, v)
    }

    #[inline]
    pub fn closure(&self, s: VertexSet) -> VertexSet {
        self.intervals.closure(s)
    }
}
