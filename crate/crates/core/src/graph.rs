use std::fmt::Write as _;
use std::sync::Arc;

use thiserror::Error;

use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("graph has {0} vertices; at most {MAX_VERTICES} are supported")]
    Capacity(usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("vertices {0} and {1} lie in different components")]
    DifferentComponents(usize, usize),
    #[error("cartesian product needs at least one factor")]
    EmptyProduct,
    #[error("cartesian product factor {0} has no vertices")]
    EmptyFactor(usize),
}

/// Immutable simple undirected graph on vertices `0..n`.
///
/// Products built by [`crate::cartesian_product`] remember their factors so that
/// grids and product outcome shortcuts can be recognized without re-inferring
/// the structure from adjacency.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    factors: Option<Arc<[Graph]>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::Capacity(n));
        }
        Ok(Graph { n, adj: vec![VertexSet::EMPTY; n], factors: None })
    }

    /// Builds a graph from an edge list. Duplicate edges are ignored.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for x in [u, v] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub(crate) fn with_factors(mut self, factors: Vec<Graph>) -> Self {
        self.factors = Some(factors.into());
        self
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    /// Factor graphs when this graph was built as a cartesian product.
    pub fn factors(&self) -> Option<&[Graph]> {
        self.factors.as_deref()
    }

    /// Vertices reachable from `start` without leaving `within`.
    pub fn reachable_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v];
            }
            next = (next & within) - seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reachable_within(0, self.vertices()) == self.vertices()
    }

    /// Whether `set` induces a connected subgraph (the empty set counts as connected).
    pub fn is_connected_within(&self, set: VertexSet) -> bool {
        match set.first() {
            None => true,
            Some(v) => self.reachable_within(v, set) == set,
        }
    }

    /// Subgraph induced by `set`, relabelled to `0..set.len()` in ascending
    /// order. The second element maps new ids back to ids in `self`.
    pub fn induced(&self, set: VertexSet) -> (Graph, Vec<usize>) {
        let map = set.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| (self.adj[v] & set).iter().map(|w| index[w]).collect())
            .collect();
        (Graph { n: map.len(), adj, factors: None }, map)
    }

    /// Serializes to the edge-list text format understood by [`parse_graph`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges()).finish()
    }
}

/// Parses the edge-list format: `#` comments, a header line `n <count>`, then
/// one `<u> <v>` pair per line.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut graph: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_err = |message: String| GraphError::Parse { line: line_no, message };
        let mut tokens = line.split_whitespace();
        match graph.as_mut() {
            None => {
                if tokens.next() != Some("n") {
                    return Err(parse_err("expected header `n <count>`".into()));
                }
                let count = tokens
                    .next()
                    .ok_or_else(|| parse_err("missing vertex count".into()))?
                    .parse::<usize>()
                    .map_err(|e| parse_err(format!("bad vertex count: {e}")))?;
                if tokens.next().is_some() {
                    return Err(parse_err("trailing tokens after vertex count".into()));
                }
                graph = Some(Graph::empty(count)?);
            }
            Some(g) => {
                let mut endpoint = || -> Result<usize, GraphError> {
                    tokens
                        .next()
                        .ok_or_else(|| parse_err("expected two vertex ids".into()))?
                        .parse::<usize>()
                        .map_err(|e| parse_err(format!("bad vertex id: {e}")))
                };
                let u = endpoint()?;
                let v = endpoint()?;
                if tokens.next().is_some() {
                    return Err(parse_err("trailing tokens after edge".into()));
                }
                g.add_edge(u, v)?;
            }
        }
    }
    graph.ok_or(GraphError::Parse { line: 0, message: "missing header `n <count>`".into() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_single_edge() {
        let g = parse_graph("n 2\n0 1").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn parses_triangle_with_comments_and_duplicates() {
        let g = parse_graph("# triangle\nn 3\n0 1\n\n1 2\n2 0\n# dup\n1 0\n").unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!((0..3).all(|v| g.degree(v) == 2));
    }

    #[test]
    fn rejects_self_loop() {
        assert_eq!(parse_graph("n 4\n0 1\n1 1"), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn rejects_out_of_range_and_garbage() {
        assert_eq!(
            parse_graph("n 3\n0 3"),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert!(matches!(parse_graph("n 3\n0 x"), Err(GraphError::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("0 1"), Err(GraphError::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("n 3\n0"), Err(GraphError::Parse { .. })));
        assert!(matches!(parse_graph(""), Err(GraphError::Parse { .. })));
        assert_eq!(parse_graph("n 129"), Err(GraphError::Capacity(129)));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = parse_graph("n 5\n0 1\n1 2\n2 3\n1 4").unwrap();
        assert_eq!(parse_graph(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn induced_relabels_in_order() {
        let g = parse_graph("n 5\n0 1\n1 2\n2 3\n3 4").unwrap();
        let (h, map) = g.induced([1, 2, 4].into_iter().collect());
        assert_eq!(map, vec![1, 2, 4]);
        assert_eq!(h.edges(), vec![(0, 1)]);
    }

    #[test]
    fn connectivity() {
        assert!(parse_graph("n 3\n0 1\n1 2").unwrap().is_connected());
        assert!(!parse_graph("n 4\n0 1\n2 3").unwrap().is_connected());
        assert!(Graph::empty(0).unwrap().is_connected());
    }
}
