use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphError};
use crate::structure::{block_cut_tree, edge_count_within, is_clique, is_cycle_within};

/// Graph family used to dispatch to a closed form or a decomposition solver.
///
/// Recognition picks the first matching tag in this order:
/// `Complete > Star > CompleteBipartite > Cycle > Path > Grid > Tree > BlockGraph > Cactus > General`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum GraphClassTag {
    Complete { n: usize },
    /// `K_{1,leaves}` with at least two leaves.
    Star { leaves: usize },
    /// `K_{m,n}` with `2 <= m <= n`.
    CompleteBipartite { m: usize, n: usize },
    Cycle { n: usize },
    Path { n: usize },
    /// Product of paths, known only from product metadata.
    Grid { dims: Vec<usize> },
    Tree,
    BlockGraph,
    Cactus,
    General,
}

impl GraphClassTag {
    pub fn name(&self) -> &'static str {
        match self {
            GraphClassTag::Complete { .. } => "complete",
            GraphClassTag::Star { .. } => "star",
            GraphClassTag::CompleteBipartite { .. } => "complete-bipartite",
            GraphClassTag::Cycle { .. } => "cycle",
            GraphClassTag::Path { .. } => "path",
            GraphClassTag::Grid { .. } => "grid",
            GraphClassTag::Tree => "tree",
            GraphClassTag::BlockGraph => "block-graph",
            GraphClassTag::Cactus => "cactus",
            GraphClassTag::General => "general",
        }
    }
}

/// Most specific family of a connected graph.
pub fn recognize_family(g: &Graph) -> Result<GraphClassTag, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let n = g.vertex_count();
    let m = g.edge_count();
    if n == 0 {
        return Ok(GraphClassTag::General);
    }
    if m == n * (n - 1) / 2 {
        return Ok(GraphClassTag::Complete { n });
    }
    if let Some(leaves) = star_leaves(g) {
        return Ok(GraphClassTag::Star { leaves });
    }
    if let Some((a, b)) = complete_bipartite_parts(g) {
        return Ok(GraphClassTag::CompleteBipartite { m: a.min(b), n: a.max(b) });
    }
    if is_cycle_within(g, g.vertices()) {
        return Ok(GraphClassTag::Cycle { n });
    }
    let is_tree = m + 1 == n;
    if is_tree && (0..n).all(|v| g.degree(v) <= 2) {
        return Ok(GraphClassTag::Path { n });
    }
    if let Some(dims) = grid_dims(g) {
        return Ok(GraphClassTag::Grid { dims });
    }
    if is_tree {
        return Ok(GraphClassTag::Tree);
    }
    if is_block_graph(g) {
        return Ok(GraphClassTag::BlockGraph);
    }
    if is_cactus(g) {
        return Ok(GraphClassTag::Cactus);
    }
    Ok(GraphClassTag::General)
}

fn star_leaves(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    if n < 3 || g.edge_count() != n - 1 {
        return None;
    }
    let centers = (0..n).filter(|&v| g.degree(v) == n - 1).count();
    (centers == 1).then_some(n - 1)
}

/// Part sizes when `g` is a complete bipartite graph with both parts of size at least two.
fn complete_bipartite_parts(g: &Graph) -> Option<(usize, usize)> {
    let n = g.vertex_count();
    // in K_{a,b} the part of vertex 0 is exactly the set of its non-neighbours
    let part_a = g.vertices() - g.neighbors(0);
    let part_b = g.neighbors(0);
    let (a, b) = (part_a.len(), part_b.len());
    if a < 2 || b < 2 || a + b != n || g.edge_count() != a * b {
        return None;
    }
    let ok = part_a.iter().all(|v| g.neighbors(v) == part_b)
        && part_b.iter().all(|v| g.neighbors(v) == part_a);
    ok.then_some((a, b))
}

fn grid_dims(g: &Graph) -> Option<Vec<usize>> {
    let factors = g.factors()?;
    factors
        .iter()
        .map(|f| {
            let n = f.vertex_count();
            let is_path = f.is_connected()
                && f.edge_count() + 1 == n
                && (0..n).all(|v| f.degree(v) <= 2);
            is_path.then_some(n)
        })
        .collect()
}

/// Every block is a clique.
pub fn is_block_graph(g: &Graph) -> bool {
    block_cut_tree(g).blocks.iter().all(|&b| is_clique(g, b))
}

/// Every block is a single edge, a single vertex or a cycle.
pub fn is_cactus(g: &Graph) -> bool {
    block_cut_tree(g)
        .blocks
        .iter()
        .all(|&b| b.len() <= 2 || is_cycle_within(g, b))
}

pub fn is_tree(g: &Graph) -> bool {
    g.is_connected() && g.edge_count() + 1 == g.vertex_count()
}

/// Checks the cactus condition block by block (used by tests as a second route).
pub fn cactus_by_edge_cycles(g: &Graph) -> bool {
    block_cut_tree(g).blocks.iter().all(|&b| edge_count_within(g, b) <= b.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::product::cartesian_product;

    #[test]
    fn recognizes_families() {
        assert_eq!(recognize_family(&generators::cycle(7)), Ok(GraphClassTag::Cycle { n: 7 }));
        assert_eq!(recognize_family(&generators::cycle(3)), Ok(GraphClassTag::Complete { n: 3 }));
        assert_eq!(recognize_family(&generators::path(5)), Ok(GraphClassTag::Path { n: 5 }));
        assert_eq!(recognize_family(&generators::path(3)), Ok(GraphClassTag::Star { leaves: 2 }));
        assert_eq!(recognize_family(&generators::path(1)), Ok(GraphClassTag::Complete { n: 1 }));
        assert_eq!(recognize_family(&generators::star(4)), Ok(GraphClassTag::Star { leaves: 4 }));
        assert_eq!(
            recognize_family(&generators::complete_bipartite(3, 2)),
            Ok(GraphClassTag::CompleteBipartite { m: 2, n: 3 })
        );
        assert_eq!(
            recognize_family(&generators::cycle(4)),
            Ok(GraphClassTag::CompleteBipartite { m: 2, n: 2 })
        );
        assert_eq!(recognize_family(&generators::paw()), Ok(GraphClassTag::BlockGraph));
        assert_eq!(recognize_family(&generators::chair_tree()), Ok(GraphClassTag::Tree));
        assert_eq!(recognize_family(&generators::petersen()), Ok(GraphClassTag::General));
        let cactus = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap();
        assert_eq!(recognize_family(&cactus), Ok(GraphClassTag::Cactus));
        let disconnected = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(recognize_family(&disconnected), Err(GraphError::Disconnected));
    }

    #[test]
    fn grids_come_from_product_metadata() {
        let grid = cartesian_product(&[generators::path(2), generators::path(4)]).unwrap();
        assert_eq!(recognize_family(&grid), Ok(GraphClassTag::Grid { dims: vec![2, 4] }));
        // same graph without metadata is not a grid
        let raw = Graph::from_edges(8, grid.edges()).unwrap();
        assert_eq!(recognize_family(&raw), Ok(GraphClassTag::General));
        // products with a non-path factor stay general
        let prism = cartesian_product(&[generators::path(2), generators::cycle(5)]).unwrap();
        assert_eq!(recognize_family(&prism), Ok(GraphClassTag::General));
    }

    #[test]
    fn petersen_fails_block_and_cactus_conditions() {
        let p = generators::petersen();
        // brute force: the whole graph is one block with 15 edges on 10 vertices
        let bct = block_cut_tree(&p);
        assert_eq!(bct.blocks.len(), 1);
        assert!(!is_block_graph(&p));
        assert!(!is_cactus(&p));
        assert!(!cactus_by_edge_cycles(&p));
    }

    #[test]
    fn cactus_routes_agree_on_random_graphs() {
        for seed in 0..200 {
            let g = generators::random_connected_graph(9, 0.25, seed);
            assert_eq!(is_cactus(&g), cactus_by_edge_cycles(&g), "seed {seed}");
        }
    }
}
