//! Structural queries: simplicial vertices, connected components and the block-cut tree.

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Vertices whose open neighbourhood induces a clique (isolated vertices and leaves included).
pub fn simplicial_vertices(g: &Graph) -> VertexSet {
    simplicial_within(g, g.vertices())
}

/// Simplicial vertices of the subgraph induced by `within`.
pub fn simplicial_within(g: &Graph, within: VertexSet) -> VertexSet {
    within
        .iter()
        .filter(|&v| {
            let nbrs = g.neighbors(v) & within;
            nbrs.iter().all(|w| nbrs.without(w).is_subset(g.neighbors(w)))
        })
        .collect()
}

pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    components_within(g, g.vertices())
}

/// Connected components of the subgraph induced by `within`, ordered by smallest vertex.
pub fn components_within(g: &Graph, within: VertexSet) -> Vec<VertexSet> {
    let mut rest = within;
    let mut out = Vec::new();
    while let Some(v) = rest.first() {
        let comp = g.reachable_within(v, rest);
        rest -= comp;
        out.push(comp);
    }
    out
}

/// Biconnected decomposition. Isolated vertices form singleton blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockCutTree {
    pub articulation_points: VertexSet,
    pub blocks: Vec<VertexSet>,
}

impl BlockCutTree {
    /// Indices of the blocks containing `v`.
    pub fn blocks_of(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().filter(move |(_, b)| b.contains(v)).map(|(i, _)| i)
    }

    /// `(block, articulation point)` incidences of the tree.
    pub fn incidence(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, b) in self.blocks.iter().enumerate() {
            for a in *b & self.articulation_points {
                out.push((i, a));
            }
        }
        out
    }
}

pub fn block_cut_tree(g: &Graph) -> BlockCutTree {
    block_cut_tree_within(g, g.vertices())
}

/// Block-cut tree of the subgraph induced by `within` (Hopcroft–Tarjan lowpoints).
pub fn block_cut_tree_within(g: &Graph, within: VertexSet) -> BlockCutTree {
    struct Dfs<'a> {
        g: &'a Graph,
        within: VertexSet,
        disc: Vec<u32>,
        low: Vec<u32>,
        time: u32,
        stack: Vec<usize>,
        arts: VertexSet,
        blocks: Vec<VertexSet>,
    }

    impl Dfs<'_> {
        fn visit(&mut self, v: usize, parent: Option<usize>) {
            self.time += 1;
            self.disc[v] = self.time;
            self.low[v] = self.time;
            self.stack.push(v);
            let mut children = 0;
            for w in self.g.neighbors(v) & self.within {
                if self.disc[w] == 0 {
                    children += 1;
                    self.visit(w, Some(v));
                    self.low[v] = self.low[v].min(self.low[w]);
                    if self.low[w] >= self.disc[v] {
                        if parent.is_some() {
                            self.arts.insert(v);
                        }
                        let mut block = VertexSet::singleton(v);
                        while let Some(x) = self.stack.pop() {
                            block.insert(x);
                            if x == w {
                                break;
                            }
                        }
                        self.blocks.push(block);
                    }
                } else if Some(w) != parent {
                    self.low[v] = self.low[v].min(self.disc[w]);
                }
            }
            if parent.is_none() && children > 1 {
                self.arts.insert(v);
            }
        }
    }

    let n = g.vertex_count();
    let mut dfs = Dfs {
        g,
        within,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        arts: VertexSet::EMPTY,
        blocks: Vec::new(),
    };
    for v in within {
        if dfs.disc[v] == 0 {
            if (g.neighbors(v) & within).is_empty() {
                dfs.blocks.push(VertexSet::singleton(v));
                dfs.disc[v] = u32::MAX;
                continue;
            }
            dfs.visit(v, None);
            dfs.stack.clear();
        }
    }
    BlockCutTree { articulation_points: dfs.arts, blocks: dfs.blocks }
}

/// Articulation points of the subgraph induced by `within`.
pub fn articulation_points_within(g: &Graph, within: VertexSet) -> VertexSet {
    block_cut_tree_within(g, within).articulation_points
}

/// Whether `set` induces a clique.
pub fn is_clique(g: &Graph, set: VertexSet) -> bool {
    set.iter().all(|v| set.without(v).is_subset(g.neighbors(v)))
}

/// Whether `set` induces a single cycle (at least three vertices, all of degree two, connected).
pub fn is_cycle_within(g: &Graph, set: VertexSet) -> bool {
    set.len() >= 3
        && set.iter().all(|v| (g.neighbors(v) & set).len() == 2)
        && g.is_connected_within(set)
}

/// Edges of the subgraph induced by `set`.
pub fn edge_count_within(g: &Graph, set: VertexSet) -> usize {
    set.iter().map(|v| (g.neighbors(v) & set).len()).sum::<usize>() / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use proptest::prelude::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn sorted(mut blocks: Vec<VertexSet>) -> Vec<VertexSet> {
        blocks.sort();
        blocks
    }

    #[test]
    fn simplicial_examples() {
        assert_eq!(simplicial_vertices(&generators::complete(5)), VertexSet::full(5));
        assert_eq!(simplicial_vertices(&generators::path(4)), set(&[0, 3]));
        assert_eq!(simplicial_vertices(&generators::cycle(5)), VertexSet::EMPTY);
        assert_eq!(simplicial_vertices(&Graph::empty(2).unwrap()), set(&[0, 1]));
    }

    #[test]
    fn paw_blocks() {
        // triangle {0,1,2}, leaf 3 on 0
        let paw = generators::paw();
        let bct = block_cut_tree(&paw);
        assert_eq!(bct.articulation_points, set(&[0]));
        assert_eq!(sorted(bct.blocks.clone()), sorted(vec![set(&[0, 1, 2]), set(&[0, 3])]));
        assert_eq!(bct.incidence().len(), 2);
    }

    #[test]
    fn cycle_and_path_blocks() {
        let bct = block_cut_tree(&generators::cycle(6));
        assert!(bct.articulation_points.is_empty());
        assert_eq!(bct.blocks, vec![VertexSet::full(6)]);

        let bct = block_cut_tree(&generators::path(4));
        assert_eq!(bct.articulation_points, set(&[1, 2]));
        assert_eq!(
            sorted(bct.blocks),
            sorted(vec![set(&[0, 1]), set(&[1, 2]), set(&[2, 3])])
        );
    }

    #[test]
    fn components_examples() {
        let c = connected_components(&generators::cycle(5));
        assert_eq!(c, vec![VertexSet::full(5)]);
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (3, 4)]).unwrap();
        let sizes: Vec<usize> = connected_components(&g).iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![3, 2]);
        let g = Graph::empty(3).unwrap();
        assert_eq!(connected_components(&g), vec![set(&[0]), set(&[1]), set(&[2])]);
    }

    /// Brute-force articulation points: removal increases the component count.
    fn brute_articulation(g: &Graph) -> VertexSet {
        let base = connected_components(g).len();
        g.vertices()
            .iter()
            .filter(|&v| components_within(g, g.vertices().without(v)).len() > base)
            .collect()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn blocks_partition_edges(seed in any::<u64>(), n in 1usize..12) {
            let g = generators::random_graph(n, 0.3, seed);
            let bct = block_cut_tree(&g);
            prop_assert_eq!(bct.articulation_points, brute_articulation(&g));
            for (u, v) in g.edges() {
                let owners = bct.blocks.iter().filter(|b| b.contains(u) && b.contains(v)).count();
                prop_assert_eq!(owners, 1);
            }
            // a vertex is an articulation point iff it lies in two or more blocks
            for v in 0..n {
                prop_assert_eq!(bct.blocks_of(v).count() >= 2, bct.articulation_points.contains(v));
            }
        }

        #[test]
        fn simplicial_vertices_are_never_interior(seed in any::<u64>(), n in 2usize..10) {
            let g = generators::random_graph(n, 0.4, seed);
            let geo = crate::Geodesics::new(g.clone());
            for w in simplicial_vertices(&g) {
                for u in 0..n {
                    for v in 0..n {
                        if u != w && v != w {
                            prop_assert!(!geo.interval(u, v).contains(w));
                        }
                    }
                }
            }
        }
    }
}
