//! Named graphs and seeded random families.
//!
//! Deterministic constructors panic when asked for more than [`MAX_VERTICES`]
//! vertices; callers taking sizes from user input should check first. Random
//! generators use a ChaCha8 stream seeded from the given `u64`, so a
//! `(size, seed)` pair always produces the same labelled graph.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, GraphError};
use crate::product::cartesian_product;
use crate::vertex_set::MAX_VERTICES;

fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    assert!(n <= MAX_VERTICES, "{n} vertices exceed capacity {MAX_VERTICES}");
    Graph::from_edges(n, edges).expect("generator produced an invalid edge")
}

/// `P_n`: vertices `0..n` in order.
pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|i| (i - 1, i)))
}

/// `C_n` (`n >= 3`): vertices `0..n` in cyclic order.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least three vertices");
    build(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Graph {
    build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{1,leaves}` with centre `0`.
pub fn star(leaves: usize) -> Graph {
    build(leaves + 1, (1..=leaves).map(|v| (0, v)))
}

/// `K_{m,n}`: part `0..m` and part `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    build(m + n, (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v))))
}

/// Product of paths with the given dimensions.
pub fn grid(dims: &[usize]) -> Result<Graph, GraphError> {
    if dims.iter().any(|&d| d > MAX_VERTICES) {
        return Err(GraphError::Capacity(dims.iter().product()));
    }
    let factors: Vec<Graph> = dims.iter().map(|&d| path(d)).collect();
    cartesian_product(&factors)
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    build(10, outer.chain(spokes).chain(inner))
}

/// Triangle `{0,1,2}` with a pendant vertex `3` on `0`.
pub fn paw() -> Graph {
    build(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
}

/// Two triangles sharing vertex `0`.
pub fn bowtie() -> Graph {
    build(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
}

/// Path `0-1-2-3` with an extra leaf `4` on vertex `1`.
pub fn chair_tree() -> Graph {
    build(5, [(0, 1), (1, 2), (2, 3), (1, 4)])
}

fn relabel(n: usize, edges: Vec<(usize, usize)>, rng: &mut ChaCha8Rng) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    build(n, edges.into_iter().map(|(u, v)| (perm[u], perm[v])))
}

/// Erdős–Rényi `G(n, p)`; may be disconnected.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    build(n, edges)
}

/// Uniform labelled tree on `n` vertices (Prüfer decoding).
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    build(n, random_tree_edges(n, &mut rng))
}

fn random_tree_edges(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    if n < 2 {
        return Vec::new();
    }
    if n == 2 {
        return vec![(0, 1)];
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always exists");
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Random tree plus each remaining pair independently with probability `p`.
pub fn random_connected_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = random_tree_edges(n, &mut rng);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    build(n, edges)
}

/// Random block graph on exactly `n` vertices: cliques of size 2–5 glued at
/// random existing vertices, then randomly relabelled.
pub fn random_block_graph(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut count = rng.random_range(2..=5).min(n);
    for u in 0..count {
        for v in u + 1..count {
            edges.push((u, v));
        }
    }
    while count < n {
        let anchor = rng.random_range(0..count);
        let size = rng.random_range(2..=5).min(n - count + 1);
        let mut clique = vec![anchor];
        clique.extend(count..count + size - 1);
        count += size - 1;
        for (i, &u) in clique.iter().enumerate() {
            for &v in &clique[i + 1..] {
                edges.push((u, v));
            }
        }
    }
    relabel(n, edges, &mut rng)
}

/// Random cactus on exactly `n` vertices: cycles of length 3–7 and bridges
/// hung from random existing vertices, then randomly relabelled.
pub fn random_cactus(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut count = n.min(1);
    while count < n {
        let anchor = rng.random_range(0..count);
        let room = n - count;
        if room >= 2 && rng.random_bool(0.6) {
            let len = rng.random_range(3..=7).min(room + 1);
            let mut ring = vec![anchor];
            ring.extend(count..count + len - 1);
            count += len - 1;
            for i in 0..len {
                edges.push((ring[i], ring[(i + 1) % len]));
            }
        } else {
            edges.push((anchor, count));
            count += 1;
        }
    }
    relabel(n, edges, &mut rng)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{is_block_graph, is_cactus, is_tree};

    #[test]
    fn named_graph_counts() {
        assert_eq!(path(1).edge_count(), 0);
        assert_eq!(cycle(5).edge_count(), 5);
        assert_eq!(complete(5).edge_count(), 10);
        assert_eq!(star(4).edge_count(), 4);
        assert_eq!(complete_bipartite(2, 3).edge_count(), 6);
        assert_eq!(petersen().edge_count(), 15);
        assert!((0..10).all(|v| petersen().degree(v) == 3));
        assert_eq!(grid(&[3, 3]).unwrap().edge_count(), 12);
    }

    #[test]
    fn random_families_have_their_shape() {
        for seed in 0..50 {
            for n in [1, 2, 5, 14] {
                let t = random_tree(n, seed);
                assert!(is_tree(&t));
                let b = random_block_graph(n, seed);
                assert_eq!(b.vertex_count(), n);
                assert!(b.is_connected() && is_block_graph(&b));
                let c = random_cactus(n, seed);
                assert_eq!(c.vertex_count(), n);
                assert!(c.is_connected() && is_cactus(&c));
                assert!(random_connected_graph(n, 0.2, seed).is_connected());
            }
        }
    }

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(random_cactus(12, 7), random_cactus(12, 7));
        assert_eq!(random_block_graph(12, 7), random_block_graph(12, 7));
        assert_eq!(random_graph(9, 0.5, 3), random_graph(9, 0.5, 3));
    }
}
