//! Benchmark inputs shared by the criterion targets.

use geodex::generators as gen;
use geodex::Graph;

/// Seeded instances of each family at the given size.
pub fn family_instances(n: usize, seed: u64) -> [(&'static str, Graph); 3] {
    [
        ("tree", gen::random_tree(n, seed)),
        ("block", gen::random_block_graph(n, seed)),
        ("cactus", gen::random_cactus(n, seed)),
    ]
}
