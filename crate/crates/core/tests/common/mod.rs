//! Oracle checks shared by the acceptance report and the regular test suites.
//! Each check returns a one-line summary on success and the first mismatches on failure.

#![allow(dead_code)]

use geodex::closed_forms::{
    grid_outcome, grundy_complete, grundy_complete_bipartite, grundy_cycle, grundy_cycle_selected, grundy_path,
    grundy_star, product_outcome,
};
use geodex::decomposition::{solve_block_graph, solve_cactus, solve_tree};
use geodex::game::{nim_sum, random_playout};
use geodex::generators as gen;
use geodex::structure::{articulation_points_within, components_within};
use geodex::{
    all_pairs_distances, cartesian_product, simplicial_vertices, GameSolver, Geodesics, Graph, GrundyValue, Outcome,
    PlayoutPolicy, VertexSet,
};

pub type Check = Result<String, String>;

#[derive(Default)]
pub struct Tally {
    pub checked: usize,
    pub mismatches: Vec<String>,
}

impl Tally {
    pub fn expect<T: PartialEq + std::fmt::Debug>(&mut self, what: impl FnOnce() -> String, got: T, want: T) {
        self.checked += 1;
        if got != want {
            self.mismatches.push(format!("{}: got {got:?}, want {want:?}", what()));
        }
    }

    pub fn finish(self, label: &str) -> Check {
        if self.mismatches.is_empty() {
            Ok(format!("{} {label}", self.checked))
        } else {
            let shown: Vec<_> = self.mismatches.iter().take(5).cloned().collect();
            Err(format!("{} of {} {label} failed: {}", self.mismatches.len(), self.checked, shown.join("; ")))
        }
    }
}

pub fn grundy(g: &Graph, selected: &[usize]) -> GrundyValue {
    GameSolver::new(g.clone()).grundy(selected.iter().copied().collect()).expect("desk-scale search")
}

pub fn outcome(g: &Graph) -> Outcome {
    grundy(g, &[]).outcome()
}

pub fn paths() -> Check {
    let mut t = Tally::default();
    for n in 1..=14 {
        t.expect(|| format!("P_{n}"), grundy(&gen::path(n), &[]), grundy_path(n).unwrap());
        t.expect(|| format!("P_{n} mod 2"), grundy_path(n).unwrap().get(), (n % 2) as u32);
    }
    t.finish("path values")
}

pub fn cycles() -> Check {
    let mut t = Tally::default();
    for n in 3..=14 {
        t.expect(|| format!("C_{n}"), grundy(&gen::cycle(n), &[]), grundy_cycle(n).unwrap());
        t.expect(|| format!("C_{n} mod 2"), grundy_cycle(n).unwrap().get(), (n % 2) as u32);
    }
    for k in 2..=7 {
        t.expect(|| format!("C_{} one selected", 2 * k), grundy(&gen::cycle(2 * k), &[0]), GrundyValue(k as u32));
    }
    for k in 1..=6 {
        t.expect(|| format!("C_{} one selected", 2 * k + 1), grundy(&gen::cycle(2 * k + 1), &[0]), GrundyValue(0));
    }
    for n in 4..=13 {
        let solver = GameSolver::new(gen::cycle(n));
        for d in 1..=n / 2 {
            let got = solver.grundy([0, d].into_iter().collect()).unwrap();
            t.expect(|| format!("C_{n} d={d}"), got, grundy_cycle_selected(n, Some(d)).unwrap());
            t.expect(|| format!("C_{n} d={d} formula"), got.get(), (n.div_ceil(2) - d) as u32);
        }
    }
    t.finish("cycle values")
}

pub fn complete_families() -> Check {
    let mut t = Tally::default();
    for n in 1..=10 {
        t.expect(|| format!("K_{n}"), grundy(&gen::complete(n), &[]), grundy_complete(n).unwrap());
    }
    for n in 1..=9 {
        t.expect(|| format!("K_1,{n}"), grundy(&gen::star(n), &[]), grundy_star(n).unwrap());
        t.expect(|| format!("K_1,{n} formula"), grundy_star(n).unwrap().get(), 1 - (n % 2) as u32);
    }
    for m in 2..=10 {
        for n in 2..=12 - m {
            let want = if m % 2 == n % 2 { 0 } else { 2 };
            let got = grundy(&gen::complete_bipartite(m, n), &[]);
            t.expect(|| format!("K_{m},{n}"), got, grundy_complete_bipartite(m, n).unwrap());
            t.expect(|| format!("K_{m},{n} parity rule"), got.get(), want);
        }
    }
    t.finish("complete, star and bipartite values")
}

pub fn chair_tree() -> Check {
    match outcome(&gen::chair_tree()) {
        Outcome::P => Ok("outcome P".into()),
        Outcome::N => Err("outcome N".into()),
    }
}

/// Non-decreasing lists of dimensions `>= 2` whose product is at most `limit`.
pub fn grid_dims(limit: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, product: usize, limit: usize, out: &mut Vec<Vec<usize>>) {
        let low = prefix.last().copied().unwrap_or(2);
        for d in low..=limit / product {
            prefix.push(d);
            out.push(prefix.clone());
            extend(prefix, product * d, limit, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 1, limit, &mut out);
    out
}

pub fn grids() -> Check {
    let mut t = Tally::default();
    for dims in grid_dims(16) {
        let want = grid_outcome(&dims).unwrap();
        let via_paths: Vec<Outcome> = dims.iter().map(|&d| grundy_path(d).unwrap().outcome()).collect();
        t.expect(|| format!("{dims:?} rules"), product_outcome(&via_paths).unwrap(), want);
        t.expect(|| format!("{dims:?}"), outcome(&gen::grid(&dims).unwrap()), want);
    }
    for (dims, want) in [(vec![3, 3], Outcome::N), (vec![2, 5], Outcome::P), (vec![3, 5], Outcome::N), (vec![2, 2, 2], Outcome::P)] {
        t.expect(|| format!("{dims:?} named"), outcome(&gen::grid(&dims).unwrap()), want);
    }
    t.finish("grid outcomes")
}

pub fn product_factors() -> Vec<(&'static str, Graph)> {
    vec![
        ("P2", gen::path(2)),
        ("P3", gen::path(3)),
        ("P5", gen::path(5)),
        ("C3", gen::cycle(3)),
        ("C5", gen::cycle(5)),
        ("K1,2", gen::star(2)),
    ]
}

/// Ordered factor pairs with product size at most 16 whose oracle outcome disagrees with the product rule.
pub fn product_rule_violations() -> (usize, Vec<String>) {
    let factors = product_factors();
    let mut checked = 0;
    let mut bad = Vec::new();
    for (a, ga) in &factors {
        for (b, gb) in &factors {
            if ga.vertex_count() * gb.vertex_count() > 16 {
                continue;
            }
            checked += 1;
            let product = cartesian_product(&[ga.clone(), gb.clone()]).unwrap();
            let rule = product_outcome(&[outcome(ga), outcome(gb)]).unwrap();
            let got = outcome(&product);
            if got != rule {
                bad.push(format!("{a} x {b}: oracle {got}, rule {rule}"));
            }
        }
    }
    (checked, bad)
}

pub fn small_factors() -> Vec<Graph> {
    vec![gen::path(1), gen::path(2), gen::path(3), gen::path(4), gen::cycle(3), gen::cycle(4), gen::star(3), gen::complete(4), gen::paw()]
}

/// Distance additivity and the closure product law on factors with at most four vertices.
pub fn product_predictions() -> Check {
    let mut t = Tally::default();
    let factors = small_factors();
    for (i, g1) in factors.iter().enumerate() {
        for g2 in &factors[i..] {
            let (n1, n2) = (g1.vertex_count(), g2.vertex_count());
            let product = cartesian_product(&[g1.clone(), g2.clone()]).unwrap();
            let geo = Geodesics::new(product);
            let (d1, d2) = (all_pairs_distances(g1), all_pairs_distances(g2));
            let (h1, h2) = (Geodesics::new(g1.clone()), Geodesics::new(g2.clone()));
            let idx = |x: usize, y: usize| x * n2 + y;
            for x1 in 0..n1 {
                for y1 in 0..n2 {
                    for x2 in 0..n1 {
                        for y2 in 0..n2 {
                            t.expect(
                                || format!("distance ({x1},{y1})-({x2},{y2})"),
                                geo.distances().get(idx(x1, y1), idx(x2, y2)),
                                d1.get(x1, x2) + d2.get(y1, y2),
                            );
                        }
                    }
                }
            }
            for b1 in 1u128..1 << n1 {
                for b2 in 1u128..1 << n2 {
                    let (s1, s2) = (VertexSet::from_bits(b1), VertexSet::from_bits(b2));
                    let s: VertexSet = s1.iter().flat_map(|x| s2.iter().map(move |y| idx(x, y))).collect();
                    let (c1, c2) = (h1.closure(s1), h2.closure(s2));
                    let want: VertexSet = c1.iter().flat_map(|x| c2.iter().map(move |y| idx(x, y))).collect();
                    t.expect(|| format!("closure {s1} x {s2}"), geo.closure(s), want);
                }
            }
        }
    }
    t.finish("product distance and closure checks")
}

pub fn product_rule() -> Check {
    let claims = product_predictions()?;
    let (checked, bad) = product_rule_violations();
    if bad.is_empty() {
        Ok(format!("{checked} factor pairs; {claims}"))
    } else {
        Err(format!("{} of {checked} factor pairs disagree ({}); {claims}", bad.len(), bad.join("; ")))
    }
}

pub fn decomposition_suites() -> Check {
    let mut t = Tally::default();
    for seed in 0..100u64 {
        let n = 1 + (seed as usize * 7) % 14;
        let tree = gen::random_tree(n, seed);
        t.expect(|| format!("tree seed {seed}"), solve_tree(&tree, VertexSet::EMPTY).unwrap(), grundy(&tree, &[]));
        let block = gen::random_block_graph(n, seed);
        t.expect(|| format!("block seed {seed}"), solve_block_graph(&block).unwrap(), grundy(&block, &[]));
        let cactus = gen::random_cactus(n, seed);
        t.expect(|| format!("cactus seed {seed}"), solve_cactus(&cactus).unwrap(), grundy(&cactus, &[]));
    }
    for (name, g, want) in [("paw", gen::paw(), 0), ("bowtie", gen::bowtie(), 1)] {
        t.expect(|| format!("{name} oracle"), grundy(&g, &[]), GrundyValue(want));
        t.expect(|| format!("{name} block"), solve_block_graph(&g).unwrap(), GrundyValue(want));
        t.expect(|| format!("{name} cactus"), solve_cactus(&g).unwrap(), GrundyValue(want));
    }
    t.finish("solver/oracle comparisons")
}

pub fn simplicial_coverage(playouts: u64) -> Check {
    let mut t = Tally::default();
    for seed in 0..playouts {
        let n = 1 + seed as usize % 10;
        let g = gen::random_graph(n, 0.2 + 0.6 * ((seed % 7) as f64 / 7.0), seed);
        let geo = Geodesics::new(g.clone());
        let s: VertexSet = random_playout(&geo, VertexSet::EMPTY, seed ^ 0x9e37).into_iter().collect();
        t.expect(|| format!("terminal seed {seed}"), geo.closure(s), g.vertices());
        t.expect(|| format!("simplicial seed {seed}"), simplicial_vertices(&g).is_subset(s), true);
    }
    t.finish("playouts")
}

/// Graphs with an articulation point, compared against the value of each attached piece on its own.
pub fn articulation_split(instances: usize) -> Check {
    let mut t = Tally::default();
    let mut found = 0;
    let mut seed = 0u64;
    while found < instances {
        seed += 1;
        let n = 3 + seed as usize % 8;
        let g = gen::random_connected_graph(n, 0.12, seed);
        let arts = articulation_points_within(&g, g.vertices());
        let Some(u) = arts.iter().nth(seed as usize % arts.len().max(1)) else { continue };
        found += 1;
        let parts = components_within(&g, g.vertices().without(u)).into_iter().map(|side| {
            let (sub, map) = g.induced(side.with(u));
            grundy(&sub, &[map.iter().position(|&v| v == u).unwrap()])
        });
        t.expect(|| format!("seed {seed} u {u}"), nim_sum(parts), grundy(&g, &[u]));
    }
    t.expect(|| "7 xor 10".into(), nim_sum([GrundyValue(7), GrundyValue(10)]), GrundyValue(13));
    t.finish("articulation splits")
}

pub fn reduction_suites() -> Check {
    let a = simplicial_coverage(1000)?;
    let b = articulation_split(100)?;
    Ok(format!("{a}; {b}; nim_sum(7,10) = 13"))
}

pub fn path_strategy() -> Check {
    let mut t = Tally::default();
    for m in 0..=3 {
        let n = 4 * m + 2;
        t.expect(|| format!("P_{n} middle"), grundy(&gen::path(n), &[2 * m]), GrundyValue(1));
    }
    for n in 2..=12 {
        let solver = GameSolver::new(gen::path(n));
        for i in 0..n {
            for j in i + 1..n {
                let short = GameSolver::new(gen::path(n - (j - i)));
                t.expect(
                    || format!("P_{n} {{{i},{j}}}"),
                    solver.grundy([i, j].into_iter().collect()).unwrap(),
                    short.grundy(VertexSet::singleton(i)).unwrap(),
                );
            }
        }
    }
    t.finish("path claims")
}

pub fn k2n_playouts() -> Check {
    let mut t = Tally::default();
    for n in 2..=6 {
        let solver = GameSolver::new(gen::complete_bipartite(2, n));
        let moves = solver.playout(VertexSet::EMPTY, PlayoutPolicy::Optimal).unwrap();
        t.expect(|| format!("K_2,{n} playout {moves:?}"), moves.len(), n);
    }
    t.finish("K_2,n playouts")
}
