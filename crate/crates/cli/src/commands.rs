//! The `solve`, `verify` and `table` subcommands as plain functions.

use std::fmt::Write;
use std::sync::Arc;
use std::time::Instant;

use geodex::closed_forms::{
    closed_form_lookup, grid_outcome, grundy_complete, grundy_complete_bipartite, grundy_cycle,
    grundy_cycle_selected, grundy_path, grundy_star, product_outcome, Evaluation,
};
use geodex::decomposition::{solve_auto_with, solve_block_graph, solve_cactus, solve_tree, solve_with, SolveError, SolverKind};
use geodex::game::SearchConfig;
use geodex::generators as gen;
use geodex::{cartesian_product, recognize_family, GameError, GameSolver, Geodesics, Graph, GraphError, Outcome, VertexSet};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::source::{FamilySpec, SourceError};

#[derive(Debug, Error)]
pub enum CommandError {
    #[error(transparent)]
    Source(#[from] SourceError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("{0}")]
    Usage(String),
}

impl From<GameError> for CommandError {
    fn from(e: GameError) -> Self {
        CommandError::Solve(e.into())
    }
}

impl CommandError {
    /// 2 for unreadable or malformed input, 3 for capacity and budget limits, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        match self {
            CommandError::Source(e) if e.is_capacity() => 3,
            CommandError::Source(_) | CommandError::Usage(_) => 2,
            CommandError::Solve(SolveError::Game(GameError::BudgetExceeded { .. }))
            | CommandError::Solve(SolveError::Graph(GraphError::Capacity(_))) => 3,
            CommandError::Solve(_) => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolverChoice {
    Auto,
    Brute,
    Tree,
    Block,
    Cactus,
    ClosedForm,
}

impl SolverChoice {
    pub fn parse(name: &str) -> Option<Self> {
        Some(match name {
            "auto" => SolverChoice::Auto,
            "brute" => SolverChoice::Brute,
            "tree" => SolverChoice::Tree,
            "block" => SolverChoice::Block,
            "cactus" => SolverChoice::Cactus,
            "closed-form" => SolverChoice::ClosedForm,
            _ => return None,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolveReport {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grundy: Option<u32>,
    pub outcome: Outcome,
    pub solver_used: SolverKind,
    pub elapsed_ms: f64,
}

impl SolveReport {
    pub fn text(&self) -> String {
        let value = self.grundy.map_or_else(|| "-".to_owned(), |g| g.to_string());
        format!(
            "n={} grundy={value} outcome={} solver={} elapsed={:.3}ms",
            self.n,
            self.outcome,
            self.solver_used.name(),
            self.elapsed_ms
        )
    }
}

pub fn solve(g: &Graph, choice: SolverChoice, config: SearchConfig) -> Result<SolveReport, CommandError> {
    let start = Instant::now();
    let (evaluation, solver_used) = match choice {
        SolverChoice::Auto => {
            let sol = solve_auto_with(g, config)?;
            (sol.evaluation, sol.solver)
        }
        other => {
            let kind = match other {
                SolverChoice::Brute => SolverKind::Brute,
                SolverChoice::Tree => SolverKind::Tree,
                SolverChoice::Block => SolverKind::BlockGraph,
                SolverChoice::Cactus => SolverKind::Cactus,
                _ => SolverKind::ClosedForm,
            };
            (solve_with(g, kind, config)?, kind)
        }
    };
    Ok(SolveReport {
        n: g.vertex_count(),
        grundy: evaluation.grundy().map(|v| v.get()),
        outcome: evaluation.outcome(),
        solver_used,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerifyFamily {
    Tree,
    Block,
    Cactus,
    ClosedForms,
    Product,
}

impl VerifyFamily {
    pub fn name(self) -> &'static str {
        match self {
            VerifyFamily::Tree => "tree",
            VerifyFamily::Block => "block",
            VerifyFamily::Cactus => "cactus",
            VerifyFamily::ClosedForms => "closed-forms",
            VerifyFamily::Product => "product",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        Some(match name {
            "tree" => VerifyFamily::Tree,
            "block" => VerifyFamily::Block,
            "cactus" => VerifyFamily::Cactus,
            "closed-forms" => VerifyFamily::ClosedForms,
            "product" => VerifyFamily::Product,
            _ => return None,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Mismatch {
    pub instance: String,
    /// Edge list in the graph file format.
    pub graph: String,
    pub expected: Evaluation,
    pub got: Evaluation,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Flagged {
    pub instance: String,
    pub error: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub family: VerifyFamily,
    pub instances: usize,
    pub seed: u64,
    pub mismatches: Vec<Mismatch>,
    pub flagged: Vec<Flagged>,
    pub elapsed_ms: f64,
}

impl VerifyReport {
    pub fn text(&self) -> String {
        let mut out = format!(
            "family={} instances={} seed={} mismatches={} flagged={} elapsed={:.1}ms\n",
            self.family.name(),
            self.instances,
            self.seed,
            self.mismatches.len(),
            self.flagged.len(),
            self.elapsed_ms
        );
        for m in &self.mismatches {
            let _ = writeln!(out, "mismatch {}: expected {:?}, got {:?}", m.instance, m.expected, m.got);
        }
        for f in &self.flagged {
            let _ = writeln!(out, "flagged {}: {}", f.instance, f.error);
        }
        out
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub count: usize,
    pub max_n: usize,
    pub seed: u64,
    pub config: SearchConfig,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { count: 100, max_n: 14, seed: 42, config: SearchConfig::default() }
    }
}

struct Checker {
    config: SearchConfig,
    instances: usize,
    mismatches: Vec<Mismatch>,
    flagged: Vec<Flagged>,
}

impl Checker {
    fn oracle(&self, g: &Graph, selected: VertexSet) -> Result<Evaluation, GameError> {
        let solver = GameSolver::with_config(Arc::new(Geodesics::new(g.clone())), self.config);
        solver.grundy(selected).map(Evaluation::Grundy)
    }

    /// Compares `got` with the oracle on `(g, selected)`; outcome-only values compare outcomes.
    fn compare(&mut self, instance: String, g: &Graph, selected: VertexSet, got: Result<Evaluation, SolveError>) {
        self.instances += 1;
        let expected = match self.oracle(g, selected) {
            Ok(e) => e,
            Err(e) => return self.flagged.push(Flagged { instance, error: e.to_string() }),
        };
        let got = match got {
            Ok(e) => e,
            Err(e) => return self.flagged.push(Flagged { instance, error: e.to_string() }),
        };
        let agrees = match (expected, got) {
            (Evaluation::Grundy(a), Evaluation::Grundy(b)) => a == b,
            (a, b) => a.outcome() == b.outcome(),
        };
        if !agrees {
            let expected = match got {
                Evaluation::Outcome(_) => Evaluation::Outcome(expected.outcome()),
                Evaluation::Grundy(_) => expected,
            };
            self.mismatches.push(Mismatch { instance, graph: g.to_edge_list(), expected, got });
        }
    }
}

pub fn verify(family: VerifyFamily, opts: VerifyOptions) -> Result<VerifyReport, CommandError> {
    if opts.max_n == 0 || opts.max_n > 40 {
        return Err(CommandError::Usage("--max-n must lie in 1..=40".into()));
    }
    let start = Instant::now();
    let mut c = Checker { config: opts.config, instances: 0, mismatches: Vec::new(), flagged: Vec::new() };
    let empty = VertexSet::EMPTY;
    match family {
        VerifyFamily::Tree | VerifyFamily::Block | VerifyFamily::Cactus => {
            for i in 0..opts.count {
                let seed = opts.seed.wrapping_add(i as u64);
                let n = 1 + i % opts.max_n;
                let (name, g, got) = match family {
                    VerifyFamily::Tree => {
                        let g = gen::random_tree(n, seed);
                        let got = solve_tree(&g, empty);
                        ("random-tree", g, got)
                    }
                    VerifyFamily::Block => {
                        let g = gen::random_block_graph(n, seed);
                        let got = solve_block_graph(&g);
                        ("random-block", g, got)
                    }
                    _ => {
                        let g = gen::random_cactus(n, seed);
                        let got = solve_cactus(&g);
                        ("random-cactus", g, got)
                    }
                };
                c.compare(format!("{name} n={n} seed={seed}"), &g, empty, got.map(Evaluation::Grundy));
            }
        }
        VerifyFamily::ClosedForms => verify_closed_forms(&mut c),
        VerifyFamily::Product => verify_products(&mut c)?,
    }
    Ok(VerifyReport {
        family,
        instances: c.instances,
        seed: opts.seed,
        mismatches: c.mismatches,
        flagged: c.flagged,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

fn verify_closed_forms(c: &mut Checker) {
    let empty = VertexSet::EMPTY;
    let grundy = |v: Result<_, _>| v.map(Evaluation::Grundy).map_err(SolveError::from);
    for n in 1..=14 {
        c.compare(format!("P_{n}"), &gen::path(n), empty, grundy(grundy_path(n)));
    }
    for n in 3..=14 {
        c.compare(format!("C_{n}"), &gen::cycle(n), empty, grundy(grundy_cycle(n)));
    }
    for n in 1..=10 {
        c.compare(format!("K_{n}"), &gen::complete(n), empty, grundy(grundy_complete(n)));
    }
    for n in 1..=9 {
        c.compare(format!("K_1,{n}"), &gen::star(n), empty, grundy(grundy_star(n)));
    }
    for m in 2..=10 {
        for n in 2..=12 - m {
            let g = gen::complete_bipartite(m, n);
            c.compare(format!("K_{m},{n}"), &g, empty, grundy(grundy_complete_bipartite(m, n)));
        }
    }
    for n in 3..=13 {
        let g = gen::cycle(n);
        c.compare(format!("C_{n} {{0}}"), &g, VertexSet::singleton(0), grundy(grundy_cycle_selected(n, None)));
        for d in 1..=n / 2 {
            let s = VertexSet::singleton(0).with(d);
            c.compare(format!("C_{n} {{0,{d}}}"), &g, s, grundy(grundy_cycle_selected(n, Some(d))));
        }
    }
}

fn verify_products(c: &mut Checker) -> Result<(), CommandError> {
    let factors = [
        ("P2", gen::path(2)),
        ("P3", gen::path(3)),
        ("P5", gen::path(5)),
        ("C3", gen::cycle(3)),
        ("C5", gen::cycle(5)),
        ("K1,2", gen::star(2)),
    ];
    let outcome = |c: &Checker, g: &Graph| c.oracle(g, VertexSet::EMPTY).map(|e| e.outcome());
    for (a, ga) in &factors {
        for (b, gb) in &factors {
            if ga.vertex_count() * gb.vertex_count() > 16 {
                continue;
            }
            let product = cartesian_product(&[ga.clone(), gb.clone()]).map_err(SolveError::from)?;
            let rule = match (outcome(c, ga), outcome(c, gb)) {
                (Ok(x), Ok(y)) => product_outcome(&[x, y]).map(Evaluation::Outcome).map_err(SolveError::from),
                (Err(e), _) | (_, Err(e)) => Err(e.into()),
            };
            c.compare(format!("{a} x {b}"), &product, VertexSet::EMPTY, rule);
        }
    }
    for dims in [vec![2, 2], vec![2, 3], vec![3, 3], vec![2, 5], vec![3, 5], vec![2, 2, 2], vec![2, 2, 3], vec![4, 4]] {
        let g = gen::grid(&dims).map_err(SolveError::from)?;
        let got = grid_outcome(&dims).map(Evaluation::Outcome).map_err(SolveError::from);
        c.compare(format!("grid {dims:?}"), &g, VertexSet::EMPTY, got);
    }
    Ok(())
}

/// Rows of `(parameter, grundy)` for a one-parameter family.
pub fn table(
    base: &FamilySpec,
    from: usize,
    to: usize,
    config: SearchConfig,
) -> Result<Vec<(usize, u32)>, CommandError> {
    if from > to {
        return Err(CommandError::Usage(format!("empty range {from}..={to}")));
    }
    (from..=to)
        .map(|param| {
            let g = FamilySpec { n: Some(param), ..base.clone() }.build()?;
            let closed = match recognize_family(&g) {
                Ok(tag) => closed_form_lookup(&g, &tag).map_err(SolveError::from)?.and_then(Evaluation::grundy),
                Err(_) => None,
            };
            let value = match closed {
                Some(v) => v,
                None => GameSolver::with_config(Arc::new(Geodesics::new(g)), config).grundy(VertexSet::EMPTY)?,
            };
            Ok((param, value.get()))
        })
        .collect()
}

pub fn table_csv(rows: &[(usize, u32)]) -> String {
    let mut out = String::from("param,grundy\n");
    for (p, g) in rows {
        let _ = writeln!(out, "{p},{g}");
    }
    out
}
