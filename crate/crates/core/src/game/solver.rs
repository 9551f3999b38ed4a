use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use dashmap::DashMap;
use rand::seq::IteratorRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::game::value::{GrundyValue, MexSet, Outcome};
use crate::game::GameError;
use crate::geodesic::Geodesics;
use crate::graph::Graph;
use crate::structure::connected_components;
use crate::vertex_set::VertexSet;

pub const DEFAULT_BUDGET: u64 = 50_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum number of distinct states the solver may expand over its lifetime.
    pub budget: u64,
    /// Evaluate connected components separately and combine with the nim-sum.
    /// When off, the whole graph is searched as one game.
    pub split_components: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { budget: DEFAULT_BUDGET, split_components: true }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum PlayoutPolicy {
    /// Win as fast as possible; when losing, survive as long as possible.
    /// Ties go to the smallest vertex id.
    Optimal,
    Random { seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OptionValue {
    pub vertex: usize,
    pub grundy: GrundyValue,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub grundy: GrundyValue,
    pub outcome: Outcome,
    pub options: Vec<OptionValue>,
    pub best_move: Option<usize>,
}

/// Exhaustive memoized Sprague–Grundy search over selected-set bitmasks.
///
/// This is the reference oracle every other solver is checked against. The
/// memo tables are concurrent maps with write-once entries, so one solver can
/// be shared across threads.
pub struct GameSolver {
    geo: Arc<Geodesics>,
    config: SearchConfig,
    components: Vec<VertexSet>,
    grundy_memo: DashMap<(u8, u128), u32>,
    remoteness_memo: DashMap<u128, u32>,
    expanded: AtomicU64,
}

impl GameSolver {
    pub fn new(graph: Graph) -> Self {
        Self::with_config(Arc::new(Geodesics::new(graph)), SearchConfig::default())
    }

    pub fn with_config(geo: Arc<Geodesics>, config: SearchConfig) -> Self {
        let components = if config.split_components {
            connected_components(geo.graph())
        } else {
            vec![geo.graph().vertices()]
        };
        GameSolver {
            geo,
            config,
            components,
            grundy_memo: DashMap::new(),
            remoteness_memo: DashMap::new(),
            expanded: AtomicU64::new(0),
        }
    }

    pub fn geodesics(&self) -> &Arc<Geodesics> {
        &self.geo
    }

    pub fn graph(&self) -> &Graph {
        self.geo.graph()
    }

    /// Number of states expanded so far.
    pub fn expanded_states(&self) -> u64 {
        self.expanded.load(Ordering::Relaxed)
    }

    fn check_selection(&self, selected: VertexSet) -> Result<(), GameError> {
        let n = self.graph().vertex_count();
        match (selected - VertexSet::full(n)).first() {
            Some(v) => Err(GameError::InvalidVertex { vertex: v, n }),
            None => Ok(()),
        }
    }

    fn bump(&self) -> Result<(), GameError> {
        let used = self.expanded.fetch_add(1, Ordering::Relaxed) + 1;
        if used > self.config.budget {
            Err(GameError::BudgetExceeded { budget: self.config.budget })
        } else {
            Ok(())
        }
    }

    pub fn legal_moves(&self, selected: VertexSet) -> VertexSet {
        self.graph().vertices() - self.geo.closure(selected)
    }

    pub fn grundy(&self, selected: VertexSet) -> Result<GrundyValue, GameError> {
        self.check_selection(selected)?;
        let mut total = 0;
        for (ci, &comp) in self.components.iter().enumerate() {
            let s = selected & comp;
            total ^= self.grundy_in(ci, s, self.geo.closure(s))?;
        }
        Ok(GrundyValue(total))
    }

    fn grundy_in(&self, ci: usize, s: VertexSet, closure: VertexSet) -> Result<u32, GameError> {
        let key = (ci as u8, s.bits());
        if let Some(v) = self.grundy_memo.get(&key) {
            return Ok(*v);
        }
        let legal = self.components[ci] - closure;
        if legal.is_empty() {
            return Ok(0);
        }
        self.bump()?;
        let mut seen = MexSet::default();
        for v in legal {
            let next = self.geo.intervals().extend_closure(closure, s, v);
            seen.insert(self.grundy_in(ci, s.with(v), next)?);
        }
        let value = seen.mex();
        self.grundy_memo.entry(key).or_insert(value);
        Ok(value)
    }

    pub fn outcome(&self, selected: VertexSet) -> Result<Outcome, GameError> {
        Ok(self.grundy(selected)?.outcome())
    }

    /// Length of the rest of the game when the winner hurries and the loser stalls.
    pub fn remoteness(&self, selected: VertexSet) -> Result<u32, GameError> {
        self.check_selection(selected)?;
        self.remoteness_of(selected)
    }

    fn remoteness_of(&self, s: VertexSet) -> Result<u32, GameError> {
        if let Some(r) = self.remoteness_memo.get(&s.bits()) {
            return Ok(*r);
        }
        let legal = self.legal_moves(s);
        if legal.is_empty() {
            return Ok(0);
        }
        self.bump()?;
        let winning = self.grundy(s)?.0 != 0;
        let mut best: Option<u32> = None;
        for v in legal {
            let next = s.with(v);
            if winning && self.grundy(next)?.0 != 0 {
                continue;
            }
            let r = self.remoteness_of(next)? + 1;
            best = Some(match best {
                None => r,
                Some(b) if winning => b.min(r),
                Some(b) => b.max(r),
            });
        }
        let r = best.expect("a winning position has a move to a zero position");
        self.remoteness_memo.entry(s.bits()).or_insert(r);
        Ok(r)
    }

    /// Every legal move with the value of the position it leads to.
    pub fn options(&self, selected: VertexSet) -> Result<Vec<OptionValue>, GameError> {
        self.check_selection(selected)?;
        self.legal_moves(selected)
            .iter()
            .map(|v| Ok(OptionValue { vertex: v, grundy: self.grundy(selected.with(v))? }))
            .collect()
    }

    pub fn best_move(&self, selected: VertexSet, policy: PlayoutPolicy) -> Result<Option<usize>, GameError> {
        self.check_selection(selected)?;
        match policy {
            PlayoutPolicy::Optimal => self.optimal_move(selected),
            PlayoutPolicy::Random { seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed ^ selected.bits() as u64);
                Ok(self.legal_moves(selected).iter().choose(&mut rng))
            }
        }
    }

    fn optimal_move(&self, selected: VertexSet) -> Result<Option<usize>, GameError> {
        let winning = self.grundy(selected)?.0 != 0;
        let mut best: Option<(u32, usize)> = None;
        for v in self.legal_moves(selected) {
            let next = selected.with(v);
            if winning && self.grundy(next)?.0 != 0 {
                continue;
            }
            let r = self.remoteness_of(next)?;
            let better = match best {
                None => true,
                Some((b, _)) if winning => r < b,
                Some((b, _)) => r > b,
            };
            if better {
                best = Some((r, v));
            }
        }
        Ok(best.map(|(_, v)| v))
    }

    pub fn analyze(&self, selected: VertexSet) -> Result<AnalysisReport, GameError> {
        let grundy = self.grundy(selected)?;
        Ok(AnalysisReport {
            grundy,
            outcome: grundy.outcome(),
            options: self.options(selected)?,
            best_move: self.best_move(selected, PlayoutPolicy::Optimal)?,
        })
    }

    /// Plays from `selected` to a terminal position; returns the moves made.
    pub fn playout(&self, selected: VertexSet, policy: PlayoutPolicy) -> Result<Vec<usize>, GameError> {
        self.check_selection(selected)?;
        let mut s = selected;
        let mut moves = Vec::new();
        match policy {
            PlayoutPolicy::Optimal => {
                while let Some(v) = self.optimal_move(s)? {
                    moves.push(v);
                    s.insert(v);
                }
            }
            PlayoutPolicy::Random { seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                while let Some(v) = self.legal_moves(s).iter().choose(&mut rng) {
                    moves.push(v);
                    s.insert(v);
                }
            }
        }
        Ok(moves)
    }
}

/// Random playout without building a solver: only closures are needed.
pub fn random_playout(geo: &Geodesics, selected: VertexSet, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let all = geo.graph().vertices();
    let mut s = selected;
    let mut closure = geo.closure(s);
    let mut moves = Vec::new();
    while let Some(v) = (all - closure).iter().choose(&mut rng) {
        closure = geo.intervals().extend_closure(closure, s, v);
        s.insert(v);
        moves.push(v);
    }
    moves
}
